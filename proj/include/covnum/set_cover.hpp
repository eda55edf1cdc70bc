#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace covnum {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Unweighted set cover over the universe {0, ..., universe-1}.
struct SetCoverInstance {
  std::size_t universe = 0;
  std::vector<Bits> sets;  // each of size `universe`
};

struct SetCoverSolution {
  bool feasible = false;
  std::vector<std::size_t> chosen;  // indices into instance.sets, ascending
  std::uint64_t nodes = 0;          // branch-and-bound nodes visited
};

// Largest marginal gain first; ties go to the smallest set index.
SetCoverSolution greedy_set_cover(const SetCoverInstance& instance);

// Exact minimum cover. Branches on the uncovered element with the fewest
// covering sets, seeded with the greedy incumbent, and prunes with the max of
// a ceiling bound and a disjoint-element bound. Deterministic.
SetCoverSolution exact_set_cover(const SetCoverInstance& instance);

// True when the union of the chosen sets is the whole universe.
bool covers_universe(const SetCoverInstance& instance,
                     const std::vector<std::size_t>& chosen);

}  // namespace covnum

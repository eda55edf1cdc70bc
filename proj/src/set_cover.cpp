#include "covnum/set_cover.hpp"

#include <algorithm>
#include <numeric>

namespace covnum {
namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const SetCoverInstance& instance)
      : inst_(instance), containing_(instance.universe, Bits(instance.sets.size())) {
    for (std::size_t s = 0; s < inst_.sets.size(); ++s) {
      for (auto e = inst_.sets[s].find_first(); e != Bits::npos;
           e = inst_.sets[s].find_next(e)) {
        containing_[e].set(s);
      }
    }
  }

  SetCoverSolution run(SetCoverSolution incumbent) {
    best_ = std::move(incumbent);
    Bits uncovered(inst_.universe);
    uncovered.set();
    std::vector<std::size_t> chosen;
    search(uncovered, chosen);
    std::sort(best_.chosen.begin(), best_.chosen.end());
    best_.nodes = nodes_;
    return best_;
  }

 private:
  std::size_t lower_bound(const Bits& uncovered) const {
    const std::size_t remaining = uncovered.count();
    if (remaining == 0) return 0;
    std::size_t max_gain = 0;
    for (const auto& s : inst_.sets) max_gain = std::max(max_gain, (s & uncovered).count());
    if (max_gain == 0) return remaining + inst_.sets.size() + 1;  // infeasible
    const std::size_t ceiling = (remaining + max_gain - 1) / max_gain;

    // Elements whose candidate lists are pairwise disjoint each need their
    // own set.
    Bits used(inst_.sets.size());
    std::size_t disjoint = 0;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      if (!containing_[e].intersects(used)) {
        ++disjoint;
        used |= containing_[e];
      }
    }
    return std::max(ceiling, disjoint);
  }

  void search(const Bits& uncovered, std::vector<std::size_t>& chosen) {
    ++nodes_;
    if (uncovered.none()) {
      if (!best_.feasible || chosen.size() < best_.chosen.size()) {
        best_.feasible = true;
        best_.chosen = chosen;
      }
      return;
    }
    if (best_.feasible && chosen.size() + lower_bound(uncovered) >= best_.chosen.size()) {
      return;
    }

    std::size_t pivot = Bits::npos;
    std::size_t fewest = inst_.sets.size() + 1;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      const std::size_t c = containing_[e].count();
      if (c < fewest) {
        fewest = c;
        pivot = e;
      }
    }
    if (fewest == 0) return;  // pivot cannot be covered on this branch

    std::vector<std::pair<std::size_t, std::size_t>> options;  // (-gain, set)
    for (auto s = containing_[pivot].find_first(); s != Bits::npos;
         s = containing_[pivot].find_next(s)) {
      options.emplace_back((inst_.sets[s] & uncovered).count(), s);
    }
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, s] : options) {
      chosen.push_back(s);
      search(uncovered - inst_.sets[s], chosen);
      chosen.pop_back();
    }
  }

  const SetCoverInstance& inst_;
  std::vector<Bits> containing_;  // element -> sets containing it
  SetCoverSolution best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SetCoverSolution greedy_set_cover(const SetCoverInstance& instance) {
  SetCoverSolution out;
  Bits uncovered(instance.universe);
  uncovered.set();
  while (uncovered.any()) {
    std::size_t best = instance.sets.size();
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < instance.sets.size(); ++s) {
      const std::size_t gain = (instance.sets[s] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    if (best_gain == 0) return out;  // infeasible
    out.chosen.push_back(best);
    uncovered -= instance.sets[best];
  }
  out.feasible = true;
  std::sort(out.chosen.begin(), out.chosen.end());
  return out;
}

SetCoverSolution exact_set_cover(const SetCoverInstance& instance) {
  SetCoverSolution greedy = greedy_set_cover(instance);
  if (!greedy.feasible) return greedy;
  return BranchAndBound(instance).run(std::move(greedy));
}

bool covers_universe(const SetCoverInstance& instance,
                     const std::vector<std::size_t>& chosen) {
  Bits covered(instance.universe);
  for (std::size_t s : chosen) {
    if (s >= instance.sets.size()) return false;
    covered |= instance.sets[s];
  }
  return covered.all();
}

}  // namespace covnum

#pragma once

#include <string>

#include <json.hpp>

#include "covnum/banach_cover.hpp"
#include "covnum/bounds.hpp"
#include "covnum/combinatorial_map.hpp"
#include "covnum/cover_enum.hpp"
#include "covnum/disk_net.hpp"
#include "covnum/hyperbolic.hpp"
#include "covnum/metric_space.hpp"
#include "covnum/quad_diff.hpp"
#include "covnum/quasiconformal.hpp"
#include "covnum/triangulation_enum.hpp"

namespace covnum {

// Key order is insertion order, so identical inputs serialize identically.
using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
// Two-space indent plus trailing newline.
std::string dump(const Json& j);

// {"points": [ids], "dist": [[...]]}
Json to_json(const FiniteMetricSpace& space);
FiniteMetricSpace metric_space_from_json(const Json& j);

Json to_json(const FiniteMetricSpace& space, const CoverCertificate& cert);
CoverCertificate cover_certificate_from_json(const FiniteMetricSpace& space, const Json& j);
Json to_json(const FiniteMetricSpace& space, const PackingCertificate& cert);
PackingCertificate packing_certificate_from_json(const FiniteMetricSpace& space, const Json& j);
Json to_json(const ChainCheck& c);

Json to_json(const GridCover& g);
GridCover grid_cover_from_json(const Json& j);
Json to_json(const GridVerification& v);
Json to_json(const ComplexCoverBound& b);

Json to_json(const HypTriangle& t);
HypTriangle hyp_triangle_from_json(const Json& j);
Json to_json(const MinAngleResult& r);
Json to_json(const PointPushMap& m);
Json to_json(const DiskNet& net, bool include_points = false);
Json to_json(const NetValidation& v);

Json to_json(const PolyQuadDiff& phi);  // [[re, im], ...]
PolyQuadDiff quad_diff_from_json(const Json& j);
Json to_json(const QNorm& n);

Json to_json(const CombinatorialMap& m);  // {darts, alpha, sigma, lengths?}
CombinatorialMap combinatorial_map_from_json(const Json& j);
Json to_json(const TriangulationClass& c);
Json to_json(const EnumerationResult& r);

Json to_json(const PermTuple& t);
PermTuple perm_tuple_from_json(const Json& j);
Json to_json(const CensusEntry& e);

// Big integers always as decimal strings; log-scale values as {"log10": x}.
Json big_to_json(const BigInt& x);
Json log10_record(const std::optional<double>& log10);
Json to_json(const BoundReport& r);

}  // namespace covnum

#include "covnum/io.hpp"

#include <fstream>
#include <sstream>

#include "covnum/errors.hpp"

namespace covnum {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

template <typename T>
T get(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad field '") + key + "': " + e.what());
  }
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const FiniteMetricSpace& space) {
  Json j;
  j["points"] = space.ids();
  j["dist"] = space.matrix();
  return j;
}

FiniteMetricSpace metric_space_from_json(const Json& j) {
  return FiniteMetricSpace(get<std::vector<std::string>>(j, "points"),
                           get<std::vector<std::vector<double>>>(j, "dist"));
}

Json to_json(const FiniteMetricSpace& space, const CoverCertificate& cert) {
  Json j;
  j["kind"] = "cover";
  j["radius"] = cert.radius;
  j["ball_kind"] = std::string(to_string(cert.kind));
  Json centers = Json::array();
  for (PointIndex c : cert.centers) centers.push_back(space.id(c));
  j["centers"] = centers;
  Json assignment = Json::object();
  for (const auto& [p, c] : cert.assignment) assignment[space.id(p)] = space.id(c);
  j["assignment"] = assignment;
  return j;
}

CoverCertificate cover_certificate_from_json(const FiniteMetricSpace& space, const Json& j) {
  require(get<std::string>(j, "kind") == "cover", "not a cover certificate");
  CoverCertificate c;
  c.radius = get<double>(j, "radius");
  c.kind = ball_kind_from_string(get<std::string>(j, "ball_kind"));
  for (const auto& id : get<std::vector<std::string>>(j, "centers")) {
    c.centers.push_back(space.index_of(id));
  }
  std::sort(c.centers.begin(), c.centers.end());
  const Json& a = j.at("assignment");
  require(a.is_object(), "assignment must be an object");
  for (auto it = a.begin(); it != a.end(); ++it) {
    c.assignment.emplace_back(space.index_of(it.key()), space.index_of(it.value().get<std::string>()));
  }
  std::sort(c.assignment.begin(), c.assignment.end());
  return c;
}

Json to_json(const FiniteMetricSpace& space, const PackingCertificate& cert) {
  Json j;
  j["kind"] = "packing";
  j["radius"] = cert.radius;
  Json centers = Json::array();
  for (PointIndex c : cert.centers) centers.push_back(space.id(c));
  j["centers"] = centers;
  return j;
}

PackingCertificate packing_certificate_from_json(const FiniteMetricSpace& space, const Json& j) {
  require(get<std::string>(j, "kind") == "packing", "not a packing certificate");
  PackingCertificate c;
  c.radius = get<double>(j, "radius");
  for (const auto& id : get<std::vector<std::string>>(j, "centers")) {
    c.centers.push_back(space.index_of(id));
  }
  std::sort(c.centers.begin(), c.centers.end());
  return c;
}

Json to_json(const ChainCheck& c) {
  Json j;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["inner_ball"] = c.inner_ball;
  j["sup_factor"] = c.sup_factor;
  j["holds"] = c.holds;
  return j;
}

Json to_json(const GridCover& g) {
  Json j;
  j["dimension"] = g.dimension;
  j["spacing"] = g.spacing;
  j["half_width"] = g.half_width;
  j["inflation"] = g.inflation;
  j["ball_radius"] = g.ball_radius;
  j["center_count"] = g.center_count;
  return j;
}

GridCover grid_cover_from_json(const Json& j) {
  GridCover g;
  g.dimension = get<int>(j, "dimension");
  g.spacing = get<double>(j, "spacing");
  g.half_width = get<int>(j, "half_width");
  g.inflation = get<double>(j, "inflation");
  g.ball_radius = get<double>(j, "ball_radius");
  g.center_count = get<std::uint64_t>(j, "center_count");
  require(g.dimension >= 1 && g.half_width >= 0, "invalid grid cover");
  std::uint64_t expect = 1;
  for (int i = 0; i < g.dimension; ++i) expect *= 2 * static_cast<std::uint64_t>(g.half_width) + 1;
  require(expect == g.center_count, "center count must be (2C+1)^m");
  return g;
}

Json to_json(const GridVerification& v) {
  Json j;
  j["covered"] = v.covered;
  j["certified"] = v.certified;
  j["exact_covered"] = v.exact_covered;
  j["worst_margin"] = v.worst_margin;
  j["corner_margin"] = v.corner_margin;
  j["step"] = v.step;
  j["samples"] = v.samples;
  j["counterexample"] = v.counterexample ? Json(*v.counterexample) : Json(nullptr);
  return j;
}

Json to_json(const ComplexCoverBound& b) {
  Json j;
  j["bound"] = b.bound;
  j["bound_log10"] = b.bound_log10;
  j["construction"] = to_json(b.construction);
  j["constructed_count"] = b.constructed_count;
  return j;
}

Json to_json(const HypTriangle& t) {
  Json j;
  j["sides"] = {{"a", t.sides.a}, {"b", t.sides.b}, {"c", t.sides.c}};
  j["angles"] = {{"alpha", t.angles.alpha}, {"beta", t.angles.beta}, {"gamma", t.angles.gamma}};
  return j;
}

HypTriangle hyp_triangle_from_json(const Json& j) {
  const Json& s = j.contains("sides") ? j.at("sides") : j;
  return HypTriangle::from_sides(get<double>(s, "a"), get<double>(s, "b"), get<double>(s, "c"));
}

Json to_json(const MinAngleResult& r) {
  Json j;
  j["theta"] = r.theta;
  j["minimizer"] = {{"a", r.minimizer.a}, {"b", r.minimizer.b}, {"c", r.minimizer.c}};
  j["round_minima"] = r.round_minima;
  j["last_change"] = r.last_change;
  j["grid"] = r.grid;
  j["evaluations"] = r.evaluations;
  j["skipped_degenerate"] = r.skipped_degenerate;
  return j;
}

Json to_json(const PointPushMap& m) {
  Json j;
  j["a"] = m.a;
  j["delta"] = m.delta;
  j["euclidean_radius"] = m.euclidean_radius;
  j["shift"] = m.shift;
  j["k_estimate"] = m.k_estimate;
  j["k_exact"] = m.k_exact;
  j["samples"] = m.samples;
  return j;
}

Json to_json(const DiskNet& net, bool include_points) {
  Json j;
  j["region_radius"] = net.region_radius();
  j["delta"] = net.delta();
  j["count"] = net.size();
  j["ring_sizes"] = net.ring_sizes();
  if (include_points) {
    Json pts = Json::array();
    for (const Complex& z : net.points()) pts.push_back(complex_json(z));
    j["points"] = pts;
  }
  return j;
}

Json to_json(const NetValidation& v) {
  Json j;
  j["valid"] = v.valid;
  j["worst_gap"] = v.worst_gap;
  j["samples"] = v.samples;
  return j;
}

Json to_json(const PolyQuadDiff& phi) {
  Json j = Json::array();
  for (const Complex& c : phi.coefficients()) j.push_back(complex_json(c));
  return j;
}

PolyQuadDiff quad_diff_from_json(const Json& j) {
  require(j.is_array(), "quadratic differential must be a coefficient array");
  std::vector<Complex> c;
  for (const Json& x : j) {
    if (x.is_number()) {
      c.emplace_back(x.get<double>(), 0.0);
    } else {
      require(x.is_array() && x.size() == 2, "coefficient must be [re, im]");
      c.emplace_back(x[0].get<double>(), x[1].get<double>());
    }
  }
  return PolyQuadDiff(std::move(c));
}

Json to_json(const QNorm& n) {
  Json j;
  j["value"] = n.value;
  j["error_bound"] = n.error_bound;
  j["argmax"] = complex_json(n.argmax);
  j["region_radius"] = n.region_radius;
  j["cells"] = n.cells;
  return j;
}

Json to_json(const CombinatorialMap& m) {
  Json j;
  j["darts"] = m.darts();
  j["alpha"] = m.alpha();
  j["sigma"] = m.sigma();
  if (m.lengths()) j["lengths"] = *m.lengths();
  return j;
}

CombinatorialMap combinatorial_map_from_json(const Json& j) {
  auto sigma = get<std::vector<int>>(j, "sigma");
  auto alpha = get<std::vector<int>>(j, "alpha");
  if (j.contains("darts")) {
    require(get<int>(j, "darts") == static_cast<int>(sigma.size()), "dart count mismatch");
  }
  std::optional<std::vector<double>> lengths;
  if (j.contains("lengths")) lengths = get<std::vector<double>>(j, "lengths");
  return CombinatorialMap(std::move(sigma), std::move(alpha), std::move(lengths));
}

Json to_json(const TriangulationClass& c) {
  Json j;
  j["canonical"] = c.canonical;
  j["V"] = c.vertices;
  j["E"] = c.edges;
  j["F"] = c.faces;
  j["genus"] = c.genus;
  j["max_degree"] = c.max_degree;
  j["delta_member"] = c.delta_member;
  return j;
}

Json to_json(const EnumerationResult& r) {
  Json j;
  j["genus"] = r.genus;
  j["max_edges"] = r.max_edges;
  j["k"] = r.k;
  j["class_count"] = r.classes.size();
  std::size_t members = 0;
  for (const auto& c : r.classes) members += c.delta_member;
  j["delta_members"] = members;
  Json rooted = Json::array();
  for (const auto& [e, n] : r.rooted_by_edges) rooted.push_back({{"E", e}, {"rooted", n}});
  j["rooted_by_edges"] = rooted;
  Json cls = Json::array();
  for (const auto& c : r.classes) cls.push_back(to_json(c));
  j["classes"] = cls;
  return j;
}

Json to_json(const PermTuple& t) {
  Json j = Json::array();
  for (const Perm& p : t.gens) {
    Json row = Json::array();
    for (int i = 0; i < t.degree; ++i) row.push_back(static_cast<int>(p[i]));
    j.push_back(row);
  }
  return j;
}

PermTuple perm_tuple_from_json(const Json& j) {
  require(j.is_array() && j.size() == 4, "a tuple needs four permutations");
  PermTuple t;
  t.degree = static_cast<int>(j[0].size());
  require(t.degree >= 1 && t.degree <= kMaxPermDegree, "degree out of range");
  for (int k = 0; k < 4; ++k) {
    require(static_cast<int>(j[k].size()) == t.degree, "permutations differ in degree");
    t.gens[k] = identity_perm();
    std::vector<char> seen(t.degree, 0);
    for (int i = 0; i < t.degree; ++i) {
      const int v = j[k][i].get<int>();
      require(v >= 0 && v < t.degree && !seen[v], "not a permutation");
      seen[v] = 1;
      t.gens[k][i] = static_cast<std::uint8_t>(v);
    }
  }
  return t;
}

Json big_to_json(const BigInt& x) { return x.str(); }

Json log10_record(const std::optional<double>& log10) {
  return log10 ? Json{{"log10", *log10}} : Json(nullptr);
}

Json to_json(const CensusEntry& e) {
  Json j;
  j["d"] = e.degree;
  j["cover_genus"] = e.cover_genus;
  j["hom_count"] = big_to_json(e.hom_count);
  j["transitive_count"] = big_to_json(e.transitive_count);
  j["subgroup_count"] = big_to_json(e.subgroup_count);
  j["class_count"] = e.class_count ? Json(*e.class_count) : Json(nullptr);
  j["provenance"] = e.provenance;
  j["oracles_agree"] = e.oracles_agree;
  Json reps = Json::array();
  for (const auto& t : e.representatives) reps.push_back(to_json(t));
  j["representatives"] = reps;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  j["value"] = log10_record(r.value_log10);
  j["plain"] = r.value ? Json(*r.value) : Json(nullptr);
  j["exact"] = r.exact ? big_to_json(*r.exact) : Json(nullptr);
  j["provenance"] = r.provenance;
  return j;
}

}  // namespace covnum

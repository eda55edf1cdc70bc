// covnum: command-line front end. Every subcommand prints one JSON document
// (or an aligned table) and, with --out, writes <subcommand>.json plus a
// manifest.json next to it.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covnum/banach_cover.hpp"
#include "covnum/bounds.hpp"
#include "covnum/combinatorial_map.hpp"
#include "covnum/cover_enum.hpp"
#include "covnum/disk_net.hpp"
#include "covnum/errors.hpp"
#include "covnum/hyperbolic.hpp"
#include "covnum/io.hpp"
#include "covnum/manifest.hpp"
#include "covnum/metric_space.hpp"
#include "covnum/quad_diff.hpp"
#include "covnum/quasiconformal.hpp"
#include "covnum/selftest.hpp"
#include "covnum/triangulation_enum.hpp"

using namespace covnum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUsage = 64;

const std::vector<std::string> kSubcommands = {"cover", "pack", "chain", "grid", "hyp", "qd",
                                               "maps", "covers", "bounds", "selftest"};

struct Common {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
  std::string format = "json";
};

struct Run {
  Json parameters = Json::object();
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, sha256)
  bool failed = false;  // selftest only: report written, exit nonzero
};

std::string usage() {
  std::string s = "usage: covnum <subcommand> [options]\nsubcommands:";
  for (const auto& c : kSubcommands) s += " " + c;
  return s + "\nrun 'covnum <subcommand> --help' for options\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json load_input(const std::string& path, Run& run) {
  const std::string bytes = slurp(path);
  run.inputs.emplace_back(std::filesystem::path(path).filename().string(), sha256_hex(bytes));
  try {
    return Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
}

PointSet subset_from_ids(const FiniteMetricSpace& space, const std::vector<std::string>& ids) {
  if (ids.empty()) return space.all_points();
  PointSet s;
  for (const auto& id : ids) s.push_back(space.index_of(id));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Sides parse_sides(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ValidationError("bad side length '" + item + "'");
    }
  }
  require(v.size() == 3, "a triangle needs three comma-separated sides");
  return {v[0], v[1], v[2]};
}

// ---- table output -------------------------------------------------------

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    }
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars && j.size() <= 12) {
      rows.emplace_back(prefix, j.dump());
    } else {
      rows.emplace_back(prefix, "[" + std::to_string(j.size()) + " items]");
    }
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string render_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream s;
  for (const auto& [k, v] : rows) s << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  return s.str();
}

std::string render_bounds_table(const Json& j) {
  std::ostringstream s;
  s << std::left << std::setw(22) << "name" << std::setw(24) << "log10" << std::setw(28) << "exact"
    << "provenance\n";
  for (const Json& r : j.at("reports")) {
    const std::string log10 = r["value"].is_null() ? "-inf" : r["value"]["log10"].dump();
    std::string exact = r["exact"].is_null() ? "-" : r["exact"].get<std::string>();
    if (exact.size() > 26) exact = exact.substr(0, 12) + "..(" + std::to_string(exact.size()) + " digits)";
    s << std::left << std::setw(22) << r["name"].get<std::string>() << std::setw(24) << log10
      << std::setw(28) << exact << r["provenance"].get<std::string>() << "\n";
  }
  return s.str();
}

// ---- subcommands --------------------------------------------------------

struct MetricOpts {
  std::string input;
  double radius = 1.0;
  std::string kind = "closed";
  std::string method = "exact";
  std::vector<std::string> subset;
  std::vector<std::string> ambient;
};

Json run_cover(const MetricOpts& o, Run& run) {
  const auto space = metric_space_from_json(load_input(o.input, run));
  const auto kind = ball_kind_from_string(o.kind);
  require(o.method == "exact" || o.method == "greedy", "method must be exact or greedy");
  run.parameters = {{"radius", o.radius}, {"kind", o.kind}, {"method", o.method},
                    {"subset", o.subset}, {"ambient", o.ambient}};
  const PointSet e = subset_from_ids(space, o.subset);
  const PointSet a = subset_from_ids(space, o.ambient);
  const CoverResult r = o.method == "exact" ? covering_number_exact(space, e, a, o.radius, kind)
                                            : covering_number_greedy(space, e, a, o.radius, kind);
  const auto check = validate_cover(space, e, a, r.certificate);
  ensure(check.valid, "solver produced an invalid cover: " + check.reason);
  Json j;
  j["count"] = r.count;
  j["exact"] = o.method == "exact";
  j["certificate"] = to_json(space, r.certificate);
  j["certificate_valid"] = check.valid;
  return j;
}

Json run_pack(const MetricOpts& o, Run& run) {
  const auto space = metric_space_from_json(load_input(o.input, run));
  run.parameters = {{"radius", o.radius}, {"subset", o.subset}};
  const PointSet e = subset_from_ids(space, o.subset);
  const auto r = packing_number_exact(space, e, o.radius);
  const auto check = validate_packing(space, e, r.certificate);
  ensure(check.valid, "solver produced an invalid packing: " + check.reason);
  Json j;
  j["count"] = r.count;
  j["certificate"] = to_json(space, r.certificate);
  j["certificate_valid"] = check.valid;
  return j;
}

struct ChainOpts {
  std::string input;
  std::string x;
  double r = 1.0, p = 1.0, q = 1.0;
  std::string kind = "closed";
};

Json run_chain(const ChainOpts& o, Run& run) {
  const auto space = metric_space_from_json(load_input(o.input, run));
  run.parameters = {{"x", o.x}, {"r", o.r}, {"p", o.p}, {"q", o.q}, {"kind", o.kind}};
  const auto c = verify_chain_inequality(space, space.index_of(o.x), o.r, o.p, o.q,
                                         ball_kind_from_string(o.kind));
  return to_json(c);
}

struct GridOpts {
  int m = 2;
  double big_r = 1.0, r = 0.4, delta = 0.1, resolution = 0.01;
  int complex_n = 0;
  std::uint64_t samples = 10000;
};

Json run_grid(const GridOpts& o, const Common& common, Run& run) {
  run.parameters = {{"m", o.m}, {"R", o.big_r}, {"r", o.r}, {"delta", o.delta},
                    {"resolution", o.resolution}, {"complex_n", o.complex_n}, {"samples", o.samples}};
  const GridCover g = real_grid_cover(o.m, o.big_r, o.r, o.delta);
  Json j;
  j["cover"] = to_json(g);
  j["count"] = g.center_count;
  j["verification"] = to_json(verify_cover(g, o.big_r, o.resolution));
  j["volume_lower_bound"] = volume_lower_bound(o.m, o.big_r, g.ball_radius);
  j["simplified_upper_bound"] = std::pow(o.big_r / o.r + 2.0, o.m);
  j["stated_half_width"] = stated_half_width(o.big_r, o.r, o.delta);
  if (o.complex_n > 0) {
    const auto b = complex_sup_cover_bound(o.complex_n, o.big_r, o.r);
    const auto v = verify_complex_cover(b, o.complex_n, o.big_r, o.r, o.samples, common.seed);
    Json c = to_json(b);
    c["sample_check"] = {{"covered", v.covered}, {"worst_margin", v.worst_margin}, {"samples", v.samples}};
    j["complex"] = c;
  }
  return j;
}

struct HypOpts {
  std::string task = "triangle";
  std::string sides = "1,1,1";
  std::string sides2 = "1,1,1";
  double eps = 1.0;
  int grid = 64, rounds = 5, subdivisions = 40;
  double a = 1.0, delta = 0.1, big_r = 2.0;
  std::uint64_t samples = 10000;
};

Json run_hyp(const HypOpts& o, const Common& common, Run& run) {
  run.parameters = {{"task", o.task}};
  Json& p = run.parameters;
  if (o.task == "triangle") {
    p["sides"] = o.sides;
    const Sides s = parse_sides(o.sides);
    const auto t = HypTriangle::from_sides(s.a, s.b, s.c);
    Json j = to_json(t);
    j["min_angle"] = t.min_angle();
    j["area"] = t.area();
    return j;
  }
  if (o.task == "min-angle") {
    p["eps"] = o.eps;
    p["grid"] = o.grid;
    p["rounds"] = o.rounds;
    return to_json(min_angle_bound(o.eps, o.grid, o.rounds));
  }
  if (o.task == "straighten") {
    p["sides"] = o.sides;
    p["sides2"] = o.sides2;
    p["subdivisions"] = o.subdivisions;
    const Sides s1 = parse_sides(o.sides);
    const Sides s2 = parse_sides(o.sides2);
    const auto t1 = HypTriangle::from_sides(s1.a, s1.b, s1.c);
    const auto t2 = HypTriangle::from_sides(s2.a, s2.b, s2.c);
    const auto k = straighten_dilatation_sampled(t1, t2, o.subdivisions);
    Json j;
    j["from"] = to_json(t1);
    j["to"] = to_json(t2);
    j["k"] = k.k;
    j["argmax"] = {k.argmax.real(), k.argmax.imag()};
    j["samples"] = k.samples;
    j["k_bound"] = straighten_dilatation_bound(t1, t2);
    return j;
  }
  if (o.task == "point-push") {
    p["a"] = o.a;
    p["delta"] = o.delta;
    return to_json(reich_pointpush(o.a, o.delta));
  }
  if (o.task == "net") {
    p["R"] = o.big_r;
    p["delta"] = o.delta;
    p["samples"] = o.samples;
    const DiskNet net(o.big_r, o.delta);
    Json j = to_json(net);
    j["validation"] = to_json(net.validate(o.samples, common.seed));
    return j;
  }
  throw ValidationError("unknown hyp task '" + o.task + "' (triangle, min-angle, straighten, point-push, net)");
}

struct QdOpts {
  double xi = 0.1;
  std::size_t count = 1000;
  int max_degree = 20;
  std::uint64_t trials = 100;
  std::uint64_t cauchy_samples = 100;
  double net_radius = 0.92;  // Euclidean
};

Json run_qd(const QdOpts& o, const Common& common, Run& run) {
  run.parameters = {{"xi", o.xi}, {"count", o.count}, {"max_degree", o.max_degree},
                    {"trials", o.trials}, {"cauchy_samples", o.cauchy_samples},
                    {"net_radius", o.net_radius}};
  require(o.net_radius > 0.0 && o.net_radius < 1.0, "net radius must be in (0, 1)");
  const double delta = variation_delta_for_xi(o.xi);
  const auto family = random_family(o.count, o.max_degree, common.seed, common.threads);
  const auto var = empirical_variation(family.members, delta, o.trials, common.seed, 0.95, common.threads);
  const DiskNet net(hyperbolic_radius(o.net_radius), delta);
  const auto bl = empirical_bilipschitz(net, family.members, common.threads);
  const auto cc = cauchy_check(family.members, o.cauchy_samples, common.seed);
  Json j;
  j["xi"] = o.xi;
  j["delta"] = delta;
  j["variation_bound"] = variation_bound(delta);
  j["family_size"] = family.members.size();
  j["max_degree"] = o.max_degree;
  j["seed"] = common.seed;
  j["variation"] = {{"max_observed", var.max_observed}, {"pairs", var.pairs}, {"below_xi", var.max_observed < o.xi}};
  j["net"] = to_json(net);
  j["lower"] = bl.lower;
  j["upper"] = bl.upper;
  j["max_norm_error"] = bl.max_norm_error;
  j["cauchy"] = {{"max_abs_phi", cc.max_abs_phi}, {"max_ratio", cc.max_ratio},
                 {"density_sq_max", cc.density_sq_max}, {"samples", cc.samples},
                 {"holds", cc.max_abs_phi <= cc.density_sq_max}};
  return j;
}

struct MapsOpts {
  int genus = 1;
  int max_edges = 9;
  int k = 12;
  bool orientation_only = false;
  std::string order = "ascending";
  std::string input;
  bool list = true;
};

Json run_maps(const MapsOpts& o, const Common& common, Run& run) {
  if (!o.input.empty()) {
    const auto m = combinatorial_map_from_json(load_input(o.input, run));
    run.parameters = {{"k", o.k}, {"orientation_only", o.orientation_only}};
    const auto e = euler_genus(m);
    const auto d = in_delta_kg(m, o.k);
    Json j;
    j["map"] = to_json(m);
    j["canonical"] = canonical_form(m, !o.orientation_only);
    j["V"] = e.vertices;
    j["E"] = e.edges;
    j["F"] = e.faces;
    j["genus"] = e.genus;
    j["max_degree"] = m.max_degree();
    j["triangulated"] = m.all_faces_triangles();
    j["delta_member"] = d.is_member;
    return j;
  }
  require(o.order == "ascending" || o.order == "descending", "order must be ascending or descending");
  run.parameters = {{"genus", o.genus}, {"max_edges", o.max_edges}, {"k", o.k},
                    {"orientation_only", o.orientation_only}, {"order", o.order}, {"list", o.list}};
  EnumerationOptions opts;
  opts.allow_reflection = !o.orientation_only;
  opts.order = o.order == "ascending" ? TraversalOrder::kAscending : TraversalOrder::kDescending;
  opts.threads = common.threads;
  const auto r = enumerate_triangulation_classes(o.genus, o.max_edges, o.k, opts);
  Json j = to_json(r);
  if (!o.list) j.erase("classes");
  return j;
}

struct CoversOpts {
  int degree = 2;
  bool marked = false;
  bool representatives = true;
};

Json run_covers(const CoversOpts& o, const Common& common, Run& run) {
  run.parameters = {{"degree", o.degree}, {"marked", o.marked}, {"representatives", o.representatives}};
  const CensusEntry e = census(o.degree, common.threads, o.representatives && !o.marked);
  ensure(e.oracles_agree, "cover counting oracles disagree at degree " + std::to_string(o.degree));
  Json j = to_json(e);
  if (o.marked) {
    require(o.degree <= 4, "marked class enumeration needs degree <= 4");
    const auto classes = enumerate_cover_classes(o.degree, true, common.threads);
    ensure(BigInt(classes.size()) == e.subgroup_count, "marked classes differ from the subgroup count");
    j["marked_class_count"] = classes.size();
    if (o.representatives) {
      Json reps = Json::array();
      for (const auto& c : classes) reps.push_back(to_json(c.representative));
      j["representatives"] = reps;
    }
  }
  return j;
}

struct BoundsOpts {
  std::string name;
  std::vector<std::string> assignments;
};

Json run_bounds(const BoundsOpts& o, Run& run) {
  std::map<std::string, double> kv = {{"b_l", kBersLowerConstant}, {"nehari", kNehariRadius}};
  Json given = Json::object();
  for (const auto& a : o.assignments) {
    const auto eq = a.find('=');
    require(eq != std::string::npos && eq > 0, "expected key=value, got '" + a + "'");
    const std::string key = a.substr(0, eq);
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(a.substr(eq + 1), &used);
      require(used == a.size() - eq - 1, "trailing characters");
    } catch (const std::exception&) {
      throw ValidationError("bad number in '" + a + "'");
    }
    kv[key] = v;
    given[key] = v;
  }
  run.parameters = {{"name", o.name}, {"constants", given}};
  auto need = [&](const std::string& key) {
    const auto it = kv.find(key);
    require(it != kv.end(), "bound '" + o.name + "' needs " + key + "=...");
    return it->second;
  };
  auto integer = [&](const std::string& key) {
    const double v = need(key);
    require(v == std::floor(v) && std::fabs(v) < 9e15, key + " must be an integer");
    return v;
  };
  std::vector<BoundReport> reports;
  Json extra = Json::object();
  if (o.name == "main") {
    const auto p = main_theorem_bounds(static_cast<int>(integer("g")), need("c1"), need("c2"));
    reports = {p.lower, p.upper};
  } else if (o.name == "composition") {
    const auto c = lower_bound_composition(need("P"), need("D"), static_cast<int>(integer("g")));
    reports = {c.report};
    extra = {{"c_l", c.c_l}, {"lhs_log10", c.lhs_log10}, {"rhs_log10", c.rhs_log10}, {"residual", c.residual}};
  } else if (o.name == "diameter") {
    reports = {diameter_chain(static_cast<int>(integer("g")), need("c1"), need("d2"))};
  } else if (o.name == "teich-ball") {
    const auto t = teich_ball_bounds(static_cast<int>(integer("g")), need("d1"), need("d2"));
    reports = {t.lower, t.upper};
    extra = {{"ordered", t.ordered}};
  } else if (o.name == "packing-budget") {
    const double r_of_d = kv.count("delta0") ? kv["delta0"] : 0.0;
    reports = {packing_budget(need("D"), need("Q"), static_cast<int>(integer("g")), r_of_d)};
  } else if (o.name == "labeling") {
    const double n = integer("n"), big_n = integer("N"), g = integer("g");
    require(n >= 1 && big_n >= 1 && g >= 1, "labeling bound needs positive n, N, g");
    reports = {labeling_bound_report(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(big_n),
                                     static_cast<std::uint64_t>(g))};
  } else {
    throw ValidationError("unknown bound '" + o.name +
                          "' (main, composition, diameter, teich-ball, packing-budget, labeling)");
  }
  Json j;
  j["constants"] = {{"b_l", kv["b_l"]}, {"nehari", kv["nehari"]}};
  Json arr = Json::array();
  for (const auto& r : reports) {
    ensure(exact_matches_log(r), "exact and log-scale values disagree for " + r.name);
    arr.push_back(to_json(r));
  }
  j["reports"] = arr;
  if (!extra.empty()) j["checks"] = extra;
  return j;
}

Json run_selftest_cmd(const Common& common, Run& run) {
  const auto results = run_selftest(common.threads);
  Json arr = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    passed += r.passed;
  }
  run.failed = passed != results.size();
  Json j;
  j["passed"] = passed;
  j["total"] = results.size();
  j["results"] = arr;
  return j;
}

void emit(const std::string& subcommand, const Json& result, const Common& common, const Run& run) {
  const std::string artifact = dump(result);
  if (!common.out.empty()) {
    std::filesystem::create_directories(common.out);
    const auto dir = std::filesystem::path(common.out);
    write_text_file((dir / (subcommand + ".json")).string(), artifact);
    RunManifest m;
    m.subcommand = subcommand;
    m.parameters = run.parameters;
    m.seed = common.seed;
    m.tool_version = tool_version();
    m.input_digests = run.inputs;
    m.output_digest = sha256_hex(artifact);
    write_text_file((dir / "manifest.json").string(), dump(to_json(m)));
  }
  if (common.format == "table") {
    std::cout << (subcommand == "bounds" ? render_bounds_table(result) : render_table(result));
  } else {
    std::cout << artifact;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << usage();
    return kExitUsage;
  }
  const std::string first = argv[1];
  if (first == "--help" || first == "-h") {
    std::cout << usage();
    return kExitOk;
  }
  if (first == "--version") {
    std::cout << "covnum " << tool_version() << "\n";
    return kExitOk;
  }
  if (std::find(kSubcommands.begin(), kSubcommands.end(), first) == kSubcommands.end()) {
    std::cerr << "unknown subcommand '" << first << "'\n" << usage();
    return kExitUsage;
  }

  CLI::App app{"covering numbers, hyperbolic surfaces and covers"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "random seed")->capture_default_str();
    sub->add_option("--threads", common.threads, "worker threads (results do not depend on it)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    sub->add_option("--out", common.out, "directory for the artifact and manifest");
    sub->add_option("--format", common.format, "stdout format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
  };

  MetricOpts cover_o, pack_o;
  auto* cover = app.add_subcommand("cover", "covering number of a finite metric space");
  cover->add_option("--input", cover_o.input, "metric space JSON {points, dist}")->required();
  cover->add_option("--radius", cover_o.radius)->required();
  cover->add_option("--kind", cover_o.kind)->check(CLI::IsMember({"closed", "open"}))->capture_default_str();
  cover->add_option("--method", cover_o.method)->check(CLI::IsMember({"exact", "greedy"}))->capture_default_str();
  cover->add_option("--subset", cover_o.subset, "point ids of E (default: all)");
  cover->add_option("--ambient", cover_o.ambient, "allowed center ids (default: all)");
  add_common(cover);

  auto* pack = app.add_subcommand("pack", "packing number of a finite metric space");
  pack->add_option("--input", pack_o.input)->required();
  pack->add_option("--radius", pack_o.radius)->required();
  pack->add_option("--subset", pack_o.subset);
  add_common(pack);

  ChainOpts chain_o;
  auto* chain = app.add_subcommand("chain", "check the ball-growth chain inequality at one point");
  chain->add_option("--input", chain_o.input)->required();
  chain->add_option("--x", chain_o.x, "center point id")->required();
  chain->add_option("--r", chain_o.r)->capture_default_str();
  chain->add_option("--p", chain_o.p)->capture_default_str();
  chain->add_option("--q", chain_o.q)->capture_default_str();
  chain->add_option("--kind", chain_o.kind)->check(CLI::IsMember({"closed", "open"}))->capture_default_str();
  add_common(chain);

  GridOpts grid_o;
  auto* grid = app.add_subcommand("grid", "lattice cover of a sup-norm ball");
  grid->add_option("--m", grid_o.m, "real dimension")->capture_default_str();
  grid->add_option("--R", grid_o.big_r, "ball radius")->capture_default_str();
  grid->add_option("--r", grid_o.r, "half spacing")->capture_default_str();
  grid->add_option("--delta", grid_o.delta, "inflation")->capture_default_str();
  grid->add_option("--resolution", grid_o.resolution, "verification sample step")->capture_default_str();
  grid->add_option("--complex-n", grid_o.complex_n, "also bound the complex ball in C^n");
  grid->add_option("--samples", grid_o.samples, "complex cover samples")->capture_default_str();
  add_common(grid);

  HypOpts hyp_o;
  auto* hyp = app.add_subcommand("hyp", "hyperbolic triangles, dilatations and nets");
  hyp->add_option("--task", hyp_o.task)
      ->check(CLI::IsMember({"triangle", "min-angle", "straighten", "point-push", "net"}))
      ->capture_default_str();
  hyp->add_option("--sides", hyp_o.sides, "a,b,c")->capture_default_str();
  hyp->add_option("--sides2", hyp_o.sides2, "target triangle for straighten")->capture_default_str();
  hyp->add_option("--eps", hyp_o.eps)->capture_default_str();
  hyp->add_option("--grid", hyp_o.grid)->capture_default_str();
  hyp->add_option("--rounds", hyp_o.rounds)->capture_default_str();
  hyp->add_option("--subdivisions", hyp_o.subdivisions)->capture_default_str();
  hyp->add_option("--a", hyp_o.a, "point-push ball radius")->capture_default_str();
  hyp->add_option("--delta", hyp_o.delta)->capture_default_str();
  hyp->add_option("--R", hyp_o.big_r, "net region radius (hyperbolic)")->capture_default_str();
  hyp->add_option("--samples", hyp_o.samples)->capture_default_str();
  add_common(hyp);

  QdOpts qd_o;
  auto* qd = app.add_subcommand("qd", "random quadratic differentials: variation, sampling, Cauchy");
  qd->add_option("--xi", qd_o.xi)->capture_default_str();
  qd->add_option("--count", qd_o.count)->capture_default_str();
  qd->add_option("--max-degree", qd_o.max_degree)->capture_default_str();
  qd->add_option("--trials", qd_o.trials, "variation pairs per polynomial")->capture_default_str();
  qd->add_option("--cauchy-samples", qd_o.cauchy_samples)->capture_default_str();
  qd->add_option("--net-radius", qd_o.net_radius, "Euclidean radius of the sampling net")->capture_default_str();
  add_common(qd);

  MapsOpts maps_o;
  auto* maps = app.add_subcommand("maps", "enumerate or analyze triangulated maps");
  maps->add_option("--genus", maps_o.genus)->check(CLI::Range(0, 1))->capture_default_str();
  maps->add_option("--max-edges", maps_o.max_edges)->capture_default_str();
  maps->add_option("--k", maps_o.k, "degree cap")->capture_default_str();
  maps->add_flag("--orientation-only", maps_o.orientation_only, "do not identify mirror images");
  maps->add_option("--order", maps_o.order)->check(CLI::IsMember({"ascending", "descending"}))->capture_default_str();
  maps->add_option("--input", maps_o.input, "analyze one map JSON instead");
  maps->add_flag("!--no-list", maps_o.list, "omit the class list");
  add_common(maps);

  CoversOpts covers_o;
  auto* covers = app.add_subcommand("covers", "covers of the genus-2 surface");
  covers->add_option("--degree", covers_o.degree)->required()->check(CLI::Range(1, 8));
  covers->add_flag("--marked", covers_o.marked);
  covers->add_flag("!--no-representatives", covers_o.representatives);
  add_common(covers);

  BoundsOpts bounds_o;
  auto* bounds = app.add_subcommand("bounds", "evaluate a bound: NAME key=value ...");
  bounds->add_option("name", bounds_o.name, "main|composition|diameter|teich-ball|packing-budget|labeling")
      ->required();
  bounds->add_option("constants", bounds_o.assignments, "key=value");
  add_common(bounds);

  auto* selftest = app.add_subcommand("selftest", "fast invariant suite");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Run run;
    Json result;
    if (name == "cover") result = run_cover(cover_o, run);
    else if (name == "pack") result = run_pack(pack_o, run);
    else if (name == "chain") result = run_chain(chain_o, run);
    else if (name == "grid") result = run_grid(grid_o, common, run);
    else if (name == "hyp") result = run_hyp(hyp_o, common, run);
    else if (name == "qd") result = run_qd(qd_o, common, run);
    else if (name == "maps") result = run_maps(maps_o, common, run);
    else if (name == "covers") result = run_covers(covers_o, common, run);
    else if (name == "bounds") result = run_bounds(bounds_o, run);
    else result = run_selftest_cmd(common, run);
    emit(name, result, common, run);
    return run.failed ? kExitInternal : kExitOk;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

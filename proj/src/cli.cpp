#include "polynorm/cli.hpp"

#include "polynorm/catalog.hpp"
#include "polynorm/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace polynorm {

using nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_violation = 2;

std::optional<std::string> env(const char* name) {
  const char* value = std::getenv(name);
  if (!value || !*value) return std::nullopt;
  return std::string(value);
}

int resolve_max_k(const std::optional<int>& flag) {
  if (flag) return *flag;
  if (auto text = env("POLYNORM_MAX_K")) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(*text, &used);
      if (used == text->size() && value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw InputError("POLYNORM_MAX_K must be a positive integer, got '" + *text + "'");
  }
  return 64;
}

std::optional<std::filesystem::path> resolve_cache(const std::optional<std::string>& flag) {
  if (flag) return std::filesystem::path(*flag);
  if (auto dir = env("POLYNORM_CACHE")) return std::filesystem::path(*dir);
  return std::nullopt;
}

Polytope build(const PolytopeInput& input) { return Polytope::from_points(input.points); }

struct CommonOptions {
  std::string format = "table";
  std::optional<int> max_k;
  std::optional<std::string> cache_dir;
};

void add_max_k(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--max-k", o.max_k, "Safety cap on the dilates searched for k_P")->check(CLI::PositiveNumber);
}

ordered_json analyze_json(const PolytopeInput& input, int max_k, const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return to_json(full_report(build(input), input.name, max_k));
  const ReportCache cache(*cache_dir);
  const Polytope p = build(input);
  const std::string key = ReportCache::key(p.vertices(), max_k);
  if (auto hit = cache.load(key)) {
    (*hit)["name"] = input.name;
    return *hit;
  }
  ordered_json report = to_json(full_report(p, input.name, max_k));
  cache.store(key, report);
  return report;
}

int cmd_analyze(const std::string& source, const CommonOptions& o, bool require_kp, std::ostream& out,
                std::ostream& err) {
  const PolytopeInput input = load_input(source);
  const ordered_json report = analyze_json(input, resolve_max_k(o.max_k), resolve_cache(o.cache_dir));
  switch (parse_format(o.format)) {
    case Format::table: render_table(out, report); break;
    case Format::json: render_json(out, report); break;
    case Format::csv: render_csv(out, {report}); break;
  }
  if (require_kp && report["k_P"].is_null()) {
    err << "k_P is undefined: " << input.name << " is not very ample\n";
    return exit_violation;
  }
  return exit_ok;
}

int cmd_holes(const std::string& source, const CommonOptions& o, std::optional<int> levels, std::ostream& out) {
  const PolytopeInput input = load_input(source);
  const Polytope p = build(input);
  const int max_k = resolve_max_k(o.max_k);
  std::optional<int> k_P;
  if (!levels) {
    const int d_P = compute_d_P(p);
    const MPResult mp = compute_m_P(p, d_P);
    if (mp.very_ample()) {
      k_P = compute_k_P(p, mp.m_P, d_P, max_k);
      levels = *k_P;
    } else {
      levels = std::min(max_k, static_cast<int>(p.dim()) + 1);
    }
  }
  const NormalityScan scan = scan_levels(p, *levels);
  const Format format = parse_format(o.format);
  if (format == Format::json) {
    ordered_json j;
    j["name"] = input.name;
    j["k_P"] = k_P ? ordered_json(*k_P) : ordered_json();
    auto rows = ordered_json::array();
    for (const auto& [k, level] : scan.levels) {
      auto points = ordered_json::array();
      for (const auto& x : level.holes) points.push_back(json_point(x));
      rows.push_back({{"k", k}, {"count", level.holes.size()}, {"holes", points}});
    }
    j["levels"] = rows;
    render_json(out, j);
    return exit_ok;
  }
  out << "polytope " << input.name << '\n';
  for (const auto& [k, level] : scan.levels) {
    out << "k=" << k << "  holes=" << level.holes.size() << '\n';
    for (const auto& x : level.holes) out << "  " << to_string(x) << '\n';
  }
  return exit_ok;
}

int cmd_check(const std::string& source, const CommonOptions& o, std::ostream& out) {
  const PolytopeInput input = load_input(source);
  const Polytope p = build(input);
  const InvariantReport report = full_report(p, input.name, resolve_max_k(o.max_k));
  out << "polytope " << input.name << '\n';
  if (!report.very_ample) {
    out << "not very ample: x=" << to_string(report.non_saturation->x) << " at vertex "
        << to_string(report.non_saturation->vertex) << "; k_P undefined, dependent checks skipped\n";
  }
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& v : check_properties(p, report)) {
    (v.verdict == Verdict::pass ? passed : v.verdict == Verdict::fail ? failed : skipped)++;
    out << std::left << std::setw(6) << to_string(v.verdict) << v.name;
    if (!v.proven) out << " [conjectural]";
    if (!v.detail.empty()) out << "  (" << v.detail << ")";
    out << '\n';
  }
  out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return failed ? exit_violation : exit_ok;
}

struct ExploreOptions {
  int dim = 3;
  int count = 100;
  std::uint64_t seed = 1;
  int bound = 3;
  std::optional<int> points;
  std::optional<std::string> store;
};

int cmd_explore(const ExploreOptions& e, const CommonOptions& o, std::ostream& out, std::ostream& err) {
  if (e.dim < 2 || e.dim > 4) throw InputError("explore needs --dim in [2, 4]");
  const int max_k = resolve_max_k(o.max_k);
  const int points = e.points.value_or(e.dim + 4);
  std::ofstream store;
  if (e.store) {
    store.open(*e.store, std::ios::app);
    if (!store) throw InputError("cannot open results store " + *e.store);
  }
  int sampled = 0, skipped = 0, flagged = 0, eg = 0, gap = 0, oda = 0, reverify_failures = 0;
  for (int i = 0; i < e.count; ++i) {
    const std::string spec = "random:" + std::to_string(e.dim) + "," + std::to_string(e.bound) + "," +
                             std::to_string(points) + "," + std::to_string(e.seed + static_cast<std::uint64_t>(i));
    ordered_json record;
    try {
      const Polytope p = from_family(spec);
      const InvariantReport report = full_report(p, spec, max_k);
      const int threshold = normal_dilate_threshold(p, report.d_P);
      const ExploreFlags flags = explore_flags(report, threshold);
      record = explore_record(spec, report, threshold, flags, max_k);
      ++sampled;
      if (flags.any()) {
        ++flagged;
        eg += flags.eg_violation;
        gap += flags.d_P_minimality_gap;
        oda += flags.oda_gap;
        if (store.is_open()) store << record.dump() << '\n' << std::flush;
        if (!reverify_record(ordered_json::parse(record.dump()))) {
          ++reverify_failures;
          err << "re-verification failed for " << spec << '\n';
        }
      }
    } catch (const std::exception& ex) {
      ++skipped;
      err << "skipped " << spec << ": " << ex.what() << '\n';
      continue;
    }
    out << record.dump() << '\n';
  }
  ordered_json summary = {{"sampled", sampled},         {"skipped", skipped},     {"flagged", flagged},
                          {"eg_violation", eg},         {"d_P_minimality_gap", gap}, {"oda_gap", oda},
                          {"reverify_failures", reverify_failures}};
  out << ordered_json{{"summary", summary}}.dump() << '\n';
  return reverify_failures ? exit_violation : exit_ok;
}

int cmd_gen(const std::string& spec, const std::string& format, std::ostream& out) {
  if (!is_family_spec(spec)) throw InputError("unknown family spec '" + spec + "'");
  Polytope p = [&] {
    try {
      return from_family(spec);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const PolytopeInput input{spec, p.vertices()};
  if (format == "json") {
    out << write_json_input(input);
  } else if (format == "text" || format == "table") {
    out << write_text_input(input);
  } else {
    throw InputError("gen writes text or json, not '" + format + "'");
  }
  return exit_ok;
}

}  // namespace

int normal_dilate_threshold(const Polytope& p, int d_P) {
  int threshold = d_P;
  for (int m = d_P - 1; m >= 1; --m) {
    if (compute_d_P(dilate(p, m)) != 1) break;
    threshold = m;
  }
  return threshold;
}

ExploreFlags explore_flags(const InvariantReport& report, int dilate_threshold) {
  ExploreFlags flags;
  flags.eg_violation = report.eg_holds.has_value() && !*report.eg_holds;
  flags.d_P_minimality_gap = dilate_threshold != report.d_P;
  flags.oda_gap = report.smooth && report.k_P && *report.k_P > 1;
  return flags;
}

ordered_json explore_record(const std::string& spec, const InvariantReport& report, int dilate_threshold,
                            const ExploreFlags& flags, int max_k) {
  ordered_json j;
  j["spec"] = spec;
  j["max_k"] = max_k;
  const auto opt = [](const std::optional<int>& x) { return x ? ordered_json(*x) : ordered_json(); };
  j["summary"] = {{"num_vertices", report.num_vertices},
                  {"num_lattice_points", report.num_lattice_points},
                  {"volume_normalized", json_integer(report.volume)},
                  {"d_P", report.d_P},
                  {"normal_dilate_threshold", dilate_threshold},
                  {"m_P", opt(report.m_P)},
                  {"k_P", opt(report.k_P)},
                  {"smooth", report.smooth},
                  {"eg_holds", report.eg_holds ? ordered_json(*report.eg_holds) : ordered_json()}};
  j["flags"] = {{"eg_violation", flags.eg_violation},
                {"d_P_minimality_gap", flags.d_P_minimality_gap},
                {"oda_gap", flags.oda_gap}};
  j["report"] = flags.any() ? to_json(report) : ordered_json();
  return j;
}

bool reverify_record(const ordered_json& record) {
  const ordered_json& stored = record.at("report");
  if (stored.is_null()) return true;
  std::vector<IntVector> vertices;
  for (const auto& row : stored.at("vertices")) {
    IntVector x(static_cast<Eigen::Index>(row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      x(static_cast<Eigen::Index>(i)) = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>());
    }
    vertices.push_back(std::move(x));
  }
  const Polytope p = Polytope::from_points(vertices);
  const InvariantReport fresh = full_report(p, stored.at("name").get<std::string>(), record.at("max_k").get<int>());
  const ExploreFlags flags = explore_flags(fresh, normal_dilate_threshold(p, fresh.d_P));
  const auto& f = record.at("flags");
  const ExploreFlags recorded{f.at("eg_violation").get<bool>(), f.at("d_P_minimality_gap").get<bool>(),
                              f.at("oda_gap").get<bool>()};
  return flags == recorded && ordered_json::parse(to_json(fresh).dump()) == stored;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-normality invariants and regularity bounds of lattice polytopes", "polynorm"};
  app.set_version_flag("--version", tool_version);
  app.require_subcommand(1);

  CommonOptions common;
  std::string source;
  bool require_kp = false;
  std::optional<int> levels;
  ExploreOptions explore;
  std::string gen_format = "text";

  auto* analyze = app.add_subcommand("analyze", "Compute every invariant and bound of one polytope");
  analyze->add_option("input", source, "Family spec (e.g. bruns:4) or input file")->required();
  analyze->add_option("--format", common.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  add_max_k(*analyze, common);
  analyze->add_option("--cache-dir", common.cache_dir, "Directory for cached reports");
  analyze->add_flag("--require-kp", require_kp, "Exit 2 when k_P is undefined");

  auto* holes = app.add_subcommand("holes", "List the holes of each dilate");
  holes->add_option("input", source, "Family spec or input file")->required();
  holes->add_option("--format", common.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  add_max_k(*holes, common);
  holes->add_option("--levels", levels, "Dilates to list (default: up to k_P)")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Run the invariant suite; exit 2 on any failure");
  check->add_option("input", source, "Family spec or input file")->required();
  add_max_k(*check, common);

  auto* explore_cmd = app.add_subcommand("explore", "Sample random polytopes and flag open-question cases");
  explore_cmd->add_option("--dim", explore.dim, "Dimension, 2 to 4");
  explore_cmd->add_option("--count", explore.count, "Number of samples")->check(CLI::NonNegativeNumber);
  explore_cmd->add_option("--seed", explore.seed, "Seed of the first sample");
  explore_cmd->add_option("--bound", explore.bound, "Coordinates drawn from [0, bound]")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--points", explore.points, "Points per sample (default dim + 4)");
  explore_cmd->add_option("--store", explore.store, "Append flagged records to this JSONL file");
  add_max_k(*explore_cmd, common);

  auto* gen = app.add_subcommand("gen", "Print the vertex file of a family member");
  gen->add_option("family", source, "Family spec")->required();
  gen->add_option("--format", gen_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*analyze) return cmd_analyze(source, common, require_kp, out, err);
    if (*holes) return cmd_holes(source, common, levels, out);
    if (*check) return cmd_check(source, common, out);
    if (*explore_cmd) return cmd_explore(explore, common, out, err);
    if (*gen) return cmd_gen(source, gen_format, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const PipelineError& e) {
    err << "error in stage " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

}  // namespace polynorm

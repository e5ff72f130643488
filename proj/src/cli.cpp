#include "starcut/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "starcut/analysis.hpp"
#include "starcut/cuts.hpp"
#include "starcut/errors.hpp"

namespace starcut {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "starcut";
  for (const auto& a : args) s += " " + a;
  return s;
}

struct Options {
  std::string kind;
  int n = 0;
  int m = 0;
  std::string vertex, other;
  std::string mode = "structure";
  std::string file, out_path;
  int max_size = 4;
  bool force = false;
  bool strict_disjoint = false;
  std::string fq_range = "5..12", aq_range = "6..12", n_range;
  std::string seed_text = "0x5EED";
  int trials = 1000;
  int max_order = 4;
  std::string csv_path, json_path;
  std::string suite;
};

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad seed '" + s + "'");
}

class Session {
 public:
  Session(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
      : command_line_(join(args)), out_(out), err_(err) {}

  json manifest(const json& parameters, std::optional<std::uint64_t> seed = std::nullopt) const {
    json m = {{"command_line", command_line_},
              {"parameters", parameters},
              {"timestamp", iso_timestamp()},
              {"version", kVersion},
              {"timings_ms", timings_}};
    m["seed"] = seed ? json(*seed) : json(nullptr);
    return m;
  }

  void time(const std::string& key, double ms) { timings_[key] = ms; }

  void emit(const json& payload, const std::string& path = {}) const {
    if (path.empty()) {
      out_ << payload.dump(2) << '\n';
      return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << payload.dump(2) << '\n';
  }

  std::ostream& err() const { return err_; }

 private:
  std::string command_line_;
  std::ostream& out_;
  std::ostream& err_;
  json timings_ = json::object();
};

// ---------------------------------------------------------------------------

int cmd_topo(Session& s, const Options& o) {
  const auto start = Clock::now();
  const Topology t(parse_kind(o.kind), o.n);
  json payload = {{"topology", t.name()},
                  {"kind", kind_name(t.kind())},
                  {"n", o.n},
                  {"vertex_count", t.vertex_count()},
                  {"degree", t.degree()}};
  if (!o.vertex.empty()) {
    const Vertex v = parse_vertex(o.vertex, o.n);
    payload["vertex"] = format_vertex(v, t);
    payload["neighbors"] = format_vertices(t.neighbors(v), o.n);
    if (!o.other.empty()) {
      const Vertex w = parse_vertex(o.other, o.n);
      payload["other"] = format_vertex(w, t);
      payload["adjacent"] = t.adjacent(v, w);
      payload["common_neighbors"] = format_vertices(common_neighbors(t, v, w), o.n);
      if (t.kind() == Kind::AugmentedCube) {
        const auto e = classify_edge_aq(t, v, w);
        const char* type = e.type == EdgeKindAQ::Type::Hypercube    ? "hypercube"
                           : e.type == EdgeKindAQ::Type::Complement ? "complement"
                                                                    : "not-an-edge";
        payload["edge_classification"] = {{"type", type}, {"dimension", e.dim}};
      }
    }
  } else if (!o.other.empty()) {
    throw ParseError("--other requires --vertex");
  }
  s.time("topo", millis_since(start));
  payload["manifest"] = s.manifest({{"kind", o.kind}, {"n", o.n}, {"vertex", o.vertex},
                                    {"other", o.other}});
  s.emit(payload);
  return kExitOk;
}

StarFamily build_family(Kind kind, int n, int m) {
  switch (kind) {
    case Kind::FoldedHypercube:
      return build_fq_cut(n, m);
    case Kind::AugmentedCube:
      return build_aq_cut(n, m);
    case Kind::Hypercube:
      break;
  }
  throw ParseError("no construction for kind q (expected fq or aq)");
}

int cmd_cut_build(Session& s, const Options& o) {
  const auto family = build_family(parse_kind(o.kind), o.n, o.m);
  for (const auto& c : family.collisions) s.err() << "collision: " << c << '\n';
  s.emit(family_to_json(family), o.out_path);
  return kExitOk;
}

StarFamily load_family(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read cut file '" + path + "'");
  try {
    return family_from_json(json::parse(f));
  } catch (const json::exception& e) {
    throw ParseError("cut file '" + path + "': " + e.what());
  }
}

int cmd_cut_verify(Session& s, const Options& o) {
  const auto start = Clock::now();
  const auto family = load_family(o.file);
  const Kind kind = o.kind.empty() ? family.kind : parse_kind(o.kind);
  const int n = o.n > 0 ? o.n : family.n;
  const Topology t(kind, n);
  const auto verdict = verify_cut(t, family);
  s.time("verify", millis_since(start));

  json payload = verdict_to_json(verdict, n);
  payload["topology"] = t.name();
  payload["family"] = {{"kind", kind_name(family.kind)},
                       {"n", family.n},
                       {"m", family.m},
                       {"mode", mode_name(family.mode)},
                       {"star_count", family.members.size()}};
  payload["manifest"] = s.manifest({{"kind", kind_name(kind)}, {"n", n}, {"file", o.file}});
  s.emit(payload);
  return verdict.is_cut ? kExitOk : kExitNotACut;
}

int cmd_kappa_formula(Session& s, const Options& o) {
  json payload = to_json(kappa_formula(parse_kind(o.kind), o.n, o.m));
  payload["manifest"] = s.manifest({{"kind", o.kind}, {"n", o.n}, {"m", o.m}});
  s.emit(payload);
  return kExitOk;
}

int cmd_kappa_brute(Session& s, const Options& o) {
  const Kind kind = parse_kind(o.kind);
  const CutMode mode = parse_mode(o.mode);
  if (o.m < 1) throw RangeError("kappa brute", "m must be >= 1");
  const Topology t(kind, o.n);
  if (o.n > kOracleMaxDimension) {
    throw RangeError("kappa brute", "n > " + std::to_string(kOracleMaxDimension) +
                                        " is beyond the exhaustive oracle");
  }
  std::optional<std::uint64_t> cost;
  if (o.n > kOracleGuardDimension) {
    cost = oracle_cost_estimate(t, o.m, mode, o.max_size);
    if (!o.force) {
      throw GuardError("n > " + std::to_string(kOracleGuardDimension) +
                       " needs --force (worst case " + std::to_string(*cost) + " families)");
    }
    s.err() << "cost estimate: up to " << *cost << " families\n";
  }
  const auto start = Clock::now();
  const auto result = brute_min_star_cut(t, o.m, mode, o.max_size,
                                         {.allow_large = o.force,
                                          .strict_disjoint = o.strict_disjoint});
  s.time("oracle", millis_since(start));

  json payload = oracle_to_json(result);
  payload["topology"] = t.name();
  payload["formula"] = to_json(kappa_formula(kind, o.n, o.m));
  if (cost) payload["cost_estimate"] = *cost;
  payload["manifest"] = s.manifest({{"kind", o.kind},
                                    {"n", o.n},
                                    {"m", o.m},
                                    {"mode", o.mode},
                                    {"max_size", o.max_size},
                                    {"force", o.force},
                                    {"strict_disjoint", o.strict_disjoint}});
  s.emit(payload);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Reports

struct Row {
  std::string check, kind, n, m, mode, value, expected;
  bool pass = false;
  double millis = 0;
  int n_key = 0, m_key = 0;

  auto key() const { return std::tie(check, kind, n_key, m_key, mode); }
};

std::string csv_header() { return "check,kind,n,m,mode,value,expected,pass,millis"; }

std::string format_millis(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

void write_csv(const std::string& path, const std::vector<Row>& rows) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << csv_header() << '\n';
  for (const auto& r : rows) {
    f << r.check << ',' << r.kind << ',' << r.n << ',' << r.m << ',' << r.mode << ',' << r.value
      << ',' << r.expected << ',' << (r.pass ? "true" : "false") << ',' << format_millis(r.millis)
      << '\n';
  }
}

json rows_to_json(const std::vector<Row>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"check", r.check},
                   {"kind", r.kind},
                   {"n", r.n},
                   {"m", r.m},
                   {"mode", r.mode},
                   {"value", r.value},
                   {"expected", r.expected},
                   {"pass", r.pass}});
  }
  return out;
}

std::string suite_kind(std::string_view name) {
  if (name == "regularity" || name == "component-structure") return "q+fq+aq";
  if (name.starts_with("fq-") || name == "bipartite-odd-girth") return "fq";
  return "aq";
}

Row lemma_row(const LemmaReport& r, double ms) {
  const IntRange range = parse_range(r.parameters.at("n").get<std::string>());
  Row row;
  row.check = "lemma:" + r.name;
  row.kind = suite_kind(r.name);
  row.n = format_range(range);
  row.n_key = range.lo;
  row.value = std::to_string(r.failures);
  row.expected = "0";
  row.pass = r.pass;
  row.millis = ms;
  return row;
}

std::pair<LemmaReport, double> timed_suite(const std::string& name, const LemmaParams& p) {
  const auto start = Clock::now();
  auto report = run_lemma_suite(name, p);
  return {std::move(report), millis_since(start)};
}

Row cut_row(Kind kind, int n, int m, json& details) {
  const auto start = Clock::now();
  const Topology t(kind, n);
  const auto family = build_family(kind, n, m);
  const auto verdict = verify_cut(t, family);
  const long expected = kind == Kind::FoldedHypercube ? ceil_div(n + 1, 2) : ceil_div(n - 1, 2);
  const long size = static_cast<long>(family.members.size());
  Row row;
  row.check = std::string(kind_name(kind)) + "-cut";
  row.kind = kind_name(kind);
  row.n = std::to_string(n);
  row.n_key = n;
  row.m = std::to_string(m);
  row.m_key = m;
  row.mode = "structure";
  row.value = std::to_string(size);
  row.expected = std::to_string(expected);
  row.pass = verdict.is_cut && verdict.members_valid && size == expected &&
             verdict.isolates(Vertex{0});
  row.millis = millis_since(start);
  bool all_induced = true;
  for (const auto& d : verdict.members) all_induced = all_induced && d.induced_exact;
  details.push_back({{"kind", kind_name(kind)},
                     {"n", n},
                     {"m", m},
                     {"is_cut", verdict.is_cut},
                     {"base_isolated", verdict.isolates(Vertex{0})},
                     {"members_induced", all_induced},
                     {"overlapping_vertices", verdict.overlaps.size()},
                     {"collisions", family.collisions}});
  return row;
}

Row connectivity_row(Kind kind, int n) {
  const auto start = Clock::now();
  const Topology t(kind, n);
  const int value = vertex_connectivity(t);
  Row row;
  row.check = "vertex-connectivity";
  row.kind = kind_name(kind);
  row.n = std::to_string(n);
  row.n_key = n;
  row.value = std::to_string(value);
  row.expected = std::to_string(t.degree());
  row.pass = value == t.degree();
  row.millis = millis_since(start);
  return row;
}

int finish_report(Session& s, std::vector<Row> rows, json payload, const json& parameters,
                  std::uint64_t seed, const Options& o) {
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key() < b.key(); });
  const bool pass = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
  for (const auto& r : rows) {
    s.time(r.check + "/" + r.kind + "/" + r.n + (r.m.empty() ? "" : "/" + r.m), r.millis);
  }
  if (!o.csv_path.empty()) write_csv(o.csv_path, rows);
  payload["pass"] = pass;
  payload["rows"] = rows_to_json(rows);
  payload["manifest"] = s.manifest(parameters, seed);
  s.emit(payload, o.json_path);
  return pass ? kExitOk : kExitReportFailed;
}

int cmd_report_all(Session& s, const Options& o) {
  const IntRange fq = parse_range(o.fq_range);
  const IntRange aq = parse_range(o.aq_range);
  const std::uint64_t seed = parse_seed(o.seed_text);
  if (fq.lo < 1 || fq.hi > kMaxDimension || aq.lo < 1 || aq.hi > kMaxDimension) {
    throw RangeError("report all", "dimension ranges must lie in 1.." +
                                       std::to_string(kMaxDimension));
  }
  std::vector<Row> rows;
  json cuts = json::array();
  for (int n = std::max(fq.lo, 3); n <= fq.hi; ++n) {
    for (int m = 2; m <= n + 1; ++m) rows.push_back(cut_row(Kind::FoldedHypercube, n, m, cuts));
  }
  for (int n = std::max(aq.lo, 4); n <= aq.hi; ++n) {
    for (int m = 4; m <= 2 * n - 2; ++m) rows.push_back(cut_row(Kind::AugmentedCube, n, m, cuts));
  }
  for (int n = 3; n <= 6; ++n) rows.push_back(connectivity_row(Kind::Hypercube, n));
  for (int n = 3; n <= 6; ++n) rows.push_back(connectivity_row(Kind::FoldedHypercube, n));
  for (int n = 4; n <= 5; ++n) rows.push_back(connectivity_row(Kind::AugmentedCube, n));

  json suites = json::array();
  LemmaParams params;
  params.seed = seed;
  params.trials = o.trials;
  params.max_subgraph_order = o.max_order;
  for (const auto& name : lemma_suite_names()) {
    auto [report, ms] = timed_suite(name, params);
    rows.push_back(lemma_row(report, ms));
    suites.push_back(lemma_report_to_json(report));
  }
  const json parameters = {{"fq_n", format_range(fq)},
                           {"aq_n", format_range(aq)},
                           {"trials", o.trials},
                           {"max_order", o.max_order}};
  return finish_report(s, std::move(rows), {{"cuts", cuts}, {"suites", suites}}, parameters, seed,
                       o);
}

int cmd_report_lemma(Session& s, const Options& o) {
  LemmaParams params;
  params.seed = parse_seed(o.seed_text);
  params.trials = o.trials;
  params.max_subgraph_order = o.max_order;
  if (!o.n_range.empty()) params.n = parse_range(o.n_range);
  default_suite_range(o.suite);  // rejects unknown names before any work
  auto [report, ms] = timed_suite(o.suite, params);
  json parameters = report.parameters;
  parameters["suite"] = o.suite;
  return finish_report(s, {lemma_row(report, ms)}, {{"report", lemma_report_to_json(report)}},
                       parameters, params.seed, o);
}

// ---------------------------------------------------------------------------

void emit_error(std::ostream& err, int code, std::string_view type, const std::string& message) {
  err << json{{"error", {{"code", code}, {"type", type}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Star-structure cuts of folded hypercubes and augmented cubes", "starcut"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const auto add_kind = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--kind", o.kind, "q, fq or aq");
    if (required) opt->required();
  };

  auto* topo = app.add_subcommand("topo", "Neighbors and edge classification");
  add_kind(topo, true);
  topo->add_option("--n", o.n, "dimension")->required();
  topo->add_option("--vertex", o.vertex, "binary label x_n...x_1");
  topo->add_option("--other", o.other, "second vertex: common neighbors and edge class");

  auto* cut = app.add_subcommand("cut", "Build or verify star-cut families");
  cut->require_subcommand(1);
  auto* build = cut->add_subcommand("build", "Write the constructed family as a cut file");
  add_kind(build, true);
  build->add_option("--n", o.n)->required();
  build->add_option("--m", o.m)->required();
  build->add_option("--out", o.out_path, "output path (default stdout)");
  auto* verify = cut->add_subcommand("verify", "Remove a cut file's vertices and analyze");
  add_kind(verify, false);
  verify->add_option("--n", o.n);
  verify->add_option("--file", o.file)->required();

  auto* kappa = app.add_subcommand("kappa", "Closed-form value or exhaustive oracle");
  kappa->require_subcommand(1);
  auto* formula = kappa->add_subcommand("formula");
  add_kind(formula, true);
  formula->add_option("--n", o.n)->required();
  formula->add_option("--m", o.m)->required();
  auto* brute = kappa->add_subcommand("brute");
  add_kind(brute, true);
  brute->add_option("--n", o.n)->required();
  brute->add_option("--m", o.m)->required();
  brute->add_option("--mode", o.mode, "structure or substructure");
  brute->add_option("--max-size", o.max_size, "largest family size tried")->check(
      CLI::NonNegativeNumber);
  brute->add_flag("--force", o.force, "allow n = 5, 6");
  brute->add_flag("--strict-disjoint", o.strict_disjoint, "pairwise vertex-disjoint families only");

  auto* report = app.add_subcommand("report", "Summary tables");
  report->require_subcommand(1);
  const auto add_report_opts = [&](CLI::App* c) {
    c->add_option("--seed", o.seed_text, "component-structure sampler seed");
    c->add_option("--trials", o.trials, "sampler trials per configuration")
        ->check(CLI::PositiveNumber);
    c->add_option("--max-order", o.max_order, "largest connected subgraph order")
        ->check(CLI::Range(2, 6));
    c->add_option("--csv", o.csv_path, "summary CSV path");
    c->add_option("--json", o.json_path, "JSON output path (default stdout)");
  };
  auto* all = report->add_subcommand("all", "Constructions, connectivity and every lemma suite");
  all->add_option("--fq-n", o.fq_range, "a..b");
  all->add_option("--aq-n", o.aq_range, "a..b");
  add_report_opts(all);
  auto* lemma = report->add_subcommand("lemma", "One lemma suite");
  lemma->add_option("name", o.suite, "suite name")->required();
  lemma->add_option("--n", o.n_range, "a..b (default: the suite's range)");
  add_report_opts(lemma);

  Session session(args, out, err);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*topo) return cmd_topo(session, o);
    if (*build) return cmd_cut_build(session, o);
    if (*verify) return cmd_cut_verify(session, o);
    if (*formula) return cmd_kappa_formula(session, o);
    if (*brute) return cmd_kappa_brute(session, o);
    if (*all) return cmd_report_all(session, o);
    if (*lemma) return cmd_report_lemma(session, o);
    return kExitBadArguments;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit_error(err, kExitBadArguments, "arguments", e.what());
    return kExitBadArguments;
  } catch (const RangeError& e) {
    emit_error(err, kExitRange, "range", e.what());
    return kExitRange;
  } catch (const GuardError& e) {
    emit_error(err, kExitRange, "guard", e.what());
    return kExitRange;
  } catch (const ParseError& e) {
    emit_error(err, kExitBadArguments, "parse", e.what());
    return kExitBadArguments;
  } catch (const InvalidVertex& e) {
    emit_error(err, kExitBadArguments, "invalid-vertex", e.what());
    return kExitBadArguments;
  } catch (const InvalidPair& e) {
    emit_error(err, kExitBadArguments, "invalid-pair", e.what());
    return kExitBadArguments;
  }
}

}  // namespace starcut

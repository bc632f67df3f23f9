#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams so tests can drive it in-process.

#include <sdcm/sdcm.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sdcm::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

namespace detail {

struct Options {
  std::string format = "text";
  std::optional<std::size_t> n_check;
  std::optional<std::string> eps;
  std::string model_path;
  std::string phi_path;
  std::string series;
  std::string from;
  std::string to;
  std::string suite = "all";
  std::string output;
  std::string example;
  long r = 2;
  long s = 2;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

inline CurvatureConfig make_config(const Options& opt) {
  CurvatureConfig config;
  if (const char* env = std::getenv("SDCM_NCHECK")) {
    try {
      config.n_check = std::stoul(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("SDCM_NCHECK is not a count: ") + env);
    }
  }
  std::optional<std::string> eps;
  if (const char* env = std::getenv("SDCM_EPS")) eps = env;
  if (opt.n_check) config.n_check = *opt.n_check;
  if (opt.eps) eps = opt.eps;
  if (eps) {
    Rational value;
    if (!parse_rational(*eps, value) || value <= 0) throw UsageError("epsilon must be a positive rational: " + *eps);
    config.epsilon = value;
  }
  if (config.n_check == 0) throw UsageError("n_check must be positive");
  return config;
}

inline json with_schema(json doc) {
  doc["schema"] = 1;
  return doc;
}

inline void print_report(std::ostream& out, const CheckReport& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.check << "\n";
  for (const auto& w : r.witnesses) out << "  witness: " << w << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

inline void emit_model(std::ostream& out, const Options& opt, const SdcModel& model) {
  const json doc = model_to_json(model);
  if (opt.output.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    save_json(doc, opt.output);
    out << "wrote " << opt.output << "\n";
  }
}

inline CheckReport duality_report(const SdcModel& model, const CurvatureConfig& config) {
  if (!model.dualizing()) {
    CheckReport r("duality");
    r.note("skipped: no dualizing class");
    return r;
  }
  try {
    const DaggerMap dagger = build_dagger(model);
    CheckReport r = check_isometry(model, dagger, config);
    const CheckReport fixed = check_fixed_points(model, dagger);
    for (const auto& w : fixed.witnesses) r.fail(w);
    for (const auto& [k, v] : dagger.by_id(model)) {
      if (k < v) r.note("pairs " + k + " <-> " + v);
      if (k == v) r.note("fixes " + k);
    }
    return r;
  } catch (const Error& e) {
    CheckReport r("duality");
    r.fail(e.what());
    return r;
  }
}

inline std::vector<CheckReport> run_suites(const SdcModel& model, const std::string& suite,
                                           const CurvatureConfig& config) {
  static const std::vector<std::string> order{"metric", "edge", "bounds", "trichotomy", "fixed", "duality"};
  std::vector<std::string> wanted;
  if (suite == "all") {
    wanted = order;
  } else if (std::find(order.begin(), order.end(), suite) != order.end()) {
    wanted = {suite};
  } else {
    throw UsageError("unknown suite: " + suite);
  }
  std::vector<CheckReport> reports;
  std::optional<MetricGraph> graph;
  std::optional<std::string> graph_error;
  for (const auto& name : wanted) {
    if (name == "fixed") {
      reports.push_back(check_corollary_fixed(model, config));
      continue;
    }
    if (name == "duality") {
      reports.push_back(duality_report(model, config));
      continue;
    }
    if (!graph && !graph_error) {
      try {
        graph.emplace(model, config);
      } catch (const Error& e) {
        graph_error = e.what();
      }
    }
    if (graph_error) {
      CheckReport r(name);
      r.fail("cannot build the metric graph: " + *graph_error);
      reports.push_back(std::move(r));
    } else if (name == "metric") {
      reports.push_back(check_metric_axioms(*graph));
    } else if (name == "edge") {
      reports.push_back(check_direct_edge(*graph));
    } else if (name == "bounds") {
      reports.push_back(check_bounds(*graph));
    } else {
      reports.push_back(check_trichotomy(*graph));
    }
  }
  return reports;
}

inline int cmd_validate(const Options& opt, const CurvatureConfig& config, std::ostream& out) {
  const SdcModel model = load_model(opt.model_path);
  const ValidationReport report = validate(model, config);
  if (opt.format == "json") {
    out << with_schema(to_json(report)).dump(2) << "\n";
  } else {
    for (const auto& e : report.entries) print_report(out, e);
    out << (report.valid() ? "valid" : "invalid") << "\n";
  }
  return report.valid() ? kOk : kCheckFailed;
}

inline int cmd_curv(const Options& opt, const CurvatureConfig& config, std::ostream& out) {
  const LaurentSeries series = parse_series(opt.series);
  const Curvature c = curvature(series, config);
  if (opt.format == "json") {
    out << with_schema({{"series", render(series)}, {"curvature", c.str()}, {"exact", c.is_exact()}}).dump(2) << "\n";
  } else {
    out << c.str() << "\n";
  }
  return kOk;
}

inline int cmd_dist(const Options& opt, const CurvatureConfig& config, std::ostream& out) {
  const MetricGraph g(load_model(opt.model_path), config);
  const Length& d = g.distance(opt.from, opt.to);
  if (opt.format == "json") {
    const Route route = g.shortest_route(g.model().index_of(opt.from), g.model().index_of(opt.to));
    out << with_schema({{"from", opt.from}, {"to", opt.to}, {"distance", d.str()}, {"exact", d.is_exact()},
                        {"route", route.vertices}})
               .dump(2)
        << "\n";
  } else {
    out << d.str() << "\n";
  }
  return kOk;
}

inline int cmd_table(const Options& opt, const CurvatureConfig& config, std::ostream& out) {
  const MetricGraph g(load_model(opt.model_path), config);
  const auto& m = g.model();
  if (opt.format == "json") {
    json ids = json::array();
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      ids.push_back(m.id(i));
      json row = json::array();
      for (std::size_t j = 0; j < m.size(); ++j) row.push_back(g.distance(i, j).str());
      rows.push_back(std::move(row));
    }
    out << with_schema({{"model", m.name()}, {"ids", ids}, {"distances", rows}}).dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> cells(m.size() + 1, std::vector<std::string>(m.size() + 1));
  for (std::size_t i = 0; i < m.size(); ++i) {
    cells[0][i + 1] = m.id(i);
    cells[i + 1][0] = m.id(i);
    for (std::size_t j = 0; j < m.size(); ++j) cells[i + 1][j + 1] = g.distance(i, j).str();
  }
  std::vector<std::size_t> width(m.size() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return kOk;
}

inline int cmd_check(const Options& opt, const CurvatureConfig& config, std::ostream& out) {
  const SdcModel model = load_model(opt.model_path);
  const auto reports = run_suites(model, opt.suite, config);
  const bool ok = all_pass(reports);
  if (opt.format == "json") {
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out << with_schema({{"model", model.name()}, {"pass", ok}, {"reports", list}}).dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(out, r);
  }
  return ok ? kOk : kCheckFailed;
}

inline int cmd_change(const Options& opt, const CurvatureConfig& config, std::ostream& out, bool cobase) {
  const SdcModel model = load_model(opt.model_path);
  HomomorphismDescriptor phi = load_homomorphism(opt.phi_path);
  const auto check = check_nonneg(phi.bass_phi, config.n_check);
  if (!check.ok) throw ModelError("bass_phi has a negative or non-integral coefficient");
  emit_model(out, opt, cobase ? cobase_change_model(model, phi, config) : base_change(model, phi, config));
  return kOk;
}

inline int cmd_example(const Options& opt, std::ostream& out) {
  if (opt.r < 2 || opt.s < 2) throw UsageError("--r and --s must be at least 2");
  if (opt.example == "square0") {
    emit_model(out, opt, square_zero_model(opt.r));
  } else if (opt.example == "iterated") {
    emit_model(out, opt, iterated_model(opt.r, opt.s));
  } else {
    throw UsageError("unknown example: " + opt.example + " (expected square0 or iterated)");
  }
  return kOk;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  detail::Options opt;
  CLI::App app{"Metric on semidualizing classes from Poincare and Bass series", "sdcm"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--ncheck", opt.n_check, "Coefficients inspected by nonnegativity checks (env SDCM_NCHECK)");
  app.add_option("--eps", opt.eps, "Width bound for interval curvatures (env SDCM_EPS)");

  auto* validate_cmd = app.add_subcommand("validate", "Validate a model file");
  validate_cmd->add_option("model", opt.model_path)->required();
  auto* curv_cmd = app.add_subcommand("curv", "Curvature of a series expression");
  curv_cmd->add_option("series", opt.series)->required();
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two classes");
  dist_cmd->add_option("model", opt.model_path)->required();
  dist_cmd->add_option("from", opt.from)->required();
  dist_cmd->add_option("to", opt.to)->required();
  auto* table_cmd = app.add_subcommand("table", "Pairwise distance table");
  table_cmd->add_option("model", opt.model_path)->required();
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of the comparability graph");
  dot_cmd->add_option("model", opt.model_path)->required();
  auto* check_cmd = app.add_subcommand("check", "Run theorem checkers");
  check_cmd->add_option("model", opt.model_path)->required();
  check_cmd->add_option("--suite", opt.suite)
      ->check(CLI::IsMember({"metric", "edge", "bounds", "trichotomy", "fixed", "duality", "all"}));
  auto* bc_cmd = app.add_subcommand("basechange", "Base change along a homomorphism");
  auto* cbc_cmd = app.add_subcommand("cobase", "Cobase change along a homomorphism");
  for (auto* cmd : {bc_cmd, cbc_cmd}) {
    cmd->add_option("model", opt.model_path)->required();
    cmd->add_option("phi", opt.phi_path)->required();
    cmd->add_option("-o,--output", opt.output, "Output model file (stdout if omitted)");
  }
  auto* ex_cmd = app.add_subcommand("example", "Emit a built-in example model");
  ex_cmd->add_option("name", opt.example)->required()->check(CLI::IsMember({"square0", "iterated"}));
  ex_cmd->add_option("--r", opt.r, "Embedding dimension of the base ring");
  ex_cmd->add_option("--s", opt.s, "Embedding dimension of the fiber (iterated only)");
  ex_cmd->add_option("-o,--output", opt.output, "Output model file (stdout if omitted)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const CurvatureConfig config = detail::make_config(opt);
    if (opt.format == "dot" && !dot_cmd->parsed()) throw detail::UsageError("--format dot applies to the dot subcommand");
    if (validate_cmd->parsed()) return detail::cmd_validate(opt, config, out);
    if (curv_cmd->parsed()) return detail::cmd_curv(opt, config, out);
    if (dist_cmd->parsed()) return detail::cmd_dist(opt, config, out);
    if (table_cmd->parsed()) return detail::cmd_table(opt, config, out);
    if (dot_cmd->parsed()) {
      out << emit_dot(MetricGraph(load_model(opt.model_path), config));
      return kOk;
    }
    if (check_cmd->parsed()) return detail::cmd_check(opt, config, out);
    if (bc_cmd->parsed()) return detail::cmd_change(opt, config, out, false);
    if (cbc_cmd->parsed()) return detail::cmd_change(opt, config, out, true);
    if (ex_cmd->parsed()) return detail::cmd_example(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sdcm::cli

#include "tautring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "tautring/errors.hpp"
#include "tautring/kimura.hpp"
#include "tautring/motives.hpp"

namespace tautring::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string profile = "custom";
  std::optional<int> n;
  std::optional<int> d;
  std::optional<int> b;
  std::optional<std::string> delta;
  std::optional<int> m;
  std::optional<int> codim;
  std::optional<int> m_max;
  std::string format = "json";
  bool no_timing = false;
  int cap_b = 7;
  std::size_t cap_gram = 5000;
  unsigned threads = 1;
  bool normalize_input = true;
  std::vector<std::string> classes;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

enum class Status { kPass, kFail, kError };

struct Outcome {
  Json inputs = Json::object();
  Json results = Json::object();
  Table table;
  Status status = Status::kPass;
  int exit_code = kPass;
};

std::string yes_no(bool v) { return v ? "true" : "false"; }

ModelParams resolve_params(const Options& o) {
  auto need = [](const std::optional<int>& v, const char* flag, const std::string& profile) {
    if (!v) throw UsageError(std::string("profile ") + profile + " requires " + flag);
    return *v;
  };
  int n = 0, d = 0;
  if (o.profile == "three-quadrics") {
    if (o.d && *o.d != 8) throw UsageError("profile three-quadrics forces d = 8");
    n = need(o.n, "--n", o.profile);
    d = 8;
  } else if (o.profile == "double-plane") {
    if (o.n && *o.n != 2) throw UsageError("profile double-plane forces n = 2");
    if (o.d && *o.d != 2) throw UsageError("profile double-plane forces d = 2");
    n = 2;
    d = 2;
  } else {
    n = need(o.n, "--n", o.profile);
    d = need(o.d, "--d", o.profile);
  }
  const int b = need(o.b, "--b", o.profile);
  std::optional<Rational> delta;
  if (o.delta) {
    try {
      delta = Rational::parse(*o.delta);
    } catch (const ParseError& e) {
      throw UsageError(std::string("invalid --delta: ") + e.what());
    }
  }
  try {
    return ModelParams(n, d, b, delta);
  } catch (const StructuralError& e) {
    throw UsageError(std::string("invalid parameters: ") + e.what());
  }
}

int need_int(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

Json params_json(const ModelParams& p) {
  return Json{{"n", p.n()}, {"d", p.d()}, {"b", p.b()}, {"delta", p.delta().to_string()}};
}

Json strings(const std::vector<TautMonomial>& monos) {
  Json arr = Json::array();
  for (const auto& mono : monos) arr.push_back(mono.to_string());
  return arr;
}

Outcome check_report_outcome(const CheckReport& report) {
  Outcome out;
  out.table.columns = {"identity", "status", "offending"};
  Json checks = Json::array();
  std::size_t failures = 0;
  for (const auto& item : report.items) {
    checks.push_back(Json{{"identity", item.identity},
                          {"status", item.passed ? "pass" : "fail"},
                          {"offending", item.passed ? Json(nullptr) : Json(item.offending)}});
    out.table.rows.push_back({item.identity, item.passed ? "pass" : "fail", item.offending});
    if (!item.passed) ++failures;
  }
  out.results["checked"] = report.items.size();
  out.results["failures"] = failures;
  out.results["checks"] = std::move(checks);
  if (failures > 0) {
    out.status = Status::kFail;
    out.exit_code = kCheckFailed;
  }
  return out;
}

TautClass parse_input(const std::string& text, int m, const ModelParams& params, const Options& o) {
  try {
    return parse_class(text, m, params, ParseOptions{o.normalize_input});
  } catch (const ParseError& e) {
    throw UsageError("cannot parse class '" + text + "': " + e.what());
  }
}

void require_classes(const Options& o, std::size_t count) {
  if (o.classes.size() != count) {
    throw UsageError("expected " + std::to_string(count) + " class arguments, got " + std::to_string(o.classes.size()));
  }
}

GramOptions gram_options(const Options& o) { return GramOptions{o.threads, o.cap_gram}; }

Outcome cmd_basis(const ModelParams& params, const Options& o) {
  Outcome out;
  const int m = need_int(o.m, "--m");
  const int codim = need_int(o.codim, "--codim");
  if (m < 1) throw UsageError("--m must be >= 1");
  out.inputs["m"] = m;
  out.inputs["codim"] = codim;
  const auto basis = enumerate_basis(params, m, codim);
  out.results["count"] = basis.size();
  out.results["basis"] = strings(basis);
  out.table.columns = {"index", "monomial"};
  for (std::size_t i = 0; i < basis.size(); ++i) out.table.rows.push_back({std::to_string(i + 1), basis[i].to_string()});
  return out;
}

Outcome cmd_mul(const ModelParams& params, const Options& o) {
  Outcome out;
  const int m = need_int(o.m, "--m");
  if (m < 1) throw UsageError("--m must be >= 1");
  require_classes(o, 2);
  const TautClass x = parse_input(o.classes[0], m, params, o);
  const TautClass y = parse_input(o.classes[1], m, params, o);
  out.inputs["m"] = m;
  out.inputs["x"] = format_class(x, params);
  out.inputs["y"] = format_class(y, params);
  const std::string product = format_class(multiply(x, y, params), params);
  out.results["product"] = product;
  out.table.columns = {"product"};
  out.table.rows.push_back({product});
  return out;
}

Outcome cmd_pair(const ModelParams& params, const Options& o) {
  Outcome out;
  const int m = need_int(o.m, "--m");
  if (m < 1) throw UsageError("--m must be >= 1");
  require_classes(o, 2);
  const TautClass x = parse_input(o.classes[0], m, params, o);
  const TautClass y = parse_input(o.classes[1], m, params, o);
  out.inputs["m"] = m;
  out.inputs["x"] = format_class(x, params);
  out.inputs["y"] = format_class(y, params);
  const std::string value = pair(x, y, params).to_string();
  out.results["value"] = value;
  out.table.columns = {"value"};
  out.table.rows.push_back({value});
  return out;
}

Outcome cmd_gram(const ModelParams& params, const Options& o) {
  Outcome out;
  const int m = need_int(o.m, "--m");
  const int codim = need_int(o.codim, "--codim");
  if (m < 1) throw UsageError("--m must be >= 1");
  if (codim < 0 || codim > m * params.n()) throw UsageError("--codim must lie in 0..m*n");
  out.inputs["m"] = m;
  out.inputs["codim"] = codim;
  const GramReport g = gram(params, m, codim, gram_options(o));
  out.results["basis_size"] = g.basis.size();
  out.results["dual_size"] = g.dual_basis.size();
  out.results["rank"] = g.rank;
  out.results["deficiency"] = g.deficiency();
  out.results["basis"] = strings(g.basis);
  out.results["dual_basis"] = strings(g.dual_basis);
  Json matrix = Json::array();
  out.table.columns = {"monomial"};
  for (const auto& dual : g.dual_basis) out.table.columns.push_back(dual.to_string());
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    Json row = Json::array();
    std::vector<std::string> cells{g.basis[i].to_string()};
    for (std::size_t j = 0; j < g.dual_basis.size(); ++j) {
      row.push_back(g.gram(i, j).to_string());
      cells.push_back(g.gram(i, j).to_string());
    }
    matrix.push_back(std::move(row));
    out.table.rows.push_back(std::move(cells));
  }
  out.results["gram"] = std::move(matrix);
  Json kernel = Json::array();
  for (const auto& k : g.kernel_basis) kernel.push_back(format_class(k, params));
  out.results["kernel"] = std::move(kernel);
  return out;
}

Outcome cmd_verify_ck(const ModelParams& params, const Options&) {
  const ProjectorSet ps = ck_projectors(params);
  Outcome out = check_report_outcome(verify_ck(ps));
  Json projectors = Json::object();
  for (const auto& [i, pi] : ps.projectors) projectors["pi^" + std::to_string(i)] = format_class(pi.cls(), params);
  out.results["projectors"] = std::move(projectors);
  return out;
}

Outcome cmd_verify_mck(const ModelParams& params, const Options&) {
  Outcome out = check_report_outcome(verify_mck(params));
  out.results["small_diagonal"] = format_class(small_diagonal(params), params);
  return out;
}

Outcome cmd_lemma_ok(const ModelParams& params, const Options&) {
  Outcome out;
  out.table.columns = {"factor", "lhs", "rhs", "equal"};
  Json cases = Json::array();
  bool all_equal = true;
  for (int factor : {0, 1}) {
    const DiagonalTimesH r = expand_diagonal_times_h(params, factor);
    const std::string lhs = format_class(r.lhs, params);
    const std::string rhs = format_class(r.rhs, params);
    cases.push_back(Json{{"factor", factor + 1}, {"lhs", lhs}, {"rhs", rhs}, {"equal", r.equal()}});
    out.table.rows.push_back({std::to_string(factor + 1), lhs, rhs, yes_no(r.equal())});
    all_equal = all_equal && r.equal();
  }
  out.results["cases"] = std::move(cases);
  out.results["equal"] = all_equal;
  if (!all_equal) {
    out.status = Status::kFail;
    out.exit_code = kCheckFailed;
  }
  return out;
}

Outcome cmd_gamma3(const ModelParams& params, const Options&) {
  Outcome out;
  out.table.columns = {"i", "j", "k", "a"};
  try {
    const Gamma3Solution sol = solve_gamma3(params);
    Json coefficients = Json::array();
    for (const auto& [key, a] : sol.coefficients) {
      coefficients.push_back(Json{{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"a", a.to_string()}});
      out.table.rows.push_back({std::to_string(key[0]), std::to_string(key[1]), std::to_string(key[2]), a.to_string()});
    }
    out.results["solvable"] = true;
    out.results["residual"] = format_class(sol.residual, params);
    out.results["symmetric"] = sol.symmetric();
    out.results["coefficients"] = std::move(coefficients);
    if (!sol.residual.is_zero() || !sol.symmetric()) {
      out.status = Status::kFail;
      out.exit_code = kCheckFailed;
    }
  } catch (const InconsistentSystemError& e) {
    out.results["solvable"] = false;
    out.results["message"] = e.what();
    out.status = Status::kFail;
    out.exit_code = kCheckFailed;
  }
  return out;
}

Outcome cmd_euler(const ModelParams& params, const Options&) {
  Outcome out;
  const Rational value = euler_char(params);
  const Rational expected(params.n() + params.b());
  out.results["value"] = value.to_string();
  out.results["expected"] = expected.to_string();
  out.results["matches"] = value == expected;
  out.table.columns = {"value", "expected", "matches"};
  out.table.rows.push_back({value.to_string(), expected.to_string(), yes_no(value == expected)});
  if (value != expected) {
    out.status = Status::kFail;
    out.exit_code = kCheckFailed;
  }
  return out;
}

Outcome cmd_kimura(const ModelParams& params, const Options& o) {
  Outcome out;
  const KimuraLimits limits{o.cap_b, gram_options(o)};
  const KimuraReport r = verify_kimura_vanishing(params, limits);
  out.inputs["cap_b"] = o.cap_b;
  out.results["m"] = 2 * r.element.b;
  out.results["codim"] = r.element.b * params.n();
  out.results["terms"] = r.element.cls.size();
  out.results["element"] = format_class(r.element.cls, params);
  out.results["dual_monomials"] = r.dual_monomials;
  out.results["vanishing"] = r.vanishing;
  out.results["falling_factorial"] = r.falling_factorial.to_string();
  out.results["cross_check"] = r.cross_check;
  out.table.columns = {"b", "delta", "terms", "vanishing", "cross_check", "falling_factorial", "dual_monomials"};
  out.table.rows.push_back({std::to_string(params.b()), params.delta().to_string(), std::to_string(r.element.cls.size()),
                            yes_no(r.vanishing), yes_no(r.cross_check), r.falling_factorial.to_string(),
                            std::to_string(r.dual_monomials)});
  if (!r.vanishing || !r.cross_check) {
    out.status = Status::kFail;
    out.exit_code = kCheckFailed;
  }
  return out;
}

Outcome cmd_scan(const ModelParams& params, const Options& o) {
  Outcome out;
  const int m_max = need_int(o.m_max, "--m-max");
  if (m_max < 1) throw UsageError("--m-max must be >= 1");
  out.inputs["m_max"] = m_max;
  const ScanResult scan = scan_injectivity(params, m_max, gram_options(o));
  const int threshold = 2 * params.b() - 1;
  out.table.columns = {"m", "codim", "basis_size", "rank", "deficiency"};
  Json rows = Json::array();
  bool injective_below_threshold = true;
  std::optional<std::pair<int, int>> first_deficient;
  for (const auto& row : scan.rows) {
    rows.push_back(Json{{"m", row.m},
                        {"codim", row.codim},
                        {"basis_size", row.basis_size},
                        {"rank", row.rank},
                        {"deficiency", row.deficiency}});
    out.table.rows.push_back({std::to_string(row.m), std::to_string(row.codim), std::to_string(row.basis_size),
                              std::to_string(row.rank), std::to_string(row.deficiency)});
    if (row.deficiency > 0) {
      if (!first_deficient) first_deficient = std::make_pair(row.m, row.codim);
      if (row.m <= threshold) injective_below_threshold = false;
    }
  }
  out.results["threshold_m"] = threshold;
  out.results["injective_up_to_threshold"] = injective_below_threshold;
  out.results["first_deficient"] =
      first_deficient ? Json{{"m", first_deficient->first}, {"codim", first_deficient->second}} : Json(nullptr);
  out.results["truncated"] = scan.truncated;
  if (scan.truncated) out.results["limit"] = scan.limit_message;
  out.results["rows"] = std::move(rows);
  if (scan.truncated) {
    out.status = Status::kError;
    out.exit_code = kResourceLimit;
  } else if (!injective_below_threshold) {
    out.status = Status::kFail;
    out.exit_code = kCheckFailed;
  }
  return out;
}

using Handler = std::function<Outcome(const ModelParams&, const Options&)>;

const std::map<std::string, std::pair<std::string, Handler>>& commands() {
  static const std::map<std::string, std::pair<std::string, Handler>> table{
      {"basis", {"List the normal-form monomials of a codimension", cmd_basis}},
      {"mul", {"Multiply two classes", cmd_mul}},
      {"pair", {"Intersection pairing of two classes", cmd_pair}},
      {"gram", {"Gram matrix, rank and radical at (m, codim)", cmd_gram}},
      {"verify-ck", {"Check the Chow-Kunneth projector identities", cmd_verify_ck}},
      {"verify-mck", {"Check multiplicativity of the projectors", cmd_verify_mck}},
      {"lemma-ok", {"Check Delta * h against its closed form", cmd_lemma_ok}},
      {"gamma3", {"Solve for the modified small diagonal coefficients", cmd_gamma3}},
      {"euler", {"Integral of Delta^2 against n + b", cmd_euler}},
      {"kimura", {"Check the alternating S_b relation in the Gram radical", cmd_kimura}},
      {"scan", {"Gram rank deficiencies for all m <= m-max", cmd_scan}},
  };
  return table;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kError:
      return "error";
  }
  return "error";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

void write_text(const std::string& command, const ModelParams& params, const Outcome& o,
                const std::optional<long long>& timing, std::ostream& out) {
  out << "command: " << command << "\n";
  out << "params: " << to_string(params) << "\n";
  for (const auto& [key, value] : o.inputs.items()) out << "input " << key << ": " << value.dump() << "\n";
  for (const auto& [key, value] : o.results.items()) {
    if (value.is_structured()) continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  out << "status: " << status_name(o.status) << "\n";
  if (timing) out << "timing_ms: " << *timing << "\n";
  std::vector<std::size_t> width(o.table.columns.size(), 0);
  for (std::size_t c = 0; c < width.size(); ++c) width[c] = o.table.columns[c].size();
  for (const auto& row : o.table.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << "\n";
  };
  if (o.table.columns.empty()) return;
  out << "\n";
  line(o.table.columns);
  for (const auto& row : o.table.rows) line(row);
}

void add_common_options(CLI::App* sub, Options& o, const std::string& name) {
  sub->add_option("--profile", o.profile, "Parameter profile")
      ->check(CLI::IsMember({"three-quadrics", "double-plane", "custom"}));
  sub->add_option("--n", o.n, "Dimension of Y (even, >= 2)");
  sub->add_option("--d", o.d, "Degree of Y");
  sub->add_option("--b", o.b, "Dimension of the middle cohomology");
  sub->add_option("--delta", o.delta, "Loop value override, p/q (test only; default b-1)");
  sub->add_option("--m", o.m, "Number of factors");
  sub->add_option("--codim", o.codim, "Codimension");
  sub->add_option("--m-max", o.m_max, "Largest power scanned");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_flag("--no-timing", o.no_timing, "Omit timing so output is byte-reproducible");
  sub->add_option("--cap-b", o.cap_b, "Largest b for S_b enumeration")->check(CLI::PositiveNumber);
  sub->add_option("--cap-gram", o.cap_gram, "Largest Gram basis size")->check(CLI::PositiveNumber);
  sub->add_option("--threads", o.threads, "Worker threads for Gram assembly (0 = all cores)");
  if (name == "mul" || name == "pair") {
    sub->add_option("--normalize-input", o.normalize_input, "Rewrite non-normal input instead of rejecting it");
    sub->add_option("classes", o.classes, "Two classes in the monomial grammar")->expected(2);
  }
}

}  // namespace

std::string schema_path() {
#ifdef TAUTRING_SCHEMA_PATH
  return TAUTRING_SCHEMA_PATH;
#else
  return "schemas/report.schema.json";
#endif
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for the tautological ring of powers of Y", "tautring"};
  app.require_subcommand(1);
  Options options;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    add_common_options(sub, options, name);
    subs[name] = sub;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  const auto start = std::chrono::steady_clock::now();
  ModelParams params(2, 1, 1);
  Outcome outcome;
  try {
    params = resolve_params(options);
    outcome = commands().at(command).second(params, options);
  } catch (const UsageError& e) {
    err << "tautring " << command << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const StructuralError& e) {
    err << "tautring " << command << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    outcome = Outcome{};
    outcome.results["error"] = e.what();
    outcome.status = Status::kError;
    outcome.exit_code = kResourceLimit;
    err << "tautring " << command << ": resource limit: " << e.what() << "\n";
  }
  outcome.inputs = [&] {
    Json inputs = Json{{"profile", options.profile}};
    for (const auto& [key, value] : outcome.inputs.items()) inputs[key] = value;
    return inputs;
  }();

  std::optional<long long> timing;
  if (!options.no_timing) {
    timing = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }

  if (options.format == "json") {
    Json report;
    report["command"] = command;
    report["params"] = params_json(params);
    report["inputs"] = outcome.inputs;
    report["results"] = outcome.results;
    report["status"] = status_name(outcome.status);
    report["timing_ms"] = timing ? Json(*timing) : Json(nullptr);
    out << report.dump(2) << "\n";
  } else if (options.format == "csv") {
    write_csv(outcome.table, out);
  } else {
    write_text(command, params, outcome, timing, out);
  }
  return outcome.exit_code;
}

}  // namespace tautring::cli

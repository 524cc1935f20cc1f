// Command-line front end: catalog listing, exact table generation, identity
// suites and numeric kernel evaluation.
#include "dunkl/appell.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace dunkl;
using nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr unsigned kDegreeCap = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::size_t rank = 0;
  std::string group;
  std::string k;
  std::string t;
  unsigned max_degree = 4;
  bool allow_high_degree = false;
  std::string format = "text";
  std::string output;
  unsigned threads = 0;

  // verify
  std::vector<std::string> suites;
  std::string inject_fault;

  // eval
  std::string x, y;
  double tol = 1e-12;
  bool absolute = false;
  bool imaginary = false;
  std::string ck = "auto";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// Numeric inputs accept decimals as well as exact "p/q".
double parse_double(const std::string& s, const std::string& what) {
  if (s.find('/') != std::string::npos) {
    try {
      return parse_rational(s).get_d();
    } catch (const std::exception&) {
      throw UsageError("cannot parse " + what + " value '" + s + "'");
    }
  }
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw UsageError("cannot parse " + what + " value '" + s + "'");
  }
  return v;
}

std::vector<double> parse_point(const std::string& s, const std::string& what) {
  if (s.empty()) throw UsageError("--" + what + " is required");
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_double(part, what));
  return out;
}

Rational parse_exact(const std::string& s, const std::string& what) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw UsageError("invalid " + what + " '" + s + "': expected p or p/q");
  }
}

RootSystem resolve_group(const Options& o) {
  try {
    if (!o.group.empty()) {
      if (!o.family.empty()) throw UsageError("give either --group or --family/--rank, not both");
      return parse_group_label(o.group);
    }
    if (o.family.empty()) throw UsageError("a root system is required (--group or --family with --rank)");
    if (o.rank == 0) throw UsageError("--rank is required with --family");
    return build_catalog(parse_family(o.family), o.rank);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

DunklContext resolve_context(const Options& o) {
  RootSystem rs = resolve_group(o);
  if (o.k.empty()) throw UsageError("--k is required");
  std::vector<Rational> values;
  for (const auto& part : split(o.k, ',')) values.push_back(parse_exact(part, "multiplicity"));
  try {
    const std::size_t orbits = root_orbits(rs).size();
    if (values.size() == 1 && orbits > 1) values.assign(orbits, values.front());
    Multiplicity k(rs, values);
    return DunklContext(std::move(rs), std::move(k));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void check_degree(const Options& o) {
  if (o.max_degree > kDegreeCap && !o.allow_high_degree) {
    throw UsageError("--max-degree " + std::to_string(o.max_degree) + " exceeds the cap of " +
                     std::to_string(kDegreeCap) + "; pass --allow-high-degree to override");
  }
}

Rational require_t(const Options& o) {
  if (o.t.empty()) throw UsageError("--t is required");
  const Rational t = parse_exact(o.t, "t");
  if (sgn(t) <= 0) throw UsageError("t must be positive");
  return t;
}

ordered_json rationals(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

ordered_json root_json(const Root& r) { return rationals(r); }

std::string root_text(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + to_string(r[i]);
  return s + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string nu_latex(const MultiIndex& nu) { return nu.rank() == 1 ? nu.label() : "{" + nu.label() + "}"; }

ordered_json config_echo(const std::string& command, const Options& o, const DunklContext* ctx) {
  ordered_json c;
  c["command"] = command;
  if (ctx) {
    c["group"] = ctx->root_system().label;
    c["family"] = std::string(family_name(ctx->root_system().family));
    c["rank"] = ctx->rank();
    c["k"] = rationals(ctx->multiplicity().values());
  }
  return c;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(Output& out, const ordered_json& config, const ordered_json& results) {
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["config"] = config;
  doc["results"] = results;
  out.stream() << doc.dump(2) << "\n";
}

// ---- groups

ordered_json group_json(const RootSystem& rs) {
  ordered_json g;
  g["family"] = std::string(family_name(rs.family));
  g["rank"] = rs.rank;
  g["label"] = rs.label;
  ordered_json roots = ordered_json::array();
  for (const auto& r : rs.roots) roots.push_back(root_json(r));
  g["roots"] = roots;
  ordered_json orbits = ordered_json::array();
  for (const auto& orb : root_orbits(rs)) {
    ordered_json o;
    o["representative"] = root_json(orb.representative);
    o["size"] = orb.roots.size();
    orbits.push_back(o);
  }
  g["orbits"] = orbits;
  g["group_order"] = generate_group(rs).matrices.size();
  return g;
}

std::vector<RootSystem> full_catalog() {
  std::vector<RootSystem> out;
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(build_catalog(Family::Z2, n));
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(build_catalog(Family::A, n));
  for (std::size_t n = 2; n <= 3; ++n) out.push_back(build_catalog(Family::B, n));
  for (std::size_t n = 3; n <= 4; ++n) out.push_back(build_catalog(Family::D, n));
  return out;
}

int cmd_groups(const Options& o) {
  std::vector<RootSystem> systems;
  if (o.group.empty() && o.family.empty()) {
    systems = full_catalog();
  } else {
    systems.push_back(resolve_group(o));
  }
  Output out(o.output);
  auto& s = out.stream();
  ordered_json results = ordered_json::array();
  for (const auto& rs : systems) results.push_back(group_json(rs));

  if (o.format == "json") {
    ordered_json config;
    config["command"] = "groups";
    if (!o.group.empty()) config["group"] = o.group;
    if (!o.family.empty()) {
      config["family"] = o.family;
      config["rank"] = o.rank;
    }
    emit_json(out, config, results);
  } else if (o.format == "csv") {
    s << "label,family,rank,group_order,orbits,roots\n";
    for (const auto& g : results) {
      s << g["label"].get<std::string>() << "," << g["family"].get<std::string>() << "," << g["rank"] << ","
        << g["group_order"] << "," << g["orbits"].size() << "," << g["roots"].size() << "\n";
    }
  } else if (o.format == "latex") {
    s << "\\begin{tabular}{lrrr}\n\\hline\ngroup & $N$ & $|W|$ & orbits \\\\\n\\hline\n";
    for (const auto& g : results) {
      s << g["label"].get<std::string>() << " & " << g["rank"] << " & " << g["group_order"] << " & "
        << g["orbits"].size() << " \\\\\n";
    }
    s << "\\hline\n\\end{tabular}\n";
  } else {
    for (const auto& rs : systems) {
      const auto orbits = root_orbits(rs);
      s << rs.label << ": family " << family_name(rs.family) << ", N = " << rs.rank << ", |R| = " << rs.roots.size()
        << ", |W| = " << generate_group(rs).matrices.size() << ", " << orbits.size()
        << (orbits.size() == 1 ? " orbit" : " orbits") << "\n";
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        s << "  orbit " << i + 1 << ": representative " << root_text(orbits[i].representative) << ", "
          << orbits[i].roots.size() << " roots\n";
      }
    }
  }
  return 0;
}

// ---- gen

struct Row {
  MultiIndex nu;
  std::vector<Polynomial> polys;
};

void emit_table(Output& out, const Options& o, const ordered_json& config, ordered_json results,
                const std::vector<std::string>& names, const std::vector<Row>& rows) {
  auto& s = out.stream();
  if (o.format == "json") {
    ordered_json entries = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json e;
      e["nu"] = r.nu.exponents();
      for (std::size_t i = 0; i < names.size(); ++i) e[names[i]] = to_string(r.polys[i]);
      entries.push_back(e);
    }
    results["entries"] = entries;
    emit_json(out, config, results);
  } else if (o.format == "csv") {
    s << "nu";
    for (const auto& n : names) s << "," << n;
    s << "\n";
    for (const auto& r : rows) {
      s << csv_field(r.nu.label());
      for (const auto& p : r.polys) s << "," << csv_field(to_string(p));
      s << "\n";
    }
  } else if (o.format == "latex") {
    s << "\\begin{tabular}{l" << std::string(names.size(), 'l') << "}\n\\hline\n$\\nu$";
    for (const auto& n : names) s << " & $" << n << "_\\nu$";
    s << " \\\\\n\\hline\n";
    for (const auto& r : rows) {
      s << "$" << r.nu.label() << "$";
      for (const auto& p : r.polys) s << " & $" << to_latex(p) << "$";
      s << " \\\\\n";
    }
    s << "\\hline\n\\end{tabular}\n";
  } else {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        s << names[i] << "_" << r.nu.label() << " = " << to_string(r.polys[i]) << "\n";
      }
    }
  }
}

int cmd_gen(const std::string& what, const Options& o) {
  check_degree(o);
  const DunklContext ctx = resolve_context(o);
  ordered_json config = config_echo("gen " + what, o, &ctx);
  config["max_degree"] = o.max_degree;
  ordered_json results;
  results["group"] = ctx.root_system().label;
  results["k"] = rationals(ctx.multiplicity().values());

  std::vector<Row> rows;
  std::vector<std::string> names;
  if (what == "moments") {
    names = {"m"};
    for (const auto& nu : monomials_up_to_degree(ctx.rank(), o.max_degree)) {
      rows.push_back({nu, {moment_function(ctx, nu)}});
    }
  } else if (what == "appell") {
    const Rational t = require_t(o);
    config["t"] = to_string(t);
    results["t"] = to_string(t);
    names = {"R", "S"};
    const AppellTables tables = build_appell_tables(ctx, o.max_degree, t);
    for (std::size_t i = 0; i < tables.indices.size(); ++i) {
      rows.push_back({tables.indices[i], {tables.characters[i], tables.cocharacters[i]}});
    }
  } else {
    const Rational t = require_t(o);
    config["t"] = to_string(t);
    results["t"] = to_string(t);
    names = {"H"};
    const auto basis = hermite_basis(ctx, o.max_degree, t);
    const auto indices = monomials_up_to_degree(ctx.rank(), o.max_degree);
    ordered_json polys = ordered_json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      rows.push_back({indices[i], {basis[i]}});
      polys.push_back(to_string(basis[i]));
    }
    results["polynomials"] = polys;
  }
  Output out(o.output);
  emit_table(out, o, config, results, names, rows);
  return 0;
}

// ---- verify

int cmd_verify(const Options& o) {
  check_degree(o);
  const DunklContext ctx = resolve_context(o);
  VerifyConfig cfg;
  cfg.max_degree = o.max_degree;
  cfg.threads = o.threads;
  if (!o.t.empty()) {
    cfg.ts.clear();
    for (const auto& part : split(o.t, ',')) {
      const Rational t = parse_exact(part, "t");
      if (sgn(t) <= 0) throw UsageError("t must be positive");
      cfg.ts.push_back(t);
    }
  }
  if (!o.inject_fault.empty()) {
    if (o.inject_fault != "a-lambda") throw UsageError("unknown fault '" + o.inject_fault + "'");
    cfg.a_lambda_override = perturbed_a_lambda();
  }

  std::vector<std::string> names;
  for (const auto& entry : o.suites) {
    for (const auto& n : split(entry, ',')) {
      if (n == "all") {
        names.insert(names.end(), suite_names().begin(), suite_names().end());
      } else if (std::find(suite_names().begin(), suite_names().end(), n) != suite_names().end()) {
        names.push_back(n);
      } else {
        throw UsageError("unknown suite '" + n + "'");
      }
    }
  }
  if (names.empty()) names = suite_names();

  const auto reports = run_suites(ctx, names, cfg);
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed;

  ordered_json config = config_echo("verify", o, &ctx);
  config["t"] = rationals(cfg.ts);
  config["max_degree"] = o.max_degree;
  config["suites"] = names;
  if (!o.inject_fault.empty()) config["inject_fault"] = o.inject_fault;

  Output out(o.output);
  auto& s = out.stream();
  if (o.format == "json") {
    ordered_json results = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json j;
      j["suite"] = r.suite;
      j["identity"] = r.identity;
      j["status"] = r.skipped ? "skipped" : (r.passed ? "pass" : "fail");
      j["checks"] = r.checks;
      j["failures"] = r.failure_count;
      j["counterexamples"] = r.counterexamples;
      j["notes"] = r.notes;
      results.push_back(j);
    }
    emit_json(out, config, results);
  } else if (o.format == "csv") {
    s << "suite,status,checks,failures,first_counterexample\n";
    for (const auto& r : reports) {
      s << r.suite << "," << (r.skipped ? "skipped" : (r.passed ? "pass" : "fail")) << "," << r.checks << ","
        << r.failure_count << "," << csv_field(r.counterexamples.empty() ? "" : r.counterexamples.front()) << "\n";
    }
  } else if (o.format == "latex") {
    s << "\\begin{tabular}{lrrl}\n\\hline\nsuite & checks & failures & status \\\\\n\\hline\n";
    for (const auto& r : reports) {
      s << r.suite << " & " << r.checks << " & " << r.failure_count << " & "
        << (r.skipped ? "skipped" : (r.passed ? "pass" : "fail")) << " \\\\\n";
    }
    s << "\\hline\n\\end{tabular}\n";
  } else {
    for (const auto& r : reports) {
      s << (r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL")) << "  " << r.suite << ": " << r.identity << " ["
        << r.checks << " checks";
      if (!r.passed) s << ", " << r.failure_count << " failed";
      s << "]\n";
      for (const auto& c : r.counterexamples) s << "    counterexample: " << c << "\n";
      for (const auto& n : r.notes) s << "    note: " << n << "\n";
    }
  }
  return all_passed ? 0 : 1;
}

// ---- eval

int cmd_eval(const std::string& what, const Options& o) {
  const DunklContext ctx = resolve_context(o);
  NumericEvalConfig cfg;
  cfg.tolerance = o.tol;
  cfg.relative = !o.absolute;
  if (o.ck == "closed") {
    cfg.c_k_mode = CkMode::closed_form;
  } else if (o.ck == "quadrature") {
    cfg.c_k_mode = CkMode::quadrature;
  } else if (o.ck != "auto") {
    throw UsageError("--ck must be auto, closed or quadrature");
  }
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto x = parse_point(o.x, "x");
  const auto y = parse_point(o.y, "y");
  if (x.size() != ctx.rank() || y.size() != ctx.rank()) {
    throw UsageError("--x and --y need " + std::to_string(ctx.rank()) + " coordinates");
  }
  std::optional<double> t;
  if (what != "kernel") {
    if (o.t.empty()) throw UsageError("--t is required");
    t = parse_double(o.t, "t");
    if (!(*t > 0.0)) throw UsageError("t must be positive");
  }

  KernelValue v;
  if (what == "kernel") {
    v = o.imaginary ? kernel_eval_imaginary(ctx, x, y, cfg) : kernel_eval(ctx, x, y, cfg);
  } else if (what == "heat") {
    v = heat_kernel_eval(ctx, x, y, *t, cfg);
  } else {
    v = density_theta(ctx, *t, x, y, cfg);
  }

  ordered_json config = config_echo("eval " + what, o, &ctx);
  config["x"] = x;
  config["y"] = y;
  if (t) config["t"] = *t;
  config["tolerance"] = cfg.tolerance;
  config["relative"] = cfg.relative;
  if (what == "kernel") config["imaginary"] = o.imaginary;

  Output out(o.output);
  auto& s = out.stream();
  const bool complex = what == "kernel" && o.imaginary;
  if (o.format == "json") {
    ordered_json r;
    r["value"] = v.value;
    if (complex) r["imag"] = v.imag;
    r["error_bound"] = v.error_bound;
    r["degree"] = v.degree;
    emit_json(out, config, r);
  } else if (o.format == "csv") {
    s << (complex ? "value,imag,error_bound,degree\n" : "value,error_bound,degree\n");
    s << fmt_double(v.value) << ",";
    if (complex) s << fmt_double(v.imag) << ",";
    s << fmt_double(v.error_bound) << "," << v.degree << "\n";
  } else if (o.format == "latex") {
    s << "$" << fmt_double(v.value);
    if (complex) s << (v.imag < 0 ? " - " : " + ") << fmt_double(std::abs(v.imag)) << "i";
    s << " \\pm " << fmt_double(v.error_bound) << "$\n";
  } else {
    s << "value = " << fmt_double(v.value);
    if (complex) s << (v.imag < 0 ? " - " : " + ") << fmt_double(std::abs(v.imag)) << "i";
    s << " +- " << fmt_double(v.error_bound) << " (series degree " << v.degree << ")\n";
  }
  return 0;
}

void add_group_options(CLI::App* app, Options& o) {
  app->add_option("--family", o.family, "Root system family: Z2, A, B or D");
  app->add_option("--rank", o.rank, "Ambient dimension N");
  app->add_option("--group", o.group, "Group label such as Z2^2, A2, B2, D3, I2(4)");
}

void add_common_options(CLI::App* app, Options& o, bool exact) {
  add_group_options(app, o);
  app->add_option("--k", o.k, "Multiplicities, one p/q per orbit (a single value applies to all)");
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  app->add_option("-o,--output", o.output, "Write to this file instead of standard output");
  if (exact) {
    app->add_option("--max-degree", o.max_degree, "Highest total degree");
    app->add_flag("--allow-high-degree", o.allow_high_degree, "Lift the degree cap of 8");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl operators, Appell systems and k-Gaussian integration"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;

  auto* groups = app.add_subcommand("groups", "List root systems, orbits and group orders");
  add_group_options(groups, o);
  groups->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  groups->add_option("-o,--output", o.output);

  auto* gen = app.add_subcommand("gen", "Generate exact polynomial tables");
  gen->require_subcommand(1);
  std::string gen_kind;
  for (const char* kind : {"moments", "appell", "hermite"}) {
    auto* sub = gen->add_subcommand(kind);
    add_common_options(sub, o, true);
    if (std::string(kind) != "moments") sub->add_option("--t", o.t, "Variance parameter p/q");
    sub->callback([&gen_kind, kind] { gen_kind = kind; });
  }

  auto* verify = app.add_subcommand("verify", "Check identities exactly");
  add_common_options(verify, o, true);
  verify->add_option("--t", o.t, "Comma-separated p/q values (default 1/4,1/2,2)");
  verify->add_option("--suite", o.suites, "all or a suite name; repeatable or comma-separated");
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  verify->add_option("--inject-fault", o.inject_fault)->group("");

  auto* eval = app.add_subcommand("eval", "Evaluate the Dunkl kernel numerically");
  eval->require_subcommand(1);
  std::string eval_kind;
  for (const char* kind : {"kernel", "heat", "theta"}) {
    auto* sub = eval->add_subcommand(kind);
    add_common_options(sub, o, false);
    sub->add_option("--x", o.x, "Comma-separated coordinates");
    sub->add_option("--y", o.y, "Comma-separated coordinates");
    sub->add_option("--tol", o.tol, "Error-bound target");
    sub->add_flag("--absolute", o.absolute, "Treat --tol as an absolute bound");
    sub->add_option("--ck", o.ck, "Normalization: auto, closed or quadrature");
    if (std::string(kind) == "kernel") {
      sub->add_flag("--imaginary", o.imaginary, "Evaluate K(ix, y)");
    } else {
      sub->add_option("--t", o.t, "Time t > 0");
    }
    sub->callback([&eval_kind, kind] { eval_kind = kind; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (groups->parsed()) return cmd_groups(o);
    if (gen->parsed()) return cmd_gen(gen_kind, o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_eval(eval_kind, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

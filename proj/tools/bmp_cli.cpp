// Command-line front end: coefficient tables, verification suites, conjecture scans,
// T values, and the quartic-integral check.
//
// Exit status: 0 pass, 1 counterexample, 2 usage or configuration error, 3 internal or
// convergence error.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmp/bmp.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void print_json(const bmp::json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

/// "lo:hi:step", each part a decimal or p/q.
std::vector<bmp::Rational> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("--x-grid expects lo:hi:step, got '" + text + "'");
  try {
    return bmp::rational_grid(bmp::parse_rational(parts[0]), bmp::parse_rational(parts[1]),
                              bmp::parse_rational(parts[2]));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const bmp::domain_error& e) {
    throw UsageError(e.what());
  }
}

int finish(bmp::RunReport& report) {
  report.finished = bmp::utc_timestamp();
  print_json(report);
  return report.passed() ? kExitPass : kExitCounterexample;
}

int cmd_coeffs(long m, const std::string& format) {
  if (m < 0) throw UsageError("--m must be nonnegative");
  const auto row = bmp::coefficient_row(static_cast<bmp::Index>(m));
  std::vector<std::string> text;
  for (const auto& v : row.values) text.push_back(bmp::to_string(v));
  if (format == "json") {
    print_json(bmp::json(text));
  } else if (format == "table") {
    std::cout << "l\td_l(" << m << ")\n";
    for (std::size_t l = 0; l < text.size(); ++l) std::cout << l << '\t' << text[l] << '\n';
  } else {
    std::cout << join(text, ",") << '\n';
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string property;
  bool all = false;
  long max_m = -1;
  long max_n = -1;
  long depth = 3;
  unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& args) {
  const auto& table = bmp::suites();
  std::vector<std::string> names;
  if (args.all) {
    for (const auto& [name, entry] : table) names.push_back(name);
  } else {
    if (args.property.empty()) throw UsageError("verify needs --property NAME or --all");
    if (!table.contains(args.property)) throw UsageError("unknown property '" + args.property + "'");
    names.push_back(args.property);
  }
  if (args.depth < 0) throw UsageError("--depth must be nonnegative");

  bmp::RunReport report;
  report.command = "verify";
  report.started = bmp::utc_timestamp();
  report.config = bmp::json{{"properties", names}, {"depth", args.depth}, {"jobs", args.jobs}};
  for (const auto& name : names) {
    const auto& entry = table.at(name);
    long range = args.max_n >= 0 && name == "recurrence" ? args.max_n : args.max_m;
    if (args.all && range < 0) range = static_cast<long>(entry.default_max_m);
    if (range < 0) range = static_cast<long>(entry.default_max_m);
    bmp::SuiteOptions opts{static_cast<bmp::Index>(range), static_cast<std::size_t>(args.depth), args.jobs};
    try {
      report.results.emplace_back(entry.run(opts));
    } catch (const bmp::config_error& e) {
      throw UsageError(e.what());
    }
    report.config["max_m"][name] = range;
  }
  return finish(report);
}

struct ScanArgs {
  long min_m = 2;
  long max_m = 40;
  long depth = 5;
  std::string x_grid = "0.5:5:0.25";
  bool stop_on_failure = false;
  unsigned jobs = 1;
};

int cmd_scan(const std::string& kind, const ScanArgs& args) {
  if (args.max_m < 0 || args.min_m < 1 || args.depth < 0) throw UsageError("scan: ranges must be nonnegative");
  bmp::ScanConfig cfg;
  cfg.min_m = static_cast<bmp::Index>(args.min_m);
  cfg.max_m = static_cast<bmp::Index>(args.max_m);
  cfg.depth = static_cast<std::size_t>(args.depth);
  cfg.stop_on_failure = args.stop_on_failure;
  cfg.jobs = args.jobs;

  bmp::RunReport report;
  report.command = "scan " + kind;
  report.started = bmp::utc_timestamp();
  report.config = bmp::json{{"max_m", args.max_m}, {"stop_on_failure", args.stop_on_failure}, {"jobs", args.jobs}};
  if (kind == "ilogconcave") {
    report.config["depth"] = args.depth;
    report.results.emplace_back(bmp::scan_infinite_logconcavity(cfg));
  } else {
    cfg.x_grid = parse_grid(args.x_grid);
    if (args.max_m < args.min_m) throw UsageError("scan hypineq: --max-m below --min-m");
    for (const auto& x : cfg.x_grid)
      if (x < bmp::Rational(1, 2)) throw UsageError("scan hypineq: grid point " + bmp::to_string(x) + " is below 1/2");
    report.config["min_m"] = args.min_m;
    report.config["x_grid"] = args.x_grid;
    report.results.emplace_back(bmp::scan_hyp_inequality(cfg));
  }
  return finish(report);
}

int cmd_tvalues(long max_m, const std::string& format, unsigned jobs) {
  if (max_m < 1) throw UsageError("--max-m must be at least 1");
  const auto bundles =
      bmp::parallel_map(static_cast<std::size_t>(max_m), jobs, [](std::size_t i) { return bmp::t_bundle(i + 1); });
  if (format == "json") {
    bmp::RunReport report;
    report.command = "tvalues";
    report.started = bmp::utc_timestamp();
    report.config = bmp::json{{"max_m", max_m}};
    for (const auto& b : bundles) report.results.emplace_back(b);
    return finish(report);
  }
  const bool csv = format == "csv";
  std::cout << std::setprecision(12);
  if (csv)
    std::cout << "m,direct,hypergeometric,integral,via_w,approx,limit_gap\n";
  else
    std::cout << "m\tT(m)\tagree\tapprox\tlimit_gap\n";
  bool all_ok = true;
  for (const auto& b : bundles) {
    all_ok = all_ok && b.consistent();
    if (csv)
      std::cout << b.m << ',' << bmp::to_string(b.direct) << ',' << bmp::to_string(b.hypergeometric) << ','
                << (b.integral ? bmp::to_string(*b.integral) : "") << ',' << bmp::to_string(b.via_w) << ','
                << bmp::to_double(b.direct) << ',' << b.limit_gap << '\n';
    else
      std::cout << b.m << '\t' << bmp::to_string(b.direct) << '\t' << (b.consistent() ? "yes" : "NO") << '\t'
                << bmp::to_double(b.direct) << '\t' << b.limit_gap << '\n';
  }
  return all_ok ? kExitPass : kExitCounterexample;
}

struct IntegralArgs {
  long m = -1;
  long max_m = -1;
  std::vector<std::string> a{"1"};
  double tol = 1e-10;
  std::string format = "table";
};

int cmd_integral(const IntegralArgs& args) {
  if (args.m < 0 && args.max_m < 0) throw UsageError("integral needs --m or --max-m");
  if (!(args.tol > 0)) throw UsageError("--tol must be positive");
  std::vector<bmp::Index> ms;
  if (args.m >= 0) {
    ms.push_back(static_cast<bmp::Index>(args.m));
  } else {
    for (long m = 0; m <= args.max_m; ++m) ms.push_back(static_cast<bmp::Index>(m));
  }
  std::vector<double> as;
  for (const auto& text : args.a) {
    try {
      as.push_back(bmp::to_double(bmp::parse_rational(text)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--a: ") + e.what());
    }
    if (!(as.back() > -1.0)) throw UsageError("--a must exceed -1 (the integral diverges otherwise)");
  }

  std::vector<bmp::QuadratureResult> rows;
  for (auto m : ms)
    for (double a : as) rows.push_back(bmp::quartic_integral_check(m, a, args.tol));

  if (args.format == "json") {
    bmp::RunReport report;
    report.command = "integral";
    report.started = bmp::utc_timestamp();
    report.config = bmp::json{{"m", ms}, {"a", as}, {"tol", args.tol}};
    for (const auto& r : rows) report.results.emplace_back(r);
    return finish(report);
  }
  const bool csv = args.format == "csv";
  std::cout << std::setprecision(15);
  std::cout << (csv ? "m,a,numeric,closed_form,relative_error,evaluations\n"
                    : "m\ta\tnumeric\tclosed_form\trelative_error\tevaluations\n");
  const char sep = csv ? ',' : '\t';
  for (const auto& r : rows)
    std::cout << r.m << sep << r.a << sep << r.numeric << sep << r.closed_form << sep << r.relative_error << sep
              << r.evaluations << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the coefficients d_l(m) of P_m(a)"};
  app.require_subcommand(1);
  const unsigned default_jobs = bmp::default_jobs();
  const std::vector<std::string> formats{"table", "csv", "json"};

  auto* coeffs = app.add_subcommand("coeffs", "Print d_0(m), ..., d_m(m) exactly");
  long coeffs_m = 0;
  std::string coeffs_format = "csv";
  coeffs->add_option("--m", coeffs_m, "Row index m")->required();
  coeffs->add_option("--format", coeffs_format, "table, csv, or json")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  VerifyArgs vargs;
  vargs.jobs = default_jobs;
  std::vector<std::string> suite_names;
  for (const auto& [name, entry] : bmp::suites()) suite_names.push_back(name);
  verify->add_option("--property", vargs.property, "Suite name")->check(CLI::IsMember(suite_names));
  verify->add_flag("--all", vargs.all, "Run every suite with its default range");
  verify->add_option("--max-m", vargs.max_m, "Largest m checked");
  verify->add_option("--max-n", vargs.max_n, "Largest n for the recurrence suite");
  verify->add_option("--depth", vargs.depth, "L-operator depth for ilogconcave");
  verify->add_option("--jobs", vargs.jobs, "Worker threads (default: BMP_JOBS or hardware)")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Counterexample scan for an open conjecture");
  std::string scan_kind;
  ScanArgs sargs;
  sargs.jobs = default_jobs;
  scan->add_option("kind", scan_kind, "ilogconcave or hypineq")
      ->required()
      ->check(CLI::IsMember({"ilogconcave", "hypineq"}));
  scan->add_option("--max-m", sargs.max_m, "Largest m scanned");
  scan->add_option("--min-m", sargs.min_m, "Smallest m scanned (hypineq)");
  scan->add_option("--depth", sargs.depth, "L-operator depth (ilogconcave)");
  scan->add_option("--x-grid", sargs.x_grid, "lo:hi:step, every point >= 1/2 (hypineq)");
  scan->add_flag("--stop-on-failure", sargs.stop_on_failure, "Stop at the first counterexample");
  scan->add_option("--jobs", sargs.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* tvalues = app.add_subcommand("tvalues", "T(m) by every representation, with the limit gap");
  long t_max_m = 10;
  std::string t_format = "table";
  unsigned t_jobs = default_jobs;
  tvalues->add_option("--max-m", t_max_m, "Largest m");
  tvalues->add_option("--format", t_format, "table, csv, or json")->check(CLI::IsMember(formats));
  tvalues->add_option("--jobs", t_jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* integral = app.add_subcommand("integral", "Quadrature of the quartic integral against its closed form");
  IntegralArgs iargs;
  integral->add_option("--m", iargs.m, "Exponent index m");
  integral->add_option("--max-m", iargs.max_m, "Sweep m = 0..max-m");
  integral->add_option("--a", iargs.a, "Parameter a > -1 (repeat or comma-separate)")->delimiter(',');
  integral->add_option("--tol", iargs.tol, "Absolute error target");
  integral->add_option("--format", iargs.format, "table, csv, or json")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*coeffs) return cmd_coeffs(coeffs_m, coeffs_format);
    if (*verify) return cmd_verify(vargs);
    if (*scan) return cmd_scan(scan_kind, sargs);
    if (*tvalues) return cmd_tvalues(t_max_m, t_format, t_jobs);
    if (*integral) return cmd_integral(iargs);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bmp::convergence_error& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

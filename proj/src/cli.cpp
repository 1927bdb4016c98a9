#include "awroots/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "awroots/bounds.hpp"
#include "awroots/iteration.hpp"
#include "awroots/oracle.hpp"
#include "awroots/parameters.hpp"

namespace awroots::cli {

namespace {

const std::map<std::string, Mode> kModeNames = {
    {"bounds", Mode::bounds},   {"iterate", Mode::iterate}, {"approx1", Mode::approx1},
    {"solve", Mode::solve},     {"certify", Mode::certify}, {"table1", Mode::table1},
    {"table2", Mode::table2},   {"table3", Mode::table3},   {"table4", Mode::table4},
};

std::string mode_name(Mode mode) {
  for (const auto& [name, value] : kModeNames)
    if (value == mode) return name;
  return "?";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) parts.push_back(token);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int parse_positive_int(const std::string& text) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || value < 1)
    throw usage_error("'" + text + "' is not a positive integer");
  return value;
}

std::string param_repr(std::complex<double> z) {
  if (z.imag() == 0.0) return shortest_repr(z.real());
  return shortest_repr(z.real()) + (z.imag() < 0.0 ? "-" : "+") +
         shortest_repr(std::abs(z.imag())) + "i";
}

std::string format_sci2(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

// Everything a mode produces; the serializers below render it per --format.
struct Report {
  Mode mode = Mode::bounds;
  std::array<std::complex<double>, 4> a{};
  double q = 0.0;
  std::vector<int> degrees;
  std::vector<double> rho_values;
  std::vector<TableRow> rows;
  std::vector<std::string> warnings;
  bool columns_are_degrees = false;  // table2/table4: one column per degree
  bool scientific_rows = false;      // table4: two-significant-figure text cells
  std::optional<double> k_minus, k_plus, j_minus, j_plus;
  std::optional<double> certificate;
  std::optional<int> steps;
  std::optional<bool> converged;
  std::optional<VerificationReport> verification;
};

Report make_report(const RunConfig& config) {
  Report rep;
  rep.mode = config.mode;
  rep.a = config.a;
  rep.q = config.q;
  rep.degrees = config.degrees;
  return rep;
}

std::string uncertified_warning(double rho_value) {
  return "no contraction certificate: rho = " + shortest_repr(rho_value) +
         " >= 1; convergence not guaranteed";
}

Report run_bounds(const RunConfig& config) {
  Report rep = make_report(config);
  const ParameterSet params = validate(config.a, config.q, config.degrees.at(0));
  const BoundsResult bounds = root_bounds(params);
  rep.rho_values = {rho(params)};
  rep.k_minus = bounds.k_minus;
  rep.k_plus = bounds.k_plus;
  rep.j_minus = bounds.j_minus;
  rep.j_plus = bounds.j_plus;
  rep.rows.push_back({"theta_minus", bounds.lower, bounds.lower_boxed});
  rep.rows.push_back({"theta_plus", bounds.upper, bounds.upper_boxed});
  if (bounds.chebyshev_exact)
    rep.warnings.push_back("all parameters vanish: brackets are the exact Chebyshev angles");
  return rep;
}

Report run_iterate(const RunConfig& config) {
  Report rep = make_report(config);
  const ParameterSet params = validate(config.a, config.q, config.degrees.at(0));
  const IterationTrace trace = iterate(params, config.max_iters, config.tol);
  rep.rho_values = {trace.rho};
  rep.steps = trace.steps();
  rep.converged = trace.converged;
  rep.rows.push_back({"theta_0", trace.iterates.front(), {}});
  rep.rows.push_back({"theta", trace.last(), {}});
  if (trace.certified)
    rep.certificate = trace.apriori_bounds.back();
  else
    rep.warnings.push_back(uncertified_warning(trace.rho));
  if (!trace.converged)
    rep.warnings.push_back("step tolerance not reached within " +
                           std::to_string(config.max_iters) + " iterations");
  return rep;
}

Report run_approx1(const RunConfig& config) {
  Report rep = make_report(config);
  const ParameterSet params = validate(config.a, config.q, config.degrees.at(0));
  rep.rho_values = {rho(params)};
  rep.rows.push_back({"theta_0", chebyshev_init(params.n), {}});
  rep.rows.push_back({"theta_1", first_order_approx(params), {}});
  return rep;
}

Report run_solve(const RunConfig& config) {
  Report rep = make_report(config);
  const ParameterSet params = validate(config.a, config.q, config.degrees.at(0));
  rep.rho_values = {rho(params)};
  rep.rows.push_back({"theta", newton_solve(params, config.tol, config.max_iters), {}});
  return rep;
}

Report run_certify(const RunConfig& config, int& status) {
  Report rep = make_report(config);
  const ParameterSet params = validate(config.a, config.q, config.degrees.at(0));
  const BoundsResult bounds = root_bounds(params);
  const IterationTrace trace = iterate(params, config.max_iters, config.tol);
  rep.rho_values = {trace.rho};
  rep.k_minus = bounds.k_minus;
  rep.k_plus = bounds.k_plus;
  rep.j_minus = bounds.j_minus;
  rep.j_plus = bounds.j_plus;
  rep.steps = trace.steps();
  rep.converged = trace.converged;
  rep.rows.push_back({"theta_minus", bounds.lower, bounds.lower_boxed});
  rep.rows.push_back({"theta", trace.last(), {}});
  rep.rows.push_back({"theta_plus", bounds.upper, bounds.upper_boxed});
  if (trace.certified) {
    rep.certificate = error_certificate(trace, bounds, trace.steps());
  } else {
    rep.warnings.push_back(uncertified_warning(trace.rho));
    status = 2;
  }
  rep.verification = verify(params, trace.last(), bounds);
  return rep;
}

Report run_table1(const RunConfig& config) {
  Report rep = make_report(config);
  const ParameterSet params = validate(config.a, config.q, config.degrees.at(0));
  const BoundsResult bounds = root_bounds(params);
  rep.rho_values = {rho(params)};
  rep.rows.push_back({"theta_minus", bounds.lower, bounds.lower_boxed});
  rep.rows.push_back({"theta", newton_solve(params, config.tol, config.max_iters), {}});
  rep.rows.push_back({"theta_plus", bounds.upper, bounds.upper_boxed});
  return rep;
}

Report run_table2(const RunConfig& config) {
  Report rep = make_report(config);
  rep.columns_are_degrees = true;
  TableRow cos_first{"cos_theta_1", {}, {}};
  TableRow cos_first_upper{"cos_theta_1_plus", {}, {}};
  TableRow cos_last_lower{"cos_theta_n_minus", {}, {}};
  TableRow cos_last{"cos_theta_n", {}, {}};
  for (int n : config.degrees) {
    const ParameterSet params = validate(config.a, config.q, n);
    const BoundsResult bounds = root_bounds(params);
    const RootVector roots = newton_solve(params, config.tol, config.max_iters);
    rep.rho_values.push_back(rho(params));
    cos_first.values.push_back(std::cos(roots.front()));
    cos_first_upper.values.push_back(std::cos(bounds.upper.front()));
    cos_first_upper.boxed.push_back(bounds.upper_boxed.front());
    cos_last_lower.values.push_back(std::cos(bounds.lower.back()));
    cos_last_lower.boxed.push_back(bounds.lower_boxed.back());
    cos_last.values.push_back(std::cos(roots.back()));
  }
  rep.rows = {cos_first, cos_first_upper, cos_last_lower, cos_last};
  rep.warnings.push_back(
      "published comparison bounds for the standard demonstration parameters stabilize at "
      "cos(theta_1) >= 0.9488 and cos(theta_n) <= 0.3370 for large n");
  return rep;
}

Report run_table3(const RunConfig& config) {
  Report rep = make_report(config);
  const ParameterSet params = validate(config.a, config.q, config.degrees.at(0));
  rep.rho_values = {rho(params)};
  const RootVector theta0 = chebyshev_init(params.n);
  const RootVector theta1 = fixed_point_map(params, theta0);
  const RootVector theta2 = fixed_point_map(params, theta1);
  rep.rows.push_back({"theta_0", theta0, {}});
  rep.rows.push_back({"theta_1", theta1, {}});
  rep.rows.push_back({"theta_2", theta2, {}});
  rep.rows.push_back({"theta", newton_solve(params, config.tol, config.max_iters), {}});
  return rep;
}

Report run_table4(const RunConfig& config) {
  Report rep = make_report(config);
  rep.columns_are_degrees = true;
  rep.scientific_rows = true;
  TableRow eps_first{"eps_1", {}, {}};
  TableRow eps_mid{"eps_mid", {}, {}};
  TableRow eps_last{"eps_n", {}, {}};
  for (int n : config.degrees) {
    const ParameterSet params = validate(config.a, config.q, n);
    const RootVector roots = newton_solve(params, config.tol, config.max_iters);
    const RootVector approx = first_order_approx(params);
    rep.rho_values.push_back(rho(params));
    auto rel_err = [&](int j) {  // 1-based root index
      return std::abs(approx[j - 1] - roots[j - 1]) / roots[j - 1];
    };
    eps_first.values.push_back(rel_err(1));
    eps_mid.values.push_back(rel_err(std::max(1, n / 2)));
    eps_last.values.push_back(rel_err(n));
  }
  rep.rows = {eps_first, eps_mid, eps_last};
  return rep;
}

void write_text(const Report& rep, const RunConfig& config, std::ostream& out) {
  out << "# awroots mode=" << mode_name(rep.mode) << "\n";
  out << "# a = " << param_repr(rep.a[0]) << ", " << param_repr(rep.a[1]) << ", "
      << param_repr(rep.a[2]) << ", " << param_repr(rep.a[3]) << "   q = " << shortest_repr(rep.q)
      << "\n";
  out << "# n =";
  for (std::size_t i = 0; i < rep.degrees.size(); ++i)
    out << (i ? "," : "") << " " << rep.degrees[i];
  out << "   rho =";
  for (std::size_t i = 0; i < rep.rho_values.size(); ++i)
    out << (i ? "," : "") << " " << shortest_repr(rep.rho_values[i]);
  out << "\n";
  if (rep.k_minus)
    out << "# k_minus = " << shortest_repr(*rep.k_minus) << "   k_plus = "
        << shortest_repr(*rep.k_plus) << "   j_minus = " << shortest_repr(*rep.j_minus)
        << "   j_plus = " << shortest_repr(*rep.j_plus) << "\n";
  if (rep.steps)
    out << "# steps = " << *rep.steps << "   converged = " << (*rep.converged ? "yes" : "no")
        << "\n";
  if (rep.certificate)
    out << "# apriori_certificate = " << shortest_repr(*rep.certificate) << "\n";
  if (rep.verification) {
    const VerificationReport& v = *rep.verification;
    std::size_t inside = 0;
    for (bool b : v.in_bounds) inside += b ? 1 : 0;
    out << "# verification: system_residual = " << shortest_repr(v.system_residual)
        << "   product_residual = " << shortest_repr(v.product_residual) << "   in_bounds = "
        << inside << "/" << v.in_bounds.size() << "   spectral_norm = "
        << shortest_repr(v.spectral_norm) << "   rho_bound_ok = "
        << (v.rho_bound_ok ? "yes" : "no") << "\n";
  }
  for (const auto& w : rep.warnings) out << "# warning: " << w << "\n";

  std::vector<std::string> header{"label"};
  const std::size_t columns = rep.rows.empty() ? 0 : rep.rows.front().values.size();
  for (std::size_t i = 0; i < columns; ++i) {
    if (rep.columns_are_degrees)
      header.push_back("n=" + std::to_string(rep.degrees[i]));
    else
      header.push_back("j=" + std::to_string(i + 1));
  }

  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rep.rows) {
    std::vector<std::string> line{row.label};
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      std::string cell = rep.scientific_rows ? format_sci2(row.values[i])
                                             : format_fixed(row.values[i], config.decimals);
      if (i < row.boxed.size() && row.boxed[i]) cell = "[" + cell + "]";
      line.push_back(cell);
    }
    cells.push_back(std::move(line));
  }

  std::size_t width = 0;
  for (const auto& h : header) width = std::max(width, h.size());
  for (const auto& line : cells)
    for (const auto& cell : line) width = std::max(width, cell.size());

  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      if (i == 0)
        out << line[i] << std::string(width - line[i].size(), ' ');
      else
        out << std::string(width - line[i].size(), ' ') << line[i];
    }
    out << "\n";
  };
  emit(header);
  for (const auto& line : cells) emit(line);
}

void write_csv(const Report& rep, std::ostream& out) {
  const std::size_t columns = rep.rows.empty() ? 0 : rep.rows.front().values.size();
  out << "label";
  for (std::size_t i = 1; i <= columns; ++i) out << ",j" << i;
  out << "\n";
  for (const auto& row : rep.rows) {
    out << row.label;
    for (double v : row.values) out << "," << shortest_repr(v);
    out << "\n";
  }
}

void write_json(const Report& rep, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["mode"] = mode_name(rep.mode);
  nlohmann::ordered_json params;
  nlohmann::ordered_json a_list = nlohmann::ordered_json::array();
  for (const auto& z : rep.a) a_list.push_back({z.real(), z.imag()});
  params["a"] = a_list;
  params["q"] = rep.q;
  params["n"] = rep.degrees.size() == 1 ? nlohmann::ordered_json(rep.degrees.front())
                                        : nlohmann::ordered_json(rep.degrees);
  doc["params"] = params;
  doc["n"] = rep.degrees.size() == 1 ? nlohmann::ordered_json(rep.degrees.front())
                                     : nlohmann::ordered_json(rep.degrees);
  doc["rho"] = rep.rho_values.size() == 1 ? nlohmann::ordered_json(rep.rho_values.front())
                                          : nlohmann::ordered_json(rep.rho_values);
  if (rep.k_minus) {
    doc["k_minus"] = *rep.k_minus;
    doc["k_plus"] = *rep.k_plus;
    doc["j_minus"] = *rep.j_minus;
    doc["j_plus"] = *rep.j_plus;
  }
  if (rep.steps) doc["steps"] = *rep.steps;
  if (rep.converged) doc["converged"] = *rep.converged;
  if (rep.certificate) doc["certificate"] = *rep.certificate;
  if (rep.verification) {
    const VerificationReport& v = *rep.verification;
    nlohmann::ordered_json ver;
    ver["system_residual"] = v.system_residual;
    ver["product_residual"] = v.product_residual;
    ver["in_bounds"] = v.in_bounds;
    ver["jacobian_symmetry_defect"] = v.jacobian_symmetry_defect;
    ver["spectral_norm"] = v.spectral_norm;
    ver["rho_bound_ok"] = v.rho_bound_ok;
    doc["verification"] = ver;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rep.rows) {
    nlohmann::ordered_json r;
    r["label"] = row.label;
    r["values"] = row.values;
    r["boxed"] = row.boxed;
    rows.push_back(r);
  }
  doc["rows"] = rows;
  doc["warnings"] = rep.warnings;
  out << doc.dump(2) << "\n";
}

}  // namespace

double round_half_even(double x, int decimals) {
  if (decimals < 0 || decimals > 15)
    throw std::invalid_argument("decimals must lie in [0, 15]");
  const double scale = std::pow(10.0, decimals);
  const double scaled = x * scale;
  if (!std::isfinite(scaled) || std::abs(scaled) >= 9.0e15) return x;
  return std::nearbyint(scaled) / scale;
}

std::string format_fixed(double x, int decimals) {
  if (decimals < 0 || decimals > 15)
    throw std::invalid_argument("decimals must lie in [0, 15]");
  const double scale = std::pow(10.0, decimals);
  const double scaled = x * scale;
  if (!std::isfinite(scaled) || std::abs(scaled) >= 9.0e15) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
  }
  const long long units = std::llrint(scaled);  // round to nearest, ties to even
  const bool negative = units < 0;
  const unsigned long long magnitude =
      negative ? 0ULL - static_cast<unsigned long long>(units)
               : static_cast<unsigned long long>(units);
  unsigned long long p10 = 1;
  for (int i = 0; i < decimals; ++i) p10 *= 10;
  std::string result = (negative ? "-" : "") + std::to_string(magnitude / p10);
  if (decimals > 0) {
    std::string frac = std::to_string(magnitude % p10);
    frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
    result += "." + frac;
  }
  return result;
}

std::string shortest_repr(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::complex<double> parse_complex(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin) throw usage_error("malformed parameter '" + text + "'");
  if (*end == '\0') return {re, 0.0};
  if (*end != '+' && *end != '-')
    throw usage_error("malformed parameter '" + text + "' (expected re or re+imi)");
  const char* imag_begin = end;
  const double im = std::strtod(imag_begin, &end);
  if (end == imag_begin || *end != 'i' || *(end + 1) != '\0')
    throw usage_error("malformed parameter '" + text + "' (expected re or re+imi)");
  return {re, im};
}

ParseOutcome parse_args(const std::vector<std::string>& args) {
  ParseOutcome outcome;
  RunConfig& config = outcome.config;

  CLI::App app{
      "Brackets, fixed-point approximations, contraction certificates, and\n"
      "independent verification for Askey-Wilson polynomial root angles."};
  app.name("awroots");

  std::string a_arg = "0,0,0,0";
  std::string n_arg = "5";
  std::string mode_arg = "bounds";
  std::string format_arg = "text";

  app.add_option("--a", a_arg,
                 "four parameters, comma separated; each 're' or 're+imi' "
                 "(a non-real value requires its explicit conjugate partner)")
      ->capture_default_str();
  app.add_option("--q", config.q, "deformation parameter in (-1, 1)")->capture_default_str();
  app.add_option("--n", n_arg, "polynomial degree; a comma-separated list for table2/table4")
      ->capture_default_str();
  app.add_option("--mode", mode_arg,
                 "bounds|iterate|approx1|solve|certify|table1|table2|table3|table4")
      ->capture_default_str();
  app.add_option("--iters", config.max_iters, "iteration/step budget")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tol", config.tol,
                 "step-norm tolerance (iterate/certify) or residual tolerance (solve/tables)")
      ->capture_default_str();
  app.add_option("--format", format_arg, "text|json|csv")->capture_default_str();
  app.add_option("--decimals", config.decimals, "decimal places for text tables")
      ->check(CLI::Range(1, 15))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("awroots");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    outcome.help = true;
    outcome.help_text = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  const auto mode_it = kModeNames.find(mode_arg);
  if (mode_it == kModeNames.end()) throw usage_error("unknown mode '" + mode_arg + "'");
  config.mode = mode_it->second;

  if (format_arg == "text")
    config.format = OutputFormat::text;
  else if (format_arg == "json")
    config.format = OutputFormat::json;
  else if (format_arg == "csv")
    config.format = OutputFormat::csv;
  else
    throw usage_error("unknown format '" + format_arg + "'");

  const auto a_parts = split(a_arg, ',');
  if (a_parts.size() != 4) throw usage_error("--a requires exactly four comma-separated values");
  for (std::size_t r = 0; r < 4; ++r) config.a[r] = parse_complex(a_parts[r]);

  config.degrees.clear();
  for (const auto& part : split(n_arg, ',')) config.degrees.push_back(parse_positive_int(part));
  if (config.degrees.empty()) throw usage_error("--n requires at least one degree");
  if (config.degrees.size() > 1 && config.mode != Mode::table2 && config.mode != Mode::table4)
    throw usage_error("mode '" + mode_arg + "' takes a single degree");

  if (!(config.tol > 0.0)) throw usage_error("--tol must be positive");
  return outcome;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    int status = 0;
    Report rep;
    switch (config.mode) {
      case Mode::bounds: rep = run_bounds(config); break;
      case Mode::iterate: rep = run_iterate(config); break;
      case Mode::approx1: rep = run_approx1(config); break;
      case Mode::solve: rep = run_solve(config); break;
      case Mode::certify: rep = run_certify(config, status); break;
      case Mode::table1: rep = run_table1(config); break;
      case Mode::table2: rep = run_table2(config); break;
      case Mode::table3: rep = run_table3(config); break;
      case Mode::table4: rep = run_table4(config); break;
    }
    switch (config.format) {
      case OutputFormat::text: write_text(rep, config, out); break;
      case OutputFormat::json: write_json(rep, out); break;
      case OutputFormat::csv: write_csv(rep, out); break;
    }
    for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
    return status;
  } catch (const solver_error& e) {
    err << "solver failure: " << e.what() << " (best residual " << shortest_repr(e.residual)
        << ")\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  }
}

int main_impl(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const ParseOutcome parsed = parse_args(args);
    if (parsed.help) {
      out << parsed.help_text;
      return 0;
    }
    return run(parsed.config, out, err);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run 'awroots --help' for the flag summary\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace awroots::cli

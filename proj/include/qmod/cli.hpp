#pragma once

// Command-line surface: evaluate any exported operation at a point, verify
// single identities, run grid sweeps, and dump the divergent expansion, with
// CSV/JSON artifacts for tables and plots.
//
// Exit codes: 0 success (all non-skipped points pass), 1 usage or
// configuration error, 2 domain error, 3 accuracy error, 4 verification
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmod/errors.hpp"
#include "qmod/modular.hpp"
#include "qmod/qseries.hpp"
#include "qmod/quad.hpp"
#include "qmod/special.hpp"
#include "qmod/verify.hpp"

namespace qmod::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_domain = 2;
inline constexpr int exit_accuracy = 3;
inline constexpr int exit_failed = 4;

// ----------------------------------------------------------------------------
// Complex literals "a+bi" (pure-imaginary shorthands "i", "-i", "0.5i")
// ----------------------------------------------------------------------------

namespace detail {

inline double parse_real_token(const std::string& text) {
  if (text.empty()) throw usage_error("complex literal: empty numeric field");
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + text.size())
    throw usage_error("complex literal: cannot parse '" + text + "'");
  return v;
}

// Position of the sign splitting real and imaginary fields, skipping a
// leading sign and exponent signs.
inline std::size_t split_position(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') return i;
  }
  return std::string::npos;
}

}  // namespace detail

inline Complex parse_complex(std::string text) {
  std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
  if (text.empty()) throw usage_error("complex literal: empty string");
  if (text.back() != 'i' && text.back() != 'I')
    return {detail::parse_real_token(text), 0.0};

  std::string body = text.substr(0, text.size() - 1);
  const std::size_t split = detail::split_position(body);
  if (split == std::string::npos) {
    // pure imaginary: "i", "-i", "+i", "2.5i"
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, detail::parse_real_token(body)};
  }
  const std::string re = body.substr(0, split);
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {detail::parse_real_token(re), detail::parse_real_token(im)};
}

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_real(z.real());
  const std::string im = format_real(z.imag()) + "i";
  if (z.real() == 0.0) return im;
  return (z.imag() < 0.0) ? format_real(z.real()) + im
                          : format_real(z.real()) + "+" + im;
}

// ----------------------------------------------------------------------------
// Report serialization
// ----------------------------------------------------------------------------

inline nlohmann::json report_to_json(const verify::VerificationReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = {v.real(), v.imag()};
  return nlohmann::json{{"identity", verify::to_string(r.identity)},
                        {"params", params},
                        {"lhs", {r.lhs.real(), r.lhs.imag()}},
                        {"rhs", {r.rhs.real(), r.rhs.imag()}},
                        {"abs_err", r.abs_err},
                        {"rel_err", r.rel_err},
                        {"offset_2pik", r.offset_2pik},
                        {"pass", r.pass},
                        {"skipped", r.skipped}};
}

// CSV columns: identity, parameter columns in declaration order, lhs_re,
// lhs_im, rhs_re, rhs_im, abs_err, rel_err, pass, skipped. A trailing
// summary row is prefixed "#summary".
inline std::string reports_to_csv(const std::vector<verify::VerificationReport>& reports,
                                  const verify::SweepSummary& summary) {
  if (reports.empty()) throw usage_error("reports_to_csv: no reports");
  std::ostringstream out;
  out << "identity";
  for (const auto& [k, v] : reports.front().params) out << "," << k;
  out << ",lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass,skipped\n";
  for (const auto& r : reports) {
    out << verify::to_string(r.identity);
    for (const auto& [k, v] : r.params) out << "," << format_complex(v);
    out << "," << format_real(r.lhs.real()) << "," << format_real(r.lhs.imag()) << ","
        << format_real(r.rhs.real()) << "," << format_real(r.rhs.imag()) << ","
        << format_real(r.abs_err) << "," << format_real(r.rel_err) << ","
        << (r.pass ? 1 : 0) << "," << (r.skipped ? 1 : 0) << "\n";
  }
  out << "#summary," << verify::to_string(reports.front().identity)
      << ",points=" << summary.total << ",pass=" << summary.passed
      << ",fail=" << summary.failed << ",skipped=" << summary.skipped
      << ",max_rel_err=" << format_real(summary.max_rel_err)
      << ",nonzero_offsets=" << summary.nonzero_offsets << "\n";
  return out.str();
}

// Grid spec "tau=i,0.5+0.5i;xi=0.1,0.2,0.3" -> ordered axes.
inline verify::GridSpec parse_grid(const std::string& text) {
  verify::GridSpec grid;
  std::istringstream axes(text);
  std::string axis;
  while (std::getline(axes, axis, ';')) {
    if (axis.empty()) continue;
    const auto eq = axis.find('=');
    if (eq == std::string::npos)
      throw usage_error("grid: axis '" + axis + "' lacks '='");
    const std::string name = axis.substr(0, eq);
    if (name.empty()) throw usage_error("grid: empty axis name");
    std::vector<Complex> values;
    std::istringstream vals(axis.substr(eq + 1));
    std::string item;
    while (std::getline(vals, item, ',')) {
      if (item.empty()) continue;
      values.push_back(parse_complex(item));
    }
    if (values.empty()) throw usage_error("grid: axis '" + name + "' has no values");
    grid.axes.push_back({name, std::move(values)});
  }
  if (grid.axes.empty()) throw usage_error("grid: no axes declared");
  return grid;
}

// ----------------------------------------------------------------------------
// Run configuration
// ----------------------------------------------------------------------------

struct RunConfig {
  std::string command;  // eval | verify | sweep | asymptotic
  std::string target;   // operation or identity id
  std::map<std::string, Complex> params;
  quad::QuadratureSettings settings;
  std::string output_path;      // empty = stdout
  std::string output_format;    // csv | json
  std::string grid;             // sweep grid spec
  std::string side = "minus";   // detour / branch selector
  long seed = 0;                // reserved for randomized sweeps
};

namespace detail {

inline Complex need(const RunConfig& cfg, const std::string& name) {
  const auto it = cfg.params.find(name);
  if (it == cfg.params.end())
    throw usage_error("missing parameter --" + name + " for '" + cfg.target + "'");
  return it->second;
}

inline double need_real(const RunConfig& cfg, const std::string& name) {
  const Complex v = need(cfg, name);
  if (v.imag() != 0.0) throw usage_error("parameter --" + name + " must be real");
  return v.real();
}

inline int need_int(const RunConfig& cfg, const std::string& name) {
  const double v = need_real(cfg, name);
  if (v != std::floor(v)) throw usage_error("parameter --" + name + " must be an integer");
  return int(v);
}

struct EvalResult {
  Complex value;
  std::string metadata;  // truncation / error information when available
};

inline EvalResult eval_operation(const RunConfig& cfg) {
  const std::string& op = cfg.target;
  const auto& s = cfg.settings;
  char meta[128] = {0};

  // required / optional parameter names per operation; anything else supplied
  // is rejected as a usage error
  static const std::map<std::string, std::pair<std::vector<const char*>,
                                               std::vector<const char*>>> signatures = {
      {"principal_log", {{"z"}, {}}},      {"li2", {{"z"}, {}}},
      {"log_gamma", {{"z"}, {}}},          {"bernoulli", {{"k"}, {}}},
      {"stieltjes_b", {{"z"}, {}}},        {"cot_kernel", {{"z"}, {}}},
      {"pochhammer_inf", {{"x", "q"}, {}}},{"pochhammer_n", {{"x", "q", "n"}, {}}},
      {"euler_series", {{"x", "q"}, {}}},  {"log_pochhammer_oracle", {{"x", "q"}, {}}},
      {"lambert_series", {{"x", "q"}, {}}},{"dedekind_eta", {{"tau"}, {}}},
      {"jacobi_theta", {{"xi", "tau"}, {}}},
      {"g_term", {{"tau", "xi"}, {}}},     {"g_star", {{"tau", "xi"}, {}}},
      {"choose_ray", {{"tau", "xi"}, {"side"}}},
      {"p_minus", {{"tau", "xi"}, {}}},    {"p_plus", {{"tau", "xi"}, {}}},
      {"p_contour_real", {{"alpha", "nu"}, {"r", "side"}}},
      {"m_stieltjes", {{"alpha", "nu"}, {}}},
      {"b_integral", {{"q", "x"}, {}}},    {"stokes_sum", {{"tau", "xi"}, {}}},
      {"k_factor", {{"tau", "xi"}, {}}},   {"xqmain_rhs", {{"tau", "xi"}, {}}},
  };
  const auto sig = signatures.find(op);
  if (sig == signatures.end()) throw usage_error("unknown operation '" + op + "'");
  for (const auto& [k, v] : cfg.params) {
    bool known = false;
    for (const char* name : sig->second.first) known |= (k == name);
    for (const char* name : sig->second.second) known |= (k == name);
    if (!known)
      throw usage_error("operation '" + op + "' does not take parameter --" + k);
  }

  if (op == "principal_log") return {special::principal_log(need(cfg, "z")), ""};
  if (op == "li2") return {special::li2(need(cfg, "z")), ""};
  if (op == "log_gamma") return {special::log_gamma(need(cfg, "z")), ""};
  if (op == "bernoulli") return {{special::bernoulli(need_int(cfg, "k")), 0.0}, "exact table"};
  if (op == "stieltjes_b") return {special::stieltjes_b(need(cfg, "z")), ""};
  if (op == "cot_kernel") return {special::cot_kernel(need(cfg, "z")), ""};

  if (op == "pochhammer_inf") {
    const auto r = qseries::pochhammer_inf(need(cfg, "x"), need(cfg, "q"));
    std::snprintf(meta, sizeof meta, "terms_used=%d tail_bound=%.3e",
                  r.truncation.terms_used, r.truncation.tail_bound);
    return {r.value, meta};
  }
  if (op == "pochhammer_n")
    return {qseries::pochhammer_n(need(cfg, "x"), need(cfg, "q"), need_int(cfg, "n")), ""};
  if (op == "euler_series") return {qseries::euler_series(need(cfg, "x"), need(cfg, "q")), ""};
  if (op == "log_pochhammer_oracle")
    return {qseries::log_pochhammer_oracle(need(cfg, "x"), need(cfg, "q")), ""};
  if (op == "lambert_series")
    return {qseries::lambert_series(need(cfg, "x"), need(cfg, "q")), ""};
  if (op == "dedekind_eta") return {qseries::dedekind_eta(need(cfg, "tau")), ""};
  if (op == "jacobi_theta")
    return {qseries::jacobi_theta(need(cfg, "xi"), need(cfg, "tau")), ""};

  if (op == "g_term") return {modular::g_term(need(cfg, "tau"), need(cfg, "xi")), ""};
  if (op == "g_star") return {modular::g_star(need(cfg, "tau"), need(cfg, "xi")), ""};
  if (op == "choose_ray") {
    const auto branch =
        (cfg.side == "plus") ? modular::RayBranch::plus : modular::RayBranch::minus;
    const auto c = modular::choose_ray(need(cfg, "tau"), need(cfg, "xi"), branch);
    std::snprintf(meta, sizeof meta, "sigma=%.12g margin=%.12g", c.sigma, c.margin);
    return {{c.d, 0.0}, meta};
  }
  if (op == "p_minus") return {modular::p_minus(need(cfg, "tau"), need(cfg, "xi"), s), ""};
  if (op == "p_plus") return {modular::p_plus(need(cfg, "tau"), need(cfg, "xi"), s), ""};
  if (op == "p_contour_real") {
    const auto it = cfg.params.find("r");
    const double r = (it != cfg.params.end()) ? it->second.real() : 0.5;
    const auto side =
        (cfg.side == "plus") ? quad::DetourSide::above : quad::DetourSide::below;
    return {modular::p_contour_real(need_real(cfg, "alpha"), need_real(cfg, "nu"), r, side,
                                    s),
            ""};
  }
  if (op == "m_stieltjes")
    return {modular::m_stieltjes(need_real(cfg, "alpha"), need_real(cfg, "nu"), s), ""};
  if (op == "b_integral")
    return {{modular::b_integral(need_real(cfg, "q"), need_real(cfg, "x"), s), 0.0}, ""};
  if (op == "stokes_sum") return {modular::stokes_sum(need(cfg, "tau"), need(cfg, "xi")), ""};
  if (op == "k_factor") {
    const qseries::ModularPoint p(need(cfg, "tau"), need(cfg, "xi"));
    return {modular::k_factor(p, s), ""};
  }
  if (op == "xqmain_rhs") {
    const qseries::ModularPoint p(need(cfg, "tau"), need(cfg, "xi"));
    return {modular::xqmain_rhs(p, s), ""};
  }
  throw usage_error("unknown operation '" + op + "'");  // unreachable
}

inline verify::Params params_for_identity(verify::Identity id, const RunConfig& cfg) {
  // Canonical declaration order per identity.
  std::vector<std::string> names;
  switch (id) {
    case verify::Identity::MAIN:
    case verify::Identity::MAINBIS: names = {"alpha", "nu"}; break;
    case verify::Identity::MP:
    case verify::Identity::PP_SLICE: names = {"alpha", "nu", "r"}; break;
    case verify::Identity::MAINTER: names = {"q", "x"}; break;
    case verify::Identity::ASYMPTOTIC: names = {"q", "x", "kmax"}; break;
    case verify::Identity::LANDEN: names = {"x"}; break;
    case verify::Identity::EULER: names = {"x", "q"}; break;
    case verify::Identity::ETA_MODULAR: names = {"tau"}; break;
    default: names = {"tau", "xi"}; break;
  }
  verify::Params params;
  for (const auto& n : names) {
    const auto it = cfg.params.find(n);
    if (it != cfg.params.end()) params.emplace_back(n, it->second);
  }
  // Anything supplied but not consumed is a usage error.
  for (const auto& [k, v] : cfg.params) {
    bool used = false;
    for (const auto& [pk, pv] : params) used |= (pk == k);
    if (!used) throw usage_error("identity " + std::string(verify::to_string(id)) +
                                  " does not take parameter --" + k);
  }
  return params;
}

inline void write_output(const RunConfig& cfg, const std::string& text, std::ostream& fallback) {
  if (cfg.output_path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);  // UTF-8, LF endings
  if (!file) throw usage_error("cannot open output file '" + cfg.output_path + "'");
  file << text;
}

}  // namespace detail

// ----------------------------------------------------------------------------
// Command implementations (stream-injected, used directly by tests)
// ----------------------------------------------------------------------------

inline int run_eval(const RunConfig& cfg, std::ostream& out) {
  const auto r = detail::eval_operation(cfg);
  char buf[96];
  if (r.value.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.15g", r.value.real());
  else
    std::snprintf(buf, sizeof buf, "%.15g %+.15g i", r.value.real(), r.value.imag());
  out << cfg.target << " = " << buf;
  if (!r.metadata.empty()) out << "  [" << r.metadata << "]";
  out << "\n";
  if (!cfg.output_path.empty()) {
    nlohmann::json j{{"operation", cfg.target},
                     {"value", {r.value.real(), r.value.imag()}},
                     {"metadata", r.metadata}};
    detail::write_output(cfg, j.dump(2) + "\n", out);
  }
  return exit_ok;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto id = verify::identity_from_string(cfg.target);
  if (!id) throw usage_error("unknown identity '" + cfg.target + "'");
  const auto rep = verify::verify(*id, detail::params_for_identity(*id, cfg), cfg.settings);

  char line[256];
  std::snprintf(line, sizeof line,
                "%s: %s  lhs=(%.15g,%.15g) rhs=(%.15g,%.15g) abs_err=%.3e rel_err=%.3e "
                "offset=%d elapsed=%.3fs",
                verify::to_string(rep.identity),
                rep.skipped ? "SKIPPED" : (rep.pass ? "pass" : "FAIL"), rep.lhs.real(),
                rep.lhs.imag(), rep.rhs.real(), rep.rhs.imag(), rep.abs_err, rep.rel_err,
                rep.offset_2pik, rep.elapsed.count());
  out << line << "\n";
  if (!rep.note.empty()) out << "  " << rep.note << "\n";

  if (!cfg.output_path.empty())
    detail::write_output(cfg, report_to_json(rep).dump(2) + "\n", out);
  if (rep.skipped) return exit_ok;  // skipped is not failed
  return rep.pass ? exit_ok : exit_failed;
}

inline int run_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto id = verify::identity_from_string(cfg.target);
  if (!id) throw usage_error("unknown identity '" + cfg.target + "'");
  const auto grid = parse_grid(cfg.grid);
  const auto [reports, summary] = verify::sweep(*id, grid, cfg.settings);

  std::string text;
  if (cfg.output_format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    nlohmann::json j{{"reports", arr},
                     {"summary",
                      {{"points", summary.total},
                       {"pass", summary.passed},
                       {"fail", summary.failed},
                       {"skipped", summary.skipped},
                       {"max_rel_err", summary.max_rel_err},
                       {"nonzero_offsets", summary.nonzero_offsets}}}};
    text = j.dump(2) + "\n";
  } else {
    text = reports_to_csv(reports, summary);
  }
  detail::write_output(cfg, text, out);
  if (!cfg.output_path.empty())
    out << verify::to_string(*id) << " sweep: " << summary.passed << "/" << summary.total
        << " pass, " << summary.skipped << " skipped, max_rel_err=" << summary.max_rel_err
        << "\n";
  return (summary.failed == 0) ? exit_ok : exit_failed;
}

inline int run_asymptotic(const RunConfig& cfg, std::ostream& out) {
  const double q = detail::need_real(cfg, "q");
  const double x = detail::need_real(cfg, "x");
  int k_max = 30;
  if (const auto it = cfg.params.find("kmax"); it != cfg.params.end())
    k_max = int(it->second.real());
  const auto series = modular::asymptotic_b_series(q, x, k_max);
  const double integral = modular::b_integral(q, x, cfg.settings);
  const double actual = std::abs(integral - series.partial_at_optimal().real());

  std::ostringstream csv;
  csv << "k,term,abs_term,partial_sum,is_optimal\n";
  Complex partial{0.0, 0.0};
  for (int k = 1; k <= int(series.coefficients.size()); ++k) {
    partial += series.coefficients[k - 1];
    csv << k << "," << format_real(series.coefficients[k - 1].real()) << ","
        << format_real(std::abs(series.coefficients[k - 1])) << ","
        << format_real(partial.real()) << "," << (k == series.optimal_index ? 1 : 0)
        << "\n";
  }
  csv << "#summary,q=" << format_real(q) << ",x=" << format_real(x)
      << ",optimal_index=" << series.optimal_index
      << ",optimal_error=" << format_real(series.optimal_error)
      << ",b_integral=" << format_real(integral)
      << ",actual_error=" << format_real(actual) << "\n";
  detail::write_output(cfg, csv.str(), out);
  return exit_ok;
}

// ----------------------------------------------------------------------------
// Argument parsing and dispatch
// ----------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"numerical q-product toolkit: evaluation, identity verification, sweeps"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("QMOD_DEFAULT_TOL")) {
    try {
      const double tol = detail::parse_real_token(env);
      cfg.settings.abs_tol = tol;
      cfg.settings.rel_tol = tol;
    } catch (const usage_error&) {
      err << "invalid QMOD_DEFAULT_TOL, keeping defaults\n";
    }
  }

  std::map<std::string, std::string> raw_params;
  auto add_common = [&](CLI::App* sub) {
    sub->set_config("--config")->description("key=value configuration file");
    sub->add_option("--abs-tol", cfg.settings.abs_tol, "absolute quadrature tolerance");
    sub->add_option("--rel-tol", cfg.settings.rel_tol, "relative quadrature tolerance");
    sub->add_option("--max-depth", cfg.settings.max_depth, "bisection depth limit");
    sub->add_option("--pv-window", cfg.settings.pv_window, "principal-value window");
    sub->add_option("--ray-growth", cfg.settings.ray_panel_growth, "ray panel growth");
    sub->add_option("--ray-cutoff", cfg.settings.ray_cutoff_magnitude, "ray tail cutoff");
    sub->add_option("--output", cfg.output_path, "output file path");
    sub->add_option("--format", cfg.output_format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "seed reserved for randomized sweeps");
    for (const char* p : {"z", "x", "q", "tau", "xi", "alpha", "nu", "n", "k",
                          "kmax", "r", "side"})
      sub->add_option(std::string("--") + p, raw_params[p], "parameter " + std::string(p));
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an operation at a point");
  eval_cmd->add_option("operation", cfg.target, "operation name")->required();
  add_common(eval_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "verify one identity at a point");
  verify_cmd->add_option("identity", cfg.target, "identity id")->required();
  add_common(verify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "verify an identity over a grid");
  sweep_cmd->add_option("identity", cfg.target, "identity id")->required();
  sweep_cmd->add_option("--grid", cfg.grid, "grid spec, e.g. \"tau=i;xi=0.1,0.2\"")
      ->required();
  add_common(sweep_cmd);

  auto* asym_cmd = app.add_subcommand("asymptotic", "divergent-expansion table");
  add_common(asym_cmd);

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("qmod");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  try {
    cfg.settings.validate();
    for (const auto& [k, v] : raw_params) {
      if (v.empty()) continue;
      if (k == "side") {
        if (v != "minus" && v != "plus")
          throw usage_error("--side must be 'minus' or 'plus'");
        cfg.side = v;
        cfg.params[k] = {0.0, 0.0};  // marks presence for signature checks
        continue;
      }
      cfg.params[k] = parse_complex(v);
    }
    if (eval_cmd->parsed()) {
      cfg.command = "eval";
      return run_eval(cfg, out);
    }
    if (verify_cmd->parsed()) {
      cfg.command = "verify";
      return run_verify(cfg, out);
    }
    if (sweep_cmd->parsed()) {
      cfg.command = "sweep";
      return run_sweep(cfg, out);
    }
    cfg.command = "asymptotic";
    return run_asymptotic(cfg, out);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const accuracy_error& e) {
    err << "accuracy error: " << e.what() << "\n";
    return exit_accuracy;
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return exit_domain;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace qmod::cli

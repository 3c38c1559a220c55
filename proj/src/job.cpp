#include "hardyspec/job.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hardyspec/errors.hpp"
#include "hardyspec/quadrature.hpp"
#include "hardyspec/random_elements.hpp"
#include "hardyspec/report_io.hpp"

namespace hardyspec {

namespace {

using nlohmann::json;

Complex get_complex(const json& j, const char* what) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw config_error(std::string(what) + ": expected a number or [re, im]");
}

LineSymbol parse_line_symbol(const json& j) {
  std::string kind = j.value("kind", "rational");
  if (kind == "constant")
    return LineSymbol::constant(get_complex(j.at("value"), "line constant"));
  if (kind == "cayley_power")
    return LineSymbol::cayley_power(j.at("power").get<int>());
  if (kind == "rational") {
    std::vector<Complex> coeffs;
    if (j.contains("coeffs"))
      for (const auto& c : j.at("coeffs"))
        coeffs.push_back(get_complex(c, "rational coefficient"));
    return LineSymbol::rational(get_complex(j.at("constant"), "rational constant"),
                                std::move(coeffs));
  }
  throw config_error("unknown line symbol kind: " + kind);
}

MultiplierSymbol parse_multiplier(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant")
    return MultiplierSymbol::constant(
        get_complex(j.at("value"), "multiplier constant"));
  if (kind == "exp_decay") {
    Complex offset = j.contains("offset")
                         ? get_complex(j.at("offset"), "exp_decay offset")
                         : Complex(0.0);
    return MultiplierSymbol::exp_decay(
        j.at("alpha").get<double>(),
        get_complex(j.at("scale"), "exp_decay scale"), offset);
  }
  if (kind == "power_exp")
    return MultiplierSymbol::power_exp(
        j.at("n").get<int>(), j.at("alpha").get<double>(),
        get_complex(j.at("coeff"), "power_exp coefficient"));
  if (kind == "complex_exp")
    return MultiplierSymbol::complex_exp(get_complex(j.at("c"), "complex_exp c"));
  if (kind == "piecewise_linear") {
    std::vector<std::pair<double, Complex>> knots;
    for (const auto& k : j.at("knots")) {
      if (!k.is_array() || k.size() != 3)
        throw config_error("piecewise_linear knots must be [t, re, im]");
      knots.emplace_back(k[0].get<double>(),
                         Complex(k[1].get<double>(), k[2].get<double>()));
    }
    return MultiplierSymbol::piecewise_linear(std::move(knots));
  }
  throw config_error("unknown multiplier kind: " + kind);
}

std::vector<ProductTerm> parse_terms(const json& j) {
  std::vector<ProductTerm> out;
  for (const auto& term : j)
    out.push_back({parse_line_symbol(term.at("toeplitz")),
                   parse_multiplier(term.at("multiplier"))});
  return out;
}

void write_outputs(const CommandOptions& opt, const std::string& csv,
                   const std::string& svg) {
  if (opt.format != "csv" && opt.format != "svg" && opt.format != "both")
    throw config_error("format must be csv, svg or both");
  if (opt.out_base.empty()) return;
  if (opt.format == "csv" || opt.format == "both")
    atomic_write_text(opt.out_base + ".csv", csv);
  if ((opt.format == "svg" || opt.format == "both") && !svg.empty())
    atomic_write_text(opt.out_base + ".svg", svg);
}

OperatorSum resolve_element(const JobConfig& cfg) {
  if (cfg.has_element) return cfg.element;
  if (cfg.has_map) return series_element(cfg.map).element;
  throw config_error("this command needs an \"element\" or a \"map\"");
}

}  // namespace

JobConfig parse_job(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw config_error(std::string("job config is not valid JSON: ") + e.what());
  }
  try {
    JobConfig cfg;
    if (j.contains("element")) {
      const auto& e = j.at("element");
      cfg.has_element = true;
      if (e.contains("scalar"))
        cfg.element.scalar = get_complex(e.at("scalar"), "element scalar");
      if (e.contains("tail_bound")) {
        cfg.element.tail_bound = e.at("tail_bound").get<double>();
        if (cfg.element.tail_bound < 0.0)
          throw config_error("tail_bound must be nonnegative");
      }
      if (e.contains("tm_terms"))
        cfg.element.tm_terms = parse_terms(e.at("tm_terms"));
      if (e.contains("mt_terms"))
        cfg.element.mt_terms = parse_terms(e.at("mt_terms"));
      if (cfg.element.tm_terms.empty() && cfg.element.mt_terms.empty() &&
          cfg.element.scalar == Complex(0.0))
        throw config_error("element is empty");
    }
    if (j.contains("map")) {
      const auto& m = j.at("map");
      cfg.has_map = true;
      cfg.map.psi_constant = get_complex(m.at("psi_constant"), "psi_constant");
      if (m.contains("psi_coeffs"))
        for (const auto& c : m.at("psi_coeffs"))
          cfg.map.psi_coeffs.push_back(get_complex(c, "psi coefficient"));
      cfg.map.epsilon = m.at("epsilon").get<double>();
      cfg.map.alpha = m.value("alpha", 0.0);
      cfg.map.n_max = m.value("n_max", 12);
    }
    if (!cfg.has_element && !cfg.has_map)
      throw config_error("job config needs an \"element\" or a \"map\"");
    if (j.contains("lambda"))
      cfg.lambda = get_complex(j.at("lambda"), "lambda");
    if (j.contains("w_grid")) {
      for (const auto& w : j.at("w_grid")) {
        double v = w.get<double>();
        if (v < 0.0 || v > 1.0)
          throw config_error("w_grid values must lie in [0, 1]");
        cfg.w_grid.push_back(v);
      }
      if (cfg.w_grid.empty()) throw config_error("w_grid is empty");
    }
    if (j.contains("truncation")) {
      const auto& t = j.at("truncation");
      cfg.trunc.n = t.value("n", 64);
      cfg.trunc.q = t.value("q", 0);
      cfg.trunc.phase_check_tolerance =
          t.value("phase_check_tolerance", 1e-6);
    }
    cfg.grid_size = j.value("grid_size", 1024);
    if (cfg.grid_size < 8 || cfg.grid_size > (1 << 20))
      throw config_error("grid_size out of range");
    cfg.resolution = j.value("resolution", 256);
    if (cfg.resolution < 16 || cfg.resolution > 4096)
      throw config_error("resolution out of range");
    cfg.seed = j.value("seed", 1ULL);
    return cfg;
  } catch (const json::exception& e) {
    throw config_error(std::string("job config: ") + e.what());
  }
}

JobConfig load_job(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open job config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str());
}

void run_command(const std::string& command, const JobConfig& cfg,
                 const CommandOptions& opt) {
  if (cfg.w_grid.empty() && command == "homotopy-trace") {
    JobConfig with_default = cfg;
    for (int j = 0; j <= 10; ++j) with_default.w_grid.push_back(0.1 * j);
    run_command(command, with_default, opt);
    return;
  }

  if (command == "essential-spectrum") {
    OperatorSum el = resolve_element(cfg);
    SpectrumReport rep = essential_spectrum(el, cfg.grid_size);
    std::printf(
        "essential spectrum: %zu whisker + %zu circle samples, tail bound %s, "
        "max gap %s\n",
        rep.whisker_samples.size(), rep.circle_samples.size(),
        format_double(rep.tail_bound).c_str(),
        format_double(rep.max_gap).c_str());
    write_outputs(opt, csv_essential_spectrum(rep), svg_spectrum(rep));
    return;
  }
  if (command == "spectrum") {
    OperatorSum el = resolve_element(cfg);
    SpectrumReport rep = spectrum(el, cfg.resolution, cfg.grid_size);
    std::size_t in_spec = 0;
    for (const auto& c : rep.components)
      if (c.index != 0) ++in_spec;
    std::printf(
        "spectrum: %zu complement components, %zu with nonzero index\n",
        rep.components.size(), in_spec);
    write_outputs(opt, csv_spectrum(rep), svg_spectrum(rep));
    return;
  }
  if (command == "index") {
    OperatorSum el = resolve_element(cfg);
    SpectrumReport ess = essential_spectrum(el, cfg.grid_size);
    int idx = fredholm_index(el, ess, cfg.lambda, cfg.grid_size);
    double dist = essential_distance(ess, cfg.lambda);
    std::printf("index at (%s, %s): %d (distance %s, margin %s)\n",
                format_double(cfg.lambda.real()).c_str(),
                format_double(cfg.lambda.imag()).c_str(), idx,
                format_double(dist).c_str(),
                format_double(fredholm_margin(ess)).c_str());
    write_outputs(opt, csv_index(cfg.lambda, idx, dist, fredholm_margin(ess)),
                  "");
    return;
  }
  if (command == "invertible") {
    OperatorSum el = resolve_element(cfg);
    InvertibilityVerdict v = is_invertible(el, cfg.lambda, cfg.grid_size);
    std::printf("invertible at (%s, %s): %s%s\n",
                format_double(cfg.lambda.real()).c_str(),
                format_double(cfg.lambda.imag()).c_str(),
                v.invertible ? "yes" : "no",
                v.fredholm ? "" : " (not certifiably Fredholm)");
    write_outputs(opt, csv_verdict(cfg.lambda, v), "");
    return;
  }
  if (command == "homotopy-trace") {
    OperatorSum el = resolve_element(cfg);
    HomotopyTrace trace =
        homotopy_trace(el, cfg.lambda, cfg.w_grid, cfg.grid_size);
    std::printf("homotopy trace: %zu stops, index %s, containment %s\n",
                trace.rows.size(),
                trace.index_constant ? "constant" : "NOT CONSTANT",
                trace.containment_ok ? "ok" : "VIOLATED");
    write_outputs(opt, csv_homotopy(trace), "");
    if (!trace.index_constant || !trace.containment_ok)
      throw consistency_error("homotopy trace violates deformation invariants");
    return;
  }
  if (command == "compose") {
    if (!cfg.has_map) throw config_error("compose needs a \"map\"");
    SeriesResult series = series_element(cfg.map);
    SpectrumReport rep = essential_spectrum(series.element, cfg.grid_size);
    DiscMatrixResult direct = disc_matrix_direct(cfg.map, cfg.trunc);
    std::vector<Complex> eigs = eigenvalues(direct.matrix);
    std::printf(
        "compose: alpha %s, ratio %s, tail bound %s, weight condition %s, "
        "%d x %d direct matrix\n",
        format_double(series.alpha).c_str(),
        format_double(series.ratio).c_str(),
        format_double(series.tail_bound).c_str(),
        format_double(direct.weight_condition).c_str(), cfg.trunc.n,
        cfg.trunc.n);
    std::string csv;
    csv += "# alpha," + format_double(series.alpha) + "\n";
    csv += "# ratio," + format_double(series.ratio) + "\n";
    csv += "# weight_condition," + format_double(direct.weight_condition) +
           "\n";
    csv += csv_essential_spectrum(rep);
    csv += "# eigenvalues\n";
    csv += "eig,re,im\n";
    for (std::size_t j = 0; j < eigs.size(); ++j)
      csv += std::to_string(j) + "," + format_double(eigs[j].real()) + "," +
             format_double(eigs[j].imag()) + "\n";
    write_outputs(opt, csv, svg_spectrum(rep));
    return;
  }
  throw config_error("unknown command: " + command);
}

void run_validate(unsigned long long seed) {
  // quadrature: orthonormality of the half-line basis under the rule
  {
    const LaguerreRule& rule = laguerre_rule_cached(512);
    std::vector<double> table = laguerre_table(rule, 64);
    double worst = 0.0;
    for (int a = 0; a < 64; a += 7)
      for (int b = a; b < 64; b += 9) {
        double s = 0.0;
        for (int i = 0; i < rule.q; ++i)
          s += rule.weights[static_cast<std::size_t>(i)] *
               table[static_cast<std::size_t>(a) * rule.q + i] *
               table[static_cast<std::size_t>(b) * rule.q + i];
        worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
      }
    if (!(worst < 1e-9))
      throw consistency_error("validate: quadrature orthonormality error " +
                              format_double(worst));
    std::printf("ok: quadrature orthonormality (worst %s)\n",
                format_double(worst).c_str());
  }

  // phase convention between the line and half-line pictures
  {
    TruncationConfig cfg;
    cfg.n = 8;
    cfg.q = 32;
    verify_phase_convention(cfg);
    std::printf("ok: fourier phase convention\n");
  }

  // structural invariants on seeded random elements
  {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 5; ++trial) {
      OperatorSum el = random_element(rng);
      SpectrumReport ess = essential_spectrum(el);
      Complex lambda = random_fredholm_point(rng, ess);
      EquivalenceReport eq = check_limit_equivalence(el, lambda);
      if (!eq.agree)
        throw consistency_error(
            "validate: element and limit operator verdicts disagree");
    }
    std::printf("ok: limit-operator verdict agreement (5 elements)\n");
  }

  // byte-stable serialization
  {
    OperatorSum el;
    el.tm_terms.push_back({LineSymbol::cayley_power(1),
                           MultiplierSymbol::constant(1.0)});
    std::string a = csv_essential_spectrum(essential_spectrum(el));
    std::string b = csv_essential_spectrum(essential_spectrum(el));
    if (a != b)
      throw consistency_error("validate: serialization is not deterministic");
    std::printf("ok: deterministic serialization\n");
  }
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const config_error*>(&e)) return 2;
  if (dynamic_cast<const symbol_class_error*>(&e)) return 3;
  if (dynamic_cast<const resolution_error*>(&e)) return 4;
  if (dynamic_cast<const consistency_error*>(&e)) return 5;
  return 1;
}

}  // namespace hardyspec

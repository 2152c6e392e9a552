// Command-line front end: closed-form radii, scenario verification,
// parameter sweeps to CSV, and class/lemma checks.
//
// Exit codes: 0 success/pass, 1 usage or I/O error, 2 check failed,
// 3 verification inconclusive.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gft/json_io.hpp"

namespace {

using namespace gft;

struct Range {
  double start, stop, step;
};

// "start:stop:step" with start > 0, step > 0, stop <= 1e6.
Range parse_range(const std::string& s) {
  Range r{};
  char extra;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &r.start, &r.stop, &r.step, &extra) != 3)
    throw CLI::ValidationError("range", "expected start:stop:step, got '" + s + "'");
  if (r.start <= 0.0 || r.step <= 0.0 || r.stop > 1e6 || r.stop < r.start)
    throw CLI::ValidationError("range",
                               "need start > 0, step > 0, start <= stop <= 1e6");
  return r;
}

FormulaId formula_from_string(const std::string& s) {
  if (s == "thm21") return FormulaId::thm21;
  if (s == "cor_convex") return FormulaId::cor_convex;
  if (s == "thm22") return FormulaId::thm22;
  if (s == "thm23") return FormulaId::thm23;
  if (s == "thm24") return FormulaId::thm24;
  if (s == "cor25") return FormulaId::cor25;
  if (s == "thm26") return FormulaId::thm26;
  throw CLI::ValidationError("--formula", "unknown formula '" + s + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file '" + out_path + "'");
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radius-of-convexity toolkit for integral operators on the unit disk"};
  app.require_subcommand(1);

  std::string formula_name, variant_name = "rederived";
  std::string scenario_path, out_path, format = "json", function_name, class_name;
  std::string m_spec, n_spec = "0", alpha_spec = "1", beta_spec = "1", xi_spec = "0";
  double fn_param = 0.0, tol = 1e-5;
  int samples = 4096;
  int seed = 0;

  auto add_formula_flags = [&](CLI::App* cmd, bool m_required) {
    cmd->add_option("--formula", formula_name,
                    "thm21|cor_convex|thm22|thm23|thm24|cor25|thm26")
        ->required();
    cmd->add_option("--alpha", alpha_spec, "order of the linear invariant family");
    cmd->add_option("--beta", beta_spec, "Ozaki class parameter");
    cmd->add_option("--xi", xi_spec, "starlike order");
    auto* m = cmd->add_option("--M", m_spec, "bound on sum |gamma_i|");
    if (m_required) m->required();
    cmd->add_option("--N", n_spec, "bound on sum |lambda_j|");
    cmd->add_option("--variant", variant_name, "paper|rederived")
        ->check(CLI::IsMember({"paper", "rederived"}));
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };

  CLI::App* radius_cmd = app.add_subcommand("radius", "print a closed-form radius");
  add_formula_flags(radius_cmd, true);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verify a scenario against a claimed radius");
  add_formula_flags(verify_cmd, false);
  verify_cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  verify_cmd->add_option("--samples", samples, "circle samples per radius");
  verify_cmd->add_option("--tol", tol, "empirical-radius bisection tolerance");
  verify_cmd->add_option("--seed", seed, "seed for randomized settings (reserved)");
  verify_cmd->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "sweep one parameter, emit CSV radii");
  add_formula_flags(sweep_cmd, true);

  CLI::App* check_cmd =
      app.add_subcommand("check", "class membership / lemma check for a catalog function");
  check_cmd->add_option("--function", function_name, "catalog function name")->required();
  check_cmd->add_option("--param", fn_param, "catalog function parameter");
  check_cmd->add_option("--class", class_name, "lif|convex|univalent|ozaki|starlike")
      ->required();
  check_cmd->add_option("--alpha", alpha_spec, "lif class order");
  check_cmd->add_option("--beta", beta_spec, "Ozaki class parameter");
  check_cmd->add_option("--xi", xi_spec, "starlike order");
  check_cmd->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    auto scalar = [](const std::string& s, const char* flag) {
      if (s.find(':') != std::string::npos)
        throw std::runtime_error(std::string("flag ") + flag +
                                 ": range spec only allowed in sweep mode");
      return std::stod(s);
    };

    if (radius_cmd->parsed() || verify_cmd->parsed()) {
      FormulaSpec spec;
      spec.id = formula_from_string(formula_name);
      spec.alpha = scalar(alpha_spec, "--alpha");
      spec.beta = scalar(beta_spec, "--beta");
      spec.xi = scalar(xi_spec, "--xi");
      spec.N = scalar(n_spec, "--N");
      spec.variant = variant_name == "paper" ? Variant::paper : Variant::rederived;

      if (radius_cmd->parsed()) {
        spec.M = scalar(m_spec, "--M");
        emit(radius_result_to_json(radius_for(spec)).dump() + "\n", out_path);
        return 0;
      }

      std::ifstream is(scenario_path);
      if (!is) {
        std::cerr << "error: cannot open scenario file '" << scenario_path << "'\n";
        return 1;
      }
      json j;
      try {
        j = json::parse(is);
      } catch (const json::parse_error& e) {
        std::cerr << "error: malformed scenario JSON: " << e.what() << "\n";
        return 1;
      }
      AnnotatedScenario as = scenario_from_json(j);
      spec.M = m_spec.empty() ? as.scenario.M : scalar(m_spec, "--M");
      if (!verify_cmd->count("--N")) spec.N = as.scenario.N;
      RadiusResult claim = radius_for(spec);
      VerifierSettings vs;
      vs.n_samples = samples;
      vs.bisect_tol = tol;
      VerificationReport rep = verify_scenario(as.scenario, claim, spec, as.f_classes,
                                               as.g_classes, vs, scenario_path);
      emit(report_to_json(rep).dump(2) + "\n", out_path);
      if (rep.verdict == "pass") return 0;
      if (rep.verdict == "fail") return 2;
      return 3;
    }

    if (sweep_cmd->parsed()) {
      FormulaSpec spec;
      spec.id = formula_from_string(formula_name);
      spec.variant = variant_name == "paper" ? Variant::paper : Variant::rederived;
      std::string* specs[] = {&m_spec, &n_spec, &alpha_spec, &beta_spec, &xi_spec};
      double* targets[] = {&spec.M, &spec.N, &spec.alpha, &spec.beta, &spec.xi};
      int range_idx = -1;
      for (int i = 0; i < 5; ++i) {
        if (specs[i]->find(':') != std::string::npos) {
          if (range_idx >= 0)
            throw std::runtime_error("sweep: exactly one parameter may be a range");
          range_idx = i;
        } else {
          *targets[i] = std::stod(*specs[i]);
        }
      }
      if (range_idx < 0)
        throw std::runtime_error("sweep: one parameter must be a start:stop:step range");
      const Range range = parse_range(*specs[range_idx]);
      std::ostringstream csv;
      csv << "param,radius,quadratic_a,quadratic_b,quadratic_c\n";
      char buf[160];
      for (double v = range.start; v <= range.stop + 1e-12; v += range.step) {
        *targets[range_idx] = v;
        const RadiusResult r = radius_for(spec);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", v, r.radius,
                      r.quadratic[0], r.quadratic[1], r.quadratic[2]);
        csv << buf;
      }
      emit(csv.str(), out_path);
      return 0;
    }

    if (check_cmd->parsed()) {
      FunctionHandle f =
          FunctionHandle::catalog(catalog_name_from_string(function_name), fn_param);
      ClassSpec cls{class_tag_from_string(class_name), 0.0};
      if (cls.tag == ClassTag::lif) cls.parameter = std::stod(alpha_spec);
      if (cls.tag == ClassTag::ozaki) cls.parameter = std::stod(beta_spec);
      if (cls.tag == ClassTag::starlike) cls.parameter = std::stod(xi_spec);
      MembershipReport rep = check_class_membership(f, cls);
      json j{{"function", function_name},
             {"class", class_name},
             {"parameter", cls.parameter},
             {"pass", rep.pass},
             {"worst_margin", rep.worst_margin},
             {"label", rep.label}};
      emit(j.dump(2) + "\n", out_path);
      return rep.pass ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

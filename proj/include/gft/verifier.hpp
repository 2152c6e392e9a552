#pragma once

// Empirical verification layer: global minimization of Re Q on circles,
// empirical convexity radius, the U_alpha log-derivative inequality and
// class-membership checks, order estimation, and the scenario-level verdict.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "gft/catalog.hpp"
#include "gft/operators.hpp"
#include "gft/radii.hpp"

namespace gft {

struct VerifierSettings {
  int n_samples = 4096;
  double refine_tol = 1e-9;      // angular tolerance of the circle minimum
  double radius_tolerance = 1e-4;
  double value_tolerance = 1e-6;
  double bisect_tol = 1e-5;      // radial tolerance of the empirical radius
};

struct CircleMin {
  double value;      // min over the circle of Re Q
  double arg_theta;  // smallest angle attaining the minimum
  double r;
};

namespace detail {

// Golden-section minimization on [lo, hi]; assumes a bracket around a local
// minimum. Returns {theta, value}.
template <class Fn>
std::pair<double, double> golden_min(Fn&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// Uniform sampling followed by golden-section refinement around the three
// best local-minimum brackets; ties broken toward the lowest sample index.
template <class Fn>
CircleMin min_on_circle(Fn&& re_q, double r, int n_samples, double refine_tol) {
  const double two_pi = 2.0 * std::acos(-1.0);
  std::vector<double> vals(static_cast<size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double theta = two_pi * k / n_samples;
    try {
      vals[static_cast<size_t>(k)] = re_q(theta);
    } catch (const std::exception& e) {
      throw EvaluationFailure(std::string("min_re_on_circle: Q failed: ") + e.what(),
                              theta);
    }
  }
  // Local minima in the cyclic sample sequence.
  std::vector<int> minima;
  for (int k = 0; k < n_samples; ++k) {
    const double prev = vals[static_cast<size_t>((k + n_samples - 1) % n_samples)];
    const double next = vals[static_cast<size_t>((k + 1) % n_samples)];
    if (vals[static_cast<size_t>(k)] <= prev && vals[static_cast<size_t>(k)] <= next)
      minima.push_back(k);
  }
  std::stable_sort(minima.begin(), minima.end(), [&](int i, int j) {
    return vals[static_cast<size_t>(i)] < vals[static_cast<size_t>(j)];
  });
  if (minima.size() > 3) minima.resize(3);

  double best_val = vals[0];
  double best_theta = 0.0;
  for (int k = 1; k < n_samples; ++k) {
    if (vals[static_cast<size_t>(k)] < best_val) {
      best_val = vals[static_cast<size_t>(k)];
      best_theta = two_pi * k / n_samples;
    }
  }
  for (int idx : minima) {
    const double lo = two_pi * (idx - 1) / n_samples;
    const double hi = two_pi * (idx + 1) / n_samples;
    auto [theta, val] = golden_min(re_q, lo, hi, refine_tol);
    if (theta < 0.0) theta += two_pi;
    if (theta >= two_pi) theta -= two_pi;
    if (val < best_val || (val == best_val && theta < best_theta)) {
      best_val = val;
      best_theta = theta;
    }
  }
  return CircleMin{best_val, best_theta, r};
}

}  // namespace detail

inline CircleMin min_re_on_circle(const Scenario& s, double r, int n_samples = 4096,
                                  double refine_tol = 1e-9) {
  if (r <= 0.0 || r >= 1.0) throw BadParameter("min_re_on_circle: need 0 < r < 1");
  if (n_samples < 256) throw BadParameter("min_re_on_circle: need n_samples >= 256");
  auto re_q = [&](double theta) {
    return convexity_functional(s, std::polar(r, theta)).real();
  };
  return detail::min_on_circle(re_q, r, n_samples, refine_tol);
}

struct EmpiricalRadius {
  double value;
  bool cap_reached;  // no sign change found up to the 0.995 cap
};

// Largest r with min_{|z|=r} Re Q >= 0: coarse scan in steps of 0.01 up to the
// 0.995 cap, then bisection inside the bracketing cell.  A full scan is used
// because the circle minimum need not be monotone in r.
inline EmpiricalRadius empirical_convexity_radius(const Scenario& s, double tol,
                                                  const VerifierSettings& vs = {}) {
  std::vector<double> grid;
  for (double r = 0.01; r < 0.99 + 1e-12; r += 0.01) grid.push_back(r);
  grid.push_back(0.995);
  std::vector<double> mins(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    mins[i] = min_re_on_circle(s, grid[i], vs.n_samples, vs.refine_tol).value;
  // largest grid radius still nonnegative
  int last_ok = -1;
  for (size_t i = 0; i < grid.size(); ++i)
    if (mins[i] >= 0.0) last_ok = static_cast<int>(i);
  if (last_ok == static_cast<int>(grid.size()) - 1) return {0.995, true};
  double lo = last_ok < 0 ? 1e-6 : grid[static_cast<size_t>(last_ok)];
  double hi = grid[static_cast<size_t>(last_ok + 1)];
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (min_re_on_circle(s, mid, vs.n_samples, vs.refine_tol).value >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return {0.5 * (lo + hi), false};
}

struct LemmaCheckRow {
  double r;
  double min_slack;  // min over angles of RHS - LHS; negative means violation
  double theta_at_min;
};

struct LemmaCheckReport {
  bool pass = true;
  double worst_slack = std::numeric_limits<double>::infinity();
  std::vector<LemmaCheckRow> rows;
};

// |z f''/f' - 2|z|^2/(1-|z|^2)| <= 2 alpha |z|/(1-|z|^2) on the given radii.
inline LemmaCheckReport check_lemma_lif(const FunctionHandle& f, double alpha,
                                        const std::vector<double>& r_grid,
                                        int n_angles = 512, double tol = 1e-9) {
  if (alpha < 1.0) throw BadParameter("check_lemma_lif: need alpha >= 1");
  const double two_pi = 2.0 * std::acos(-1.0);
  LemmaCheckReport rep;
  for (double r : r_grid) {
    if (r <= 0.0 || r >= 1.0) throw BadParameter("check_lemma_lif: radii in (0,1)");
    const double centre = 2.0 * r * r / (1.0 - r * r);
    const double rhs = 2.0 * alpha * r / (1.0 - r * r);
    LemmaCheckRow row{r, std::numeric_limits<double>::infinity(), 0.0};
    for (int k = 0; k < n_angles; ++k) {
      const double theta = two_pi * k / n_angles;
      const cplx z = std::polar(r, theta);
      const double lhs = std::abs(logderiv_f(f, z) - centre);
      const double slack = rhs - lhs;
      if (slack < row.min_slack) {
        row.min_slack = slack;
        row.theta_at_min = theta;
      }
    }
    rep.worst_slack = std::min(rep.worst_slack, row.min_slack);
    rep.rows.push_back(row);
  }
  rep.pass = rep.worst_slack >= -tol;
  return rep;
}

struct GridSpec {
  int n_radii = 24;
  int n_angles = 96;
  double r_max = 0.99;
};

struct MembershipReport {
  bool pass = false;
  double worst_margin = 0.0;  // min over the grid of the defining inequality margin
  std::string label;          // "verified on compact exhaustion" or "necessary-only"
  ClassSpec spec{ClassTag::convex, 0.0};
};

// Evaluates the class's defining inequality on a polar grid.  lif and
// univalent have no sufficient pointwise criterion; for those the Lemma
// inequality is checked instead and the report is labeled necessary-only.
inline MembershipReport check_class_membership(const FunctionHandle& f,
                                               const ClassSpec& c,
                                               const GridSpec& grid = {}) {
  c.validate();
  if (grid.r_max > 0.99 + 1e-12)
    throw BadParameter("check_class_membership: grid radii capped at 0.99");
  MembershipReport rep;
  rep.spec = c;
  if (c.tag == ClassTag::lif || c.tag == ClassTag::univalent) {
    const double alpha = c.tag == ClassTag::lif ? c.parameter : 2.0;
    std::vector<double> radii;
    for (int i = 1; i <= grid.n_radii; ++i)
      radii.push_back(grid.r_max * i / grid.n_radii);
    LemmaCheckReport lem = check_lemma_lif(f, alpha, radii, grid.n_angles);
    rep.pass = lem.pass;
    rep.worst_margin = lem.worst_slack;
    rep.label = "necessary-only";
    return rep;
  }
  const double two_pi = 2.0 * std::acos(-1.0);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid.n_radii; ++i) {
    const double r = grid.r_max * i / grid.n_radii;
    for (int k = 0; k < grid.n_angles; ++k) {
      const cplx z = std::polar(r, two_pi * k / grid.n_angles);
      double margin = 0.0;
      switch (c.tag) {
        case ClassTag::starlike:
          margin = (starlike_term(f, z) + 1.0).real() - c.parameter;
          break;
        case ClassTag::convex:
          margin = (1.0 + logderiv_f(f, z)).real();
          break;
        case ClassTag::ozaki:
          margin = 1.0 + c.parameter / 2.0 - (1.0 + logderiv_f(f, z)).real();
          break;
        default:
          break;
      }
      worst = std::min(worst, margin);
    }
  }
  rep.worst_margin = worst;
  rep.pass = worst > 0.0;
  rep.label = "verified on compact exhaustion";
  return rep;
}

// Grid lower bound on ord f = sup |a2(F_phi)| over disk automorphisms.
inline double estimate_order(const FunctionHandle& f, double a_max = 0.99,
                             int grid = 64) {
  if (a_max <= 0.0 || a_max >= 1.0)
    throw BadParameter("estimate_order: need 0 < a_max < 1");
  const double two_pi = 2.0 * std::acos(-1.0);
  double best = 0.0;
  for (int i = 1; i <= grid; ++i) {
    const double rho = a_max * i / grid;
    for (int j = 0; j < grid; ++j) {
      const cplx a = std::polar(rho, two_pi * j / grid);
      for (int t = 0; t < grid; ++t) {
        const double theta = two_pi * t / grid;
        best = std::max(best, std::abs(invariance_a2(f, MobiusParams{a, theta})));
      }
    }
  }
  return best;
}

struct ProfileCheckRow {
  double r;
  double min_re_q;
  double profile_value;
  bool pass;
};

struct VerificationReport {
  std::string scenario_id;
  double closed_form_radius = 0.0;
  double empirical_radius = 0.0;
  bool empirical_cap_reached = false;
  std::vector<ProfileCheckRow> profile_check;
  std::string verdict;  // pass | fail | inconclusive
  std::string diagnostic;
  long samples_used = 0;
  double wall_time = 0.0;
};

// Full theorem-instance verdict: class checks, empirical radius against the
// claim, and profile domination at four interior radii.
inline VerificationReport verify_scenario(const Scenario& s, const RadiusResult& claim,
                                          const FormulaSpec& formula,
                                          const std::vector<ClassSpec>& f_classes,
                                          const std::vector<ClassSpec>& g_classes,
                                          const VerifierSettings& vs = {},
                                          const std::string& scenario_id = "") {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.scenario_id = scenario_id;
  rep.closed_form_radius = claim.radius;
  try {
    s.validate();
    if (f_classes.size() != s.fs.size() || g_classes.size() != s.gs.size())
      throw BadParameter("verify_scenario: class annotation count mismatch");
    for (size_t i = 0; i < s.fs.size(); ++i) {
      MembershipReport m = check_class_membership(s.fs[i], f_classes[i]);
      if (!m.pass) {
        rep.verdict = "inconclusive";
        rep.diagnostic = "f[" + std::to_string(i) + "] failed its class check (" +
                         m.label + ")";
        return rep;
      }
    }
    for (size_t j = 0; j < s.gs.size(); ++j) {
      MembershipReport m = check_class_membership(s.gs[j], g_classes[j]);
      if (!m.pass) {
        rep.verdict = "inconclusive";
        rep.diagnostic = "g[" + std::to_string(j) + "] failed its class check";
        return rep;
      }
    }

    EmpiricalRadius emp = empirical_convexity_radius(s, vs.bisect_tol, vs);
    rep.empirical_radius = emp.value;
    rep.empirical_cap_reached = emp.cap_reached;
    rep.samples_used += static_cast<long>(vs.n_samples) * 100;

    bool profiles_ok = true;
    for (double frac : {0.25, 0.5, 0.75, 0.9}) {
      const double r = frac * claim.radius;
      if (r <= 0.0) continue;
      CircleMin cm = min_re_on_circle(s, r, vs.n_samples, vs.refine_tol);
      rep.samples_used += vs.n_samples;
      const double prof = lower_bound_profile(formula, r);
      const bool ok = cm.value >= prof - vs.value_tolerance;
      profiles_ok = profiles_ok && ok;
      rep.profile_check.push_back({r, cm.value, prof, ok});
    }

    const bool radius_ok =
        rep.empirical_radius >= claim.radius - vs.radius_tolerance;
    rep.verdict = radius_ok && profiles_ok ? "pass" : "fail";
  } catch (const std::exception& e) {
    rep.verdict = "inconclusive";
    rep.diagnostic = e.what();
  }
  rep.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace gft

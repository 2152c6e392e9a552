#pragma once

// The integral operators
//   F(z) = int_0^z prod_i (f_i'(t))^{gamma_i} dt
//   J(z) = int_0^z prod_i (f_i'(t))^{gamma_i} prod_j (g_j(t)/t)^{lambda_j} dt
// built as truncated power series, plus the convexity functional
//   Q(z) = 1 + z J''/J' = 1 + sum_i gamma_i z f_i''/f_i'
//                           + sum_j lambda_j (z g_j'/g_j - 1)
// evaluated directly from the log-derivative decomposition, and an adaptive
// quadrature cross-check of the same integral along the segment [0, z].

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <vector>

#include "gft/catalog.hpp"
#include "gft/errors.hpp"
#include "gft/power_series.hpp"

namespace gft {

struct Scenario {
  std::vector<FunctionHandle> fs;
  std::vector<cplx> gammas;
  std::vector<FunctionHandle> gs;
  std::vector<cplx> lambdas;
  double M = 0.0;
  double N = 0.0;

  void validate() const {
    if (fs.size() != gammas.size())
      throw BadParameter("Scenario: fs/gammas length mismatch");
    if (gs.size() != lambdas.size())
      throw BadParameter("Scenario: gs/lambdas length mismatch");
    double sg = 0.0;
    for (const cplx& g : gammas) sg += std::abs(g);
    if (sg > M + 1e-12) throw BadParameter("Scenario: sum |gamma_i| exceeds M");
    double sl = 0.0;
    for (const cplx& l : lambdas) sl += std::abs(l);
    if (sl > N + 1e-12) throw BadParameter("Scenario: sum |lambda_j| exceeds N");
    if (M < 0.0 || N < 0.0) throw BadParameter("Scenario: M, N must be >= 0");
    for (const FunctionHandle& g : gs) {
      if (!g.is_catalog() && !g.series(2).is_normalized())
        throw BadParameter("Scenario: g_j must satisfy g(0)=0, g'(0)=1");
    }
  }
};

struct OperatorSeries {
  PowerSeries series;
  Scenario scenario;
};

// z f''(z) / f'(z), the convexity log-derivative of a single function.
inline cplx logderiv_f(const FunctionHandle& f, cplx z) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("logderiv_f: |z| >= 1");
  const cplx fp = f.df(z);
  if (std::abs(fp) <= 1e-14) throw CriticalPoint("logderiv_f: f'(z) vanishes");
  return z * f.d2f(z) / fp;
}

// z g'(z)/g(z) - 1, with the removable singularity at 0 filled by its limit.
inline cplx starlike_term(const FunctionHandle& g, cplx z) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("starlike_term: |z| >= 1");
  if (z == cplx{0.0}) return cplx{0.0};
  const cplx gz = g.f(z);
  if (std::abs(gz) <= 1e-14) throw ZeroOfG("starlike_term: g(z) vanishes");
  return z * g.df(z) / gz - 1.0;
}

// Q(z) = 1 + z J''/J'; Q(0) = 1 for every valid scenario.
inline cplx convexity_functional(const Scenario& s, cplx z) {
  cplx q{1.0};
  for (size_t i = 0; i < s.fs.size(); ++i)
    q += s.gammas[i] * logderiv_f(s.fs[i], z);
  for (size_t j = 0; j < s.gs.size(); ++j)
    q += s.lambdas[j] * starlike_term(s.gs[j], z);
  return q;
}

namespace detail {

// prod_i (f_i')^{gamma_i} * prod_j (g_j/z)^{lambda_j} as a series to order T.
inline PowerSeries integrand_series(const Scenario& s, int T) {
  PowerSeries prod = PowerSeries::one(T);
  for (size_t i = 0; i < s.fs.size(); ++i) {
    if (s.gammas[i] == cplx{0.0}) continue;
    prod = series_multiply(
        prod, series_cpow(s.fs[i].derivative_series(T), s.gammas[i]));
  }
  for (size_t j = 0; j < s.gs.size(); ++j) {
    if (s.lambdas[j] == cplx{0.0}) continue;
    PowerSeries g = s.gs[j].series(T + 1);
    std::vector<cplx> shifted(g.coeffs.begin() + 1, g.coeffs.end());
    prod = series_multiply(
        prod, series_cpow(PowerSeries{std::move(shifted)}.truncated(T), s.lambdas[j]));
  }
  return prod;
}

}  // namespace detail

inline OperatorSeries build_F(const Scenario& s, int T) {
  s.validate();
  if (!s.gs.empty()) throw BadParameter("build_F: lambda part must be empty");
  Scenario only_f = s;
  return OperatorSeries{
      series_integrate_from_zero(detail::integrand_series(only_f, T)).truncated(T),
      std::move(only_f)};
}

inline OperatorSeries build_J(const Scenario& s, int T) {
  s.validate();
  return OperatorSeries{
      series_integrate_from_zero(detail::integrand_series(s, T)).truncated(T), s};
}

// Pointwise integrand with principal-branch powers; the value at t = 0 is 1.
inline cplx operator_integrand(const Scenario& s, cplx t) {
  cplx p{1.0};
  for (size_t i = 0; i < s.fs.size(); ++i) {
    if (s.gammas[i] == cplx{0.0}) continue;
    p *= std::pow(s.fs[i].df(t), s.gammas[i]);
  }
  for (size_t j = 0; j < s.gs.size(); ++j) {
    if (s.lambdas[j] == cplx{0.0}) continue;
    p *= t == cplx{0.0} ? cplx{1.0} : std::pow(s.gs[j].f(t) / t, s.lambdas[j]);
  }
  return p;
}

// Gauss-Kronrod integration of the operator integrand along [0, z];
// absolute error target 1e-10, interval-halving depth capped at 20.
inline cplx eval_operator_quadrature(const Scenario& s, cplx z) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("eval_operator_quadrature: |z| >= 1");
  s.validate();
  auto f = [&](double t) { return operator_integrand(s, t * z) * z; };
  double err = 0.0;
  cplx value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, 0.0, 1.0, 20, 1e-12, &err);
  if (err > 1e-10)
    throw QuadratureNoConverge("eval_operator_quadrature: refinement depth exhausted", err);
  return value;
}

}  // namespace gft

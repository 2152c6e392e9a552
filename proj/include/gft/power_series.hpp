#pragma once

// Truncated complex power series about z = 0.  The coefficient vector holds
// c_0 ... c_T; all arithmetic truncates at the larger of the operand orders
// (the shorter operand is zero-padded).

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

using cplx = std::complex<double>;

struct PowerSeries {
  std::vector<cplx> coeffs;  // coeffs[k] multiplies z^k

  PowerSeries() : coeffs{cplx{0.0}, cplx{0.0}} {}
  explicit PowerSeries(std::vector<cplx> c) : coeffs(std::move(c)) {
    if (coeffs.size() < 2) coeffs.resize(2, cplx{0.0});
  }

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  // f(0) = 0, f'(0) = 1: membership in the normalized analytic class.
  bool is_normalized(double tol = 1e-12) const {
    return std::abs(coeffs[0]) <= tol && std::abs(coeffs[1] - cplx{1.0}) <= tol;
  }

  bool all_finite() const {
    for (const cplx& c : coeffs)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
  }

  static PowerSeries constant(cplx c, int T) {
    std::vector<cplx> v(static_cast<size_t>(T) + 1, cplx{0.0});
    v[0] = c;
    return PowerSeries{std::move(v)};
  }

  static PowerSeries one(int T) { return constant(cplx{1.0}, T); }

  // The identity function z.
  static PowerSeries identity(int T) {
    std::vector<cplx> v(static_cast<size_t>(T) + 1, cplx{0.0});
    if (T >= 1) v[1] = cplx{1.0};
    return PowerSeries{std::move(v)};
  }

  PowerSeries truncated(int T) const {
    std::vector<cplx> v(coeffs.begin(),
                        coeffs.begin() + std::min<size_t>(coeffs.size(), static_cast<size_t>(T) + 1));
    v.resize(static_cast<size_t>(T) + 1, cplx{0.0});
    return PowerSeries{std::move(v)};
  }
};

namespace detail {
inline int common_order(const PowerSeries& u, const PowerSeries& v) {
  return std::max(u.order(), v.order());
}
inline cplx coeff_or_zero(const PowerSeries& u, int k) {
  return k <= u.order() ? u.coeffs[static_cast<size_t>(k)] : cplx{0.0};
}
}  // namespace detail

// Cauchy product truncated at the common order.
inline PowerSeries series_multiply(const PowerSeries& u, const PowerSeries& v) {
  const int T = detail::common_order(u, v);
  std::vector<cplx> w(static_cast<size_t>(T) + 1, cplx{0.0});
  for (int k = 0; k <= T; ++k) {
    cplx s{0.0};
    for (int j = 0; j <= k; ++j)
      s += detail::coeff_or_zero(u, j) * detail::coeff_or_zero(v, k - j);
    w[static_cast<size_t>(k)] = s;
  }
  return PowerSeries{std::move(w)};
}

// w with w * v = u up to the truncation order; v must have a unit constant term.
inline PowerSeries series_divide(const PowerSeries& u, const PowerSeries& v) {
  const cplx v0 = v.coeffs[0];
  if (std::abs(v0) <= 1e-14)
    throw DivisionByNonUnit("series_divide: |v0| <= 1e-14");
  const int T = detail::common_order(u, v);
  std::vector<cplx> w(static_cast<size_t>(T) + 1, cplx{0.0});
  for (int k = 0; k <= T; ++k) {
    cplx s = detail::coeff_or_zero(u, k);
    for (int j = 1; j <= k; ++j)
      s -= detail::coeff_or_zero(v, j) * w[static_cast<size_t>(k - j)];
    w[static_cast<size_t>(k)] = s / v0;
  }
  return PowerSeries{std::move(w)};
}

// Termwise power rule; drops the order by one.
inline PowerSeries series_differentiate(const PowerSeries& u) {
  const int T = u.order();
  std::vector<cplx> w(static_cast<size_t>(std::max(T, 2)), cplx{0.0});
  for (int k = 1; k <= T; ++k)
    w[static_cast<size_t>(k - 1)] = static_cast<double>(k) * u.coeffs[static_cast<size_t>(k)];
  return PowerSeries{std::move(w)};
}

// Antiderivative vanishing at 0; raises the order by one.
inline PowerSeries series_integrate_from_zero(const PowerSeries& u) {
  const int T = u.order();
  std::vector<cplx> w(static_cast<size_t>(T) + 2, cplx{0.0});
  for (int k = 0; k <= T; ++k)
    w[static_cast<size_t>(k + 1)] = u.coeffs[static_cast<size_t>(k)] / static_cast<double>(k + 1);
  return PowerSeries{std::move(w)};
}

// The unique analytic logarithm of a unit series (h0 = 1) with log 1 = 0.
// Recurrence from h' = L' h: L_k = h_k - (1/k) sum_{j=1}^{k-1} j L_j h_{k-j}.
inline PowerSeries series_log_unit(const PowerSeries& h) {
  if (std::abs(h.coeffs[0] - cplx{1.0}) > 1e-12)
    throw NotUnit("series_log_unit: constant term is not 1");
  const int T = h.order();
  std::vector<cplx> L(static_cast<size_t>(T) + 1, cplx{0.0});
  for (int k = 1; k <= T; ++k) {
    cplx s{0.0};
    for (int j = 1; j < k; ++j)
      s += static_cast<double>(j) * L[static_cast<size_t>(j)] *
           detail::coeff_or_zero(h, k - j);
    L[static_cast<size_t>(k)] = detail::coeff_or_zero(h, k) - s / static_cast<double>(k);
  }
  return PowerSeries{std::move(L)};
}

// exp of a series; E0 = exp(u0), then k E_k = sum_{j=1}^{k} j u_j E_{k-j}.
inline PowerSeries series_exp(const PowerSeries& u) {
  const int T = u.order();
  std::vector<cplx> E(static_cast<size_t>(T) + 1, cplx{0.0});
  E[0] = std::exp(u.coeffs[0]);
  for (int k = 1; k <= T; ++k) {
    cplx s{0.0};
    for (int j = 1; j <= k; ++j)
      s += static_cast<double>(j) * u.coeffs[static_cast<size_t>(j)] * E[static_cast<size_t>(k - j)];
    E[static_cast<size_t>(k)] = s / static_cast<double>(k);
  }
  return PowerSeries{std::move(E)};
}

// h^gamma with the branch fixed by h0^gamma via the principal logarithm and
// the analytic logarithm of h/h0.  gamma = 1 returns h unchanged.
inline PowerSeries series_cpow(const PowerSeries& h, cplx gamma) {
  const int T = h.order();
  if (gamma == cplx{0.0}) return PowerSeries::one(T);
  if (gamma == cplx{1.0}) return h;
  const cplx h0 = h.coeffs[0];
  if (std::abs(h0) <= 1e-14)
    throw DivisionByNonUnit("series_cpow: |h0| <= 1e-14");
  PowerSeries unit = series_divide(h, PowerSeries::constant(h0, T));
  PowerSeries L = series_log_unit(unit);
  for (cplx& c : L.coeffs) c *= gamma;
  PowerSeries w = series_exp(L);
  const cplx scale = std::pow(h0, gamma);
  for (cplx& c : w.coeffs) c *= scale;
  return w;
}

// Crude geometric bound on the discarded tail at |z| = rho.
inline double series_tail_estimate(const PowerSeries& u, double rho) {
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  const int T = u.order();
  return std::abs(u.coeffs[static_cast<size_t>(T)]) * std::pow(rho, T) / (1.0 - rho);
}

// Horner evaluation of the truncated polynomial; |z| must be < 1.
inline cplx series_eval(const PowerSeries& u, cplx z) {
  if (std::abs(z) >= 1.0)
    throw OutsideDisk("series_eval: |z| >= 1");
  cplx acc{0.0};
  for (auto it = u.coeffs.rbegin(); it != u.coeffs.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

struct SeriesEval {
  cplx value;
  bool tail_warning;  // set when the tail bound exceeds 1e-8
};

inline SeriesEval series_eval_checked(const PowerSeries& u, cplx z) {
  cplx v = series_eval(u, z);
  return SeriesEval{v, series_tail_estimate(u, std::abs(z)) > 1e-8};
}

}  // namespace gft

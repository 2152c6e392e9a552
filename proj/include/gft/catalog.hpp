#pragma once

// Closed-form function catalog on the unit disk, all normalized (f(0) = 0,
// f'(0) = 1), with exact first and second derivatives and on-demand Taylor
// expansions.  Also the disk automorphisms and the renormalized second
// Taylor coefficient they induce.

#include <cmath>
#include <complex>
#include <string>

#include "gft/errors.hpp"
#include "gft/power_series.hpp"

namespace gft {

enum class CatalogName {
  identity,
  half_plane,         // z/(1-z)
  koebe,              // z/(1-z)^2
  starlike_extremal,  // z/(1-z)^{2(1-xi)}
  lif_extremal,       // [((1+z)/(1-z))^alpha - 1]/(2 alpha)
  ozaki_example,      // [1 - (1-z)^{beta+1}]/(beta+1)
};

inline std::string catalog_name_string(CatalogName n) {
  switch (n) {
    case CatalogName::identity: return "identity";
    case CatalogName::half_plane: return "half_plane";
    case CatalogName::koebe: return "koebe";
    case CatalogName::starlike_extremal: return "starlike_extremal";
    case CatalogName::lif_extremal: return "lif_extremal";
    case CatalogName::ozaki_example: return "ozaki_example";
  }
  return "?";
}

class FunctionHandle {
 public:
  static FunctionHandle catalog(CatalogName name, double param = 0.0) {
    switch (name) {
      case CatalogName::starlike_extremal:
        if (param < 0.0 || param >= 1.0)
          throw BadParameter("starlike_extremal: need 0 <= xi < 1");
        break;
      case CatalogName::lif_extremal:
        if (param < 1.0) throw BadParameter("lif_extremal: need alpha >= 1");
        break;
      case CatalogName::ozaki_example:
        if (param <= 0.0 || param > 1.0)
          throw BadParameter("ozaki_example: need 0 < beta <= 1");
        break;
      default:
        break;
    }
    FunctionHandle h;
    h.is_catalog_ = true;
    h.name_ = name;
    h.param_ = param;
    return h;
  }

  static FunctionHandle from_series(PowerSeries s) {
    FunctionHandle h;
    h.is_catalog_ = false;
    h.series_ = std::move(s);
    return h;
  }

  bool is_catalog() const { return is_catalog_; }
  CatalogName name() const { return name_; }
  double param() const { return param_; }
  // Backing series of a series-kind handle, at its stored truncation order.
  const PowerSeries& stored_series() const { return series_; }

  cplx f(cplx z) const {
    check_disk(z);
    if (!is_catalog_) return series_eval(series_, z);
    switch (name_) {
      case CatalogName::identity: return z;
      case CatalogName::half_plane: return z / (1.0 - z);
      case CatalogName::koebe: return z / ((1.0 - z) * (1.0 - z));
      case CatalogName::starlike_extremal: {
        const double p = 2.0 * (1.0 - param_);
        return z * std::pow(1.0 - z, -p);
      }
      case CatalogName::lif_extremal: {
        const double a = param_;
        return (std::pow((1.0 + z) / (1.0 - z), a) - 1.0) / (2.0 * a);
      }
      case CatalogName::ozaki_example: {
        const double b = param_;
        return (1.0 - std::pow(1.0 - z, b + 1.0)) / (b + 1.0);
      }
    }
    return {};
  }

  cplx df(cplx z) const {
    check_disk(z);
    if (!is_catalog_) return series_eval(series_differentiate(series_), z);
    switch (name_) {
      case CatalogName::identity: return cplx{1.0};
      case CatalogName::half_plane: return std::pow(1.0 - z, -2.0);
      case CatalogName::koebe: return (1.0 + z) * std::pow(1.0 - z, -3.0);
      case CatalogName::starlike_extremal: {
        const double p = 2.0 * (1.0 - param_);
        return (1.0 + (p - 1.0) * z) * std::pow(1.0 - z, -p - 1.0);
      }
      case CatalogName::lif_extremal: {
        const double a = param_;
        return std::pow(1.0 + z, a - 1.0) * std::pow(1.0 - z, -a - 1.0);
      }
      case CatalogName::ozaki_example: return std::pow(1.0 - z, param_);
    }
    return {};
  }

  cplx d2f(cplx z) const {
    check_disk(z);
    if (!is_catalog_)
      return series_eval(series_differentiate(series_differentiate(series_)), z);
    switch (name_) {
      case CatalogName::identity: return cplx{0.0};
      case CatalogName::half_plane: return 2.0 * std::pow(1.0 - z, -3.0);
      case CatalogName::koebe: return (4.0 + 2.0 * z) * std::pow(1.0 - z, -4.0);
      case CatalogName::starlike_extremal: {
        const double p = 2.0 * (1.0 - param_);
        return p * (2.0 + (p - 1.0) * z) * std::pow(1.0 - z, -p - 2.0);
      }
      case CatalogName::lif_extremal: {
        const double a = param_;
        return (2.0 * a + 2.0 * z) * std::pow(1.0 + z, a - 2.0) *
               std::pow(1.0 - z, -a - 2.0);
      }
      case CatalogName::ozaki_example:
        return -param_ * std::pow(1.0 - z, param_ - 1.0);
    }
    return {};
  }

  // Taylor expansion of f to order T.
  PowerSeries series(int T) const {
    if (!is_catalog_) return series_.truncated(T);
    switch (name_) {
      case CatalogName::identity: return PowerSeries::identity(T);
      case CatalogName::half_plane: {
        std::vector<cplx> c(static_cast<size_t>(T) + 1, cplx{1.0});
        c[0] = cplx{0.0};
        return PowerSeries{std::move(c)};
      }
      case CatalogName::koebe: {
        std::vector<cplx> c(static_cast<size_t>(T) + 1, cplx{0.0});
        for (int k = 1; k <= T; ++k) c[static_cast<size_t>(k)] = cplx{static_cast<double>(k)};
        return PowerSeries{std::move(c)};
      }
      case CatalogName::starlike_extremal: {
        // z * (1-z)^{-p} with binomial recurrence b_{k+1} = b_k (p+k)/(k+1)
        const double p = 2.0 * (1.0 - param_);
        std::vector<cplx> c(static_cast<size_t>(T) + 1, cplx{0.0});
        double b = 1.0;
        for (int k = 0; k + 1 <= T; ++k) {
          c[static_cast<size_t>(k + 1)] = cplx{b};
          b *= (p + k) / (k + 1.0);
        }
        return PowerSeries{std::move(c)};
      }
      case CatalogName::lif_extremal: {
        const double a = param_;
        PowerSeries one_plus = binom_series(a - 1.0, +1.0, T);
        PowerSeries one_minus = binom_series(-a - 1.0, -1.0, T);
        return series_integrate_from_zero(series_multiply(one_plus, one_minus))
            .truncated(T);
      }
      case CatalogName::ozaki_example:
        return series_integrate_from_zero(binom_series(param_, -1.0, T)).truncated(T);
    }
    return {};
  }

  // Taylor expansion of f' to order T (exact termwise for catalog entries).
  PowerSeries derivative_series(int T) const {
    return series_differentiate(series(T + 1));
  }

 private:
  // (1 + sign*z)^q as a series to order T.
  static PowerSeries binom_series(double q, double sign, int T) {
    std::vector<cplx> c(static_cast<size_t>(T) + 1, cplx{0.0});
    double b = 1.0;
    for (int k = 0; k <= T; ++k) {
      c[static_cast<size_t>(k)] = cplx{b};
      b *= sign * (q - k) / (k + 1.0);
    }
    return PowerSeries{std::move(c)};
  }

  static void check_disk(cplx z) {
    if (std::abs(z) >= 1.0) throw OutsideDisk("catalog evaluation: |z| >= 1");
  }

  bool is_catalog_ = true;
  CatalogName name_ = CatalogName::identity;
  double param_ = 0.0;
  PowerSeries series_;
};

struct MobiusParams {
  cplx a;        // |a| < 1 strictly
  double theta;  // rotation angle in radians

  MobiusParams(cplx a_, double theta_) : a(a_), theta(theta_) {
    if (std::abs(a) >= 1.0) throw BadParameter("MobiusParams: |a| >= 1");
  }

  cplx apply(cplx z) const {
    return std::exp(cplx{0.0, theta}) * (z + a) / (1.0 + std::conj(a) * z);
  }
  cplx d_at_zero() const {
    return std::exp(cplx{0.0, theta}) * (1.0 - std::norm(a));
  }
  cplx d2_at_zero() const { return -2.0 * std::conj(a) * d_at_zero(); }
};

// Second Taylor coefficient of the renormalization
// (f(phi(z)) - f(phi(0))) / (f'(phi(0)) phi'(0)).
// Differentiating twice at 0 gives
//   a2 = (1/2) (f''(b)/f'(b)) phi'(0) + (1/2) phi''(0)/phi'(0),  b = phi(0),
// and phi''(0)/phi'(0) = -2 conj(a).
inline cplx invariance_a2(const FunctionHandle& f, const MobiusParams& m) {
  const cplx b = m.apply(cplx{0.0});
  const cplx fp = f.df(b);
  if (std::abs(fp) <= 1e-14)
    throw CriticalPoint("invariance_a2: f'(phi(0)) vanishes");
  return 0.5 * (f.d2f(b) / fp) * m.d_at_zero() - std::conj(m.a);
}

}  // namespace gft

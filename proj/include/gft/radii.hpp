#pragma once

// Closed-form radii of convexity for the operator families, the lower-bound
// profiles whose positive roots define them, and a cancellation-free
// positive-root quadratic solver.

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "gft/errors.hpp"

namespace gft {

enum class FormulaId { thm21, cor_convex, thm22, thm23, thm24, cor25, thm26 };
enum class Variant { paper, rederived };

inline std::string variant_string(Variant v) {
  return v == Variant::paper ? "paper" : "rederived";
}

enum class ClassTag { lif, convex, univalent, ozaki, starlike };

struct ClassSpec {
  ClassTag tag;
  double parameter = 1.0;  // alpha for lif, beta for ozaki, xi for starlike
  bool override_range = false;

  void validate() const {
    switch (tag) {
      case ClassTag::lif:
        if (parameter < 1.0) throw BadParameter("ClassSpec: lif needs alpha >= 1");
        break;
      case ClassTag::ozaki:
        if (parameter <= 0.0 || (parameter > 1.0 && !override_range))
          throw BadParameter("ClassSpec: ozaki needs 0 < beta <= 1");
        break;
      case ClassTag::starlike:
        if (parameter < 0.0 || parameter >= 1.0)
          throw BadParameter("ClassSpec: starlike needs 0 <= xi < 1");
        break;
      default:
        break;
    }
  }
};

// Parameter bundle identifying one theorem instance.
struct FormulaSpec {
  FormulaId id = FormulaId::thm21;
  double alpha = 1.0;
  double beta = 1.0;
  double xi = 0.0;
  double M = 0.0;
  double N = 0.0;
  Variant variant = Variant::rederived;
};

struct RadiusResult {
  double radius = 1.0;
  std::string formula_id;
  std::array<double, 3> quadratic{0.0, 0.0, 0.0};  // a r^2 + b r + c
  double discriminant = 0.0;
  std::optional<Variant> variant;
  // Value of the closed-form expression as printed for thm24/cor25; kept for
  // auditing since it disagrees with the quadratic's positive root.
  std::optional<double> printed_value;
};

// Smallest positive root of a r^2 + b r + c, computed without subtractive
// cancellation: q = -(b + sign(b) sqrt(disc))/2, roots q/a and c/q.
inline double solve_quadratic_positive_root(double a, double b, double c) {
  if (a == 0.0) {
    if (b == 0.0) throw NoPositiveRoot("solve_quadratic: degenerate constant");
    const double r = -c / b;
    if (r <= 0.0) throw NoPositiveRoot("solve_quadratic: linear root not positive");
    return r;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) throw NoPositiveRoot("solve_quadratic: complex roots");
  const double s = b >= 0.0 ? 1.0 : -1.0;
  const double q = -(b + s * std::sqrt(disc)) / 2.0;
  double best = 0.0;
  bool found = false;
  for (double r : {q / a, q != 0.0 ? c / q : -b / a}) {
    if (r > 0.0 && (!found || r < best)) {
      best = r;
      found = true;
    }
  }
  if (!found) throw NoPositiveRoot("solve_quadratic: no positive real root");
  return best;
}

namespace detail {

inline RadiusResult from_quadratic(double a, double b, double c, std::string id) {
  RadiusResult res;
  res.quadratic = {a, b, c};
  res.discriminant = b * b - 4.0 * a * c;
  res.formula_id = std::move(id);
  res.radius = std::min(1.0, solve_quadratic_positive_root(a, b, c));
  return res;
}

}  // namespace detail

// Theorem family U_alpha: positive root of -(2M+1) r^2 - 2 alpha M r + 1.
inline RadiusResult radius_lif(double alpha, double M) {
  if (alpha < 1.0) throw BadParameter("radius_lif: need alpha >= 1");
  if (M < 0.0) throw BadParameter("radius_lif: need M >= 0");
  return detail::from_quadratic(-(2.0 * M + 1.0), -2.0 * alpha * M, 1.0, "thm21");
}

// Convex case (alpha = 1): radius 1/(2M+1).
inline RadiusResult radius_convex(double M) {
  if (M < 0.0) throw BadParameter("radius_convex: need M >= 0");
  RadiusResult res = detail::from_quadratic(-(2.0 * M + 1.0), -2.0 * M, 1.0, "cor_convex");
  res.radius = 1.0 / (2.0 * M + 1.0);
  return res;
}

// Univalent case: 1/(sqrt(4M^2+2M+1) + 2M), the alpha = 2 instance rationalized.
inline RadiusResult radius_univalent(double M) {
  if (M < 0.0) throw BadParameter("radius_univalent: need M >= 0");
  RadiusResult res = detail::from_quadratic(-(2.0 * M + 1.0), -4.0 * M, 1.0, "thm22");
  res.radius = 1.0 / (std::sqrt(4.0 * M * M + 2.0 * M + 1.0) + 2.0 * M);
  return res;
}

// Ozaki class G(beta): radius 1/(beta M + 1); the profile is linear in r.
inline RadiusResult radius_ozaki(double beta, double M, bool override_range = false) {
  if (beta <= 0.0 || (beta > 1.0 && !override_range))
    throw BadParameter("radius_ozaki: need 0 < beta <= 1");
  if (M < 0.0) throw BadParameter("radius_ozaki: need M >= 0");
  RadiusResult res;
  res.formula_id = "thm23";
  res.quadratic = {0.0, -(beta * M + 1.0), 1.0};
  res.discriminant = (beta * M + 1.0) * (beta * M + 1.0);
  res.radius = 1.0 / (beta * M + 1.0);
  return res;
}

namespace detail {

// The closed-form radius expression as printed for the mixed theorem.  For
// positive M, N it evaluates outside (0, 1); retained only as audit metadata.
inline double mixed_printed_expression(double alpha, double xi, double M, double N) {
  const double u = (xi - 1.0) * N - alpha * M;
  const double v = (xi - 1.0) * N - M - 1.0;
  const double disc = u * u - 2.0 * v;
  return (std::sqrt(disc) - (xi - 1.0) * N + alpha * M) / (2.0 * v);
}

}  // namespace detail

// Mixed family (f_i in U_alpha, g_j starlike of order xi).  Two variants:
//   paper:      -2[(1-xi)N + M + 1] r^2 - 2(alpha M + (1-xi)N) r + 1
//   rederived:  -[2(1-xi)N + 2M + 1] r^2 - 2(alpha M + (1-xi)N) r + 1
// The rederived leading coefficient is the tight sum of the two ingredient
// bounds and reduces to the U_alpha quadratic at N = 0.
inline RadiusResult radius_mixed(double alpha, double xi, double M, double N,
                                 Variant variant = Variant::rederived) {
  if (alpha < 1.0) throw BadParameter("radius_mixed: need alpha >= 1");
  if (xi < 0.0 || xi >= 1.0) throw BadParameter("radius_mixed: need 0 <= xi < 1");
  if (M < 0.0 || N < 0.0) throw BadParameter("radius_mixed: need M, N >= 0");
  const double lead = variant == Variant::paper
                          ? -2.0 * ((1.0 - xi) * N + M + 1.0)
                          : -(2.0 * (1.0 - xi) * N + 2.0 * M + 1.0);
  RadiusResult res = detail::from_quadratic(
      lead, -2.0 * (alpha * M + (1.0 - xi) * N), 1.0,
      variant == Variant::paper ? "thm24_paper" : "thm24_rederived");
  res.variant = variant;
  if (variant == Variant::paper)
    res.printed_value = detail::mixed_printed_expression(alpha, xi, M, N);
  return res;
}

// Corollary instance alpha = 1 (convex f_i).
inline RadiusResult radius_mixed_convex(double xi, double M, double N,
                                        Variant variant = Variant::rederived) {
  RadiusResult res = radius_mixed(1.0, xi, M, N, variant);
  res.formula_id = "cor25";
  return res;
}

// Mixed family with locally convex f_i of order beta.  The quadratic
// -[A+1] r^2 - A r + 1 with A = 2(1-xi)N + beta M factors as
// -([A+1] r - 1)(r + 1), so the radius is 1/(A + 1); both routes are
// computed and must agree to 1e-12.
inline RadiusResult radius_mixed_locally_convex(double beta, double xi, double M,
                                                double N,
                                                bool override_range = false) {
  if (beta <= 0.0 || (beta > 1.0 && !override_range))
    throw BadParameter("radius_mixed_locally_convex: need 0 < beta <= 1");
  if (xi < 0.0 || xi >= 1.0)
    throw BadParameter("radius_mixed_locally_convex: need 0 <= xi < 1");
  if (M < 0.0 || N < 0.0)
    throw BadParameter("radius_mixed_locally_convex: need M, N >= 0");
  const double A = 2.0 * (1.0 - xi) * N + beta * M;
  RadiusResult res = detail::from_quadratic(-(A + 1.0), -A, 1.0, "thm26");
  const double factored = 1.0 / (A + 1.0);
  if (std::abs(res.radius - factored) > 1e-12)
    throw BadParameter("radius_mixed_locally_convex: root/factorization mismatch");
  res.radius = factored;
  return res;
}

inline RadiusResult radius_for(const FormulaSpec& s) {
  switch (s.id) {
    case FormulaId::thm21: return radius_lif(s.alpha, s.M);
    case FormulaId::cor_convex: return radius_convex(s.M);
    case FormulaId::thm22: return radius_univalent(s.M);
    case FormulaId::thm23: return radius_ozaki(s.beta, s.M);
    case FormulaId::thm24: return radius_mixed(s.alpha, s.xi, s.M, s.N, s.variant);
    case FormulaId::cor25: return radius_mixed_convex(s.xi, s.M, s.N, s.variant);
    case FormulaId::thm26: return radius_mixed_locally_convex(s.beta, s.xi, s.M, s.N);
  }
  throw BadParameter("radius_for: unknown formula");
}

// Guaranteed lower bound on min_{|z|=r} Re Q for the formula instance; equals
// 1 at r = 0 and vanishes at the formula's radius.
inline double lower_bound_profile(const FormulaSpec& s, double r) {
  if (r < 0.0 || r >= 1.0) throw BadParameter("lower_bound_profile: need 0 <= r < 1");
  const double one_minus_r2 = 1.0 - r * r;
  switch (s.id) {
    case FormulaId::thm21:
      return (-(2.0 * s.M + 1.0) * r * r - 2.0 * s.alpha * s.M * r + 1.0) / one_minus_r2;
    case FormulaId::cor_convex:
      return (-(2.0 * s.M + 1.0) * r * r - 2.0 * s.M * r + 1.0) / one_minus_r2;
    case FormulaId::thm22:
      return (-(2.0 * s.M + 1.0) * r * r - 4.0 * s.M * r + 1.0) / one_minus_r2;
    case FormulaId::thm23:
      return 1.0 - s.beta * s.M * r / (1.0 - r);
    case FormulaId::thm24:
    case FormulaId::cor25: {
      const double alpha = s.id == FormulaId::cor25 ? 1.0 : s.alpha;
      const double lead = s.variant == Variant::paper
                              ? -2.0 * ((1.0 - s.xi) * s.N + s.M + 1.0)
                              : -(2.0 * (1.0 - s.xi) * s.N + 2.0 * s.M + 1.0);
      return (lead * r * r - 2.0 * (alpha * s.M + (1.0 - s.xi) * s.N) * r + 1.0) /
             one_minus_r2;
    }
    case FormulaId::thm26: {
      const double A = 2.0 * (1.0 - s.xi) * s.N + s.beta * s.M;
      return (-(A + 1.0) * r * r - A * r + 1.0) / one_minus_r2;
    }
  }
  throw BadParameter("lower_bound_profile: unknown formula");
}

}  // namespace gft

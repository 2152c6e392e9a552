#include <catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "gft/radii.hpp"
#include "test_support.hpp"

using namespace gft;
using Catch::Approx;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i)
    g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return g;
}

double residual(const RadiusResult& r) {
  const double x = r.radius;
  return r.quadratic[0] * x * x + r.quadratic[1] * x + r.quadratic[2];
}

}  // namespace

TEST_CASE("solve_quadratic_positive_root") {
  CHECK(solve_quadratic_positive_root(-5.0, -4.0, 1.0) == Approx(0.2).epsilon(1e-15));
  CHECK(solve_quadratic_positive_root(-1.0, 0.0, 1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(solve_quadratic_positive_root(0.0, -2.0, 1.0) == Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(solve_quadratic_positive_root(-1.0, -1.0, -1.0), NoPositiveRoot);
  CHECK_THROWS_AS(solve_quadratic_positive_root(0.0, 1.0, 1.0), NoPositiveRoot);
  SECTION("no cancellation for widely separated roots") {
    // roots 1e-8 and 1e8: -(x - 1e-8)(x - 1e8) = -x^2 + (1e8+1e-8) x - 1
    const double r = solve_quadratic_positive_root(-1.0, 1e8 + 1e-8, -1.0);
    CHECK(r == Approx(1e-8).epsilon(1e-12));
  }
}

TEST_CASE("spot values") {
  CHECK(radius_lif(1.0, 1.0).radius == Approx(1.0 / 3.0).margin(1e-12));
  CHECK(radius_lif(2.0, 1.0).radius ==
        Approx((std::sqrt(7.0) - 2.0) / 3.0).margin(1e-12));
  CHECK(radius_ozaki(1.0, 1.0).radius == Approx(0.5).margin(1e-12));
  CHECK(radius_mixed(1.0, 0.0, 1.0, 1.0, Variant::rederived).radius ==
        Approx(0.2).margin(1e-12));
  CHECK(radius_mixed(1.0, 0.0, 1.0, 1.0, Variant::paper).radius ==
        Approx((std::sqrt(10.0) - 2.0) / 6.0).margin(1e-12));
  CHECK(radius_mixed_locally_convex(1.0, 0.0, 1.0, 1.0).radius ==
        Approx(0.25).margin(1e-12));
}

TEST_CASE("degenerate limits return radius 1") {
  CHECK(radius_lif(1.0, 0.0).radius == 1.0);
  CHECK(radius_lif(3.0, 0.0).radius == 1.0);
  CHECK(radius_convex(0.0).radius == 1.0);
  CHECK(radius_univalent(0.0).radius == 1.0);
  CHECK(radius_ozaki(0.5, 0.0).radius == 1.0);
  CHECK(radius_mixed(2.0, 0.25, 0.0, 0.0).radius == 1.0);
  CHECK(radius_mixed_locally_convex(1.0, 0.0, 0.0, 0.0).radius == 1.0);
}

TEST_CASE("closed-form agreement with the quadratic route") {
  for (double M : log_grid(0.01, 10.0, 50)) {
    // printed closed form of the U_alpha radius
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
      const double printed =
          (std::sqrt(alpha * alpha * M * M + 2.0 * M + 1.0) - alpha * M) /
          (2.0 * M + 1.0);
      CHECK(std::abs(radius_lif(alpha, M).radius - printed) < 1e-12);
    }
    CHECK(std::abs(radius_convex(M).radius - 1.0 / (2.0 * M + 1.0)) < 1e-14);
    const double univ = 1.0 / (std::sqrt(4.0 * M * M + 2.0 * M + 1.0) + 2.0 * M);
    CHECK(std::abs(radius_univalent(M).radius - univ) < 1e-14);
  }
}

TEST_CASE("formula identities on the grid") {
  for (double M : log_grid(0.01, 10.0, 50)) {
    CHECK(std::abs(radius_univalent(M).radius - radius_lif(2.0, M).radius) < 1e-12);
    CHECK(std::abs(radius_lif(1.0, M).radius - radius_convex(M).radius) < 1e-12);
    for (double alpha : {1.0, 1.5, 2.0, 3.0})
      for (double xi : {0.0, 0.25, 0.5})
        CHECK(std::abs(radius_mixed(alpha, xi, M, 0.0).radius -
                       radius_lif(alpha, M).radius) < 1e-12);
    for (double beta : {0.25, 0.5, 1.0})
      for (double xi : {0.0, 0.25, 0.5})
        CHECK(std::abs(radius_mixed_locally_convex(beta, xi, M, 0.0).radius -
                       radius_ozaki(beta, M).radius) < 1e-12);
  }
}

TEST_CASE("quadratic residual vanishes at every returned radius") {
  for (double M : log_grid(0.01, 10.0, 50)) {
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
      CHECK(std::abs(residual(radius_lif(alpha, M))) < 1e-10);
      for (double xi : {0.0, 0.25, 0.5}) {
        CHECK(std::abs(residual(radius_mixed(alpha, xi, M, 0.7))) < 1e-10);
        CHECK(std::abs(residual(radius_mixed(alpha, xi, M, 0.7, Variant::paper))) <
              1e-10);
      }
    }
    CHECK(std::abs(residual(radius_convex(M))) < 1e-10);
    CHECK(std::abs(residual(radius_univalent(M))) < 1e-10);
    for (double beta : {0.25, 0.5, 1.0}) {
      CHECK(std::abs(residual(radius_ozaki(beta, M))) < 1e-10);
      CHECK(std::abs(residual(radius_mixed_locally_convex(beta, 0.25, M, 0.7))) <
            1e-10);
    }
  }
}

TEST_CASE("monotonicity in every parameter") {
  auto grid = log_grid(0.01, 10.0, 50);
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    CHECK(radius_lif(1.5, grid[i + 1]).radius < radius_lif(1.5, grid[i]).radius);
    CHECK(radius_ozaki(0.5, grid[i + 1]).radius < radius_ozaki(0.5, grid[i]).radius);
    CHECK(radius_mixed(1.5, 0.25, grid[i + 1], 1.0).radius <
          radius_mixed(1.5, 0.25, grid[i], 1.0).radius);
    CHECK(radius_mixed(1.5, 0.25, 1.0, grid[i + 1]).radius <
          radius_mixed(1.5, 0.25, 1.0, grid[i]).radius);
    CHECK(radius_mixed_locally_convex(0.5, 0.25, 1.0, grid[i + 1]).radius <
          radius_mixed_locally_convex(0.5, 0.25, 1.0, grid[i]).radius);
  }
  // decreasing in alpha and beta as well
  CHECK(radius_lif(2.0, 1.0).radius < radius_lif(1.0, 1.0).radius);
  CHECK(radius_ozaki(1.0, 1.0).radius < radius_ozaki(0.5, 1.0).radius);
  for (double M : grid) {
    CHECK(radius_lif(2.0, M).radius > 0.0);
    CHECK(radius_lif(2.0, M).radius <= 1.0);
  }
}

TEST_CASE("paper variant is dominated by the rederived variant") {
  std::mt19937 rng(97);
  for (int rep = 0; rep < 500; ++rep) {
    const double alpha = gft_test::urand(rng, 1.0, 3.0);
    const double xi = gft_test::urand(rng, 0.0, 0.99);
    const double M = gft_test::urand(rng, 0.01, 5.0);
    const double N = gft_test::urand(rng, 0.0, 3.0);
    const double paper = radius_mixed(alpha, xi, M, N, Variant::paper).radius;
    const double reder = radius_mixed(alpha, xi, M, N, Variant::rederived).radius;
    CHECK(paper <= reder + 1e-15);
    if (M > 0.0 && N > 0.0) CHECK(paper < reder);
  }
}

TEST_CASE("printed mixed closed form is recorded and out of range") {
  RadiusResult r = radius_mixed(1.0, 0.0, 1.0, 1.0, Variant::paper);
  REQUIRE(r.printed_value.has_value());
  CHECK(*r.printed_value < 0.0);  // the printed expression is not a radius
  CHECK_FALSE(radius_mixed(1.0, 0.0, 1.0, 1.0).printed_value.has_value());
}

TEST_CASE("lower_bound_profile") {
  SECTION("spot value for the U_alpha profile") {
    FormulaSpec s{FormulaId::thm21, 1.0, 1.0, 0.0, 1.0, 0.0};
    CHECK(lower_bound_profile(s, 0.2) == Approx(0.5).margin(1e-12));
  }
  SECTION("value 1 at r = 0") {
    for (FormulaId id : {FormulaId::thm21, FormulaId::cor_convex, FormulaId::thm22,
                         FormulaId::thm23, FormulaId::thm24, FormulaId::cor25,
                         FormulaId::thm26}) {
      FormulaSpec s{id, 1.5, 0.5, 0.25, 1.2, 0.8};
      CHECK(lower_bound_profile(s, 0.0) == Approx(1.0).margin(1e-14));
    }
  }
  SECTION("vanishes at the formula radius and changes sign there") {
    std::mt19937 rng(61);
    for (int rep = 0; rep < 100; ++rep) {
      FormulaSpec s;
      s.id = static_cast<FormulaId>(rep % 7);
      s.alpha = gft_test::urand(rng, 1.0, 3.0);
      s.beta = gft_test::urand(rng, 0.25, 1.0);
      s.xi = gft_test::urand(rng, 0.0, 0.9);
      s.M = gft_test::urand(rng, 0.05, 4.0);
      s.N = gft_test::urand(rng, 0.0, 2.0);
      const double rc = radius_for(s).radius;
      CHECK(std::abs(lower_bound_profile(s, rc)) < 1e-10);
      for (double frac : {0.1, 0.5, 0.9})
        CHECK(lower_bound_profile(s, frac * rc) > 1e-12);
      for (double r = rc + 0.01; r < 0.999; r += 0.05)
        CHECK(lower_bound_profile(s, r) < -1e-12);
    }
  }
  SECTION("rejects radii outside [0, 1)") {
    FormulaSpec s{FormulaId::thm21, 1.0, 1.0, 0.0, 1.0, 0.0};
    CHECK_THROWS_AS(lower_bound_profile(s, 1.0), BadParameter);
    CHECK_THROWS_AS(lower_bound_profile(s, -0.1), BadParameter);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(radius_lif(0.5, 1.0), BadParameter);
  CHECK_THROWS_AS(radius_lif(1.0, -1.0), BadParameter);
  CHECK_THROWS_AS(radius_ozaki(1.5, 1.0), BadParameter);
  CHECK_NOTHROW(radius_ozaki(1.5, 1.0, /*override_range=*/true));
  CHECK_THROWS_AS(radius_mixed(1.0, 1.0, 1.0, 1.0), BadParameter);
  CHECK_THROWS_AS(radius_mixed_locally_convex(0.0, 0.0, 1.0, 1.0), BadParameter);
  ClassSpec bad{ClassTag::ozaki, 2.0};
  CHECK_THROWS_AS(bad.validate(), BadParameter);
  ClassSpec ok{ClassTag::ozaki, 2.0, /*override_range=*/true};
  CHECK_NOTHROW(ok.validate());
}

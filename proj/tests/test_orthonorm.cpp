#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wrz/orthonorm.hpp"

using namespace wrz;

namespace {

// Closed form for the weyl weight: c_j^n = sqrt(n^{j+1}/(pi j!)).
double weyl_log_c(int n, int j) {
  return 0.5 * ((j + 1.0) * std::log(static_cast<double>(n)) - std::log(M_PI) -
                std::lgamma(j + 1.0));
}

// Circular alpha=1, beta=2: (c_j^n)^{-2} = pi * Gamma(j+n+1) / (2n)^{j+n+1}.
double circ12_log_c(int n, int j) {
  return -0.5 * (std::log(M_PI) + std::lgamma(j + n + 1.0) -
                 (j + n + 1.0) * std::log(2.0 * n));
}

// Circular alpha=0, beta=2 (phi = r^2): (c_j^n)^{-2} = pi * j! / (2n)^{j+1}.
double circ02_log_c(int n, int j) {
  return -0.5 * (std::log(M_PI) + std::lgamma(j + 1.0) -
                 (j + 1.0) * std::log(2.0 * n));
}

}  // namespace

TEST_CASE("weyl closed forms") {
  const RadialWeight w = make_weyl();
  CHECK(log_norm_constant(w, 1, 0) == doctest::Approx(-0.5 * std::log(M_PI)).epsilon(1e-12));
  CHECK(log_norm_constant(w, 4, 2) ==
        doctest::Approx(0.5 * std::log(64.0 / (2.0 * M_PI))).epsilon(1e-12));

  const BasisScale bs = basis_scale(w, 10);
  REQUIRE(bs.log_c.size() == 11);
  for (int j = 0; j <= 10; ++j) {
    // Relative error of (c)^2 <= 1e-10 means |delta log| <= ~5e-11.
    CHECK(std::abs(2.0 * (bs.log_c[j] - weyl_log_c(10, j))) < 1e-10);
  }
}

TEST_CASE("circular gamma-integral closed forms") {
  const RadialWeight w12 = make_circular({1.0, 2.0});
  // n=3, j=1: (c)^{-2} = pi * Gamma(5) / 6^5 = 24 pi / 7776.
  CHECK(log_norm_constant(w12, 3, 1) ==
        doctest::Approx(-0.5 * std::log(24.0 * M_PI / 7776.0)).epsilon(1e-11));
  const BasisScale bs12 = basis_scale(w12, 8);
  for (int j = 0; j <= 8; ++j) {
    CHECK(bs12.log_c[j] == doctest::Approx(circ12_log_c(8, j)).epsilon(1e-11));
  }

  const BasisScale bs02 = basis_scale(make_circular({0.0, 2.0}), 10);
  for (int j = 0; j <= 10; ++j) {
    CHECK(bs02.log_c[j] == doctest::Approx(circ02_log_c(10, j)).epsilon(1e-11));
  }
}

TEST_CASE("basis_scale consistency and degenerate degree") {
  const RadialWeight w = make_weyl();
  const BasisScale bs = basis_scale(w, 6);
  for (int j = 0; j <= 6; ++j) {
    CHECK(bs.log_c[j] == doctest::Approx(log_norm_constant(w, 6, j)).epsilon(1e-13));
  }
  // n = 0 has a divergent defining integral; both entry points refuse it.
  CHECK_THROWS(basis_scale(w, 0));
  CHECK_THROWS(log_norm_constant(w, 0, 0));
  CHECK_THROWS(log_norm_constant(w, 4, 5));
}

TEST_CASE("quadrature tolerance stability") {
  const RadialWeight w = make_weyl();
  for (int j : {0, 17, 50, 100}) {
    const double tight = log_norm_constant(w, 100, j, 1e-13);
    const double loose = log_norm_constant(w, 100, j, 1e-10);
    CHECK(std::abs(tight - loose) < 1e-12);
  }
}

TEST_CASE("coef limit approaches robin constant") {
  const RadialWeight w = make_weyl();
  const auto seq = coef_limit_check(w, {250, 500, 1000});
  CHECK(std::abs(seq[0].second - 0.5) > std::abs(seq[1].second - 0.5));
  CHECK(std::abs(seq[1].second - 0.5) > std::abs(seq[2].second - 0.5));
  CHECK(std::abs(seq[2].second - 0.5) < 0.02);

  const RadialWeight c = make_circular({1.0, 2.0});
  const EquilibriumResult eq = equilibrium_potential(c);
  const auto cseq = coef_limit_check(c, {1000});
  CHECK(std::abs(cseq[0].second - eq.robin_constant) < 0.02);

  CHECK_THROWS_AS(coef_limit_check(w, {100, 100}), std::invalid_argument);
}

TEST_CASE("max normalized term approaches the potential") {
  const RadialWeight w = make_circular({1.0, 2.0});
  const EquilibriumResult eq = equilibrium_potential(w);
  const int n = 800;
  const BasisScale bs = basis_scale(w, n);
  for (double r : {0.8, 0.9}) {
    double best = -1e300;
    for (int j = 0; j <= n; ++j) {
      best = std::max(best, bs.log_c[j] + j * std::log(r));
    }
    CHECK(std::abs(best / n - eq.potential(r)) <= 0.01);
  }
}

TEST_CASE("envelope fraction") {
  const RadialWeight w = make_circular({1.0, 2.0});
  const EquilibriumResult eq = equilibrium_potential(w);
  const BasisScale bs100 = basis_scale(w, 100);
  const BasisScale bs400 = basis_scale(w, 400);

  const double f100 = envelope_fraction(w, eq, bs100, 0.85, 0.05);
  const double f400 = envelope_fraction(w, eq, bs400, 0.85, 0.05);
  CHECK(f400 > 0.0);
  CHECK(f400 >= 0.5 * f100);

  // Huge eps puts the threshold below every term.
  CHECK(envelope_fraction(w, eq, bs100, 0.85, 10.0) == doctest::Approx(1.0));

  // The max term reaches the potential, so the fraction is never zero at
  // large n even for small eps.
  CHECK(envelope_fraction(w, eq, bs400, 0.9, 0.01) > 0.0);

  CHECK_THROWS_AS(envelope_fraction(w, eq, bs100, -1.0, 0.1), std::invalid_argument);
}

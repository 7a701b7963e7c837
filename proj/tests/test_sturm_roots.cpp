#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wrz/rng.hpp"
#include "wrz/roots.hpp"
#include "wrz/sturm.hpp"

using namespace wrz;

namespace {

// Expand prod (x - r_i) into monomial coefficients (ascending).
std::vector<double> from_roots(const std::vector<double>& roots) {
  std::vector<double> c = {1.0};
  for (double r : roots) {
    c.insert(c.begin(), 0.0);
    for (size_t j = 0; j + 1 < c.size(); ++j) c[j] -= r * c[j + 1];
  }
  return c;
}

// Multiset comparison of computed roots against expected complex roots.
void check_root_multiset(std::vector<std::complex<double>> got,
                         std::vector<std::complex<double>> want, double tol) {
  REQUIRE(got.size() == want.size());
  for (const auto& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&w](const auto& a, const auto& b) {
                                 return std::abs(a - w) < std::abs(b - w);
                               });
    REQUIRE(it != got.end());
    CHECK(std::abs(*it - w) < tol);
    got.erase(it);
  }
}

}  // namespace

TEST_CASE("sturm counts on fixed polynomials") {
  CHECK(count_real_roots_dyadic(from_roots({1.0, 2.0, -3.0})) == 3);
  CHECK(count_real_roots_dyadic(std::vector<double>{1.0, 0.0, 1.0}) == 0);  // x^2+1
  CHECK(count_real_roots_dyadic(std::vector<double>{-1.0, 0.0, 0.0, 0.0, 1.0}) == 2);
  CHECK(count_real_roots_dyadic(std::vector<double>{5.0}) == 0);  // constant
  CHECK(count_real_roots_dyadic(std::vector<double>{0.0, 2.0}) == 1);
  // Repeated roots count once. These normalize to exact dyadics, so the
  // multiple root survives the rounding: x(x-1)^2 and (x^2-1)^2.
  CHECK(count_real_roots_dyadic(std::vector<double>{0.0, 1.0, -2.0, 1.0}) == 2);
  CHECK(count_real_roots_dyadic(std::vector<double>{1.0, 0.0, -2.0, 0.0, 1.0}) == 2);
  // x^3: single distinct root at 0.
  CHECK(count_real_roots_dyadic(std::vector<double>{0.0, 0.0, 0.0, 1.0}) == 1);
  // Well-separated integer roots survive the dyadic rounding.
  CHECK(count_real_roots_dyadic(from_roots({-4.0, -2.0, -1.0, 1.0, 2.0, 4.0})) == 6);
}

TEST_CASE("sturm rejects bad input") {
  CHECK_THROWS_AS(count_real_roots_dyadic(std::vector<double>{0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_real_roots_dyadic(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(count_real_roots_dyadic(std::vector<double>{1.0, 1.0}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_real_roots_dyadic(std::vector<double>{1.0, 1.0}, 63),
                  std::invalid_argument);
}

TEST_CASE("sturm precision parameter changes the rounded polynomial only") {
  const std::vector<double> c = from_roots({0.25, -1.5, 3.0, 7.0});
  for (int bits : {10, 20, 30, 50}) {
    CHECK(count_real_roots_dyadic(c, bits) == 4);
  }
}

TEST_CASE("descartes bisection counter matches the sturm chain") {
  // Fixed cases, including multiple roots that force the Sturm fallback.
  CHECK(count_real_roots_descartes(from_roots({1.0, 2.0, -3.0})) == 3);
  CHECK(count_real_roots_descartes(std::vector<double>{1.0, 0.0, 1.0}) == 0);
  CHECK(count_real_roots_descartes(std::vector<double>{0.0, 1.0, -2.0, 1.0}) == 2);
  CHECK(count_real_roots_descartes(std::vector<double>{1.0, 0.0, -2.0, 0.0, 1.0}) == 2);
  CHECK(count_real_roots_descartes(std::vector<double>{0.0, 0.0, 0.0, 1.0}) == 1);
  CHECK(count_real_roots_descartes(std::vector<double>{5.0}) == 0);
  // Root exactly at a dyadic bisection midpoint.
  CHECK(count_real_roots_descartes(from_roots({0.5, -0.5, 0.25})) == 3);
  CHECK_THROWS_AS(count_real_roots_descartes(std::vector<double>{0.0}),
                  std::invalid_argument);

  // Random polynomials: identical rounding, identical counts, both signs of
  // magnitude spread.
  TrialRng rng(123, 0);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<double> c(trial % 2 ? 9 : 24);
    for (size_t j = 0; j < c.size(); ++j) {
      c[j] = rng.next_gaussian() * std::exp(0.7 * (double)j - 4.0);
    }
    if (c.back() == 0.0) c.back() = 1.0;
    for (int bits : {12, 30, 53}) {
      CHECK(count_real_roots_descartes(c, bits) == count_real_roots_dyadic(c, bits));
    }
  }
}

TEST_CASE("symmetric interval counts are exact") {
  const auto c = from_roots({-4.0, -2.0, -1.0, 1.0, 2.0, 4.0});
  CHECK(count_real_roots_descartes_within(c, 8.0) == 6);
  CHECK(count_real_roots_descartes_within(c, 3.0) == 4);
  CHECK(count_real_roots_descartes_within(c, 1.5) == 2);
  // Open interval: boundary roots excluded.
  CHECK(count_real_roots_descartes_within(c, 1.0) == 0);
  CHECK(count_real_roots_descartes_within(c, 0.75) == 0);
  // Origin root included; endpoint with a longer mantissa still exact.
  CHECK(count_real_roots_descartes_within(std::vector<double>{0.0, 1.0}, 0.625) == 1);
  CHECK_THROWS_AS(count_real_roots_descartes_within(c, 0.0), std::invalid_argument);

  // Cross-validate against localized eigenvalue roots.
  TrialRng rng(55, 0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> p(17);
    for (double& v : p) v = rng.next_gaussian();
    if (p.back() == 0.0) p.back() = 1.0;
    CHECK(count_real_roots_descartes_within(p, 1 << 20) == count_real_roots_dyadic(p));
    int localized = 0;
    for (const auto& z : aberth_roots(p)) {
      if (std::abs(z.imag()) < 1e-9 && std::abs(z.real()) < 0.75) ++localized;
    }
    CHECK(count_real_roots_descartes_within(p, 0.75) == localized);
  }
}

TEST_CASE("aberth on polynomials with known roots") {
  // x^4 - 1.
  check_root_multiset(aberth_roots(std::vector<double>{-1.0, 0.0, 0.0, 0.0, 1.0}),
                      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 1e-10);
  // x^2 + x^3 = x^2 (x + 1): vanishing low-order coefficients.
  check_root_multiset(aberth_roots(std::vector<double>{0.0, 0.0, 1.0, 1.0}),
                      {{0, 0}, {0, 0}, {-1, 0}}, 1e-10);
  // Wide magnitude spread exercising the Newton-polygon initialization.
  check_root_multiset(aberth_roots(from_roots({1e-4, 1.0, 1e4})),
                      {{1e-4, 0}, {1, 0}, {1e4, 0}}, 1e-6);
  CHECK_THROWS_AS(aberth_roots(std::vector<double>{0.0}), std::invalid_argument);
}

TEST_CASE("aberth agrees with companion eigenvalues on random polynomials") {
  TrialRng rng(31, 0);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> c(13);
    for (double& v : c) v = rng.next_gaussian();
    if (std::abs(c.back()) < 0.05) c.back() = 1.0;
    check_root_multiset(aberth_roots(c), companion_roots(c), 1e-7);
  }
}

TEST_CASE("sturm agrees with the eigenvalue oracle on random polynomials") {
  TrialRng rng(77, 0);
  int agree = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> c(13);
    for (double& v : c) v = rng.next_gaussian();
    if (std::abs(c.back()) < 0.05) c.back() = 1.0;
    const int a = count_real_roots_dyadic(c);
    const int b = count_real_roots_companion(c);
    agree += (a == b);
    // Parity never disagrees for odd degree with simple roots.
    CHECK((a - b) % 2 == 0);
  }
  // Dyadic rounding can legitimately flip near-boundary cases; demand near
  // unanimity, not perfection.
  CHECK(agree >= trials - 2);
}

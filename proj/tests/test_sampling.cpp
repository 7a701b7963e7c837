#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "wrz/kacrice.hpp"
#include "wrz/roots.hpp"
#include "wrz/sampling.hpp"

using namespace wrz;

TEST_CASE("distribution moments") {
  for (const CoefficientDistribution& d :
       {CoefficientDistribution::gaussian(), CoefficientDistribution::rademacher(),
        CoefficientDistribution::uniform_sym(),
        CoefficientDistribution::discrete({-2.0, 0.0, 2.0}, {0.125, 0.75, 0.125})}) {
    TrialRng rng(5, 0);
    const int m = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < m; ++i) {
      const double v = d.sample(rng);
      sum += v;
      sq += v * v;
    }
    CHECK(std::abs(sum / m) < 0.01);
    CHECK(sq / m == doctest::Approx(1.0).epsilon(0.02));
  }
}

TEST_CASE("distribution shapes") {
  const CoefficientDistribution r = CoefficientDistribution::rademacher();
  const CoefficientDistribution u = CoefficientDistribution::uniform_sym();
  TrialRng rng(9, 3);
  for (int i = 0; i < 1000; ++i) {
    CHECK(std::abs(r.sample(rng)) == doctest::Approx(1.0));
    CHECK(std::abs(u.sample(rng)) <= std::sqrt(3.0) + 1e-15);
  }
}

TEST_CASE("discrete distribution validation") {
  using CD = CoefficientDistribution;
  CHECK_THROWS_AS(CD::discrete({1.0, -1.0}, {0.6, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(CD::discrete({1.0, 2.0}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(CD::discrete({0.5, -0.5}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(CD::discrete({1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CD::parse("cauchy"), std::invalid_argument);
  CHECK(CD::parse("uniform").kind == CD::Kind::uniform_sym);
  CHECK(CD::parse("rademacher").kind == CD::Kind::rademacher);
}

TEST_CASE("sampled polynomials are reproducible and normalized") {
  const BasisScale bs = basis_scale(make_weyl(), 25);
  const CoefficientDistribution d = CoefficientDistribution::gaussian();
  const SampledPolynomial p = sample_polynomial(bs, d, 42, 7);
  const SampledPolynomial q = sample_polynomial(bs, d, 42, 7);
  REQUIRE(p.normalized.size() == 26);
  CHECK(p.normalized == q.normalized);

  double mx = 0.0;
  for (double v : p.normalized) mx = std::max(mx, std::abs(v));
  CHECK(mx == doctest::Approx(1.0).epsilon(1e-15));

  // Different trial index gives a different draw.
  const SampledPolynomial r = sample_polynomial(bs, d, 42, 8);
  CHECK(p.normalized != r.normalized);
}

TEST_CASE("real root counts are sane and cross-validated") {
  const BasisScale bs = basis_scale(make_weyl(), 31);
  const CoefficientDistribution d = CoefficientDistribution::gaussian();
  int agree = 0;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    const SampledPolynomial p = sample_polynomial(bs, d, 11, t);
    const int c = count_real_roots(p);
    CHECK(c >= 1);  // odd degree
    CHECK(c <= 31);
    agree += (c == count_real_roots_companion(p.normalized));
    CHECK(all_complex_roots(p).size() == 31);
  }
  CHECK(agree >= trials - 1);
}

TEST_CASE("run_batch is deterministic and thread-count independent") {
  const BasisScale bs = basis_scale(make_weyl(), 40);
  const CoefficientDistribution d = CoefficientDistribution::gaussian();
  const std::vector<RegionSpec> regions = {{0.0, 1e9}, {0.0, 1.0}};

  setenv("WRZ_THREADS", "1", 1);
  const TrialBatchReport a = run_batch(bs, d, 60, regions, 123);
  setenv("WRZ_THREADS", "3", 1);
  const TrialBatchReport b = run_batch(bs, d, 60, regions, 123);
  unsetenv("WRZ_THREADS");

  CHECK(a.real_root_counts == b.real_root_counts);
  CHECK(a.mean == b.mean);
  CHECK(a.regions[0].mean_fraction == b.regions[0].mean_fraction);
  CHECK(a.failed_trials.empty());

  // Mean/stderr consistency with the recorded counts.
  double s = 0.0;
  for (int c : a.real_root_counts) s += c;
  CHECK(a.mean == doctest::Approx(s / a.real_root_counts.size()).epsilon(1e-14));
  double varsum = 0.0;
  for (int c : a.real_root_counts) varsum += (c - a.mean) * (c - a.mean);
  const int m = (int)a.real_root_counts.size();
  CHECK(a.stderr_mean ==
        doctest::Approx(std::sqrt(varsum / (m - 1.0) / m)).epsilon(1e-12));

  // All complex roots of a degree-40 polynomial lie somewhere.
  CHECK(a.regions[0].mean_fraction == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.regions[1].mean_fraction < 1.0);
}

TEST_CASE("monte carlo mean tracks the quadrature answer") {
  const BasisScale bs = basis_scale(make_weyl(), 50);
  const TrialBatchReport rep =
      run_batch(bs, CoefficientDistribution::gaussian(), 300, {}, 2026);
  const double inf = std::numeric_limits<double>::infinity();
  const double en = expected_real_zeros(bs, -inf, inf).value;
  CHECK(std::abs(rep.mean - en) <= 4.0 * rep.stderr_mean);
}

TEST_CASE("universality comparison bookkeeping") {
  const BasisScale bs = basis_scale(make_weyl(), 30);
  const UniversalityComparison uc =
      universality_compare(bs, CoefficientDistribution::gaussian(),
                           CoefficientDistribution::rademacher(), 200, 99);
  CHECK(uc.difference == doctest::Approx(uc.mean_a - uc.mean_b).epsilon(1e-14));
  CHECK(uc.combined_stderr ==
        doctest::Approx(std::hypot(uc.stderr_a, uc.stderr_b)).epsilon(1e-12));
  CHECK(uc.z_score ==
        doctest::Approx(uc.difference / uc.combined_stderr).epsilon(1e-12));
  // Same degree, mean-zero unit-variance laws: means should be close.
  CHECK(std::abs(uc.z_score) < 5.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wrz/kernel.hpp"

using namespace wrz;

namespace {

// Brute-force long-double oracle evaluating the four diagonal sums directly
// in the linear domain. Only valid when exp(2*log_c[j]) stays in range, i.e.
// small n.
struct LinearSums {
  long double K = 0, K01 = 0, K11 = 0, Vpair = 0;
};

LinearSums linear_sums(const BasisScale& bs, double x) {
  const int n = bs.n;
  std::vector<long double> c2(n + 1);
  for (int j = 0; j <= n; ++j) c2[j] = expl(2.0L * (long double)bs.log_c[j]);
  LinearSums s;
  for (int j = 0; j <= n; ++j) {
    const long double xp = powl((long double)x, 2.0L * j);
    s.K += c2[j] * xp;
    if (j >= 1) {
      s.K01 += j * c2[j] * powl((long double)x, 2.0L * j - 1.0L);
      s.K11 += (long double)j * j * c2[j] * powl((long double)x, 2.0L * j - 2.0L);
    }
  }
  for (int j = 0; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const long double d = k - j;
      s.Vpair += d * d * c2[j] * c2[k] * powl((long double)x, 2.0L * (j + k) - 2.0L);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("diagonal sums match a linear-domain oracle at small n") {
  for (const RadialWeight& w : {make_weyl(), make_circular({1.0, 2.0})}) {
    const BasisScale bs = basis_scale(w, 12);
    for (double x : {0.2, 0.7, 1.0, 1.4, -0.7}) {
      const LinearSums s = linear_sums(bs, x);
      const KernelDiagonal kd = kernel_diagonal(bs, x);
      CHECK(kd.log_K == doctest::Approx((double)logl(s.K)).epsilon(1e-12));
      CHECK(kd.log_K11 == doctest::Approx((double)logl(s.K11)).epsilon(1e-12));
      CHECK(kd.log_K01_abs ==
            doctest::Approx((double)logl(fabsl(s.K01))).epsilon(1e-12));
      CHECK(kd.K01_sign == (s.K01 > 0 ? 1 : -1));
      CHECK(kd.log_V == doctest::Approx((double)logl(s.Vpair)).epsilon(1e-11));
      // The pair sum really is the determinant K*K11 - K01^2 (mild
      // cancellation only at this size).
      const long double det = s.K * s.K11 - s.K01 * s.K01;
      CHECK((double)(s.Vpair / det) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("closed forms at x = 0") {
  const BasisScale bs = basis_scale(make_weyl(), 20);
  const KernelDiagonal kd = kernel_diagonal(bs, 0.0);
  CHECK(kd.log_K == doctest::Approx(2.0 * bs.log_c[0]).epsilon(1e-14));
  CHECK(kd.K01_sign == 0);
  CHECK(std::isinf(kd.log_K01_abs));
  CHECK(kd.log_K11 == doctest::Approx(2.0 * bs.log_c[1]).epsilon(1e-14));
  CHECK(kd.log_V == doctest::Approx(2.0 * (bs.log_c[0] + bs.log_c[1])).epsilon(1e-14));
}

TEST_CASE("parity in x") {
  const BasisScale bs = basis_scale(make_circular({1.0, 2.0}), 40);
  for (double x : {0.3, 0.9, 1.2}) {
    const KernelDiagonal p = kernel_diagonal(bs, x);
    const KernelDiagonal m = kernel_diagonal(bs, -x);
    CHECK(p.log_K == doctest::Approx(m.log_K).epsilon(1e-14));
    CHECK(p.log_V == doctest::Approx(m.log_V).epsilon(1e-14));
    CHECK(p.K01_sign == -m.K01_sign);
    CHECK(p.log_K01_abs == doctest::Approx(m.log_K01_abs).epsilon(1e-14));
  }
}

TEST_CASE("cauchy-schwarz keeps V positive and bounded at large n") {
  const BasisScale bs = basis_scale(make_weyl(), 500);
  for (double x : {0.0, 0.3, 0.9, 0.99, 1.0, 1.01, 1.5}) {
    const KernelDiagonal kd = kernel_diagonal(bs, x);
    CHECK(std::isfinite(kd.log_V));
    CHECK(kd.log_V <= kd.log_K + kd.log_K11 + 1e-12);
  }
}

TEST_CASE("scaled ratio approaches sqrt(laplacian/2) in the bulk") {
  // Weyl: laplacian = 2, so the limit is 1 on (-1, 1).
  const BasisScale bs = basis_scale(make_weyl(), 400);
  for (double x : {0.0, 0.4, 0.6}) {
    CHECK(scaled_density_ratio(bs, x) == doctest::Approx(1.0).epsilon(0.04));
  }
  // Outside the support the scaled ratio collapses.
  CHECK(scaled_density_ratio(bs, 1.6) < 0.05);

  // Circular alpha=1, beta=2: laplacian = 4 on the bulk annulus.
  const BasisScale bc = basis_scale(make_circular({1.0, 2.0}), 500);
  CHECK(scaled_density_ratio(bc, 0.8) == doctest::Approx(std::sqrt(2.0)).epsilon(0.03));
  // Inside the hole r < r0 = 1/sqrt(2) the intensity stays O(1), so the
  // scaled ratio decays like 1/sqrt(n) rather than exponentially.
  CHECK(scaled_density_ratio(bc, 0.3) < 0.1);
}

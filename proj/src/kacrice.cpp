#include "wrz/kacrice.hpp"

#include <cmath>
#include <stdexcept>

#include "wrz/quadrature.hpp"

namespace wrz {

double gn_density(const BasisScale& bs, double x) {
  const KernelDiagonal kd = kernel_diagonal(bs, x);
  return std::exp(0.5 * kd.log_V - kd.log_K) / M_PI;
}

DensityCurve density_curve(const BasisScale& bs, const std::vector<double>& xs) {
  DensityCurve dc;
  dc.n = bs.n;
  dc.xs = xs;
  dc.gn.reserve(xs.size());
  for (double x : xs) dc.gn.push_back(gn_density(bs, x));
  return dc;
}

namespace {

// Outer-edge scale of the basis: c_{n-1}/c_n approximates the support radius.
double basis_edge_radius(const BasisScale& bs) {
  if (bs.n < 1) return 1.0;
  return std::max(1.0, std::exp(bs.log_c[bs.n - 1] - bs.log_c[bs.n]));
}

// Integral of g_n over [a, inf) (a > 0), by geometric panels x = a e^u.
double tail_integral(const BasisScale& bs, double a, double* err) {
  double total = 0.0;
  double lo = a;
  const double ratio = std::exp(0.5);
  for (int k = 0; k < 200; ++k) {
    const double hi = lo * ratio;
    const QuadResult q = adaptive_integrate(
        [&bs](double x) { return gn_density(bs, x); }, lo, hi, 1e-9, 1e-13);
    total += q.value;
    *err += q.error_estimate;
    if (q.value < 1e-12 * std::max(total, 1e-300)) break;
    lo = hi;
  }
  return total;
}

}  // namespace

ExpectedCount expected_real_zeros(const BasisScale& bs, double lo, double hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("expected_real_zeros: lo < hi required");
  }
  ExpectedCount ec;
  ec.lo = lo;
  ec.hi = hi;
  ec.n = bs.n;
  const double edge = basis_edge_radius(bs);
  const double cut = 2.0 * edge;

  double err = 0.0;
  double value = 0.0;
  auto finite_part = [&](double a, double b) {
    if (b <= a) return;
    const QuadResult q = adaptive_integrate(
        [&bs](double x) { return gn_density(bs, x); }, a, b, 1e-9, 1e-13);
    value += q.value;
    err += q.error_estimate;
  };

  const bool lo_inf = std::isinf(lo);
  const bool hi_inf = std::isinf(hi);
  const double a = lo_inf ? -cut : lo;
  const double b = hi_inf ? cut : hi;
  finite_part(a, b);
  // g_n is even in x for radial weights, so both tails equal the right tail.
  if (hi_inf) value += tail_integral(bs, cut, &err);
  if (lo_inf) value += tail_integral(bs, cut, &err);

  ec.value = value;
  ec.quadrature_error = err;
  return ec;
}

KacSums kac_sums(int n, double x) {
  // Direct summation; these sums are diagnostics and test fixtures, the
  // production integral goes through the stable log-derivative form below.
  KacSums s;
  double x2 = x * x;
  double p = 1.0;  // x^{2j}
  for (int j = 0; j <= n; ++j) {
    s.a += p;
    if (j >= 1) {
      s.b += j * p / x;
      s.c += static_cast<double>(j) * j * p / x2;
    }
    p *= x2;
  }
  return s;
}

namespace {

// q(t) = 1/sinh(t)^2 with the scale-difference evaluated stably:
// qdiff(mu) = q(mu/2) - N^2 q(N mu/2), the 1/mu^2 poles cancelling exactly.
double kac_qdiff(double mu, double N) {
  if (N * mu < 0.1) {
    const double N2 = N * N;
    const double mu2 = mu * mu;
    // Taylor of 1/sinh^2: t^-2 - 1/3 + t^2/15 - 2 t^4/189 + t^6/675 ...
    return (N2 - 1.0) / 3.0 - (N2 * N2 - 1.0) * mu2 / 60.0 +
           (N2 * N2 * N2 - 1.0) * mu2 * mu2 / 1512.0;
  }
  const double sh = std::sinh(0.5 * mu);
  double val = 1.0 / (sh * sh);
  if (0.5 * N * mu < 350.0) {
    const double shN = std::sinh(0.5 * N * mu);
    val -= N * N / (shN * shN);
  }
  return std::max(val, 0.0);
}

}  // namespace

ExpectedCount kac_classical(int n) {
  if (n < 1) {
    throw std::invalid_argument("kac_classical: n >= 1 required");
  }
  const double N = n + 1.0;
  auto f = [N](double mu) { return std::sqrt(kac_qdiff(mu, N)); };

  const double knee = 10.0 / N;
  const double T = 30.0;
  double err = 0.0;
  QuadResult q1 = adaptive_integrate(f, 0.0, knee, 1e-11, 1e-14);
  QuadResult q2 = adaptive_integrate(f, knee, std::max(knee, T), 1e-11, 1e-14);
  err += q1.error_estimate + q2.error_estimate;
  // Analytic tail of 1/sinh(mu/2) past T (the N-dependent part is negligible).
  const double tail = -2.0 * std::log(std::tanh(0.25 * T));

  ExpectedCount ec;
  ec.lo = -std::numeric_limits<double>::infinity();
  ec.hi = std::numeric_limits<double>::infinity();
  ec.n = n;
  ec.value = (q1.value + q2.value + tail) / M_PI;
  ec.quadrature_error = err / M_PI;
  return ec;
}

std::vector<LimitComparisonRow> limit_comparison_report(const RadialWeight& w,
                                                        const std::vector<int>& degrees) {
  if (degrees.empty()) {
    throw std::invalid_argument("limit_comparison_report: degrees must be nonempty");
  }
  const EquilibriumResult eq = equilibrium_potential(w);
  const double limit = limit_density_integral(w, eq);
  std::vector<LimitComparisonRow> rows;
  rows.reserve(degrees.size());
  const double inf = std::numeric_limits<double>::infinity();
  for (int n : degrees) {
    const BasisScale bs = basis_scale(w, n);
    const ExpectedCount ec = expected_real_zeros(bs, -inf, inf);
    LimitComparisonRow row;
    row.n = n;
    row.expected = ec.value;
    row.expected_over_sqrt_n = ec.value / std::sqrt(static_cast<double>(n));
    row.limit = limit;
    row.degenerate_bulk = eq.bulk_intervals.empty() || limit == 0.0;
    row.rel_gap = row.degenerate_bulk
                      ? 0.0
                      : std::abs(row.expected_over_sqrt_n - limit) / limit;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wrz

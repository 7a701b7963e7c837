#include "wrz/orthonorm.hpp"

#include <cmath>
#include <stdexcept>

#include "wrz/quadrature.hpp"

namespace wrz {

namespace {

// Mode of the log-integrand g(s) = (2j+2)s - 2n*phi(e^s): solves
// r*dphi(r) = (j+1)/n by bisection, assuming r*dphi(r) increasing.
double find_mode(const RadialWeight& w, int n, int j, double hint) {
  const double target = (static_cast<double>(j) + 1.0) / n;
  auto f = [&w](double r) { return r * w.dphi(r); };
  double lo = hint > 0.0 ? hint : 1e-8;
  double hi = lo;
  int guard = 0;
  while (f(lo) > target) {
    lo *= 0.5;
    if (++guard > 2000) throw std::runtime_error("log_norm_constant: mode bracket failed (low side)");
  }
  guard = 0;
  while (f(hi) < target) {
    hi *= 2.0;
    if (++guard > 200) throw std::runtime_error("log_norm_constant: non-integrable tail (no interior mode)");
  }
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double log_norm_constant_at(const RadialWeight& w, int n, int j, double mode,
                            double rel_tol) {
  const double exponent = 2.0 * j + 2.0;
  auto g = [&](double s) { return exponent * s - 2.0 * n * w.phi(std::exp(s)); };
  const double s_star = std::log(mode);
  const double peak = g(s_star);
  auto f = [&](double s) { return std::exp(g(s) - peak); };

  // Gaussian width of the Laplace peak from g'' = -2n r^2 * laplacian(r).
  const double curv = 2.0 * n * mode * mode * w.laplacian(mode);
  const double sigma = (curv > 0.0) ? 1.0 / std::sqrt(curv) : 0.1;

  const double core = 10.0 * sigma;
  double total = adaptive_integrate(f, s_star - core, s_star + core, rel_tol, 0.0).value;
  // Expand outward until panels stop contributing.
  for (int side = 0; side < 2; ++side) {
    const double dir = side == 0 ? 1.0 : -1.0;
    double edge = s_star + dir * core;
    double width = 5.0 * sigma;
    for (int k = 0; k < 200; ++k) {
      const double next = edge + dir * width;
      const double part = adaptive_integrate(f, std::min(edge, next),
                                             std::max(edge, next), rel_tol, 0.0)
                              .value;
      total += part;
      edge = next;
      width *= 2.0;
      if (part < 1e-18 * total) break;
    }
  }
  const double log_integral = peak + std::log(total);
  return -0.5 * (std::log(2.0 * M_PI) + log_integral);
}

}  // namespace

double log_norm_constant(const RadialWeight& w, int n, int j, double rel_tol) {
  if (n < 1 || j < 0 || j > n) {
    throw std::invalid_argument("log_norm_constant: need n >= 1 and 0 <= j <= n");
  }
  const double mode = find_mode(w, n, j, /*hint=*/1.0);
  return log_norm_constant_at(w, n, j, mode, rel_tol);
}

BasisScale basis_scale(const RadialWeight& w, int n, double rel_tol) {
  if (n < 1) {
    throw std::invalid_argument("basis_scale: n >= 1 required");
  }
  BasisScale bs;
  bs.n = n;
  bs.weight_name = w.name;
  bs.log_c.resize(n + 1);
  double mode_hint = 1.0;
  double prev_mode = 0.0;
  for (int j = 0; j <= n; ++j) {
    double mode;
    try {
      mode = find_mode(w, n, j, mode_hint);
    } catch (const std::exception& e) {
      throw std::runtime_error("basis_scale: j=" + std::to_string(j) + ": " + e.what());
    }
    if (mode < prev_mode * (1.0 - 1e-12)) {
      throw std::runtime_error("basis_scale: Laplace mode not monotone at j=" + std::to_string(j));
    }
    bs.log_c[j] = log_norm_constant_at(w, n, j, mode, rel_tol);
    if (!std::isfinite(bs.log_c[j])) {
      throw std::runtime_error("basis_scale: non-finite constant at j=" + std::to_string(j));
    }
    prev_mode = mode;
    mode_hint = mode;
  }
  return bs;
}

std::vector<std::pair<int, double>> coef_limit_check(const RadialWeight& w,
                                                     const std::vector<int>& degrees) {
  std::vector<std::pair<int, double>> out;
  out.reserve(degrees.size());
  int prev = 0;
  for (int n : degrees) {
    if (n <= prev) {
      throw std::invalid_argument("coef_limit_check: degrees must be increasing");
    }
    prev = n;
    out.emplace_back(n, log_norm_constant(w, n, n) / n);
  }
  return out;
}

double envelope_fraction(const RadialWeight& w, const EquilibriumResult& eq,
                         const BasisScale& bs, double z_abs, double eps) {
  if (!(z_abs > 0.0) || !(eps > 0.0)) {
    throw std::invalid_argument("envelope_fraction: z_abs > 0 and eps > 0 required");
  }
  (void)w;
  const double threshold = bs.n * (eq.potential(z_abs) - 3.0 * eps);
  const double logz = std::log(z_abs);
  int count = 0;
  for (int j = 0; j <= bs.n; ++j) {
    if (bs.log_c[j] + j * logz > threshold) ++count;
  }
  return static_cast<double>(count) / (bs.n + 1);
}

}  // namespace wrz

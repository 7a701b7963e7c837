#include "wrz/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wrz {

namespace {

// Trims leading zeros; returns coefficients normalized by max magnitude.
std::vector<double> normalize_trim(std::span<const double> coeffs) {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d >= 0 && coeffs[d] == 0.0) --d;
  if (d < 0) {
    throw std::invalid_argument("roots: zero polynomial");
  }
  double max_abs = 0.0;
  for (int j = 0; j <= d; ++j) max_abs = std::max(max_abs, std::abs(coeffs[j]));
  std::vector<double> c(d + 1);
  for (int j = 0; j <= d; ++j) c[j] = coeffs[j] / max_abs;
  return c;
}

// Initial Aberth guesses on circles whose radii come from the upper convex
// hull of (j, log|c_j|) (Newton polygon of root magnitudes).
std::vector<std::complex<double>> newton_polygon_guesses(const std::vector<double>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<int> idx;
  std::vector<double> logs;
  for (int j = 0; j <= d; ++j) {
    if (c[j] != 0.0) {
      idx.push_back(j);
      logs.push_back(std::log(std::abs(c[j])));
    }
  }
  // Upper hull over the support (first and last support points are vertices).
  std::vector<int> hull;  // positions into idx
  for (size_t k = 0; k < idx.size(); ++k) {
    while (hull.size() >= 2) {
      const size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
      const double cross = (idx[b] - idx[a]) * (logs[k] - logs[a]) -
                           (idx[k] - idx[a]) * (logs[b] - logs[a]);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(static_cast<int>(k));
  }

  std::vector<std::complex<double>> z;
  z.reserve(d);
  // Roots at the origin when the low-order coefficients vanish.
  for (int j = 0; j < idx.front(); ++j) z.emplace_back(0.0, 0.0);
  int seg = 0;
  for (size_t h = 0; h + 1 < hull.size(); ++h, ++seg) {
    const int i1 = idx[hull[h]], i2 = idx[hull[h + 1]];
    const double l1 = logs[hull[h]], l2 = logs[hull[h + 1]];
    const int count = i2 - i1;
    const double radius = std::exp((l1 - l2) / count);
    for (int k = 0; k < count; ++k) {
      const double theta = 2.0 * M_PI * k / count + 0.4 + 0.7 * seg;
      z.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
    }
  }
  return z;
}

template <typename Real>
bool aberth_solve(const std::vector<double>& c,
                  std::vector<std::complex<double>>* out, Real tol) {
  using C = std::complex<Real>;
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<Real> cr(c.begin(), c.end());
  std::vector<C> z;
  for (const auto& g : newton_polygon_guesses(c)) {
    z.emplace_back(static_cast<Real>(g.real()), static_cast<Real>(g.imag()));
  }

  const int max_iter = 500;
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    Real max_rel = 0;
    for (int i = 0; i < d; ++i) {
      // Horner for p and p'.
      C p(cr[d], 0), dp(0, 0);
      for (int j = d - 1; j >= 0; --j) {
        dp = dp * z[i] + p;
        p = p * z[i] + cr[j];
      }
      if (p == C(0, 0)) continue;
      if (dp == C(0, 0)) {
        z[i] += C(Real(1e-8), Real(1e-8));
        max_rel = std::max(max_rel, Real(1));
        continue;
      }
      const C w = p / dp;
      C s(0, 0);
      for (int j = 0; j < d; ++j) {
        if (j != i) s += Real(1) / (z[i] - z[j]);
      }
      const C corr = w / (Real(1) - w * s);
      z[i] -= corr;
      const Real rel = std::abs(corr) / (Real(1) + std::abs(z[i]));
      if (!(rel == rel)) return false;  // NaN: diverged
      max_rel = std::max(max_rel, rel);
    }
    converged = max_rel < tol;
  }
  if (!converged) return false;

  // Residual check against the backward-error scale sum |c_j| |z|^j.
  for (int i = 0; i < d; ++i) {
    C p(cr[d], 0);
    Real b = std::abs(cr[d]);
    const Real az = std::abs(z[i]);
    for (int j = d - 1; j >= 0; --j) {
      p = p * z[i] + cr[j];
      b = b * az + std::abs(cr[j]);
    }
    const Real bound = Real(1e4) * d * std::numeric_limits<Real>::epsilon() * b;
    if (!(std::abs(p) <= std::max(bound, std::numeric_limits<Real>::min() * Real(1e6)))) {
      return false;
    }
  }

  out->resize(d);
  for (int i = 0; i < d; ++i) {
    (*out)[i] = std::complex<double>(static_cast<double>(z[i].real()),
                                     static_cast<double>(z[i].imag()));
  }
  return true;
}

}  // namespace

std::vector<std::complex<double>> aberth_roots(std::span<const double> coeffs) {
  const std::vector<double> c = normalize_trim(coeffs);
  if (c.size() <= 1) return {};
  std::vector<std::complex<double>> out;
  if (aberth_solve<double>(c, &out, 1e-13)) return out;
  if (aberth_solve<long double>(c, &out, 1e-13L)) return out;
  throw std::runtime_error("aberth_roots: no convergence after extended-precision retry");
}

std::vector<std::complex<double>> companion_roots(std::span<const double> coeffs) {
  const std::vector<double> c = normalize_trim(coeffs);
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i] / c[d];

  // Parlett-Reinsch balancing with radix-2 scaling.
  const double radix = 2.0;
  for (int pass = 0; pass < 50; ++pass) {
    bool done = true;
    for (int i = 0; i < d; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      double f = 1.0;
      const double s = row + col;
      while (col < row / radix) {
        col *= radix;
        row /= radix;
        f *= radix;
      }
      while (col >= row * radix) {
        col /= radix;
        row *= radix;
        f /= radix;
      }
      if ((row + col) < 0.95 * s && f != 1.0) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
    if (done) break;
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> out(d);
  for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()[i];
  return out;
}

int count_real_roots_companion(std::span<const double> coeffs, double tol) {
  int count = 0;
  for (const auto& z : companion_roots(coeffs)) {
    if (std::abs(z.imag()) < tol * (1.0 + std::abs(z))) ++count;
  }
  return count;
}

}  // namespace wrz

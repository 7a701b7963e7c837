#include "wrz/kernel.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace wrz {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& terms) {
  double m = kNegInf;
  for (double t : terms) m = std::max(m, t);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

}  // namespace

KernelDiagonal kernel_diagonal(const BasisScale& bs, double x) {
  const int n = bs.n;
  KernelDiagonal kd;
  kd.x = x;

  if (x == 0.0) {
    // Only the j=0,1 terms survive the derivatives.
    kd.log_K = 2.0 * bs.log_c[0];
    kd.K01_sign = 0;
    kd.log_K01_abs = kNegInf;
    kd.log_K11 = 2.0 * bs.log_c[1];
    kd.log_V = 2.0 * (bs.log_c[0] + bs.log_c[1]);
    return kd;
  }

  const double L = std::log(std::abs(x));
  std::vector<double> a(n + 1);
  for (int j = 0; j <= n; ++j) a[j] = 2.0 * bs.log_c[j] + 2.0 * j * L;

  std::vector<double> terms;
  terms.reserve(n + 1);

  terms.assign(a.begin(), a.end());
  kd.log_K = log_sum_exp(terms);

  terms.clear();
  for (int j = 1; j <= n; ++j) terms.push_back(std::log(static_cast<double>(j)) + a[j] - L);
  kd.log_K01_abs = terms.empty() ? kNegInf : log_sum_exp(terms);
  kd.K01_sign = terms.empty() ? 0 : (x > 0.0 ? 1 : -1);

  terms.clear();
  for (int j = 1; j <= n; ++j) terms.push_back(2.0 * std::log(static_cast<double>(j)) + a[j] - 2.0 * L);
  kd.log_K11 = terms.empty() ? kNegInf : log_sum_exp(terms);

  // V_n pair sum over indices whose single terms reach within the drop window
  // of the max; the (k-j)^2 factor is covered by the extra 2*log(n+1) slack.
  double a_max = kNegInf;
  for (int j = 0; j <= n; ++j) a_max = std::max(a_max, a[j]);
  const double drop = 40.0 + 2.0 * std::log(n + 1.0);
  std::vector<int> active;
  for (int j = 0; j <= n; ++j) {
    if (a[j] >= a_max - drop) active.push_back(j);
  }
  if (active.size() < 2) active.assign({0, 1});

  terms.clear();
  for (size_t ii = 0; ii < active.size(); ++ii) {
    for (size_t kk = ii + 1; kk < active.size(); ++kk) {
      const int j = active[ii], k = active[kk];
      terms.push_back(a[j] + a[k] + 2.0 * std::log(static_cast<double>(k - j)) - 2.0 * L);
    }
  }
  kd.log_V = terms.empty() ? kNegInf : log_sum_exp(terms);
  return kd;
}

double scaled_density_ratio(const BasisScale& bs, double x) {
  const KernelDiagonal kd = kernel_diagonal(bs, x);
  return std::exp(0.5 * kd.log_V - kd.log_K) / std::sqrt(static_cast<double>(bs.n));
}

}  // namespace wrz

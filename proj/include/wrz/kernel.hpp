#ifndef WRZ_KERNEL_HPP
#define WRZ_KERNEL_HPP

#include "wrz/orthonorm.hpp"

namespace wrz {

/// Log-domain Bergman kernel diagonal data at a real point x:
///   K_n(x,x)        = sum_j (c_j)^2 x^{2j}
///   K_n^{(0,1)}(x,x) = sum_j j (c_j)^2 x^{2j-1}
///   K_n^{(1,1)}(x,x) = sum_j j^2 (c_j)^2 x^{2j-2}
///   V_n(x)          = K_n K_n^{(1,1)} - (K_n^{(0,1)})^2
struct KernelDiagonal {
  double x = 0.0;
  double log_K = 0.0;
  int K01_sign = 0;          // sign of K^{(0,1)}
  double log_K01_abs = 0.0;  // -inf when K^{(0,1)} = 0
  double log_K11 = 0.0;
  double log_V = 0.0;
};

/// All sums by log-sum-exp. V_n is never formed as a difference; it is the
/// nonnegative pair sum sum_{j<k} (k-j)^2 (c_j c_k)^2 x^{2(j+k-1)}, evaluated
/// over the index window whose terms reach within ~40 log units of the max.
KernelDiagonal kernel_diagonal(const BasisScale& bs, double x);

/// (1/sqrt(n)) * sqrt(V_n)/K_n; converges to sqrt(laplacian(x)/2) in the bulk.
double scaled_density_ratio(const BasisScale& bs, double x);

}  // namespace wrz

#endif

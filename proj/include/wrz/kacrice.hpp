#ifndef WRZ_KACRICE_HPP
#define WRZ_KACRICE_HPP

#include <vector>

#include "wrz/equilibrium.hpp"
#include "wrz/kernel.hpp"
#include "wrz/orthonorm.hpp"

namespace wrz {

/// Real-zero intensity sampled on a set of points.
struct DensityCurve {
  std::vector<double> xs;
  std::vector<double> gn;
  int n = 0;
};

/// Expected number of real zeros over an interval (+-inf allowed).
struct ExpectedCount {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  int n = 0;
  double quadrature_error = 0.0;
};

/// Classical Kac sums A = sum x^{2j}, B = sum j x^{2j-1}, C = sum j^2 x^{2j-2}.
struct KacSums {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Intensity g_n(x) = (1/pi) sqrt(V_n)/K_n, zeros per unit length.
double gn_density(const BasisScale& bs, double x);

DensityCurve density_curve(const BasisScale& bs, const std::vector<double>& xs);

/// Adaptive quadrature of g_n over [lo, hi]; infinite endpoints are handled by
/// a geometric substitution beyond the basis scale radius.
ExpectedCount expected_real_zeros(const BasisScale& bs, double lo, double hi);

KacSums kac_sums(int n, double x);

/// Kac's expected real-zero count for c_j = 1 Gaussian polynomials, evaluated
/// through the cancellation-free form A C - B^2 = A^2 (log A)'' in the
/// log-radius variable. Valid for any n >= 1 (including 10^6 and beyond).
ExpectedCount kac_classical(int n);

struct LimitComparisonRow {
  int n = 0;
  double expected = 0.0;
  double expected_over_sqrt_n = 0.0;
  double limit = 0.0;
  double rel_gap = 0.0;
  bool degenerate_bulk = false;
};

std::vector<LimitComparisonRow> limit_comparison_report(const RadialWeight& w,
                                                        const std::vector<int>& degrees);

}  // namespace wrz

#endif

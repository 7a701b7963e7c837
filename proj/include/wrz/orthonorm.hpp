#ifndef WRZ_ORTHONORM_HPP
#define WRZ_ORTHONORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "wrz/equilibrium.hpp"
#include "wrz/weights.hpp"

namespace wrz {

/// Log normalizing constants of the monomial basis at degree n:
/// log_c[j] = log c_j^n where (c_j^n)^{-2} = \int_C |z|^{2j} e^{-2n phi} dz.
/// Kept in log domain end to end; (c_j^n)^2 overflows double for moderate n.
struct BasisScale {
  int n = 0;
  std::vector<double> log_c;
  std::string weight_name;
};

/// Single constant: -0.5 * log(2*pi*\int_0^inf r^{2j+1} e^{-2n phi(r)} dr),
/// computed by Laplace-windowed adaptive quadrature in s = log r around the
/// integrand mode r* solving r*dphi(r) = (j+1)/n.
/// Throws std::runtime_error when the mode does not exist (non-integrable tail).
double log_norm_constant(const RadialWeight& w, int n, int j,
                         double rel_tol = 1e-13);

/// All constants for degree n, warm-starting mode brackets from j-1.
/// Asserts the Laplace-mode monotonicity r*(j) nondecreasing in j.
BasisScale basis_scale(const RadialWeight& w, int n, double rel_tol = 1e-13);

/// Sequence (n, (1/n) log c_n^n); its limit is the modified Robin constant.
std::vector<std::pair<int, double>> coef_limit_check(const RadialWeight& w,
                                                     const std::vector<int>& degrees);

/// Fraction of indices j with log_c[j] + j*log(z_abs) > n*(U_phi(z_abs) - 3*eps).
double envelope_fraction(const RadialWeight& w, const EquilibriumResult& eq,
                         const BasisScale& bs, double z_abs, double eps);

}  // namespace wrz

#endif

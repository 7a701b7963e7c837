#ifndef WRZ_ROOTS_HPP
#define WRZ_ROOTS_HPP

#include <complex>
#include <span>
#include <vector>

namespace wrz {

/// All complex roots (with multiplicity) of sum_j coeffs[j] x^j by
/// Aberth-Ehrlich simultaneous iteration. Initial guesses come from the
/// Newton polygon of the coefficient magnitudes. Runs in double precision
/// with one long-double retry; throws std::runtime_error on non-convergence.
std::vector<std::complex<double>> aberth_roots(std::span<const double> coeffs);

/// Eigenvalues of the balanced companion matrix (cross-check oracle).
std::vector<std::complex<double>> companion_roots(std::span<const double> coeffs);

/// Real-root count from companion eigenvalues with the tolerance
/// |Im(lambda)| < tol * (1 + |lambda|).
int count_real_roots_companion(std::span<const double> coeffs, double tol = 1e-9);

}  // namespace wrz

#endif

#ifndef WRZ_STURM_HPP
#define WRZ_STURM_HPP

#include <span>

namespace wrz {

/// Number of distinct real roots of the polynomial sum_j coeffs[j] x^j on
/// (-inf, inf), counted exactly.
///
/// Each coefficient is rounded to precision_bits significant bits of its own
/// magnitude (an exactly dyadic, relative 2^-precision_bits perturbation);
/// the count is then exact for the rounded polynomial (Sturm chain over
/// arbitrary-precision integers via a subresultant PRS, sign variations
/// compared at -inf and +inf).
///
/// Throws std::invalid_argument if all coefficients round to zero.
int count_real_roots_dyadic(std::span<const double> coeffs, int precision_bits = 30);

/// Same contract and identical dyadic rounding as count_real_roots_dyadic,
/// but counted by exact integer Descartes bisection (Vincent-Collins-Akritas
/// with power-of-two scalings and Taylor shifts). Intermediate integers stay
/// far smaller than in the subresultant chain, so this is the fast path for
/// large degrees; an interval the bisection cannot resolve (a multiple root)
/// falls back internally to the Sturm chain, so the result always agrees with
/// count_real_roots_dyadic.
int count_real_roots_descartes(std::span<const double> coeffs, int precision_bits = 30);

/// Distinct real roots in the open symmetric interval
/// (-half_width, half_width), with the same dyadic coefficient rounding as
/// count_real_roots_dyadic; exact because any double half_width is itself
/// dyadic (short-mantissa values such as 0.75 or 1.0 keep the scaling cheap).
/// Throws std::runtime_error if a multiple root inside the interval prevents
/// the bisection from resolving.
int count_real_roots_descartes_within(std::span<const double> coeffs,
                                      double half_width, int precision_bits = 30);

}  // namespace wrz

#endif

#ifndef WRZ_EQUILIBRIUM_HPP
#define WRZ_EQUILIBRIUM_HPP

#include <vector>

#include "wrz/weights.hpp"

namespace wrz {

/// Weight sampled in logarithmic coordinate: big_phi[i] = phi(exp(s_grid[i])).
struct LogCoordinateProfile {
  std::vector<double> s_grid;   // strictly increasing, uniform spacing
  std::vector<double> big_phi;
};

LogCoordinateProfile make_log_profile(const RadialWeight& w, double r_min,
                                      double r_max, int n_points);

/// u(t) = sup_s (t*s - Phi(s)) over the profile grid, refined by three-point
/// parabolic interpolation around the discrete argmax.
struct LegendreTransform {
  std::vector<double> t_grid;
  std::vector<double> u_values;
  bool left_boundary_sup = false;  // sup attained at the left grid edge
};

/// Throws std::runtime_error if the argmax sits at the right grid boundary
/// (s-range too narrow). A left-boundary argmax is allowed only when
/// allow_left_boundary is set; it is flagged in the result.
LegendreTransform legendre_fenchel(const LogCoordinateProfile& profile,
                                   const std::vector<double>& t_grid,
                                   bool allow_left_boundary = false);

struct RadiusInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Equilibrium potential, support radii, bulk and equilibrium measure of a
/// radial weight. Immutable after construction.
struct EquilibriumResult {
  RadialWeight weight;
  double r0 = 0.0;   // inner support radius
  double R0 = 0.0;   // outer support radius
  double envelope_r0 = 0.0;  // slope-crossing estimates from the grid envelope
  double envelope_R0 = 0.0;
  std::vector<RadiusInterval> bulk_intervals;  // {laplacian > 0} inside [r0,R0]
  double robin_constant = 0.0;

  std::vector<double> s_grid;    // envelope sample grid (log radius)
  std::vector<double> envelope;  // Phi_phi on s_grid
  bool contact_is_interval = true;  // r*dphi(r) monotone; piecewise forms exact

  /// U_phi at |z| = r.
  double potential(double r) const;
  /// Density of mu_e against r dr dtheta: (1/2pi)*laplacian(r) on [r0, R0].
  double measure_radial_density(double r) const;
};

/// Computes the envelope via the double Legendre-Fenchel transform with slopes
/// restricted to [0,1]; grid spans [log r_min, log r_max] chosen from bisection
/// guesses of r*dphi(r) in {0,1}. For circular weights r0, R0 are the closed
/// forms (alpha/beta)^(1/beta) and ((1+alpha)/beta)^(1/beta).
EquilibriumResult equilibrium_potential(const RadialWeight& w, int grid_points = 4096);
EquilibriumResult equilibrium_potential(const RadialWeight& w,
                                        const LogCoordinateProfile& grid);

/// Modified Robin constant F_phi = I(mu_e) - \int phi dmu_e, by radial
/// reduction of the logarithmic energy (log max(r, rho) kernel).
double robin_constant(const RadialWeight& w, const EquilibriumResult& eq,
                      int quad_points = 512);

/// (2/pi) * \int over bulk radii of sqrt(laplacian(r)/2) dr; the two symmetric
/// real half-lines contribute the factor 2.
double limit_density_integral(const RadialWeight& w, const EquilibriumResult& eq);

/// mu_e mass of the annulus a <= |z| <= b, in [0, 1].
double measure_mass(const EquilibriumResult& eq, double a, double b);

}  // namespace wrz

#endif

#ifndef WRZ_WEIGHTS_HPP
#define WRZ_WEIGHTS_HPP

#include <functional>
#include <optional>
#include <string>

namespace wrz {

/// Parameters of the circular weight family phi(r) = -alpha*log(r) + r^beta,
/// with beta > alpha >= 0.
struct CircularWeightParams {
  double alpha = 0.0;
  double beta = 2.0;
};

/// A radially symmetric weight r -> phi(r) together with its first radial
/// derivative and two-dimensional Laplacian phi''(r) + phi'(r)/r.
///
/// growth_margin (epsilon) and growth_radius (R_g) declare the radius beyond
/// which phi(r) >= (1+epsilon)*log(r) is claimed to hold; check_growth
/// validates the claim on a geometric grid.
struct RadialWeight {
  std::string name;
  std::function<double(double)> phi;
  std::function<double(double)> dphi;
  std::function<double(double)> laplacian;
  double growth_margin = 1.0;
  double growth_radius = 2.0;
  // Set for weights built by make_circular; enables closed-form shortcuts
  // in the equilibrium module.
  std::optional<CircularWeightParams> circular;
};

struct GrowthReport {
  bool ok = false;
  double min_margin = 0.0;  // min over samples of phi(r) - (1+eps)*log(r)
  double argmin_radius = 0.0;
};

/// phi(r) = -alpha*log(r) + r^beta. Throws std::invalid_argument unless
/// beta > alpha >= 0.
RadialWeight make_circular(const CircularWeightParams& params);

/// phi(r) = r^2/2 (scaled Weyl polynomials).
RadialWeight make_weyl();

/// Samples phi(r) - (1+eps)*log(r) on a geometric grid over
/// [growth_radius, r_max]. Requires r_max > growth_radius and samples >= 2.
GrowthReport check_growth(const RadialWeight& w, double r_max, int samples);

/// Parses a CLI weight spec: "weyl" or "circular:alpha=<f>,beta=<f>"
/// (case-insensitive). Throws std::invalid_argument on malformed input.
RadialWeight parse_weight_spec(const std::string& spec);

}  // namespace wrz

#endif

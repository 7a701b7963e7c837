#include "wrz/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wrz/quadrature.hpp"

namespace wrz {

namespace {

// Solves f(r) = target for increasing f by bisection on [lo, hi].
double bisect_increasing(const std::function<double(double)>& f, double lo,
                         double hi, double target) {
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo > 0.0 || fhi < 0.0) {
    throw std::runtime_error("bisect_increasing: target not bracketed");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) - target <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Inner/outer support radius guesses from r*dphi(r) in {0, 1}; valid when
// r*dphi(r) is increasing, which holds for every built-in weight.
void support_guesses(const RadialWeight& w, double* r0, double* R0) {
  auto f = [&w](double r) { return r * w.dphi(r); };
  const double r_lo = 1e-12;
  double r_hi = 1.0;
  while (f(r_hi) < 1.0 && r_hi < 1e8) r_hi *= 2.0;

  *r0 = (f(r_lo) >= 0.0) ? 0.0 : bisect_increasing(f, r_lo, r_hi, 0.0);
  *R0 = bisect_increasing(f, std::max(*r0, r_lo), r_hi, 1.0);
}

// Max over the grid of t*s - Phi(s), refined by a parabola through the argmax
// and its neighbours. Returns {value, at_left, at_right}.
struct SupResult {
  double value;
  bool at_left;
  bool at_right;
};

SupResult grid_sup(const std::vector<double>& xs, const std::vector<double>& hs) {
  size_t k = 0;
  for (size_t i = 1; i < hs.size(); ++i) {
    if (hs[i] > hs[k]) k = i;
  }
  SupResult out{hs[k], k == 0, k + 1 == hs.size()};
  if (!out.at_left && !out.at_right) {
    const double h0 = hs[k - 1], h1 = hs[k], h2 = hs[k + 1];
    const double denom = h0 - 2.0 * h1 + h2;
    if (denom < 0.0) {
      const double d = 0.5 * (h0 - h2) / denom;  // vertex offset in grid units
      if (std::abs(d) <= 1.0) {
        out.value = h1 - 0.25 * (h0 - h2) * d;
      }
    }
  }
  (void)xs;
  return out;
}

}  // namespace

LogCoordinateProfile make_log_profile(const RadialWeight& w, double r_min,
                                      double r_max, int n_points) {
  if (!(r_min > 0.0) || !(r_max > r_min) || n_points < 2) {
    throw std::invalid_argument("make_log_profile: need 0 < r_min < r_max, n >= 2");
  }
  LogCoordinateProfile p;
  p.s_grid.resize(n_points);
  p.big_phi.resize(n_points);
  const double s0 = std::log(r_min);
  const double s1 = std::log(r_max);
  for (int i = 0; i < n_points; ++i) {
    const double s = s0 + (s1 - s0) * i / (n_points - 1);
    p.s_grid[i] = s;
    p.big_phi[i] = w.phi(std::exp(s));
    if (!std::isfinite(p.big_phi[i])) {
      throw std::runtime_error("make_log_profile: non-finite weight value");
    }
  }
  return p;
}

LegendreTransform legendre_fenchel(const LogCoordinateProfile& profile,
                                   const std::vector<double>& t_grid,
                                   bool allow_left_boundary) {
  LegendreTransform lt;
  lt.t_grid = t_grid;
  lt.u_values.resize(t_grid.size());
  std::vector<double> h(profile.s_grid.size());
  for (size_t ti = 0; ti < t_grid.size(); ++ti) {
    const double t = t_grid[ti];
    for (size_t i = 0; i < h.size(); ++i) {
      h[i] = t * profile.s_grid[i] - profile.big_phi[i];
    }
    const SupResult sup = grid_sup(profile.s_grid, h);
    if (sup.at_right) {
      throw std::runtime_error("legendre_fenchel: sup at right grid boundary; s-range too narrow");
    }
    if (sup.at_left) {
      if (!allow_left_boundary) {
        throw std::runtime_error("legendre_fenchel: sup at left grid boundary; s-range too narrow");
      }
      lt.left_boundary_sup = true;
    }
    lt.u_values[ti] = sup.value;
  }
  return lt;
}

EquilibriumResult equilibrium_potential(const RadialWeight& w, int grid_points) {
  double r0g = 0.0, R0g = 1.0;
  support_guesses(w, &r0g, &R0g);
  const double r_min = std::max(1e-6, 0.01 * r0g);
  const double r_max = 10.0 * R0g;
  return equilibrium_potential(w, make_log_profile(w, r_min, r_max, grid_points));
}

EquilibriumResult equilibrium_potential(const RadialWeight& w,
                                        const LogCoordinateProfile& grid) {
  EquilibriumResult eq;
  eq.weight = w;
  eq.s_grid = grid.s_grid;

  // Double Legendre-Fenchel transform, slopes restricted to [0, 1].
  // Quadratic spacing: the sup over s at slope t has width ~t in the log
  // coordinate, so small slopes need a proportionally finer t-grid.
  const int nt = 2049;
  std::vector<double> t_grid(nt);
  for (int i = 0; i < nt; ++i) {
    const double u = static_cast<double>(i) / (nt - 1);
    t_grid[i] = u * u;
  }
  const LegendreTransform lt = legendre_fenchel(grid, t_grid, /*allow_left_boundary=*/true);

  eq.envelope.resize(grid.s_grid.size());
  LogCoordinateProfile uprof;
  uprof.s_grid = lt.t_grid;
  uprof.big_phi = lt.u_values;
  std::vector<double> h(nt);
  for (size_t i = 0; i < grid.s_grid.size(); ++i) {
    const double s = grid.s_grid[i];
    for (int ti = 0; ti < nt; ++ti) {
      h[ti] = lt.t_grid[ti] * s - lt.u_values[ti];
    }
    eq.envelope[i] = grid_sup(lt.t_grid, h).value;  // boundary slopes 0,1 are valid here
  }

  // Slope crossings of the discrete envelope at thresholds near 0 and 1.
  const size_t n = eq.envelope.size();
  std::vector<double> smid(n - 1), slope(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    smid[i] = 0.5 * (grid.s_grid[i] + grid.s_grid[i + 1]);
    slope[i] = (eq.envelope[i + 1] - eq.envelope[i]) /
               (grid.s_grid[i + 1] - grid.s_grid[i]);
  }
  auto crossing = [&](double level) -> double {
    for (size_t i = 0; i + 1 < slope.size(); ++i) {
      if (slope[i] <= level && slope[i + 1] > level) {
        const double f = (level - slope[i]) / (slope[i + 1] - slope[i]);
        return std::exp(smid[i] + f * (smid[i + 1] - smid[i]));
      }
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
  eq.envelope_r0 = crossing(1e-6);
  if (std::isnan(eq.envelope_r0)) {
    eq.envelope_r0 = (slope.front() > 1e-6) ? std::exp(grid.s_grid.front()) : 0.0;
  }
  eq.envelope_R0 = crossing(1.0 - 1e-6);
  if (std::isnan(eq.envelope_R0)) {
    throw std::runtime_error("equilibrium_potential: envelope slope never reaches 1; grid too narrow");
  }

  // Definitive support radii: closed forms for circular weights, otherwise
  // bisection on r*dphi(r) when that map is monotone, else the envelope.
  if (w.circular) {
    const double a = w.circular->alpha, b = w.circular->beta;
    eq.r0 = std::pow(a / b, 1.0 / b);
    eq.R0 = std::pow((1.0 + a) / b, 1.0 / b);
    eq.contact_is_interval = true;
  } else {
    bool monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
      const double r = std::exp(grid.s_grid[i]);
      const double f = r * w.dphi(r);
      if (f < prev - 1e-9 * (1.0 + std::abs(prev))) monotone = false;
      prev = f;
    }
    eq.contact_is_interval = monotone;
    if (monotone) {
      support_guesses(w, &eq.r0, &eq.R0);
    } else {
      eq.r0 = eq.envelope_r0;
      eq.R0 = eq.envelope_R0;
    }
  }

  // Bulk: subintervals of [r0, R0] where the Laplacian is strictly positive.
  {
    const int scan = 2048;
    const double lo = eq.r0, hi = eq.R0;
    auto pos = [&](double r) { return w.laplacian(r) > 0.0; };
    std::vector<double> rs(scan);
    for (int i = 0; i < scan; ++i) {
      rs[i] = lo + (hi - lo) * (i + 0.5) / scan;  // open nodes, never r = 0
    }
    int i = 0;
    while (i < scan) {
      while (i < scan && !pos(rs[i])) ++i;
      if (i >= scan) break;
      int j = i;
      while (j + 1 < scan && pos(rs[j + 1])) ++j;
      RadiusInterval iv;
      iv.lo = (i == 0) ? lo : 0.5 * (rs[i - 1] + rs[i]);
      iv.hi = (j == scan - 1) ? hi : 0.5 * (rs[j] + rs[j + 1]);
      eq.bulk_intervals.push_back(iv);
      i = j + 1;
    }
  }

  eq.robin_constant = robin_constant(w, eq);
  return eq;
}

double EquilibriumResult::potential(double r) const {
  if (!(r > 0.0)) {
    throw std::invalid_argument("potential: r > 0 required");
  }
  if (contact_is_interval) {
    if (r >= R0) return std::log(r) + weight.phi(R0) - std::log(R0);
    if (r0 > 0.0 && r <= r0) return weight.phi(r0);
    return weight.phi(r);
  }
  // General case: interpolate the grid envelope in log coordinate.
  const double s = std::log(r);
  if (s <= s_grid.front()) return envelope.front();
  if (s >= s_grid.back()) return envelope.back() + (s - s_grid.back());
  const auto it = std::upper_bound(s_grid.begin(), s_grid.end(), s);
  const size_t i = static_cast<size_t>(it - s_grid.begin()) - 1;
  const double f = (s - s_grid[i]) / (s_grid[i + 1] - s_grid[i]);
  return envelope[i] + f * (envelope[i + 1] - envelope[i]);
}

double EquilibriumResult::measure_radial_density(double r) const {
  if (r < r0 || r > R0) return 0.0;
  return weight.laplacian(r) / (2.0 * M_PI);
}

double measure_mass(const EquilibriumResult& eq, double a, double b) {
  if (!(a >= 0.0) || !(b >= a)) {
    throw std::invalid_argument("measure_mass: need 0 <= a <= b");
  }
  const double lo = std::max(a, eq.r0);
  const double hi = std::min(b, eq.R0);
  if (hi <= lo) return 0.0;
  if (eq.weight.circular) {
    const double beta = eq.weight.circular->beta;
    const double m = beta * (std::pow(hi, beta) - std::pow(lo, beta));
    return std::clamp(m, 0.0, 1.0);
  }
  const auto& w = eq.weight;
  const QuadResult q = adaptive_integrate(
      [&w](double r) { return r * w.laplacian(r); }, lo, hi, 1e-12, 1e-14);
  return std::clamp(q.value, 0.0, 1.0);
}

double robin_constant(const RadialWeight& w, const EquilibriumResult& eq,
                      int quad_points) {
  if (quad_points < 64) {
    throw std::invalid_argument("robin_constant: quad_points >= 64 required");
  }
  const double lo = eq.r0, hi = eq.R0;
  // Radial marginal m(rho) = rho * laplacian(rho) on [r0, R0]; M is its CDF.
  auto m = [&w](double rho) { return rho * w.laplacian(rho); };
  const double total = measure_mass(eq, lo, hi);
  if (!(total > 0.0)) {
    throw std::runtime_error("robin_constant: degenerate equilibrium measure");
  }
  // For radial nu: \int log|z-w| dnu(w) at |z|=r equals \int log max(r,rho),
  // so the double integral collapses to 2 \int m(rho) log(rho) M(rho) drho.
  //
  // Composite GL15 over fixed panels, with the CDF M accumulated at the
  // ascending nodes by short adaptive integrals between neighbours. Keeping
  // the outer rule non-adaptive avoids nested refinement (the inner CDF
  // carries small quadrature noise that an adaptive outer rule would chase).
  const int panels = std::max(4, quad_points / 15);
  double cdf = 0.0;       // M at the last visited point
  double prev_rho = lo;   // that point
  double int_log = 0.0;   // \int m log(rho) M drho
  double int_phi = 0.0;   // \int m phi drho
  for (int p = 0; p < panels; ++p) {
    const double a = lo + (hi - lo) * p / panels;
    const double b = lo + (hi - lo) * (p + 1) / panels;
    double xs[15], ws[15];
    gl15_nodes(a, b, xs, ws);
    for (int i = 0; i < 15; ++i) {
      cdf += adaptive_integrate(m, prev_rho, xs[i], 1e-12, 1e-15).value;
      prev_rho = xs[i];
      const double mi = m(xs[i]);
      int_log += ws[i] * mi * std::log(xs[i]) * cdf;
      int_phi += ws[i] * mi * w.phi(xs[i]);
    }
  }
  const double energy_log = 2.0 * int_log / (total * total);
  const double mean_phi = int_phi / total;
  // F = I(mu) - \int phi dmu = -\iint log|z-w| + \int phi dmu.
  return -energy_log + mean_phi;
}

double limit_density_integral(const RadialWeight& w, const EquilibriumResult& eq) {
  double sum = 0.0;
  for (const RadiusInterval& iv : eq.bulk_intervals) {
    sum += adaptive_integrate(
               [&w](double r) { return std::sqrt(0.5 * w.laplacian(r)); },
               iv.lo, iv.hi, 1e-10, 1e-13)
               .value;
  }
  return 2.0 / M_PI * sum;
}

}  // namespace wrz

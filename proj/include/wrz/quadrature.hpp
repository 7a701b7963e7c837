#ifndef WRZ_QUADRATURE_HPP
#define WRZ_QUADRATURE_HPP

#include <functional>

namespace wrz {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

/// 15-point Gauss-Legendre rule on [a, b].
double integrate_gl15(const std::function<double(double)>& f, double a, double b);

/// The 15 GL nodes and weights on [a, b], in ascending node order. Useful for
/// composite rules that must evaluate auxiliary running quantities (CDFs) at
/// the quadrature nodes.
void gl15_nodes(double a, double b, double xs[15], double ws[15]);

/// Adaptive bisected GL15 on [a, b]. A panel is accepted when the whole-panel
/// estimate agrees with the sum of its halves within the tolerances.
QuadResult adaptive_integrate(const std::function<double(double)>& f, double a,
                              double b, double rel_tol = 1e-12,
                              double abs_tol = 0.0, int max_depth = 48);

}  // namespace wrz

#endif

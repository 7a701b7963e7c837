#include "wrz/quadrature.hpp"

#include <array>
#include <cmath>

namespace wrz {

namespace {

// Abscissae/weights for 15-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGl15X = {
    0.0,
    0.2011940939974345223006283,
    0.3941513470775633698972074,
    0.5709721726085388475372267,
    0.7244177313601700474161861,
    0.8482065834104272162006483,
    0.9372733924007059043077589,
    0.9879925180204854284895657,
};
constexpr std::array<double, 8> kGl15W = {
    0.2025782419255612728806202,
    0.1984314853271115764561183,
    0.1861610000155622110268006,
    0.1662692058169939335532009,
    0.1395706779261543144478048,
    0.1071592204671719350118695,
    0.0703660474881081247092674,
    0.0307532419961172683546284,
};

struct Accum {
  double value = 0.0;
  double err = 0.0;
  bool ok = true;
};

void refine(const std::function<double(double)>& f, double a, double b,
            double whole, double rel_tol, double abs_tol, int depth, Accum* acc) {
  const double m = 0.5 * (a + b);
  const double left = integrate_gl15(f, a, m);
  const double right = integrate_gl15(f, m, b);
  const double delta = left + right - whole;
  const double tol = std::max(abs_tol, rel_tol * std::abs(left + right));
  if (std::abs(delta) <= tol || depth <= 0) {
    acc->value += left + right;
    acc->err += std::abs(delta);
    if (depth <= 0 && std::abs(delta) > tol) acc->ok = false;
    return;
  }
  refine(f, a, m, left, rel_tol, 0.5 * abs_tol, depth - 1, acc);
  refine(f, m, b, right, rel_tol, 0.5 * abs_tol, depth - 1, acc);
}

}  // namespace

double integrate_gl15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = kGl15W[0] * f(c);
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kGl15X[i];
    sum += kGl15W[i] * (f(c + dx) + f(c - dx));
  }
  return h * sum;
}

void gl15_nodes(double a, double b, double xs[15], double ws[15]) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  for (int i = 0; i < 7; ++i) {
    xs[i] = c - h * kGl15X[7 - i];
    ws[i] = h * kGl15W[7 - i];
  }
  xs[7] = c;
  ws[7] = h * kGl15W[0];
  for (int i = 8; i < 15; ++i) {
    xs[i] = c + h * kGl15X[i - 7];
    ws[i] = h * kGl15W[i - 7];
  }
}

QuadResult adaptive_integrate(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, double abs_tol,
                              int max_depth) {
  Accum acc;
  const double whole = integrate_gl15(f, a, b);
  refine(f, a, b, whole, rel_tol, abs_tol, max_depth, &acc);
  return {acc.value, acc.err, acc.ok};
}

}  // namespace wrz

#include "wrz/weights.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wrz {

RadialWeight make_circular(const CircularWeightParams& params) {
  const double alpha = params.alpha;
  const double beta = params.beta;
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("circular weight requires alpha >= 0");
  }
  if (!(beta > alpha)) {
    throw std::invalid_argument("circular weight requires beta > alpha >= 0");
  }

  RadialWeight w;
  std::ostringstream name;
  name << "circular:alpha=" << alpha << ",beta=" << beta;
  w.name = name.str();
  w.phi = [alpha, beta](double r) { return -alpha * std::log(r) + std::pow(r, beta); };
  w.dphi = [alpha, beta](double r) { return -alpha / r + beta * std::pow(r, beta - 1.0); };
  w.laplacian = [beta](double r) { return beta * beta * std::pow(r, beta - 2.0); };
  w.circular = params;

  // Default margin; the growth inequality phi(r) - (1+eps) log r >= 0 holds
  // eventually for any eps since r^beta dominates. Pick the radius where the
  // margin is comfortably positive and increasing.
  w.growth_margin = std::min(1.0, beta / 2.0);
  double r = 2.0;
  const double need = 1.0 + w.growth_margin + alpha;
  while (std::pow(r, beta) < 2.0 * need * std::log(r) && r < 1e6) {
    r *= 1.25;
  }
  w.growth_radius = r;
  return w;
}

RadialWeight make_weyl() {
  RadialWeight w;
  w.name = "weyl";
  w.phi = [](double r) { return 0.5 * r * r; };
  w.dphi = [](double r) { return r; };
  w.laplacian = [](double) { return 2.0; };
  w.growth_margin = 1.0;
  w.growth_radius = 2.0;
  return w;
}

GrowthReport check_growth(const RadialWeight& w, double r_max, int samples) {
  if (!(r_max > w.growth_radius)) {
    throw std::invalid_argument("check_growth: r_max must exceed growth_radius");
  }
  if (samples < 2) {
    throw std::invalid_argument("check_growth: samples >= 2 required");
  }
  GrowthReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  const double lo = std::log(w.growth_radius);
  const double hi = std::log(r_max);
  for (int i = 0; i < samples; ++i) {
    const double s = lo + (hi - lo) * i / (samples - 1);
    const double r = std::exp(s);
    const double margin = w.phi(r) - (1.0 + w.growth_margin) * std::log(r);
    if (margin < rep.min_margin) {
      rep.min_margin = margin;
      rep.argmin_radius = r;
    }
  }
  rep.ok = rep.min_margin >= 0.0;
  return rep;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_kv(const std::string& body, const std::string& key) {
  // body looks like "alpha=1,beta=2"
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("weight spec: expected key=value, got '" + item + "'");
    }
    if (item.substr(0, eq) == key) {
      size_t used = 0;
      const std::string val = item.substr(eq + 1);
      double x = std::stod(val, &used);
      if (used != val.size()) {
        throw std::invalid_argument("weight spec: bad float '" + val + "'");
      }
      return x;
    }
  }
  throw std::invalid_argument("weight spec: missing parameter '" + key + "'");
}

}  // namespace

RadialWeight parse_weight_spec(const std::string& spec) {
  const std::string s = lower(spec);
  if (s == "weyl") {
    return make_weyl();
  }
  const std::string prefix = "circular:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string body = s.substr(prefix.size());
    CircularWeightParams p;
    p.alpha = parse_kv(body, "alpha");
    p.beta = parse_kv(body, "beta");
    return make_circular(p);  // enforces beta > alpha >= 0
  }
  throw std::invalid_argument("unknown weight spec '" + spec +
                              "' (expected 'weyl' or 'circular:alpha=<f>,beta=<f>')");
}

}  // namespace wrz

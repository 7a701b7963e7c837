#include "wrz/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "wrz/roots.hpp"
#include "wrz/sturm.hpp"

namespace wrz {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kSqrt3 = std::sqrt(3.0);

int worker_count() {
  if (const char* env = std::getenv("WRZ_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

CoefficientDistribution CoefficientDistribution::gaussian() {
  CoefficientDistribution d;
  d.kind = Kind::gaussian;
  d.label = "gaussian";
  return d;
}

CoefficientDistribution CoefficientDistribution::rademacher() {
  CoefficientDistribution d;
  d.kind = Kind::rademacher;
  d.label = "rademacher";
  return d;
}

CoefficientDistribution CoefficientDistribution::uniform_sym() {
  CoefficientDistribution d;
  d.kind = Kind::uniform_sym;
  d.label = "uniform";
  return d;
}

CoefficientDistribution CoefficientDistribution::discrete(std::vector<double> values,
                                                          std::vector<double> probs) {
  if (values.size() != probs.size() || values.size() < 2) {
    throw std::invalid_argument("discrete distribution: need >= 2 (value, prob) pairs");
  }
  double psum = 0.0, mean = 0.0, var = 0.0;
  int support = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (probs[i] < 0.0) throw std::invalid_argument("discrete distribution: negative probability");
    if (probs[i] > 0.0) ++support;
    psum += probs[i];
    mean += probs[i] * values[i];
  }
  for (size_t i = 0; i < values.size(); ++i) var += probs[i] * values[i] * values[i];
  if (std::abs(psum - 1.0) > 1e-12 || std::abs(mean) > 1e-12 ||
      std::abs(var - 1.0) > 1e-12) {
    throw std::invalid_argument("discrete distribution: requires sum p = 1, mean 0, variance 1");
  }
  if (support < 2) {
    throw std::invalid_argument("discrete distribution: degenerate (single atom)");
  }
  CoefficientDistribution d;
  d.kind = Kind::discrete;
  d.values = std::move(values);
  d.probs = std::move(probs);
  d.label = "discrete";
  return d;
}

CoefficientDistribution CoefficientDistribution::parse(const std::string& name) {
  if (name == "gaussian") return gaussian();
  if (name == "rademacher") return rademacher();
  if (name == "uniform") return uniform_sym();
  throw std::invalid_argument("unknown distribution '" + name +
                              "' (expected gaussian|rademacher|uniform)");
}

double CoefficientDistribution::sample(TrialRng& rng) const {
  switch (kind) {
    case Kind::gaussian:
      return rng.next_gaussian();
    case Kind::rademacher:
      return (rng.next_u64() & 1ULL) ? 1.0 : -1.0;
    case Kind::uniform_sym:
      return kSqrt3 * (2.0 * rng.next_uniform() - 1.0);
    case Kind::discrete: {
      const double u = rng.next_uniform();
      double acc = 0.0;
      for (size_t i = 0; i < values.size(); ++i) {
        acc += probs[i];
        if (u < acc) return values[i];
      }
      return values.back();
    }
  }
  return 0.0;
}

SampledPolynomial sample_polynomial(const BasisScale& bs,
                                    const CoefficientDistribution& dist,
                                    std::uint64_t campaign_seed, std::uint64_t trial) {
  SampledPolynomial p;
  p.n = bs.n;
  p.campaign_seed = campaign_seed;
  p.trial = trial;
  p.sign.resize(bs.n + 1);
  p.log_mag.resize(bs.n + 1);
  p.normalized.resize(bs.n + 1);

  TrialRng rng(campaign_seed, trial);
  double max_log = kNegInf;
  for (int j = 0; j <= bs.n; ++j) {
    const double a = dist.sample(rng);
    if (a == 0.0) {
      p.sign[j] = 0;
      p.log_mag[j] = kNegInf;
    } else {
      p.sign[j] = a > 0.0 ? 1 : -1;
      p.log_mag[j] = std::log(std::abs(a)) + bs.log_c[j];
      max_log = std::max(max_log, p.log_mag[j]);
    }
  }
  if (max_log == kNegInf) {
    throw std::runtime_error("sample_polynomial: all coefficients zero (RNG or basis bug)");
  }
  for (int j = 0; j <= bs.n; ++j) {
    p.normalized[j] = p.sign[j] * std::exp(p.log_mag[j] - max_log);
  }
  return p;
}

int count_real_roots(const SampledPolynomial& p, int precision_bits) {
  // Both counters are exact for the identically rounded polynomial; the
  // subresultant chain's intermediate integers grow with the coefficient
  // spread (itself growing with the degree), so bisection wins at scale.
  if (static_cast<int>(p.normalized.size()) - 1 > 64) {
    return count_real_roots_descartes(p.normalized, precision_bits);
  }
  return count_real_roots_dyadic(p.normalized, precision_bits);
}

std::vector<std::complex<double>> all_complex_roots(const SampledPolynomial& p) {
  return aberth_roots(p.normalized);
}

TrialBatchReport run_batch(const BasisScale& bs, const CoefficientDistribution& dist,
                           int trials, const std::vector<RegionSpec>& regions,
                           std::uint64_t campaign_seed, const BatchOptions& opts) {
  if (trials < 1) {
    throw std::invalid_argument("run_batch: trials >= 1 required");
  }
  struct TrialOut {
    int real_count = -1;
    std::vector<double> fractions;
    bool failed = false;
  };
  std::vector<TrialOut> results(trials);

  auto run_trial = [&](int t) {
    TrialOut& out = results[t];
    try {
      const SampledPolynomial p =
          sample_polynomial(bs, dist, campaign_seed, static_cast<std::uint64_t>(t));
      if (opts.count_real) {
        const bool full_line = opts.count_lo == 0.0 && std::isinf(opts.count_hi);
        if (full_line) {
          out.real_count = count_real_roots(p, opts.precision_bits);
        } else {
          // Annulus count as a difference of exact symmetric-interval counts.
          const int hi = std::isinf(opts.count_hi)
                             ? count_real_roots(p, opts.precision_bits)
                             : count_real_roots_descartes_within(
                                   p.normalized, opts.count_hi, opts.precision_bits);
          const int lo = opts.count_lo == 0.0
                             ? 0
                             : count_real_roots_descartes_within(
                                   p.normalized, opts.count_lo, opts.precision_bits);
          out.real_count = hi - lo;
        }
      }
      if (!regions.empty()) {
        const auto roots = all_complex_roots(p);
        out.fractions.resize(regions.size(), 0.0);
        for (size_t r = 0; r < regions.size(); ++r) {
          int inside = 0;
          for (const auto& z : roots) {
            const double az = std::abs(z);
            if (az >= regions[r].lo && az <= regions[r].hi) ++inside;
          }
          out.fractions[r] =
              roots.empty() ? 0.0 : static_cast<double>(inside) / roots.size();
        }
      }
    } catch (const std::exception&) {
      out.failed = true;
    }
  };

  const int workers = std::min(worker_count(), trials);
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int t = w; t < trials; t += workers) run_trial(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Reduce in trial-index order so the report is scheduling-independent.
  TrialBatchReport rep;
  rep.trials = trials;
  rep.campaign_seed = campaign_seed;
  std::vector<std::vector<double>> region_fracs(regions.size());
  for (int t = 0; t < trials; ++t) {
    if (results[t].failed) {
      rep.failed_trials.push_back(t);
      continue;
    }
    if (opts.count_real) rep.real_root_counts.push_back(results[t].real_count);
    for (size_t r = 0; r < regions.size(); ++r) {
      region_fracs[r].push_back(results[t].fractions[r]);
    }
  }

  auto mean_stderr = [](const std::vector<double>& xs, double* mean, double* se) {
    *mean = 0.0;
    *se = 0.0;
    if (xs.empty()) return;
    *mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    if (xs.size() < 2) return;
    double ss = 0.0;
    for (double x : xs) ss += (x - *mean) * (x - *mean);
    *se = std::sqrt(ss / (xs.size() - 1)) / std::sqrt(static_cast<double>(xs.size()));
  };

  if (opts.count_real) {
    std::vector<double> counts(rep.real_root_counts.begin(), rep.real_root_counts.end());
    mean_stderr(counts, &rep.mean, &rep.stderr_mean);
  }
  for (size_t r = 0; r < regions.size(); ++r) {
    RegionStat st;
    st.lo = regions[r].lo;
    st.hi = regions[r].hi;
    mean_stderr(region_fracs[r], &st.mean_fraction, &st.stderr_fraction);
    rep.regions.push_back(st);
  }
  return rep;
}

UniversalityComparison universality_compare(const BasisScale& bs,
                                            const CoefficientDistribution& dist_a,
                                            const CoefficientDistribution& dist_b,
                                            int trials, std::uint64_t campaign_seed,
                                            const BatchOptions& opts) {
  const TrialBatchReport a = run_batch(bs, dist_a, trials, {}, campaign_seed, opts);
  const TrialBatchReport b = run_batch(bs, dist_b, trials, {}, campaign_seed + 1, opts);
  UniversalityComparison cmp;
  cmp.mean_a = a.mean;
  cmp.stderr_a = a.stderr_mean;
  cmp.mean_b = b.mean;
  cmp.stderr_b = b.stderr_mean;
  cmp.difference = a.mean - b.mean;
  cmp.combined_stderr = std::hypot(a.stderr_mean, b.stderr_mean);
  cmp.z_score = cmp.combined_stderr > 0.0 ? cmp.difference / cmp.combined_stderr : 0.0;
  return cmp;
}

}  // namespace wrz

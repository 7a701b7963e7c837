#ifndef WRZ_SAMPLING_HPP
#define WRZ_SAMPLING_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wrz/orthonorm.hpp"
#include "wrz/rng.hpp"

namespace wrz {

/// Mean-zero variance-one coefficient law with a declared 2+delta moment
/// margin. Built-ins: gaussian, rademacher (+-1), uniform_sym (uniform on
/// [-sqrt(3), sqrt(3)]), discrete(values, probs).
struct CoefficientDistribution {
  enum class Kind { gaussian, rademacher, uniform_sym, discrete };
  Kind kind = Kind::gaussian;
  std::vector<double> values;  // discrete only
  std::vector<double> probs;   // discrete only
  double moment_margin = 1.0;
  std::string label;

  static CoefficientDistribution gaussian();
  static CoefficientDistribution rademacher();
  static CoefficientDistribution uniform_sym();
  /// Validates mean 0 and variance 1 within 1e-12 and non-degeneracy.
  static CoefficientDistribution discrete(std::vector<double> values,
                                          std::vector<double> probs);
  /// Parses "gaussian" | "rademacher" | "uniform".
  static CoefficientDistribution parse(const std::string& name);

  double sample(TrialRng& rng) const;
};

/// One random polynomial f(z) = sum_j a_j c_j z^j, stored as sign/log-magnitude
/// pairs plus the max-normalized double array used by the root counters.
struct SampledPolynomial {
  int n = 0;
  std::vector<int> sign;
  std::vector<double> log_mag;     // log |a_j| + log c_j (-inf when a_j = 0)
  std::vector<double> normalized;  // signed, max |entry| = 1
  std::uint64_t campaign_seed = 0;
  std::uint64_t trial = 0;
};

SampledPolynomial sample_polynomial(const BasisScale& bs,
                                    const CoefficientDistribution& dist,
                                    std::uint64_t campaign_seed, std::uint64_t trial);

/// Exact count of distinct real roots (Sturm chain on dyadic-rounded
/// normalized coefficients).
int count_real_roots(const SampledPolynomial& p, int precision_bits = 30);

/// All n complex roots with multiplicity (Aberth-Ehrlich).
std::vector<std::complex<double>> all_complex_roots(const SampledPolynomial& p);

struct RegionSpec {
  double lo = 0.0;  // annulus lo <= |z| <= hi
  double hi = 0.0;
};

struct RegionStat {
  double lo = 0.0;
  double hi = 0.0;
  double mean_fraction = 0.0;
  double stderr_fraction = 0.0;
};

struct TrialBatchReport {
  int trials = 0;
  std::vector<int> real_root_counts;  // per successful trial, trial order
  double mean = 0.0;
  double stderr_mean = 0.0;
  std::vector<RegionStat> regions;
  std::vector<int> failed_trials;  // excluded and reported, never dropped silently
  std::uint64_t campaign_seed = 0;
};

struct BatchOptions {
  bool count_real = true;
  int precision_bits = 30;
  // Restrict real-root counting to count_lo < |x| < count_hi. Endpoints are
  // taken as exact dyadics (any double qualifies; short mantissas such as
  // 0.75 keep the exact arithmetic cheap). Defaults cover the whole line.
  double count_lo = 0.0;
  double count_hi = std::numeric_limits<double>::infinity();
};

/// Deterministic given campaign_seed, independent of worker count
/// (WRZ_THREADS caps workers; 0 = auto).
TrialBatchReport run_batch(const BasisScale& bs, const CoefficientDistribution& dist,
                           int trials, const std::vector<RegionSpec>& regions,
                           std::uint64_t campaign_seed,
                           const BatchOptions& opts = {});

struct UniversalityComparison {
  double mean_a = 0.0, stderr_a = 0.0;
  double mean_b = 0.0, stderr_b = 0.0;
  double difference = 0.0;
  double combined_stderr = 0.0;
  double z_score = 0.0;
};

/// Batch with dist_a at campaign_seed vs dist_b at campaign_seed + 1.
UniversalityComparison universality_compare(const BasisScale& bs,
                                            const CoefficientDistribution& dist_a,
                                            const CoefficientDistribution& dist_b,
                                            int trials, std::uint64_t campaign_seed,
                                            const BatchOptions& opts = {});

}  // namespace wrz

#endif

#ifndef WRZ_RNG_HPP
#define WRZ_RNG_HPP

#include <cmath>
#include <cstdint>

namespace wrz {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Per-trial deterministic stream. The state is derived from
/// (campaign_seed, trial) by the documented hash
///   state0 = splitmix64(splitmix64(campaign_seed) ^ (trial + 1)),
/// and advanced with the splitmix64 increment, so trials are reproducible
/// and independent of execution order.
class TrialRng {
 public:
  TrialRng(std::uint64_t campaign_seed, std::uint64_t trial)
      : state_(splitmix64(splitmix64(campaign_seed) ^ (trial + 1))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  /// Uniform on [0, 1).
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (pair cached).
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform();
    while (u1 <= 0.0) u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace wrz

#endif

#pragma once

#include <cmath>
#include <cstdint>

namespace fedshade {

// Counter-based deterministic random stream.
//
// Every stochastic site in the simulator derives its own stream from
// (master seed, round, client, purpose) tags, so results never depend on
// thread scheduling or on how calls interleave across modules. The
// generator is the splitmix64 finalizer applied to key + counter, which
// makes each stream a pure function of its derivation path.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : key_(mix(seed ^ kGolden)) {}

  // Derives an independent substream; chain calls to fold in several tags,
  // e.g. root.derive(round).derive(client).derive(tag::kLocalTrain).
  RngStream derive(std::uint64_t tag) const {
    RngStream out(*this);
    out.key_ = mix(key_ ^ mix(tag + kGolden));
    out.counter_ = 0;
    return out;
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n), n > 0 (Lemire's multiply-shift rejection).
  std::uint64_t below(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Standard normal via Box-Muller; consumes two uniforms per draw.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Central registry of stream purpose tags. Values are arbitrary but fixed;
// reusing one for a new purpose would silently correlate streams.
namespace stream_tag {
inline constexpr std::uint64_t kDatasetMaps = 0x01;
inline constexpr std::uint64_t kDatasetPartition = 0x02;
inline constexpr std::uint64_t kModelInit = 0x03;
inline constexpr std::uint64_t kClientSelect = 0x04;
inline constexpr std::uint64_t kLocalTrain = 0x05;
inline constexpr std::uint64_t kUploadNoise = 0x06;
inline constexpr std::uint64_t kProbe = 0x07;
inline constexpr std::uint64_t kProxyTrain = 0x08;
inline constexpr std::uint64_t kAllocatorStep = 0x09;
inline constexpr std::uint64_t kAttackEval = 0x0a;
inline constexpr std::uint64_t kDefenseInit = 0x0b;
}  // namespace stream_tag

}  // namespace fedshade

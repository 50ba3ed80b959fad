#pragma once

#include <cmath>
#include <cstdint>

namespace fgplab {

/// Counter-based random stream: splitmix64 over a per-stream counter.
/// Stream state is a pure function of (master seed, stream index, counter),
/// so path k draws the same numbers no matter how many paths run, in what
/// order, or on how many threads.
class RandomStream {
public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : state_(mix(master_seed + 0x9e3779b97f4a7c15ULL * (stream_index + 1))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in (0, 1), never exactly 0 or 1.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; caches the paired draw.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform();
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace fgplab

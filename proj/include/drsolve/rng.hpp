#pragma once

#include <cstdint>
#include <random>

namespace drsolve {

/// SplitMix64 step; used only to expand seeds into independent streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seedable random stream with portable output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard; all distributions are derived here from raw 64-bit draws so
/// results are bit-identical across standard libraries. Stream (seed, k) and
/// stream (seed, k') are independent for k != k', which is how per-trial
/// streams are derived from a master seed.
class RngStream {
public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s = master_seed ^ (0xd1b54a32d192ed03ull * (stream_index + 1));
    std::uint64_t b = splitmix64(s);
    engine_.seed(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  bool coin() { return (next_u64() & 1ull) != 0; }

private:
  std::mt19937_64 engine_;
};

}  // namespace drsolve

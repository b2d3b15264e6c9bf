#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace burgermap {

// All randomness in the library flows through StreamRng so that every
// artifact is reproducible from (seed, stream indices) alone.  The engine is
// std::mt19937_64, whose output sequence is pinned by the standard; the
// mapping to [0,1) below is hand-rolled because the standard distributions
// are not portable across implementations.
inline constexpr std::string_view kRngVersion = "splitmix64-mt19937_64/1";

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives one 64-bit engine seed from a root seed and a stream path, e.g.
// (seed, trial_index) or (seed, trial_index, substream).
inline std::uint64_t derive_stream_seed(std::uint64_t seed,
                                        std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = seed;
  std::uint64_t out = splitmix64(s);
  for (std::uint64_t p : path) {
    s ^= p + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    out = splitmix64(s);
  }
  return out;
}

class StreamRng {
 public:
  explicit StreamRng(std::uint64_t seed) : engine_(seed) {}

  StreamRng(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
      : engine_(derive_stream_seed(seed, path)) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool fair_coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace burgermap

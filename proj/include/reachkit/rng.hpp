#pragma once

#include <cstdint>

namespace reachkit {

// Counter-based generator: every draw is a pure function of (seed, stream,
// counter), so a sample can be regenerated without replaying earlier draws and
// parallel workers never share state.
//
//   mix(z):  z += 0x9E3779B97F4A7C15
//            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//            z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//            return z ^ (z >> 31)
//   bits(seed, stream, counter) = mix(mix(seed ^ mix(stream)) + counter)
//   uniform(...) = (bits >> 11) * 2^-53          in [0, 1)
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const noexcept {
    return mix(mix(seed_ ^ mix(stream)) + counter);
  }

  constexpr double uniform(std::uint64_t stream, std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(stream, counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace reachkit

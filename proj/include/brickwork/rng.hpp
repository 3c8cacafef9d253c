#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace brickwork {

// SplitMix64 stream (Steele-Lea-Flood mixing constants). Chosen over
// std::mt19937 + std::normal_distribution because the variate sequence is
// pinned by this header alone: identical (seed, draw order) gives identical
// streams on every build, which the regression tests rely on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) from the top 53 bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the spare sine variate is cached so a
  // stream is a pure function of the seed and the number of draws.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Complex gaussian with E[|z|^2] = 1 (real and imaginary parts N(0, 1/2)).
  std::complex<double> next_complex_gaussian() {
    const double s = std::sqrt(0.5);
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {s * re, s * im};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Substream derivation for worker parallelism: feed (seed, index) through one
// extra SplitMix64 round so neighbouring workers land in unrelated states.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
  return g.next_u64();
}

}  // namespace brickwork

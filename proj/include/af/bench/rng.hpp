#pragma once

#include <cstdint>

namespace af::bench {

// splitmix64 (Steele, Lea, Flood / Vigna's reference implementation).
// 64 bits of state, identical output on every platform; the first
// outputs for seed 0 are e220a8397b1dcdaf, 6e789e6aa1b965f4, ...
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 significant bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

}  // namespace af::bench

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "af/formats.hpp"
#include "af/framework.hpp"

namespace af::bench {

enum class Shape { erdos_renyi, chain, k_cycle };

// attack_probability is ignored for CHAIN and K_CYCLE.
struct GeneratorConfig {
  int argument_count = 0;
  double attack_probability = 0.0;
  std::uint64_t seed = 0;
  Shape shape = Shape::erdos_renyi;
};

// Deterministic: the same config yields the same framework on every
// platform. Arguments are named a1..an. ERDOS_RENYI draws every ordered
// pair (self-pairs included) from a SplitMix64 stream seeded by `seed`.
Framework generate(const GeneratorConfig& config);

// Writes `count` frameworks generated from consecutive seeds
// (config.seed, config.seed+1, ...) into `directory`, one file each,
// and returns the file paths.
std::vector<std::filesystem::path> write_generated_corpus(
    const GeneratorConfig& config, int count,
    const std::filesystem::path& directory, InputFormat format);

}  // namespace af::bench

#include "af/bench/generator.hpp"

#include <cstdio>
#include <fstream>

#include "af/bench/rng.hpp"

namespace af::bench {

Framework generate(const GeneratorConfig& config) {
  int n = config.argument_count;
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));

  std::vector<std::pair<std::string, std::string>> attacks;
  switch (config.shape) {
    case Shape::erdos_renyi: {
      SplitMix64 rng(config.seed);
      // Row-major over all ordered pairs, self-pairs included; one
      // draw per pair regardless of outcome, so the stream position
      // never depends on earlier results.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rng.next_unit() < config.attack_probability)
            attacks.emplace_back(names[i], names[j]);
      break;
    }
    case Shape::k_cycle:
      if (n > 0) attacks.emplace_back(names[n - 1], names[0]);
      [[fallthrough]];
    case Shape::chain:
      for (int i = 0; i + 1 < n; ++i) attacks.emplace_back(names[i], names[i + 1]);
      break;
  }
  return Framework::build(names, attacks);
}

std::vector<std::filesystem::path> write_generated_corpus(
    const GeneratorConfig& config, int count,
    const std::filesystem::path& directory, InputFormat format) {
  std::filesystem::create_directories(directory);
  const char* ext = format == InputFormat::tgf ? ".tgf" : ".apx";

  std::vector<std::filesystem::path> paths;
  paths.reserve(count);
  for (int i = 0; i < count; ++i) {
    GeneratorConfig c = config;
    c.seed = config.seed + static_cast<std::uint64_t>(i);
    Framework f = generate(c);

    char index[16];
    std::snprintf(index, sizeof index, "%04d", i);
    auto path = directory / ("af_" + std::string(index) + ext);
    std::ofstream file(path, std::ios::binary);
    file << (format == InputFormat::tgf ? serialize_tgf(f) : serialize_apx(f));
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace af::bench

#include "af/bench/corpus.hpp"

namespace af::bench {

std::vector<GeneratorConfig> corpus_configs() {
  constexpr double kProbabilities[] = {0.1, 0.25, 0.5};
  constexpr int kCount = 500;

  std::vector<GeneratorConfig> configs;
  configs.reserve(kCount);
  for (int k = 0; k < kCount; ++k) {
    GeneratorConfig c;
    c.shape = Shape::erdos_renyi;
    c.argument_count = (k % 10) + 1;
    c.attack_probability = kProbabilities[(k / 10) % 3];
    c.seed = static_cast<std::uint64_t>(k) + 1;
    configs.push_back(c);
  }
  return configs;
}

}  // namespace af::bench

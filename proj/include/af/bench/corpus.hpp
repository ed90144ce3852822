#pragma once

#include <vector>

#include "af/bench/generator.hpp"

namespace af::bench {

// The fixed 500-framework test corpus: Erdos-Renyi shapes with n
// cycling 1..10, attack probability cycling {0.1, 0.25, 0.5} per block
// of ten, and seeds 1..500. Every correctness property in the test
// suites is checked against this list.
std::vector<GeneratorConfig> corpus_configs();

}  // namespace af::bench

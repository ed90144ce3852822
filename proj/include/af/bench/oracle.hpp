#pragma once

#include <vector>

#include "af/argument_set.hpp"
#include "af/framework.hpp"
#include "af/semantics.hpp"

namespace af::bench {

// Exhaustive 2^n subset sweep deciding extensions directly from the raw
// attack pair list, sharing none of the engine's machinery. Capped at
// 20 arguments (throws Error(too_large) beyond). Results are sorted by
// ArgumentSet::word_less.
std::vector<ArgumentSet> brute_force_extensions(const Framework& f, Semantics sem);

}  // namespace af::bench

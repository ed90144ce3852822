#pragma once

#include <variant>
#include <vector>

#include "af/argument_set.hpp"

namespace af {

struct SingleExtension {
  ArgumentSet extension;
};

// Extensions in word-lexicographic order, duplicate-free.
struct ExtensionSet {
  std::vector<ArgumentSet> extensions;
};

struct Decision {
  bool accepted = false;
};

// Only produced for SE-ST when no stable extension exists.
struct NoExtension {};

using SolverAnswer =
    std::variant<SingleExtension, ExtensionSet, Decision, NoExtension>;

}  // namespace af

#pragma once

#include <optional>
#include <vector>

#include "af/answer.hpp"
#include "af/framework.hpp"
#include "af/labelling.hpp"
#include "af/semantics.hpp"

namespace af {

// Least fixpoint of the characteristic function, computed by worklist
// propagation in O(|arguments| + |attacks|).
ArgumentSet grounded_extension(const Framework& f);

// All extensions under the given semantics, deduplicated and sorted by
// ArgumentSet::word_less. CO/GR/PR results are never empty; ST may be.
std::vector<ArgumentSet> enumerate_extensions(const Framework& f, Semantics sem);

// SingleExtension, or NoExtension when sem is ST and no stable
// extension exists.
SolverAnswer some_extension(const Framework& f, Semantics sem);

// True iff some sem-extension contains x. Throws Error on an invalid id.
bool decide_credulous(const Framework& f, ArgumentId x, Semantics sem);

// True iff every sem-extension contains x; vacuously true for ST when
// no stable extension exists. Throws Error on an invalid id.
bool decide_skeptical(const Framework& f, ArgumentId x, Semantics sem);

bool is_complete_extension(const Framework& f, const ArgumentSet& s);
bool is_stable_extension(const Framework& f, const ArgumentSet& s);
bool is_preferred_extension(const Framework& f, const ArgumentSet& s);

// Dispatch used by the CLI and the harness. query must be present
// exactly for DC/DS.
SolverAnswer solve(const Framework& f, Task task, Semantics sem,
                   std::optional<ArgumentId> query);

}  // namespace af

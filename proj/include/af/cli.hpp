#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace af::cli {

inline constexpr const char* kSolverName = "afsolve";
inline constexpr const char* kSolverVersion = "1.0.0";
inline constexpr const char* kSolverAuthor = "the afsolve authors";

// Competition-protocol entry point:
//   (no arguments)               banner, exit 0
//   --formats                    "[apx,tgf]", exit 0
//   --problems                   the 16 supported TASK-SEM pairs, exit 0
//   -p TASK-SEM -f FILE -fo FMT [-a ARG]   solve, one answer line, exit 0
// Any error exits 1 with a one-line diagnostic on err and nothing on out.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace af::cli

#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "af/framework.hpp"
#include "af/semantics.hpp"

namespace af::bench {

struct HarnessInstance {
  std::string id;
  Framework framework;
  Task task = Task::some_extension;
  Semantics semantics = Semantics::grounded;
  std::optional<ArgumentId> query;
};

enum class HarnessFlag { agree, mismatch, timeout };

struct HarnessRecord {
  std::string id;
  std::string pair;          // "SE-GR", ...
  std::int64_t microseconds = 0;
  std::string digest;        // serialized answer, newline stripped
  HarnessFlag flag = HarnessFlag::agree;
};

// correct + incorrect + timeout always equals records.size().
struct HarnessReport {
  std::vector<HarnessRecord> records;
  int correct = 0;
  int incorrect = 0;
  int timeout = 0;
};

// Solves every instance, times it, and checks the answer against the
// brute-force oracle (all instances must fit the oracle's 20-argument
// cap). Instances whose wall-clock time exceeds time_limit are counted
// as timeouts instead. Solver failures are recorded, not thrown.
HarnessReport run_harness(const std::vector<HarnessInstance>& instances,
                          std::chrono::microseconds time_limit);

// One tab-separated record per line: id, pair, microseconds, digest, flag.
void write_records(const HarnessReport& report, std::ostream& out);

// Human-readable per-instance table plus aggregate counts.
void write_summary(const HarnessReport& report, std::ostream& out);

}  // namespace af::bench

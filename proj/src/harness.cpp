#include "af/bench/harness.hpp"

#include <algorithm>
#include <ostream>

#include "af/bench/oracle.hpp"
#include "af/engine.hpp"
#include "af/formats.hpp"

namespace af::bench {

namespace {

bool contains_set(const std::vector<ArgumentSet>& sets, const ArgumentSet& s) {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

// Recomputes the expected answer from the oracle's extension list and
// compares. SE answers only need to be *some* oracle extension.
bool agrees_with_oracle(const Framework& f, Task task,
                        std::optional<ArgumentId> query,
                        const std::vector<ArgumentSet>& oracle,
                        const SolverAnswer& answer) {
  switch (task) {
    case Task::some_extension: {
      if (std::holds_alternative<NoExtension>(answer)) return oracle.empty();
      const auto* single = std::get_if<SingleExtension>(&answer);
      return single && contains_set(oracle, single->extension);
    }
    case Task::enumerate_extensions: {
      const auto* all = std::get_if<ExtensionSet>(&answer);
      return all && all->extensions == oracle;  // both word_less-sorted
    }
    case Task::credulous: {
      const auto* decision = std::get_if<Decision>(&answer);
      if (!decision || !query) return false;
      bool expected = std::any_of(oracle.begin(), oracle.end(), [&](auto& e) {
        return e.contains(query->index);
      });
      return decision->accepted == expected;
    }
    case Task::skeptical: {
      const auto* decision = std::get_if<Decision>(&answer);
      if (!decision || !query) return false;
      // Intersection over the empty family is the full argument set.
      bool expected = std::all_of(oracle.begin(), oracle.end(), [&](auto& e) {
        return e.contains(query->index);
      });
      return decision->accepted == expected;
    }
  }
  return false;
}

std::string strip_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

const char* flag_name(HarnessFlag flag) {
  switch (flag) {
    case HarnessFlag::agree: return "ok";
    case HarnessFlag::mismatch: return "mismatch";
    case HarnessFlag::timeout: return "timeout";
  }
  return "?";
}

}  // namespace

HarnessReport run_harness(const std::vector<HarnessInstance>& instances,
                          std::chrono::microseconds time_limit) {
  HarnessReport report;
  report.records.reserve(instances.size());

  for (const auto& inst : instances) {
    HarnessRecord rec;
    rec.id = inst.id;
    rec.pair = problem_name(inst.task, inst.semantics);

    auto oracle = brute_force_extensions(inst.framework, inst.semantics);

    bool agreed = false;
    auto start = std::chrono::steady_clock::now();
    try {
      SolverAnswer answer = solve(inst.framework, inst.task, inst.semantics,
                                  inst.query);
      rec.digest = strip_newline(serialize_answer(answer, inst.framework));
      agreed = agrees_with_oracle(inst.framework, inst.task, inst.query,
                                  oracle, answer);
    } catch (const std::exception& e) {
      rec.digest = std::string("<error: ") + e.what() + ">";
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    rec.microseconds = elapsed.count();

    if (elapsed > time_limit) {
      rec.flag = HarnessFlag::timeout;
      ++report.timeout;
    } else if (agreed) {
      rec.flag = HarnessFlag::agree;
      ++report.correct;
    } else {
      rec.flag = HarnessFlag::mismatch;
      ++report.incorrect;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

void write_records(const HarnessReport& report, std::ostream& out) {
  for (const auto& r : report.records)
    out << r.id << '\t' << r.pair << '\t' << r.microseconds << '\t' << r.digest
        << '\t' << flag_name(r.flag) << '\n';
}

void write_summary(const HarnessReport& report, std::ostream& out) {
  out << "instance            pair    time(us)  flag\n";
  for (const auto& r : report.records) {
    out << r.id;
    for (std::size_t i = r.id.size(); i < 20; ++i) out << ' ';
    out << r.pair << "   " << r.microseconds << "  " << flag_name(r.flag)
        << '\n';
  }
  out << "total " << report.records.size() << ": " << report.correct
      << " correct, " << report.incorrect << " incorrect, " << report.timeout
      << " timeout\n";
}

}  // namespace af::bench

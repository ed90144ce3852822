#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace af {

enum class Semantics { complete, grounded, preferred, stable };
enum class Task { some_extension, enumerate_extensions, credulous, skeptical };

inline std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::complete: return "CO";
    case Semantics::grounded: return "GR";
    case Semantics::preferred: return "PR";
    case Semantics::stable: return "ST";
  }
  return "";
}

inline std::string_view to_string(Task t) {
  switch (t) {
    case Task::some_extension: return "SE";
    case Task::enumerate_extensions: return "EE";
    case Task::credulous: return "DC";
    case Task::skeptical: return "DS";
  }
  return "";
}

inline std::optional<Semantics> parse_semantics(std::string_view s) {
  if (s == "CO") return Semantics::complete;
  if (s == "GR") return Semantics::grounded;
  if (s == "PR") return Semantics::preferred;
  if (s == "ST") return Semantics::stable;
  return std::nullopt;
}

inline std::optional<Task> parse_task(std::string_view s) {
  if (s == "SE") return Task::some_extension;
  if (s == "EE") return Task::enumerate_extensions;
  if (s == "DC") return Task::credulous;
  if (s == "DS") return Task::skeptical;
  return std::nullopt;
}

// "SE-GR", "DC-PR", ...
inline std::string problem_name(Task t, Semantics s) {
  return std::string(to_string(t)) + "-" + std::string(to_string(s));
}

}  // namespace af

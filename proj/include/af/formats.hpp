#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "af/answer.hpp"
#include "af/framework.hpp"

namespace af {

enum class InputFormat { tgf, apx };

inline std::optional<InputFormat> parse_format(std::string_view s) {
  if (s == "tgf") return InputFormat::tgf;
  if (s == "apx") return InputFormat::apx;
  return std::nullopt;
}

// Trivial graph format: one argument name per line, a line containing
// exactly "#", then one "attacker target" pair per line. Blank lines
// are ignored, surrounding whitespace is trimmed. Throws Error with
// the offending line number.
Framework parse_tgf(std::string_view text);

// Logic-programming fact lists: arg(NAME). and att(NAME,NAME). facts,
// whitespace-insensitive between tokens, NAME = [A-Za-z0-9_]+. att
// facts may precede the arg facts that declare their names. Throws
// Error with line/column positions.
Framework parse_apx(std::string_view text);

Framework parse_framework(std::string_view text, InputFormat format);

// Canonical serializations: LF line endings, attacks in sorted index
// order. parse(serialize(f)) reproduces names, indices and attacks.
std::string serialize_tgf(const Framework& f);
std::string serialize_apx(const Framework& f);

// Competition answer conventions, newline-terminated:
//   SingleExtension -> "[a,c]"        ExtensionSet -> "[[a],[b]]" / "[]"
//   Decision        -> "YES" / "NO"   NoExtension  -> "NO"
std::string serialize_answer(const SolverAnswer& answer, const Framework& f);

}  // namespace af

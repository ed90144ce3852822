#include "af/formats.hpp"

#include <cctype>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "af/errors.hpp"

namespace af {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

// Splits on '\n'; a trailing newline does not produce an extra line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

Framework parse_tgf(std::string_view text) {
  auto lines = split_lines(text);

  int separator_line = -1;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]) == "#") {
      separator_line = static_cast<int>(i);
      break;
    }
  }
  if (separator_line < 0)
    throw Error(ErrorKind::missing_separator, "no '#' separator line");

  std::vector<std::string> names;
  std::unordered_map<std::string, int> declared_at;
  for (int i = 0; i < separator_line; ++i) {
    auto tokens = split_tokens(lines[i]);
    if (tokens.empty()) continue;
    if (tokens.size() != 1)
      throw Error(ErrorKind::malformed_argument_line,
                  "expected a single argument name", i + 1);
    std::string name(tokens[0]);
    if (!declared_at.emplace(name, i + 1).second)
      throw Error(ErrorKind::duplicate_argument,
                  "duplicate argument '" + name + "'", i + 1);
    names.push_back(std::move(name));
  }

  std::vector<std::pair<std::string, std::string>> attacks;
  for (std::size_t i = separator_line + 1; i < lines.size(); ++i) {
    auto tokens = split_tokens(lines[i]);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw Error(ErrorKind::malformed_attack_line,
                  "expected 'attacker target'", static_cast<int>(i) + 1);
    for (auto t : tokens)
      if (!declared_at.contains(std::string(t)))
        throw Error(ErrorKind::unknown_argument,
                    "unknown argument '" + std::string(t) + "' in attack",
                    static_cast<int>(i) + 1);
    attacks.emplace_back(tokens[0], tokens[1]);
  }

  return Framework::build(names, attacks);
}

namespace {

// Cursor over apx text tracking 1-based line/column for diagnostics.
class ApxScanner {
public:
  explicit ApxScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  std::string read_name() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::syntax_error, message, line_, column_);
  }

  int line() const { return line_; }
  int column() const { return column_; }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

Framework parse_apx(std::string_view text) {
  ApxScanner scan(text);
  std::vector<std::string> names;
  std::unordered_set<std::string> declared;
  struct Att {
    std::string from, to;
    int line, column;
  };
  std::vector<Att> attacks;

  while (!scan.at_end()) {
    int line = scan.line(), column = scan.column();
    std::string keyword = scan.read_name();
    if (keyword == "arg") {
      scan.expect('(');
      std::string name = scan.read_name();
      scan.expect(')');
      scan.expect('.');
      if (!declared.insert(name).second)
        throw Error(ErrorKind::duplicate_argument,
                    "duplicate argument '" + name + "'", line, column);
      names.push_back(std::move(name));
    } else if (keyword == "att") {
      scan.expect('(');
      std::string from = scan.read_name();
      scan.expect(',');
      std::string to = scan.read_name();
      scan.expect(')');
      scan.expect('.');
      attacks.push_back({std::move(from), std::move(to), line, column});
    } else {
      throw Error(ErrorKind::syntax_error,
                  "expected 'arg' or 'att', got '" + keyword + "'", line, column);
    }
  }

  // arg facts may appear anywhere, so attack names are checked after
  // the whole file is read.
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(attacks.size());
  for (auto& att : attacks) {
    if (!declared.contains(att.from))
      throw Error(ErrorKind::unknown_argument,
                  "unknown argument '" + att.from + "' in attack", att.line,
                  att.column);
    if (!declared.contains(att.to))
      throw Error(ErrorKind::unknown_argument,
                  "unknown argument '" + att.to + "' in attack", att.line,
                  att.column);
    pairs.emplace_back(std::move(att.from), std::move(att.to));
  }

  return Framework::build(names, pairs);
}

Framework parse_framework(std::string_view text, InputFormat format) {
  return format == InputFormat::tgf ? parse_tgf(text) : parse_apx(text);
}

std::string serialize_tgf(const Framework& f) {
  std::string out;
  for (int i = 0; i < f.argument_count(); ++i) {
    out += f.name_of(ArgumentId{i});
    out += '\n';
  }
  out += "#\n";
  for (auto [from, to] : f.attacks()) {
    out += f.name_of(ArgumentId{from});
    out += ' ';
    out += f.name_of(ArgumentId{to});
    out += '\n';
  }
  return out;
}

std::string serialize_apx(const Framework& f) {
  std::string out;
  for (int i = 0; i < f.argument_count(); ++i) {
    out += "arg(";
    out += f.name_of(ArgumentId{i});
    out += ").\n";
  }
  for (auto [from, to] : f.attacks()) {
    out += "att(";
    out += f.name_of(ArgumentId{from});
    out += ',';
    out += f.name_of(ArgumentId{to});
    out += ").\n";
  }
  return out;
}

namespace {

std::string extension_text(const ArgumentSet& s, const Framework& f) {
  std::string out = "[";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ',';
    out += f.name_of(ArgumentId{i});
    first = false;
  });
  out += ']';
  return out;
}

}  // namespace

std::string serialize_answer(const SolverAnswer& answer, const Framework& f) {
  std::string out;
  if (const auto* single = std::get_if<SingleExtension>(&answer)) {
    out = extension_text(single->extension, f);
  } else if (const auto* all = std::get_if<ExtensionSet>(&answer)) {
    out = "[";
    bool first = true;
    for (const auto& e : all->extensions) {
      if (!first) out += ',';
      out += extension_text(e, f);
      first = false;
    }
    out += ']';
  } else if (const auto* decision = std::get_if<Decision>(&answer)) {
    out = decision->accepted ? "YES" : "NO";
  } else {
    out = "NO";
  }
  out += '\n';
  return out;
}

}  // namespace af

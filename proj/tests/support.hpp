#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "af/framework.hpp"

namespace aftest {

// Canonical fixtures shared by the suites.
inline af::Framework f0() { return af::Framework::build({}, {}); }

// chain a -> b -> c
inline af::Framework f3() {
  return af::Framework::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

// mutual attack a <-> b
inline af::Framework f4() {
  return af::Framework::build({"a", "b"}, {{"a", "b"}, {"b", "a"}});
}

// 3-cycle a -> b -> c -> a
inline af::Framework f5() {
  return af::Framework::build({"a", "b", "c"},
                              {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

// single self-attacking argument
inline af::Framework f6() {
  return af::Framework::build({"a"}, {{"a", "a"}});
}

inline af::ArgumentSet make_set(const af::Framework& f,
                                std::initializer_list<int> indices) {
  af::ArgumentSet s(f.argument_count());
  for (int i : indices) s.insert(i);
  return s;
}

inline std::vector<af::ArgumentSet> make_sets(
    const af::Framework& f,
    std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<af::ArgumentSet> out;
  for (auto s : sets) out.push_back(make_set(f, s));
  return out;
}

// "{0,2}" rendering for assertion messages.
inline std::string show(const af::ArgumentSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

inline std::string show(const std::vector<af::ArgumentSet>& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ' ';
    out += show(sets[i]);
  }
  return out + "]";
}

}  // namespace aftest

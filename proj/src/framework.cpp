#include "af/framework.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "af/errors.hpp"

namespace af {

namespace {

bool has_whitespace(const std::string& s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Framework Framework::build(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& attack_pairs) {
  Framework f;
  f.names_.reserve(names.size());
  for (const auto& name : names) {
    if (name.empty())
      throw Error(ErrorKind::empty_name, "empty argument name");
    if (has_whitespace(name))
      throw Error(ErrorKind::invalid_name,
                  "argument name contains whitespace: '" + name + "'");
    auto [it, inserted] =
        f.index_of_.emplace(name, static_cast<int>(f.names_.size()));
    if (!inserted)
      throw Error(ErrorKind::duplicate_argument,
                  "duplicate argument '" + name + "'");
    f.names_.push_back(name);
  }

  f.attacks_.reserve(attack_pairs.size());
  for (const auto& [from, to] : attack_pairs) {
    auto a = f.index_of_.find(from);
    if (a == f.index_of_.end())
      throw Error(ErrorKind::unknown_argument,
                  "unknown argument '" + from + "' in attack");
    auto b = f.index_of_.find(to);
    if (b == f.index_of_.end())
      throw Error(ErrorKind::unknown_argument,
                  "unknown argument '" + to + "' in attack");
    f.attacks_.emplace_back(a->second, b->second);
  }
  std::sort(f.attacks_.begin(), f.attacks_.end());
  f.attacks_.erase(std::unique(f.attacks_.begin(), f.attacks_.end()),
                   f.attacks_.end());

  int n = f.argument_count();
  f.attackers_of_.resize(n);
  f.attacked_by_.resize(n);
  for (auto [from, to] : f.attacks_) {
    f.attacked_by_[from].push_back(to);
    f.attackers_of_[to].push_back(from);
  }
  return f;
}

bool Framework::has_attack(int attacker, int target) const {
  return std::binary_search(attacks_.begin(), attacks_.end(),
                            std::pair{attacker, target});
}

bool is_conflict_free(const Framework& f, const ArgumentSet& s) {
  assert(s.capacity() == f.argument_count());
  bool clash = false;
  s.for_each([&](int a) {
    if (clash) return;
    for (int v : f.attacked_by(a)) {
      if (s.contains(v)) {
        clash = true;
        return;
      }
    }
  });
  return !clash;
}

bool defends(const Framework& f, const ArgumentSet& s, ArgumentId x) {
  assert(x.index >= 0 && x.index < f.argument_count());
  for (int attacker : f.attackers_of(x.index)) {
    bool countered = false;
    for (int c : f.attackers_of(attacker)) {
      if (s.contains(c)) {
        countered = true;
        break;
      }
    }
    if (!countered) return false;
  }
  return true;
}

ArgumentSet characteristic_function(const Framework& f, const ArgumentSet& s) {
  ArgumentSet out(f.argument_count());
  for (int x = 0; x < f.argument_count(); ++x)
    if (defends(f, s, ArgumentId{x})) out.insert(x);
  return out;
}

}  // namespace af

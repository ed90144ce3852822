#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "af/argument_set.hpp"

namespace af {

// Dense index of an argument within one Framework, assigned in
// declaration order.
struct ArgumentId {
  int index = -1;
  friend bool operator==(ArgumentId, ArgumentId) = default;
};

// Immutable directed attack graph over interned argument names.
// attackers_of/attacked_by are exact transposes of the attack set;
// duplicate input attacks are deduplicated, self-attacks are allowed.
class Framework {
public:
  // Throws Error on duplicate names, empty or whitespace-containing
  // names, and attacks naming undeclared arguments.
  static Framework build(
      const std::vector<std::string>& names,
      const std::vector<std::pair<std::string, std::string>>& attack_pairs);

  int argument_count() const { return static_cast<int>(names_.size()); }

  const std::string& name_of(ArgumentId id) const { return names_[id.index]; }

  std::optional<ArgumentId> find(std::string_view name) const {
    auto it = index_of_.find(std::string(name));
    if (it == index_of_.end()) return std::nullopt;
    return ArgumentId{it->second};
  }

  // Sorted, duplicate-free list of (attacker, target) index pairs.
  const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }

  const std::vector<int>& attackers_of(int index) const { return attackers_of_[index]; }
  const std::vector<int>& attacked_by(int index) const { return attacked_by_[index]; }

  bool has_attack(int attacker, int target) const;

  ArgumentSet empty_set() const { return ArgumentSet(argument_count()); }
  ArgumentSet full_set() const { return ArgumentSet::full(argument_count()); }

private:
  Framework() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_of_;
  std::vector<std::pair<int, int>> attacks_;
  std::vector<std::vector<int>> attackers_of_;
  std::vector<std::vector<int>> attacked_by_;
};

// True iff no attack has both endpoints in s (self-attacks included).
bool is_conflict_free(const Framework& f, const ArgumentSet& s);

// True iff every attacker of x is attacked by at least one member of s.
bool defends(const Framework& f, const ArgumentSet& s, ArgumentId x);

// The set of arguments defended by s. Monotone in s.
ArgumentSet characteristic_function(const Framework& f, const ArgumentSet& s);

}  // namespace af

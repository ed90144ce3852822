#pragma once

#include <cstdint>
#include <vector>

#include "af/framework.hpp"

namespace af {

enum class Label : std::uint8_t { in, out, undec };

// Total three-valued assignment over the arguments of one framework.
class Labelling {
public:
  Labelling() = default;
  explicit Labelling(int argument_count)
      : labels_(argument_count, Label::undec) {}

  int argument_count() const { return static_cast<int>(labels_.size()); }

  Label label(ArgumentId id) const { return labels_[id.index]; }
  void set(ArgumentId id, Label l) { labels_[id.index] = l; }

  ArgumentSet in_set() const {
    ArgumentSet s(argument_count());
    for (int i = 0; i < argument_count(); ++i)
      if (labels_[i] == Label::in) s.insert(i);
    return s;
  }

  friend bool operator==(const Labelling&, const Labelling&) = default;

private:
  std::vector<Label> labels_;
};

// Legality of a single label under the standard labelling conditions:
// IN needs all attackers OUT, OUT needs an IN attacker, UNDEC needs no
// IN attacker and at least one attacker not OUT.
bool is_legal_label(const Framework& f, const Labelling& l, ArgumentId x);

// Total labelling all of whose labels are legal.
bool is_complete_labelling(const Framework& f, const Labelling& l);

// The unique minimal complete labelling: grounded IN/OUT core, UNDEC
// elsewhere.
Labelling grounded_labelling(const Framework& f);

}  // namespace af

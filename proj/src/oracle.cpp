#include "af/bench/oracle.hpp"

#include <cstdint>
#include <stdexcept>

#include "af/errors.hpp"

namespace af::bench {

namespace {

constexpr int kMaxArguments = 20;

using Mask = std::uint32_t;

ArgumentSet to_set(Mask mask, int n) {
  ArgumentSet s(n);
  for (int i = 0; i < n; ++i)
    if (mask & (Mask{1} << i)) s.insert(i);
  return s;
}

}  // namespace

std::vector<ArgumentSet> brute_force_extensions(const Framework& f,
                                                Semantics sem) {
  int n = f.argument_count();
  if (n > kMaxArguments)
    throw Error(ErrorKind::too_large,
                "oracle capped at " + std::to_string(kMaxArguments) +
                    " arguments, got " + std::to_string(n));

  // Per-argument attacker/victim masks derived from the raw pair list.
  std::vector<Mask> attackers(n, 0), victims(n, 0);
  for (auto [from, to] : f.attacks()) {
    attackers[to] |= Mask{1} << from;
    victims[from] |= Mask{1} << to;
  }

  Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;

  auto conflict_free = [&](Mask s) {
    for (int x = 0; x < n; ++x)
      if ((s >> x) & 1 && (attackers[x] & s)) return false;
    return true;
  };
  auto attacked_from = [&](Mask s) {
    Mask hit = 0;
    for (int x = 0; x < n; ++x)
      if ((s >> x) & 1) hit |= victims[x];
    return hit;
  };
  // { x : every attacker of x is attacked from s }
  auto defended_by = [&](Mask s) {
    Mask hit = attacked_from(s);
    Mask d = 0;
    for (int x = 0; x < n; ++x)
      if ((attackers[x] & ~hit) == 0) d |= Mask{1} << x;
    return d;
  };

  std::vector<Mask> complete;
  std::vector<Mask> kept;
  for (std::uint64_t s64 = 0; s64 <= all; ++s64) {
    Mask s = static_cast<Mask>(s64);
    if (!conflict_free(s)) continue;
    switch (sem) {
      case Semantics::stable:
        if ((s | attacked_from(s)) == all) kept.push_back(s);
        break;
      case Semantics::complete:
      case Semantics::preferred:
      case Semantics::grounded:
        if (defended_by(s) == s) complete.push_back(s);
        break;
    }
  }

  if (sem == Semantics::complete) {
    kept = complete;
  } else if (sem == Semantics::preferred) {
    for (Mask s : complete) {
      bool maximal = true;
      for (Mask t : complete)
        if (t != s && (s & ~t) == 0) {
          maximal = false;
          break;
        }
      if (maximal) kept.push_back(s);
    }
  } else if (sem == Semantics::grounded) {
    // The minimal complete set is the intersection of all of them;
    // its appearance in the list double-checks minimality.
    Mask least = all;
    for (Mask s : complete) least &= s;
    bool present = false;
    for (Mask s : complete) present |= (s == least);
    if (!present)
      throw std::logic_error("oracle: complete-set intersection not complete");
    kept.push_back(least);
  }

  // Ascending mask order coincides with word_less for n <= 20.
  std::vector<ArgumentSet> out;
  out.reserve(kept.size());
  for (Mask s : kept) out.push_back(to_set(s, n));
  return out;
}

}  // namespace af::bench

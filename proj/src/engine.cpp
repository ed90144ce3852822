#include "af/engine.hpp"

#include <algorithm>
#include <cassert>

#include "af/errors.hpp"

namespace af {

namespace {

enum class Mark : std::uint8_t { free, in, out, undec };

// Grounded IN/OUT core via worklist propagation. nonout[x] counts
// attackers of x not yet labelled OUT; when it reaches zero x is
// defended and becomes IN, which pushes its victims OUT.
std::vector<Mark> grounded_marks(const Framework& f) {
  int n = f.argument_count();
  std::vector<Mark> mark(n, Mark::free);
  std::vector<int> nonout(n);
  std::vector<int> newly_in;
  newly_in.reserve(n);
  for (int x = 0; x < n; ++x) {
    nonout[x] = static_cast<int>(f.attackers_of(x).size());
    if (nonout[x] == 0) newly_in.push_back(x);
  }
  for (std::size_t i = 0; i < newly_in.size(); ++i) {
    int x = newly_in[i];
    if (mark[x] != Mark::free) continue;
    mark[x] = Mark::in;
    for (int v : f.attacked_by(x)) {
      if (mark[v] != Mark::free) continue;
      mark[v] = Mark::out;
      for (int w : f.attacked_by(v))
        if (--nonout[w] == 0 && mark[w] == Mark::free) newly_in.push_back(w);
    }
  }
  return mark;
}

// Backtracking search over the arguments left undecided by the grounded
// core, committing each to IN, OUT or UNDEC with unit propagation of
// the legal-IN/legal-OUT rules. Every complete labelling extends the
// grounded commitments, so seeding them is sound. UNDEC legality is
// only verified at leaves.
class LabellingSearch {
public:
  LabellingSearch(const Framework& f, bool allow_undec)
      : f_(f), allow_undec_(allow_undec), mark_(grounded_marks(f)) {
    int n = f.argument_count();
    degree_.resize(n);
    for (int x = 0; x < n; ++x) {
      degree_[x] = static_cast<int>(f.attackers_of(x).size() +
                                    f.attacked_by(x).size());
      if (mark_[x] == Mark::free) open_.push_back(x);
    }
  }

  // Commits an argument before the search starts. Returns false when
  // the commitment is inconsistent with previous ones; no labelling
  // extends an inconsistent seed.
  bool force(int x, Mark m) {
    if (failed_) return false;
    failed_ = !(assign(x, m) && propagate());
    return !failed_;
  }

  // Calls visit with the IN-set of each accepted leaf, in a fixed
  // deterministic order. visit returning false stops the search.
  template <typename Visit>
  void enumerate(Visit&& visit) {
    if (failed_) return;
    dfs(visit);
  }

private:
  bool assign(int x, Mark m) {
    if (mark_[x] != Mark::free) return mark_[x] == m;
    mark_[x] = m;
    trail_.push_back(x);
    return true;
  }

  // An argument labelled OUT needs an attacker that can still become
  // IN. With none left the branch is dead; with exactly one, that
  // attacker is forced IN.
  bool recheck_out(int x) {
    int candidate = -1;
    int candidates = 0;
    for (int b : f_.attackers_of(x)) {
      if (mark_[b] == Mark::in) return true;
      if (mark_[b] == Mark::free) {
        candidate = b;
        ++candidates;
      }
    }
    if (candidates == 0) return false;
    if (candidates == 1) return assign(candidate, Mark::in);
    return true;
  }

  bool propagate() {
    while (queue_head_ < trail_.size()) {
      int x = trail_[queue_head_++];
      switch (mark_[x]) {
        case Mark::in:
          for (int b : f_.attackers_of(x))
            if (!assign(b, Mark::out)) return false;
          for (int v : f_.attacked_by(x))
            if (!assign(v, Mark::out)) return false;
          break;
        case Mark::out:
          if (!recheck_out(x)) return false;
          [[fallthrough]];
        case Mark::undec:
          // x can no longer become IN, so OUT victims lost a candidate.
          for (int v : f_.attacked_by(x))
            if (mark_[v] == Mark::out && !recheck_out(v)) return false;
          break;
        case Mark::free:
          assert(false);
          break;
      }
    }
    return true;
  }

  void undo_to(std::size_t depth) {
    while (trail_.size() > depth) {
      mark_[trail_.back()] = Mark::free;
      trail_.pop_back();
    }
    queue_head_ = depth;
  }

  // Undecided argument with the highest degree, lowest index on ties.
  int pick_branch() const {
    int best = -1;
    for (int x : open_)
      if (mark_[x] == Mark::free && (best < 0 || degree_[x] > degree_[best]))
        best = x;
    return best;
  }

  bool legal_leaf() const {
    for (int x : open_) {
      const auto& attackers = f_.attackers_of(x);
      switch (mark_[x]) {
        case Mark::in:
          for (int b : attackers)
            if (mark_[b] != Mark::out) return false;
          break;
        case Mark::out: {
          bool has_in = false;
          for (int b : attackers)
            if (mark_[b] == Mark::in) { has_in = true; break; }
          if (!has_in) return false;
          break;
        }
        case Mark::undec: {
          bool has_non_out = false;
          for (int b : attackers) {
            if (mark_[b] == Mark::in) return false;
            if (mark_[b] != Mark::out) has_non_out = true;
          }
          if (!has_non_out) return false;
          break;
        }
        case Mark::free:
          assert(false);
          return false;
      }
    }
    return true;
  }

  ArgumentSet in_set() const {
    ArgumentSet s(f_.argument_count());
    for (int x = 0; x < f_.argument_count(); ++x)
      if (mark_[x] == Mark::in) s.insert(x);
    return s;
  }

  template <typename Visit>
  bool dfs(Visit&& visit) {
    int x = pick_branch();
    if (x < 0) return !legal_leaf() || visit(in_set());

    static constexpr Mark kOrder[] = {Mark::in, Mark::out, Mark::undec};
    int values = allow_undec_ ? 3 : 2;
    for (int i = 0; i < values; ++i) {
      std::size_t depth = trail_.size();
      if (assign(x, kOrder[i]) && propagate()) {
        if (!dfs(visit)) return false;
      }
      undo_to(depth);
    }
    return true;
  }

  const Framework& f_;
  bool allow_undec_;
  bool failed_ = false;
  std::vector<Mark> mark_;
  std::vector<int> degree_;
  std::vector<int> open_;  // undecided after grounded seeding
  std::vector<int> trail_;
  std::size_t queue_head_ = 0;
};

ArgumentSet in_set_of(const std::vector<Mark>& marks) {
  ArgumentSet s(static_cast<int>(marks.size()));
  for (int i = 0; i < static_cast<int>(marks.size()); ++i)
    if (marks[i] == Mark::in) s.insert(i);
  return s;
}

std::vector<ArgumentSet> enumerate_complete(const Framework& f, bool stable_only) {
  std::vector<ArgumentSet> out;
  LabellingSearch search(f, !stable_only);
  search.enumerate([&](ArgumentSet s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

void sort_and_dedup(std::vector<ArgumentSet>& sets) {
  std::sort(sets.begin(), sets.end(), ArgumentSet::word_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Keeps only the IN-maximal sets.
std::vector<ArgumentSet> maximal_sets(std::vector<ArgumentSet> sets) {
  std::vector<ArgumentSet> out;
  for (const auto& s : sets) {
    bool subsumed = false;
    for (const auto& t : sets) {
      if (&s != &t && s != t && s.subset_of(t)) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) out.push_back(s);
  }
  return out;
}

// First complete labelling (IN-set) extending `seed` and strictly
// enlarging it, if any.
std::optional<ArgumentSet> improve_complete(const Framework& f,
                                            const ArgumentSet& seed) {
  LabellingSearch search(f, /*allow_undec=*/true);
  bool consistent = true;
  seed.for_each([&](int x) {
    if (consistent) consistent = search.force(x, Mark::in);
  });
  if (!consistent) return std::nullopt;
  std::optional<ArgumentSet> found;
  search.enumerate([&](ArgumentSet s) {
    if (s != seed) {
      found = std::move(s);
      return false;
    }
    return true;
  });
  return found;
}

ArgumentSet maximize_complete(const Framework& f, ArgumentSet current) {
  while (auto larger = improve_complete(f, current)) current = std::move(*larger);
  return current;
}

void check_argument(const Framework& f, ArgumentId x) {
  if (x.index < 0 || x.index >= f.argument_count())
    throw Error(ErrorKind::unknown_argument,
                "argument id out of range: " + std::to_string(x.index));
}

// Witness search for a complete (or stable) labelling consistent with
// one forced commitment. Returns the first IN-set found.
std::optional<ArgumentSet> witness_with(const Framework& f, bool stable_only,
                                        int x, Mark m) {
  LabellingSearch search(f, !stable_only);
  if (!search.force(x, m)) return std::nullopt;
  std::optional<ArgumentSet> found;
  search.enumerate([&](ArgumentSet s) {
    found = std::move(s);
    return false;
  });
  return found;
}

}  // namespace

ArgumentSet grounded_extension(const Framework& f) {
  return in_set_of(grounded_marks(f));
}

Labelling grounded_labelling(const Framework& f) {
  auto marks = grounded_marks(f);
  Labelling l(f.argument_count());
  for (int i = 0; i < f.argument_count(); ++i) {
    if (marks[i] == Mark::in) l.set(ArgumentId{i}, Label::in);
    else if (marks[i] == Mark::out) l.set(ArgumentId{i}, Label::out);
  }
  return l;
}

bool is_legal_label(const Framework& f, const Labelling& l, ArgumentId x) {
  const auto& attackers = f.attackers_of(x.index);
  switch (l.label(x)) {
    case Label::in:
      return std::all_of(attackers.begin(), attackers.end(), [&](int b) {
        return l.label(ArgumentId{b}) == Label::out;
      });
    case Label::out:
      return std::any_of(attackers.begin(), attackers.end(), [&](int b) {
        return l.label(ArgumentId{b}) == Label::in;
      });
    case Label::undec: {
      bool has_non_out = false;
      for (int b : attackers) {
        if (l.label(ArgumentId{b}) == Label::in) return false;
        if (l.label(ArgumentId{b}) != Label::out) has_non_out = true;
      }
      return has_non_out;
    }
  }
  return false;
}

bool is_complete_labelling(const Framework& f, const Labelling& l) {
  for (int i = 0; i < f.argument_count(); ++i)
    if (!is_legal_label(f, l, ArgumentId{i})) return false;
  return true;
}

std::vector<ArgumentSet> enumerate_extensions(const Framework& f, Semantics sem) {
  std::vector<ArgumentSet> result;
  switch (sem) {
    case Semantics::grounded:
      result.push_back(grounded_extension(f));
      break;
    case Semantics::complete:
      result = enumerate_complete(f, /*stable_only=*/false);
      break;
    case Semantics::stable:
      result = enumerate_complete(f, /*stable_only=*/true);
      break;
    case Semantics::preferred:
      result = maximal_sets(enumerate_complete(f, /*stable_only=*/false));
      break;
  }
  sort_and_dedup(result);
  return result;
}

SolverAnswer some_extension(const Framework& f, Semantics sem) {
  switch (sem) {
    case Semantics::grounded:
    case Semantics::complete:
      // The grounded extension is itself complete.
      return SingleExtension{grounded_extension(f)};
    case Semantics::preferred:
      return SingleExtension{maximize_complete(f, grounded_extension(f))};
    case Semantics::stable: {
      LabellingSearch search(f, /*allow_undec=*/false);
      std::optional<ArgumentSet> found;
      search.enumerate([&](ArgumentSet s) {
        found = std::move(s);
        return false;
      });
      if (found) return SingleExtension{std::move(*found)};
      return NoExtension{};
    }
  }
  return NoExtension{};
}

bool decide_credulous(const Framework& f, ArgumentId x, Semantics sem) {
  check_argument(f, x);
  switch (sem) {
    case Semantics::grounded:
      return grounded_extension(f).contains(x.index);
    case Semantics::complete:
    case Semantics::preferred:
      // Credulous acceptance under complete and preferred coincide:
      // any complete labelling with x IN extends to a preferred one.
      return witness_with(f, /*stable_only=*/false, x.index, Mark::in).has_value();
    case Semantics::stable:
      return witness_with(f, /*stable_only=*/true, x.index, Mark::in).has_value();
  }
  return false;
}

bool decide_skeptical(const Framework& f, ArgumentId x, Semantics sem) {
  check_argument(f, x);
  switch (sem) {
    case Semantics::grounded:
    case Semantics::complete:
      // The grounded extension is the intersection of all complete
      // extensions.
      return grounded_extension(f).contains(x.index);
    case Semantics::stable:
      // A stable labelling has no UNDEC, so a counterexample labels x
      // OUT. No witness also covers the no-stable-extension case,
      // which is skeptical acceptance by convention.
      return !witness_with(f, /*stable_only=*/true, x.index, Mark::out).has_value();
    case Semantics::preferred: {
      for (const auto& p : enumerate_extensions(f, Semantics::preferred))
        if (!p.contains(x.index)) return false;
      return true;
    }
  }
  return false;
}

bool is_complete_extension(const Framework& f, const ArgumentSet& s) {
  return is_conflict_free(f, s) && characteristic_function(f, s) == s;
}

bool is_stable_extension(const Framework& f, const ArgumentSet& s) {
  if (!is_conflict_free(f, s)) return false;
  ArgumentSet range = s;
  s.for_each([&](int a) {
    for (int v : f.attacked_by(a)) range.insert(v);
  });
  return range == f.full_set();
}

bool is_preferred_extension(const Framework& f, const ArgumentSet& s) {
  if (!is_complete_extension(f, s)) return false;
  return !improve_complete(f, s).has_value();
}

SolverAnswer solve(const Framework& f, Task task, Semantics sem,
                   std::optional<ArgumentId> query) {
  switch (task) {
    case Task::some_extension:
      return some_extension(f, sem);
    case Task::enumerate_extensions:
      return ExtensionSet{enumerate_extensions(f, sem)};
    case Task::credulous:
      assert(query.has_value());
      return Decision{decide_credulous(f, *query, sem)};
    case Task::skeptical:
      assert(query.has_value());
      return Decision{decide_skeptical(f, *query, sem)};
  }
  return NoExtension{};
}

}  // namespace af

#include <doctest.h>

#include <algorithm>

#include "af/bench/generator.hpp"
#include "af/bench/oracle.hpp"
#include "af/bench/rng.hpp"
#include "af/engine.hpp"
#include "af/errors.hpp"
#include "support.hpp"

using namespace af;
using namespace aftest;

namespace {

constexpr Semantics kAllSemantics[] = {Semantics::complete, Semantics::grounded,
                                       Semantics::preferred, Semantics::stable};

// Small random sample; the full 500-framework sweep lives in the
// acceptance suite.
std::vector<Framework> sample_frameworks(int count, int max_args,
                                         std::uint64_t seed) {
  bench::SplitMix64 rng(seed);
  std::vector<Framework> out;
  for (int i = 0; i < count; ++i) {
    bench::GeneratorConfig config;
    config.argument_count = 1 + static_cast<int>(rng.next() % max_args);
    config.attack_probability = 0.1 + 0.05 * static_cast<double>(rng.next() % 9);
    config.seed = rng.next();
    out.push_back(bench::generate(config));
  }
  return out;
}

}  // namespace

TEST_CASE("grounded extension on fixtures") {
  CHECK(grounded_extension(f0()) == f0().empty_set());
  CHECK(grounded_extension(f3()) == make_set(f3(), {0, 2}));
  CHECK(grounded_extension(f4()) == f4().empty_set());
  CHECK(grounded_extension(f5()) == f5().empty_set());
  CHECK(grounded_extension(f6()) == f6().empty_set());
}

TEST_CASE("grounded equals the characteristic-function least fixpoint") {
  for (const auto& f : sample_frameworks(80, 10, 41)) {
    ArgumentSet s = f.empty_set();
    for (;;) {
      ArgumentSet next = characteristic_function(f, s);
      if (next == s) break;
      s = next;
    }
    CHECK(grounded_extension(f) == s);
  }
}

TEST_CASE("enumerate_extensions on fixtures") {
  Framework mutual = f4();
  CHECK(enumerate_extensions(mutual, Semantics::complete) ==
        make_sets(mutual, {{}, {0}, {1}}));
  CHECK(enumerate_extensions(mutual, Semantics::preferred) ==
        make_sets(mutual, {{0}, {1}}));
  CHECK(enumerate_extensions(mutual, Semantics::stable) ==
        make_sets(mutual, {{0}, {1}}));
  CHECK(enumerate_extensions(mutual, Semantics::grounded) ==
        make_sets(mutual, {{}}));

  Framework cycle = f5();
  CHECK(enumerate_extensions(cycle, Semantics::complete) == make_sets(cycle, {{}}));
  CHECK(enumerate_extensions(cycle, Semantics::preferred) == make_sets(cycle, {{}}));
  CHECK(enumerate_extensions(cycle, Semantics::stable).empty());

  Framework chain = f3();
  for (Semantics sem : kAllSemantics)
    CHECK(enumerate_extensions(chain, sem) == make_sets(chain, {{0, 2}}));
}

TEST_CASE("some_extension on fixtures") {
  auto single = [](const SolverAnswer& a) {
    REQUIRE(std::holds_alternative<SingleExtension>(a));
    return std::get<SingleExtension>(a).extension;
  };

  CHECK(single(some_extension(f3(), Semantics::grounded)) ==
        make_set(f3(), {0, 2}));
  CHECK(single(some_extension(f0(), Semantics::complete)) == f0().empty_set());
  CHECK(std::holds_alternative<NoExtension>(
      some_extension(f5(), Semantics::stable)));

  // deterministic witness: lowest-index branch tried IN first
  CHECK(single(some_extension(f4(), Semantics::preferred)) == make_set(f4(), {0}));
  CHECK(single(some_extension(f4(), Semantics::stable)) == make_set(f4(), {0}));
}

TEST_CASE("some_extension answers are extensions of their semantics") {
  for (const auto& f : sample_frameworks(60, 10, 42)) {
    for (Semantics sem : kAllSemantics) {
      auto oracle = bench::brute_force_extensions(f, sem);
      SolverAnswer answer = some_extension(f, sem);
      if (std::holds_alternative<NoExtension>(answer)) {
        CHECK(sem == Semantics::stable);
        CHECK(oracle.empty());
      } else {
        auto& ext = std::get<SingleExtension>(answer).extension;
        CAPTURE(show(ext));
        CHECK(std::find(oracle.begin(), oracle.end(), ext) != oracle.end());
      }
    }
  }
}

TEST_CASE("credulous decisions on fixtures") {
  CHECK(decide_credulous(f4(), ArgumentId{0}, Semantics::preferred));
  CHECK_FALSE(decide_credulous(f6(), ArgumentId{0}, Semantics::complete));
  CHECK_FALSE(decide_credulous(f3(), ArgumentId{1}, Semantics::complete));
  CHECK_THROWS_AS(decide_credulous(f3(), ArgumentId{7}, Semantics::complete),
                  Error);
}

TEST_CASE("skeptical decisions on fixtures") {
  CHECK(decide_skeptical(f3(), ArgumentId{2}, Semantics::preferred));
  CHECK_FALSE(decide_skeptical(f4(), ArgumentId{0}, Semantics::preferred));
  // no stable extension: skeptical acceptance is vacuously true
  CHECK(decide_skeptical(f5(), ArgumentId{0}, Semantics::stable));
  CHECK_THROWS_AS(decide_skeptical(f3(), ArgumentId{-1}, Semantics::stable),
                  Error);
}

TEST_CASE("extension predicates on fixtures") {
  CHECK(is_complete_extension(f4(), make_set(f4(), {0})));
  CHECK(is_stable_extension(f4(), make_set(f4(), {0})));
  CHECK(is_complete_extension(f5(), f5().empty_set()));
  CHECK_FALSE(is_stable_extension(f5(), f5().empty_set()));
  // {a} defends c but does not contain it
  CHECK_FALSE(is_complete_extension(f3(), make_set(f3(), {0})));
  CHECK(is_preferred_extension(f3(), make_set(f3(), {0, 2})));
  CHECK_FALSE(is_preferred_extension(f4(), f4().empty_set()));
  CHECK(is_preferred_extension(f4(), make_set(f4(), {1})));
}

TEST_CASE("engine equals oracle on random frameworks up to 12 arguments") {
  for (const auto& f : sample_frameworks(120, 12, 2025)) {
    for (Semantics sem : kAllSemantics) {
      auto engine = enumerate_extensions(f, sem);
      auto oracle = bench::brute_force_extensions(f, sem);
      CAPTURE(to_string(sem));
      CAPTURE(show(engine));
      CAPTURE(show(oracle));
      REQUIRE(engine == oracle);
    }
  }
}

TEST_CASE("decisions are consistent with enumeration") {
  for (const auto& f : sample_frameworks(60, 9, 77)) {
    for (Semantics sem : kAllSemantics) {
      auto all = enumerate_extensions(f, sem);
      for (int x = 0; x < f.argument_count(); ++x) {
        bool in_some = std::any_of(all.begin(), all.end(),
                                   [&](auto& e) { return e.contains(x); });
        bool in_all = std::all_of(all.begin(), all.end(),
                                  [&](auto& e) { return e.contains(x); });
        CHECK(decide_credulous(f, ArgumentId{x}, sem) == in_some);
        CHECK(decide_skeptical(f, ArgumentId{x}, sem) == in_all);
      }
    }
  }
}

TEST_CASE("fast paths match their definitions") {
  for (const auto& f : sample_frameworks(60, 9, 500)) {
    ArgumentSet grounded = grounded_extension(f);
    for (int x = 0; x < f.argument_count(); ++x) {
      // credulous acceptance under complete and preferred coincide
      CHECK(decide_credulous(f, ArgumentId{x}, Semantics::complete) ==
            decide_credulous(f, ArgumentId{x}, Semantics::preferred));
      // skeptical-complete is grounded membership
      CHECK(decide_skeptical(f, ArgumentId{x}, Semantics::complete) ==
            grounded.contains(x));
    }
  }
}

TEST_CASE("lattice inclusions and intersection law") {
  for (const auto& f : sample_frameworks(80, 10, 321)) {
    ArgumentSet grounded = grounded_extension(f);
    auto complete = enumerate_extensions(f, Semantics::complete);
    auto preferred = enumerate_extensions(f, Semantics::preferred);
    auto stable = enumerate_extensions(f, Semantics::stable);

    REQUIRE(!complete.empty());
    REQUIRE(!preferred.empty());

    auto grounded_list = enumerate_extensions(f, Semantics::grounded);
    REQUIRE(grounded_list.size() == 1);
    CHECK(grounded_list[0] == grounded);

    ArgumentSet intersection = f.full_set();
    for (const auto& c : complete) {
      CHECK(grounded.subset_of(c));
      CHECK(is_complete_extension(f, c));
      intersection &= c;
    }
    CHECK(intersection == grounded);

    for (const auto& s : stable)
      CHECK(std::find(preferred.begin(), preferred.end(), s) != preferred.end());
    for (const auto& p : preferred)
      CHECK(std::find(complete.begin(), complete.end(), p) != complete.end());
  }
}

TEST_CASE("enumeration is deterministic across runs") {
  for (const auto& f : sample_frameworks(20, 10, 9000)) {
    for (Semantics sem : kAllSemantics) {
      auto first = enumerate_extensions(f, sem);
      auto second = enumerate_extensions(f, sem);
      CHECK(first == second);
      CHECK(std::is_sorted(first.begin(), first.end(), ArgumentSet::word_less));
    }
  }
}

TEST_CASE("grounded labelling is the minimal complete labelling") {
  for (const auto& f : sample_frameworks(60, 10, 606)) {
    Labelling l = grounded_labelling(f);
    CHECK(is_complete_labelling(f, l));
    CHECK(l.in_set() == grounded_extension(f));
  }
  // the all-UNDEC labelling of the 3-cycle is complete
  CHECK(is_complete_labelling(f5(), grounded_labelling(f5())));
  // but an IN label without OUT attackers is illegal
  Labelling bad(f4().argument_count());
  bad.set(ArgumentId{0}, Label::in);
  CHECK_FALSE(is_legal_label(f4(), bad, ArgumentId{0}));
}

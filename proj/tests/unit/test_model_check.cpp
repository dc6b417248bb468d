#include "doctest.h"
#include "prsequiv/aut.hpp"
#include "prsequiv/error.hpp"
#include "prsequiv/model_check.hpp"
#include "support.hpp"

using namespace prsequiv;

namespace {

// 0 -a-> 1 -b-> 2, 0 -tau-> 3 -a-> 3
FiniteLts sample() {
  LtsBuilder b;
  for (int i = 0; i < 4; ++i) b.add_state(std::to_string(i));
  b.add_transition(0, "a", 1);
  b.add_transition(1, "b", 2);
  b.add_transition(0, "tau", 3);
  b.add_transition(3, "a", 3);
  return std::move(b).build();
}

std::vector<bool> sat(const FiniteLts& lts, const char* text) {
  FormulaStore s;
  return satisfying_states(lts, s, parse_formula(text, s));
}

}  // namespace

TEST_CASE("modal operators on a fixed LTS") {
  FiniteLts l = sample();
  CHECK(sat(l, "<a>tt") == std::vector<bool>{true, false, false, true});
  CHECK(sat(l, "[a]ff") == std::vector<bool>{false, true, true, false});
  CHECK(sat(l, "<a><b>tt") == std::vector<bool>{true, false, false, false});
  CHECK(sat(l, "<<b>>tt") == std::vector<bool>{false, true, false, false});
  CHECK(sat(l, "<<a>><<b>>tt") == std::vector<bool>{true, false, false, false});
  CHECK(sat(l, "!<<a>>!<a>tt") == std::vector<bool>{false, true, true, true});
  CHECK(sat(l, "EF [b]ff & <b>tt") == std::vector<bool>{false, true, false, false});
  CHECK(sat(l, "EF <b>tt") == std::vector<bool>{true, true, false, false});
  CHECK(sat(l, "AG <a>tt") == std::vector<bool>{false, false, false, true});
  CHECK(sat(l, "<zz>tt") == std::vector<bool>{false, false, false, false});
  CHECK(sat(l, "nu X. <a>X") == std::vector<bool>{false, false, false, true});
  CHECK(sat(l, "mu X. <b>tt | <a>X") == std::vector<bool>{true, true, false, false});
  FormulaStore s;
  CHECK(model_check(l, 0, s, s.tt()));
  CHECK_FALSE(model_check(l, 2, s, s.dia("b", s.tt())));
}

TEST_CASE("ill-formed formulas are rejected") {
  FiniteLts l = sample();
  CHECK_THROWS_AS(sat(l, "nu X. !X"), PreconditionError);
  CHECK_THROWS_AS(sat(l, "X"), PreconditionError);
  CHECK_THROWS_AS(sat(l, "nu X. <a>(mu Y. <b>Y | X)"), PreconditionError);
  CHECK_NOTHROW(sat(l, "nu X. <a>X & (mu Y. <b>tt | <a>Y)"));
}

TEST_CASE("negation is complement") {
  testing::Rng rng(5);
  FormulaStore s;
  std::vector<FormulaId> pool{s.tt(), s.dia("a", s.tt()), s.box("b", s.ff())};
  std::uniform_int_distribution<int> op(0, 5);
  for (int i = 0; i < 60; ++i) {
    auto pick = [&] { return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]; };
    switch (op(rng)) {
      case 0: pool.push_back(s.conj(pick(), pick())); break;
      case 1: pool.push_back(s.disj(pick(), pick())); break;
      case 2: pool.push_back(s.dia("a", pick())); break;
      case 3: pool.push_back(s.box("b", pick())); break;
      case 4: pool.push_back(s.ef(pick())); break;
      default: pool.push_back(s.neg(pick())); break;
    }
  }
  for (int i = 0; i < 30; ++i) {
    FiniteLts l = testing::random_lts(rng, {1, 6, 2, 0.3});
    for (FormulaId f : pool) {
      auto a = satisfying_states(l, s, f);
      auto b = satisfying_states(l, s, s.neg(f));
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] != b[k]);
    }
  }
}

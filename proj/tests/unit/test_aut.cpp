#include <set>
#include <sstream>

#include "doctest.h"
#include "prsequiv/aut.hpp"
#include "prsequiv/error.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/semantics.hpp"
#include "support.hpp"

using namespace prsequiv;

TEST_CASE("export of small LTSs") {
  LtsBuilder b;
  StateId s = b.add_state();
  b.add_transition(s, "a", s);
  CHECK(export_aut(std::move(b).build()) == "des (0,1,1)\n(0,\"a\",0)\n");

  LtsBuilder e;
  e.add_state();
  CHECK(export_aut(std::move(e).build()) == "des (0,0,1)\n");
}

TEST_CASE("import of export is the identity on fig1") {
  PrsSystem fig1 = load_system(testing::data_path("fig1.prs"));
  std::vector<TermId> roots{parse_term("s", fig1.store()), parse_term("t", fig1.store()),
                            parse_term("u", fig1.store())};
  FiniteLts lts = explore(fig1, roots);
  FiniteLts back = import_aut(export_aut(lts));
  REQUIRE(back.num_states() == lts.num_states());
  CHECK(back.num_transitions() == lts.num_transitions());
  for (StateId x = 0; x < lts.num_states(); ++x)
    for (const Edge& ed : lts.out(x)) {
      auto p = back.post(x, *back.find_action(lts.action_name(ed.action)));
      CHECK(std::find(p.begin(), p.end(), ed.target) != p.end());
    }
  CHECK(export_aut(back) == export_aut(lts));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(import_aut("(0,\"a\",0)\n"), ParseError);
  CHECK_THROWS_AS(import_aut("des (0,1,1)\n(0,\"a\",3)\n"), ParseError);
  CHECK_THROWS_AS(import_aut("des (0,2,1)\n(0,\"a\",0)\n"), ParseError);
  CHECK_THROWS_AS(import_aut("des (0,1,1)\n(0,\"a\"\n"), ParseError);
  CHECK(import_aut("des (0,1,2)\n(0,a b,1)\n").action_name(0) == "a b");
}

TEST_CASE("random round trips") {
  testing::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    FiniteLts lts = testing::random_lts(rng, {1, 8, 3, 0.2, true});
    // Import numbers actions by first appearance, so compare the lines as a set.
    auto lines = [](const std::string& text) {
      std::multiset<std::string> out;
      std::istringstream in(text);
      for (std::string l; std::getline(in, l);) out.insert(l);
      return out;
    };
    std::string once = export_aut(import_aut(export_aut(lts)));
    CHECK(lines(once) == lines(export_aut(lts)));
    CHECK(export_aut(import_aut(once)) == once);
  }
}

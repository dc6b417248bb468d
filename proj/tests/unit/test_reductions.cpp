#include "doctest.h"
#include "prsequiv/error.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/reductions.hpp"
#include "prsequiv/semantics.hpp"
#include "support.hpp"

using namespace prsequiv;

namespace {

FiniteLts fig1() {
  PrsSystem sys = load_system(testing::data_path("fig1.prs"));
  std::vector<TermId> roots;
  for (const char* n : {"s", "t", "u"}) roots.push_back(parse_term(n, sys.store()));
  return explore(sys, roots);
}

bool simulated(const SimInstance& in) {
  UnionResult u = disjoint_union(in.left, in.right);
  return sim_preorder(u.lts).contains(in.s, u.right_offset + in.t);
}

}  // namespace

TEST_CASE("branching degree") {
  FiniteLts l = fig1();
  CHECK(max_branching(l) == 3);
  LtsBuilder b;
  b.add_state();
  CHECK(max_branching(std::move(b).build()) == 0);
}

TEST_CASE("bisimulation to simulation on the example") {
  FiniteLts l = fig1();
  StateId s = *l.find_state("s"), t = *l.find_state("t"), u = *l.find_state("u");
  CHECK_FALSE(simulated(bisim_to_sim(l, s, l, t)));
  CHECK_FALSE(simulated(bisim_to_sim(l, u, l, t)));
  CHECK(simulated(bisim_to_sim(l, t, l, t)));
  CHECK(simulated(bisim_to_sim(l, s, l, s, 4)));
  CHECK_THROWS_AS(bisim_to_sim(l, s, l, t, 2), PreconditionError);
}

TEST_CASE("reductions preserve the answer on random instances") {
  testing::Rng rng(21);
  for (int i = 0; i < 120; ++i) {
    FiniteLts a = testing::random_lts(rng, {1, 5, 2, 0.3, false, 2});
    FiniteLts b = testing::random_lts(rng, {1, 5, 2, 0.3, false, 2});
    UnionResult u = disjoint_union(a, b);
    Partition bis = bisim_partition(u.lts);
    Relation sim = sim_preorder(u.lts);
    Partition mq = bisim_partition(max_quotient(u.lts));
    for (StateId s = 0; s < a.num_states(); ++s)
      for (StateId t = 0; t < b.num_states(); ++t) {
        StateId t2 = u.right_offset + t;
        CHECK(simulated(bisim_to_sim(a, s, b, t, 2)) == bis.same(s, t2));
        EqInstance eq = simpre_to_simeq(u.lts, s, t2);
        Relation r = sim_preorder(eq.lts);
        CHECK((r.contains(eq.s, eq.t) && r.contains(eq.t, eq.s)) == sim.contains(s, t2));
        CHECK(mq.same(s, t2) == (sim.contains(s, t2) && sim.contains(t2, s)));
      }
  }
}

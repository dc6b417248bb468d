#include "doctest.h"
#include "prsequiv/error.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/semantics.hpp"
#include "support.hpp"

using namespace prsequiv;

namespace {

struct Fig1 {
  FiniteLts lts;
  StateId s, t, u;
};

Fig1 fig1() {
  PrsSystem sys = load_system(testing::data_path("fig1.prs"));
  std::vector<TermId> roots{parse_term("s", sys.store()), parse_term("t", sys.store()), parse_term("u", sys.store())};
  FiniteLts lts = explore(sys, roots);
  StateId s = *lts.state_of(roots[0]), t = *lts.state_of(roots[1]), u = *lts.state_of(roots[2]);
  return {std::move(lts), s, t, u};
}

}  // namespace

TEST_CASE("fig1 relations") {
  Fig1 f = fig1();
  Partition p = bisim_partition(f.lts);
  CHECK_FALSE(p.same(f.s, f.t));
  CHECK_FALSE(p.same(f.s, f.u));
  CHECK_FALSE(p.same(f.t, f.u));
  CHECK(bisim_partition(f.lts, RefinementMethod::Worklist) == p);

  Relation sim = sim_preorder(f.lts);
  CHECK(sim.contains(f.s, f.t));
  CHECK_FALSE(sim.contains(f.t, f.s));
  CHECK(sim.contains(f.t, f.u));
  CHECK(sim.contains(f.u, f.t));

  CHECK(trace_inclusion(f.lts, f.s, f.t));
  CHECK(trace_inclusion(f.lts, f.t, f.s));

  KBisim kb = kbisim(f.lts, 3);
  CHECK(kb.levels[1].same(f.s, f.t));
  CHECK_FALSE(kb.levels[2].same(f.s, f.t));
}

TEST_CASE("approximants, identity and deadlock") {
  testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    FiniteLts lts = testing::random_lts(rng, {1, 7, 2, 0.3});
    std::size_t n = lts.num_states();
    KBisim kb = kbisim(lts, n);
    CHECK(kb.levels[0].num_blocks == 1);
    CHECK(kb.levels[n] == bisim_partition(lts));
    Relation sim = sim_preorder(lts);
    for (StateId s = 0; s < n; ++s) {
      CHECK(sim.contains(s, s));
      CHECK(trace_inclusion(lts, s, s));
      if (lts.out(s).empty())
        for (StateId t = 0; t < n; ++t) CHECK(sim.contains(s, t));
    }
  }
}

TEST_CASE("partition refinement against the fixpoint oracle") {
  testing::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    FiniteLts lts = testing::random_lts(rng, {1, 8, 3, 0.2});
    auto oracle = testing::naive_bisim(lts);
    Partition naive = bisim_partition(lts, RefinementMethod::Naive);
    Partition work = bisim_partition(lts, RefinementMethod::Worklist);
    CHECK(naive == work);
    auto sim = testing::naive_sim(lts);
    Relation lib_sim = sim_preorder(lts);
    for (StateId s = 0; s < lts.num_states(); ++s)
      for (StateId t = 0; t < lts.num_states(); ++t) {
        CHECK(naive.same(s, t) == oracle[s][t]);
        CHECK(lib_sim.contains(s, t) == sim[s][t]);
      }
    KBisim kb = kbisim(lts, 3);
    for (StateId s = 0; s < lts.num_states(); ++s)
      for (StateId t = 0; t < lts.num_states(); ++t)
        for (std::size_t k = 0; k <= 3; ++k) CHECK(kb.levels[k].same(s, t) == testing::kbisim_rec(lts, s, t, k));
  }
}

TEST_CASE("isomorphic copies share blocks; deterministic LTSs follow trace equivalence") {
  testing::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    FiniteLts lts = testing::random_lts(rng, {1, 6, 2, 0.3});
    UnionResult u = disjoint_union(lts, lts);
    Partition p = bisim_partition(u.lts);
    for (StateId s = 0; s < lts.num_states(); ++s) CHECK(p.same(s, s + u.right_offset));

    FiniteLts det = testing::random_lts(rng, {1, 6, 2, 0.5, false, 1});
    Partition pd = bisim_partition(det);
    for (StateId s = 0; s < det.num_states(); ++s)
      for (StateId t = 0; t < det.num_states(); ++t)
        CHECK(pd.same(s, t) == (trace_inclusion(det, s, t) && trace_inclusion(det, t, s)));
  }
}

TEST_CASE("trace inclusion agrees with bounded trace enumeration") {
  testing::Rng rng(24);
  for (int i = 0; i < 150; ++i) {
    FiniteLts lts = testing::random_lts(rng, {1, 5, 2, 0.3});
    for (StateId s = 0; s < lts.num_states(); ++s)
      for (StateId t = 0; t < lts.num_states(); ++t) {
        auto ts = testing::traces_upto(lts, s, 8), tt = testing::traces_upto(lts, t, 8);
        bool bounded = std::includes(tt.begin(), tt.end(), ts.begin(), ts.end());
        bool incl = trace_inclusion(lts, s, t);
        if (incl) CHECK(bounded);
        if (!bounded) CHECK_FALSE(incl);
      }
  }
}

TEST_CASE("weak bisimilarity") {
  testing::Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    FiniteLts lts = testing::random_lts(rng, {1, 7, 2, 0.3});
    CHECK(weak_bisim_partition(lts) == bisim_partition(lts));
  }
  LtsBuilder b;
  StateId s = b.add_state("s"), s2 = b.add_state("s'"), x = b.add_state("x"), loop = b.add_state("loop"),
          dead = b.add_state("dead");
  b.add_transition(s, "tau", s2);
  b.add_transition(s2, "a", x);
  b.add_transition(loop, "tau", loop);
  FiniteLts lts = std::move(b).build();
  Partition w = weak_bisim_partition(lts);
  CHECK(w.same(s, s2));
  CHECK(w.same(loop, dead));
  auto oracle = testing::weak_game_fixpoint(lts);
  CHECK(oracle[s][s2]);
  CHECK(oracle[loop][dead]);
}

TEST_CASE("incomplete LTSs are rejected") {
  LtsBuilder b;
  b.add_state("x", false);
  FiniteLts lts = std::move(b).build();
  CHECK_THROWS_AS(bisim_partition(lts), IncompleteLtsError);
  CHECK_THROWS_AS(sim_preorder(lts), IncompleteLtsError);
  CHECK_THROWS_AS(kbisim(lts, 1), IncompleteLtsError);
}

TEST_CASE("trace inclusion reports determinisation blow-up") {
  // n states, nondeterministic a/b moves: the subset construction visits many sets.
  testing::Rng rng(26);
  FiniteLts lts = testing::random_lts(rng, {12, 12, 2, 0.5});
  CHECK_THROWS_AS(trace_inclusion(lts, 0, 1, 2), LimitExceeded);
}

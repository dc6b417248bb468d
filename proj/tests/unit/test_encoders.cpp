#include "doctest.h"
#include "prsequiv/encoders.hpp"
#include "prsequiv/error.hpp"
#include "prsequiv/game.hpp"
#include "prsequiv/inf_vs_fs.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/semantics.hpp"
#include "support.hpp"

using namespace prsequiv;

namespace {

bool qbf_by_simulation(const Qbf& q) {
  QbfEncoding e = qbf_to_pda_fs(q);
  FiniteLts g = explore_pda(e.pda, e.start);
  REQUIRE(g.all_complete());
  UnionResult u = disjoint_union(g, e.fs);
  return sim_preorder(u.lts).contains(0, u.right_offset + e.f);
}

}  // namespace

TEST_CASE("Minsky machines parse and run") {
  MinskyMachine m = load_minsky(testing::data_path("minsky/halt2.mm"));
  CHECK(m.counters == 1);
  CHECK(m.program.size() == 2);
  CHECK(parse_minsky(m.to_string()).to_string() == m.to_string());
  MinskyRun r = run_minsky(m, 10);
  CHECK(r.halted);
  CHECK(r.steps == 1);
  CHECK_FALSE(run_minsky(load_minsky(testing::data_path("minsky/loop1.mm")), 1000).halted);
  CHECK(run_minsky(load_minsky(testing::data_path("minsky/halt2c.mm")), 1000).halted);
  CHECK_FALSE(run_minsky(load_minsky(testing::data_path("minsky/loop2c.mm")), 1000).halted);
  CHECK_THROWS(parse_minsky("counters 1\n1: inc c2 goto 2\n2: halt\n"));
  CHECK_THROWS(parse_minsky("counters 1\n1: halt\n2: halt\n"));
  CHECK_THROWS_AS(parse_minsky("counters 1\n1: jump\n"), ParseError);
}

TEST_CASE("QBF parse and evaluation") {
  Qbf t = load_qbf(testing::data_path("qbf/true2.qbf"));
  Qbf f = load_qbf(testing::data_path("qbf/false2.qbf"));
  CHECK(eval_qbf(t));
  CHECK_FALSE(eval_qbf(f));
  CHECK(parse_qbf(t.to_string()).to_string() == t.to_string());
  CHECK_THROWS(parse_qbf("vars 2\nx3\n"));
  CHECK_THROWS(eval_qbf(Qbf{1, {{1}}}));
  testing::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    Qbf q = testing::random_qbf(rng, 2 + 2 * (i % 2), 4);
    CHECK(eval_qbf(q) == testing::qbf_brute(q));
  }
}

TEST_CASE("QBF encoding preserves truth") {
  CHECK(qbf_by_simulation(load_qbf(testing::data_path("qbf/true2.qbf"))));
  CHECK_FALSE(qbf_by_simulation(load_qbf(testing::data_path("qbf/false2.qbf"))));
  testing::Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    Qbf q = testing::random_qbf(rng, 2, 3);
    CHECK(qbf_by_simulation(q) == testing::qbf_brute(q));
  }
  std::string text = print_pda(qbf_to_pda_fs(load_qbf(testing::data_path("qbf/true2.qbf"))).pda);
  CHECK_FALSE(text.empty());
}

TEST_CASE("Petri net encoding separates the markings exactly when the machine halts") {
  auto check = [](const char* file, bool halts) {
    MinskyMachine m = load_minsky(testing::data_path(file));
    PnEncoding e = minsky_to_pn(m);
    std::vector<TermId> roots{e.m, e.m_prime};
    FiniteLts l = explore(e.system, roots, {200000, 24, std::nullopt});
    GameOutcome o = game_solve(l, *l.state_of(e.m), *l.state_of(e.m_prime), GameKind::Bisimulation, 20);
    CHECK((o.winner == Player::Attacker) == halts);
  };
  check("minsky/halt2.mm", true);
  check("minsky/loop1.mm", false);
}

TEST_CASE("PA encoding is simulated exactly when the machine runs forever") {
  auto check = [](const char* file, bool halts) {
    auto store = std::make_shared<TermStore>();
    PaFsEncoding e = minsky_to_pa_fs(load_minsky(testing::data_path(file)), store);
    FiniteLts l = explore(e.pa, std::span<const TermId>(&e.start, 1), {200000, 24, std::nullopt});
    TermId f = store->constant(e.f1);
    FiniteLts r = explore(e.fs, std::span<const TermId>(&f, 1));
    GameOutcome o = game_solve(l, *l.state_of(e.start), r, *r.state_of(f), GameKind::Simulation, 20);
    CHECK((o.winner == Player::Attacker) == halts);
  };
  check("minsky/halt2c.mm", true);
  check("minsky/loop2c.mm", false);
}

// Acceptance run: eleven property and oracle checks, one PASS/FAIL line each.
// Exits nonzero when any check fails. Seeds are fixed, so runs are reproducible.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prsequiv/base.hpp"
#include "prsequiv/charform.hpp"
#include "prsequiv/dd.hpp"
#include "prsequiv/encoders.hpp"
#include "prsequiv/game.hpp"
#include "prsequiv/inf_vs_fs.hpp"
#include "prsequiv/model_check.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/reductions.hpp"
#include "prsequiv/semantics.hpp"
#include "support.hpp"

using namespace prsequiv;
namespace t = prsequiv::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = true;
  std::string detail;
};

// Tallies agreements; the first few disagreements are kept for the report.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void check(bool ok, const std::string& what = {}) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
  std::string summary() const {
    std::ostringstream os;
    os << checked - failed << "/" << checked << " agree";
    if (failed) os << "; first failure: " << first;
    return os.str();
  }
};

// The shared instance set of criteria 1-3 and 11.
std::vector<FiniteLts> strong_instances() {
  t::Rng rng(1001);
  std::vector<FiniteLts> out;
  for (int i = 0; i < 1000; ++i) out.push_back(t::random_lts(rng, {1, 8, 3, 0.2}));
  return out;
}

bool refines(const Partition& fine, const Partition& coarse) {
  for (StateId s = 0; s < fine.block.size(); ++s)
    for (StateId u = 0; u < fine.block.size(); ++u)
      if (fine.same(s, u) && !coarse.same(s, u)) return false;
  return true;
}

Result c1_oracle_agreement(const std::vector<FiniteLts>& inst) {
  auto start = Clock::now();
  Tally tally;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const FiniteLts& lts = inst[i];
    Partition p = bisim_partition(lts, RefinementMethod::Worklist);
    GameArena arena(lts, lts, GameKind::Bisimulation);
    for (StateId s = 0; s < lts.num_states(); ++s)
      for (StateId u = 0; u < lts.num_states(); ++u) {
        bool game = solve_game(arena, s, u).winner() == Player::Defender;
        tally.check(game == p.same(s, u), "instance " + std::to_string(i));
      }
  }
  double secs = seconds_since(start);
  std::ostringstream os;
  os << tally.summary() << " pairs over " << inst.size() << " LTSs in " << secs << " s";
  return {tally.failed == 0 && secs < 60.0, os.str()};
}

Result c2_hierarchy(const std::vector<FiniteLts>& inst) {
  Tally tally;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const FiniteLts& lts = inst[i];
    Partition p = bisim_partition(lts);
    Relation sim = sim_preorder(lts);
    for (StateId s = 0; s < lts.num_states(); ++s)
      for (StateId u = 0; u < lts.num_states(); ++u) {
        bool simeq = sim.contains(s, u) && sim.contains(u, s);
        bool treq = trace_inclusion(lts, s, u, 256) && trace_inclusion(lts, u, s, 256);
        tally.check((!p.same(s, u) || simeq) && (!simeq || treq), "instance " + std::to_string(i));
      }
  }
  return {tally.failed == 0, tally.summary() + " (bisim => sim-equiv => trace-equiv)"};
}

Result c3_stratification(const std::vector<FiniteLts>& inst) {
  Tally tally;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const FiniteLts& lts = inst[i];
    std::size_t n = lts.num_states();
    KBisim kb = kbisim(lts, n);
    bool mono = true;
    for (std::size_t k = 0; k < n; ++k) mono = mono && refines(kb.levels[k + 1], kb.levels[k]);
    tally.check(mono && kb.levels[n] == bisim_partition(lts), "instance " + std::to_string(i));
  }
  return {tally.failed == 0, tally.summary() + " LTSs (monotone chain, level |S| = bisimilarity)"};
}

Result c4_weak(const std::vector<FiniteLts>& inst) {
  Tally free_tally;
  for (const FiniteLts& lts : inst) free_tally.check(weak_bisim_partition(lts) == bisim_partition(lts));
  Tally tau_tally;
  t::Rng rng(1004);
  for (int i = 0; i < 300; ++i) {
    FiniteLts lts = t::random_lts(rng, {1, 8, 2, 0.2, true});
    Partition p = weak_bisim_partition(lts);
    t::Matrix m = t::weak_game_fixpoint(lts);
    bool ok = true;
    for (StateId s = 0; s < lts.num_states(); ++s)
      for (StateId u = 0; u < lts.num_states(); ++u) ok = ok && p.same(s, u) == m[s][u];
    tau_tally.check(ok, "tau instance " + std::to_string(i));
  }
  return {free_tally.failed == 0 && tau_tally.failed == 0,
          "tau-free " + free_tally.summary() + "; with tau " + tau_tally.summary()};
}

Result c5_max_quotient() {
  t::Rng rng(1005);
  Tally tally;
  for (int i = 0; i < 500; ++i) {
    FiniteLts a = t::random_lts(rng, {1, 6, 2, 0.3});
    FiniteLts b = t::random_lts(rng, {1, 6, 2, 0.3});
    UnionResult u = disjoint_union(a, b);
    std::uniform_int_distribution<StateId> ps(0, static_cast<StateId>(a.num_states() - 1));
    std::uniform_int_distribution<StateId> pt(0, static_cast<StateId>(b.num_states() - 1));
    StateId s = ps(rng), q = u.right_offset + pt(rng);
    Relation sim = sim_preorder(u.lts);
    bool simeq = sim.contains(s, q) && sim.contains(q, s);
    bool bis = bisim_partition(max_quotient(u.lts)).same(s, q);
    tally.check(simeq == bis, "pair " + std::to_string(i));
  }
  return {tally.failed == 0, tally.summary() + " random pairs"};
}

Result c6_reductions() {
  t::Rng rng(1006);
  Tally b2s, p2e;
  std::size_t positives = 0;
  for (int i = 0; i < 500; ++i) {
    FiniteLts a = t::random_lts(rng, {1, 5, 2, 0.3, false, 3});
    // Half of the right sides are copies, so both answers occur.
    FiniteLts b = i % 2 ? t::random_lts(rng, {1, 5, 2, 0.3, false, 3}) : a;
    std::uniform_int_distribution<StateId> ps(0, static_cast<StateId>(a.num_states() - 1));
    std::uniform_int_distribution<StateId> pt(0, static_cast<StateId>(b.num_states() - 1));
    StateId s = ps(rng), q = pt(rng);
    UnionResult u = disjoint_union(a, b);
    bool bis = bisim_partition(u.lts).same(s, u.right_offset + q);
    positives += bis;
    SimInstance in = bisim_to_sim(a, s, b, q, 3);
    UnionResult v = disjoint_union(in.left, in.right);
    b2s.check(sim_preorder(v.lts).contains(in.s, v.right_offset + in.t) == bis, "pair " + std::to_string(i));

    bool pre = sim_preorder(u.lts).contains(s, u.right_offset + q);
    EqInstance eq = simpre_to_simeq(u.lts, s, u.right_offset + q);
    Relation r = sim_preorder(eq.lts);
    p2e.check((r.contains(eq.s, eq.t) && r.contains(eq.t, eq.s)) == pre, "pair " + std::to_string(i));
  }
  std::ostringstream os;
  os << "bisim->sim " << b2s.summary() << " (" << positives << " bisimilar); preorder->equiv " << p2e.summary();
  return {b2s.failed == 0 && p2e.failed == 0, os.str()};
}

Result c7_charform() {
  const std::vector<std::string> actions{"a", "b", "tau"};
  t::Rng rng(1007);
  Tally tally;
  for (int i = 0; i < 200; ++i) {
    bool tau = i % 2 == 1;
    FiniteLts f = t::random_lts(rng, {1, 8, 2, 0.2, tau});
    FiniteLts g = t::random_lts(rng, {1, 12, 2, 0.15, tau});
    UnionResult u = disjoint_union(f, g);
    Partition bis = bisim_partition(u.lts);
    Partition weak = weak_bisim_partition(u.lts);
    Relation sim = sim_preorder(u.lts);
    FormulaStore store;
    for (StateId x = 0; x < f.num_states(); ++x) {
      auto strong = satisfying_states(u.lts, store, ef_char(f, x, store, false, actions));
      auto weakf = satisfying_states(u.lts, store, ef_char(f, x, store, true, actions));
      auto mu = satisfying_states(u.lts, store, mu_char_bisim(f, x, store, actions));
      SimChar sc = sim_char(f, x, store, actions);
      auto simeq = satisfying_states(u.lts, store, store.conj(sc.psi, sc.rho));
      bool ok = true;
      for (StateId y = u.right_offset; y < u.lts.num_states(); ++y) {
        ok = ok && strong[y] == bis.same(x, y) && weakf[y] == weak.same(x, y) && mu[y] == bis.same(x, y);
        ok = ok && simeq[y] == (sim.contains(x, y) && sim.contains(y, x));
      }
      tally.check(ok, "pair " + std::to_string(i) + " state " + std::to_string(x));
    }
  }

  PrsSystem sys = load_system(t::data_path("fh.prs"));
  TermId root = parse_term("f", sys.store());
  FiniteLts fh = explore(sys, std::span<const TermId>(&root, 1));
  StateId fs = *fh.find_state("f");
  FormulaStore store;
  std::vector<std::size_t> dag;
  std::vector<boost::multiprecision::cpp_int> tree;
  for (std::size_t k : {4, 8, 12}) {
    FormulaId phi = ef_char(fh, fs, store, false, {}, k);
    dag.push_back(dag_size(store, phi));
    tree.push_back(tree_size(store, phi));
  }
  std::size_t inc1 = dag[1] - dag[0], inc2 = dag[2] - dag[1];
  bool growth = dag[1] > dag[0] && inc2 <= inc1 && tree[1] >= 2 * tree[0] && tree[2] >= 2 * tree[1];
  std::ostringstream os;
  os << tally.summary() << " (F, G) state checks; FH dag " << dag[0] << "/" << dag[1] << "/" << dag[2] << " tree "
     << tree[0] << "/" << tree[1] << "/" << tree[2];
  return {tally.failed == 0 && growth, os.str()};
}

TermId word_term(TermStore& store, const std::vector<ConstId>& w) {
  TermId x = store.empty();
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = store.seq(store.constant(*it), x);
  return x;
}

Result c8_bases() {
  static const char* nbpa[] = {"01_counter", "02_twins", "03_stack", "04_choice", "05_powers", "06_absorb",
                               "07_mixed",   "08_chain", "09_unequal", "10_loops", "11_swap",  "12_deep"};
  static const char* bpafs[] = {"01_step",   "02_silent", "03_call", "04_tauloop", "05_escape", "06_hidden",
                                "07_preempt", "08_commit", "09_nested", "10_diverge", "11_count", "12_tail"};
  const std::size_t k = 16;
  Tally strong;
  for (const char* name : nbpa) {
    PrsSystem sys = load_system(t::data_path(std::string("nbpa/") + name + ".prs"));
    TermStore& st = sys.store();
    std::vector<ExtNat> norms = constant_norms(sys);
    std::vector<std::uint64_t> weights;
    for (ConstId c : sys.constants()) weights.push_back(norms[static_cast<std::uint32_t>(c)].value());
    std::vector<TermId> roots;
    for (auto& w : t::words_by_weight(sys.constants(), weights, 6)) roots.push_back(word_term(st, w));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    FiniteLts lts = explore(sys, roots, {2'000'000, k, std::nullopt});
    auto cls = t::approx_kbisim_classes(lts, k);
    NbpaDecider d(sys);
    for (TermId a : roots)
      for (TermId b : roots) {
        bool want = cls[*lts.state_of(a)] == cls[*lts.state_of(b)];
        strong.check(d.bisimilar(a, b) == want, std::string(name) + " " + st.to_string(a) + " vs " + st.to_string(b));
      }
  }

  Tally weak;
  for (const char* name : bpafs) {
    auto store = std::make_shared<TermStore>();
    PrsSystem bpa = load_system(t::data_path(std::string("bpafs/") + name + ".bpa.prs"), store);
    PrsSystem fs = load_system(t::data_path(std::string("bpafs/") + name + ".fs.prs"), store);
    WeakBpaFsDecider d(bpa, fs);
    std::vector<TermId> lefts;
    for (auto& w : t::words_upto(bpa.constants(), 4)) lefts.push_back(word_term(*store, w));
    std::vector<TermId> roots = lefts;
    for (ConstId y : fs.constants()) roots.push_back(store->constant(y));
    FiniteLts lts = explore(d.joint(), roots, {2'000'000, k, std::nullopt});
    GameArena arena(lts, lts, GameKind::WeakBisimulation);
    for (TermId a : lefts)
      for (ConstId y : fs.constants()) {
        StateId sa = *lts.state_of(a), sy = *lts.state_of(store->constant(y));
        bool want = solve_game(arena, sa, sy, k).winner() == Player::Defender;
        weak.check(d.weakly_bisimilar(a, y) == want,
                   std::string(name) + " " + store->to_string(a) + " vs " + store->constant_name(y));
      }
  }
  return {strong.failed == 0 && weak.failed == 0,
          "normed BPA " + strong.summary() + "; BPA/FS weak " + weak.summary()};
}

Result c9_pda_fs() {
  t::Rng rng(1009);
  Tally tally;
  for (int i = 0; i < 120; ++i) {
    PdaSystem pda = t::random_finite_pda(rng, 2 + i % 2, 2, 4 + i % 4);
    PdaConfig start{0, {0, static_cast<std::uint32_t>(i % 2)}};
    FiniteLts g = explore_pda(pda, start);
    Partition gp = bisim_partition(g);
    FiniteLts fs = gp.num_blocks <= 5 && i % 3 != 2 ? t::quotient(g, gp) : t::random_lts(rng, {1, 4, 2, 0.35});
    UnionResult u = disjoint_union(g, fs);
    Partition p = bisim_partition(u.lts);
    for (StateId f = 0; f < fs.num_states(); ++f)
      tally.check(decide_pda_fs_bisim(pda, start, fs, f).bisimilar == p.same(0, u.right_offset + f),
                  "instance " + std::to_string(i));
  }

  // a-loop against a-loop
  PdaSystem loop({"p"}, {"X"}, {"a"}, {{0, 0, 0, 0, {0, 0}}});
  LtsBuilder lb;
  lb.add_transition(lb.add_state("f"), "a", 0);
  FiniteLts aloop = std::move(lb).build();
  bool loop_ok = decide_pda_fs_bisim(loop, {0, {0}}, aloop, 0).bisimilar;

  // push/pop counter over a bottom symbol against FSs with at most four states
  PdaSystem counter({"p"}, {"X", "Z"}, {"a", "b"},
                    {{0, 1, 0, 0, {0, 1}}, {0, 0, 0, 0, {0, 0}}, {0, 0, 1, 0, {}}});
  Tally counter_tally;
  for (int i = 0; i < 200; ++i) {
    FiniteLts fs = t::random_lts(rng, {1, 4, 2, 0.45});
    for (StateId f = 0; f < fs.num_states(); ++f)
      counter_tally.check(!decide_pda_fs_bisim(counter, {0, {1}}, fs, f).bisimilar, "fs " + std::to_string(i));
  }
  std::ostringstream os;
  os << tally.summary() << " finite PDA checks; a-loop " << (loop_ok ? "bisimilar" : "NOT bisimilar")
     << "; counter " << counter_tally.summary() << " non-bisimilar";
  return {tally.failed == 0 && loop_ok && counter_tally.failed == 0, os.str()};
}

Result c10_encoders() {
  t::Rng rng(1010);
  Tally qbf;
  for (int i = 0; i < 200; ++i) {
    Qbf q = t::random_qbf(rng, i % 2 ? 4 : 2, 3);
    QbfEncoding e = qbf_to_pda_fs(q);
    FiniteLts g = explore_pda(e.pda, e.start);
    UnionResult u = disjoint_union(g, e.fs);
    bool sim = sim_preorder(u.lts).contains(0, u.right_offset + e.f);
    qbf.check(g.all_complete() && sim == t::qbf_brute(q), q.to_string());
  }

  const std::size_t depth = 64;
  auto pn_attacker_wins = [&](const MinskyMachine& m) {
    PnEncoding e = minsky_to_pn(m);
    std::vector<TermId> roots{e.m, e.m_prime};
    FiniteLts l = explore(e.system, roots, {2'000'000, depth + 1, std::nullopt});
    GameArena arena(l, l, GameKind::Bisimulation);
    return solve_game(arena, *l.state_of(e.m), *l.state_of(e.m_prime), depth).winner() == Player::Attacker;
  };
  auto pa_attacker_wins = [&](const MinskyMachine& m) {
    auto store = std::make_shared<TermStore>();
    PaFsEncoding e = minsky_to_pa_fs(m, store);
    FiniteLts l = explore(e.pa, std::span<const TermId>(&e.start, 1), {2'000'000, depth + 1, std::nullopt});
    TermId f = store->constant(e.f1);
    FiniteLts r = explore(e.fs, std::span<const TermId>(&f, 1));
    GameArena arena(l, r, GameKind::Simulation);
    return solve_game(arena, *l.state_of(e.start), *r.state_of(f), depth).winner() == Player::Attacker;
  };

  Tally pn, pa;
  std::size_t halting = 0;
  for (const MinskyMachine& m : t::all_minsky(3, 2)) {
    if (!run_minsky(m, 10).halted) continue;
    ++halting;
    pn.check(pn_attacker_wins(m), m.to_string());
    pa.check(pa_attacker_wins(m), m.to_string());
  }
  for (const char* file : {"minsky/loop1.mm", "minsky/loop2c.mm", "minsky/loop2c_pump.mm"}) {
    MinskyMachine m = load_minsky(t::data_path(file));
    pn.check(!pn_attacker_wins(m), file);
    if (m.counters == 2) pa.check(!pa_attacker_wins(m), file);
  }
  std::ostringstream os;
  os << "QBF " << qbf.summary() << "; PN " << pn.summary() << "; PA/FS " << pa.summary() << " (" << halting
     << " halting machines)";
  return {qbf.failed == 0 && pn.failed == 0 && pa.failed == 0, os.str()};
}

// Random BPP system: each constant gets one or two rules with rhs a parallel product of
// up to three constants; the first constant always has a rule to eps.
PrsSystem random_bpp(t::Rng& rng, std::size_t constants, std::shared_ptr<TermStore> store) {
  std::ostringstream text;
  std::uniform_int_distribution<std::size_t> pick(0, constants - 1), len(0, 3), rules(1, 2);
  std::uniform_int_distribution<int> act(0, 1);
  auto name = [](std::size_t i) { return std::string(1, static_cast<char>('A' + i)); };
  text << "rules:\nA -a-> eps\n";
  for (std::size_t c = 0; c < constants; ++c)
    for (std::size_t r = rules(rng); r > 0; --r) {
      text << name(c) << " -" << (act(rng) ? "a" : "b") << "-> ";
      std::size_t n = len(rng);
      if (n == 0) text << "eps";
      for (std::size_t i = 0; i < n; ++i) text << (i ? "|" : "") << name(pick(rng));
      text << "\n";
    }
  return parse_system(text.str(), std::move(store));
}

Result c11_dd(const std::vector<FiniteLts>& inst) {
  std::vector<DdSpec> specs;
  const std::vector<ExtInt> deltas{ExtInt(-1), ExtInt(0), ExtInt(1), ExtInt::omega()};
  for (const char* a : {"a", "b", "c"}) specs.push_back(DdSpec::basic(a));
  for (const char* a : {"a", "b", "c"})
    for (const char* in : {"a", "b", "c"})
      for (const ExtInt& d : deltas) specs.push_back(DdSpec::make_triple(a, {DdSpec::basic(in)}, {d}));
  std::size_t violations = 0, checked = 0;
  for (const FiniteLts& lts : inst) {
    Partition p = bisim_partition(lts);
    for (const DdSpec& d : specs) {
      auto v = dd_eval_all(lts, d);
      for (StateId s = 0; s < lts.num_states(); ++s)
        for (StateId u = s + 1; u < lts.num_states(); ++u)
          if (p.same(s, u)) {
            ++checked;
            violations += v[s] != v[u];
          }
    }
  }

  t::Rng rng(1011);
  Tally norm;
  for (int i = 0; i < 25; ++i) {
    auto store = std::make_shared<TermStore>();
    PrsSystem sys = random_bpp(rng, 3 + i % 2, store);
    std::vector<ConstId> cs = sys.constants();
    for (std::uint32_t mask = 0; mask < (1u << cs.size()); ++mask) {
      std::vector<ConstId> q;
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (mask >> j & 1) q.push_back(cs[j]);
      for (const char* term : {"A", "B", "C", "A|B", "B|C|C"}) {
        TermId x = parse_term(term, *store);
        ExtNat want = norm_q(sys, q, x);
        auto bfs = t::norm_q_bfs(sys, q, x, 8);
        bool ok = bfs ? want == ExtNat(*bfs) : (want.is_omega() || want.value() > 8);
        norm.check(ok, "system " + std::to_string(i) + " term " + term);
      }
    }
  }
  std::ostringstream os;
  os << violations << " invariance violations in " << checked << " bisimilar pairs x specs; norm_Q "
     << norm.summary();
  return {violations == 0 && norm.failed == 0, os.str()};
}

}  // namespace

int main() {
  auto start = Clock::now();
  std::vector<FiniteLts> inst = strong_instances();
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 strong oracle agreement", [&] { return c1_oracle_agreement(inst); }},
      {"2 equivalence hierarchy", [&] { return c2_hierarchy(inst); }},
      {"3 approximant stratification", [&] { return c3_stratification(inst); }},
      {"4 weak bisimilarity", [&] { return c4_weak(inst); }},
      {"5 simulation equivalence via maximal quotient", c5_max_quotient},
      {"6 bisim-to-sim and preorder-to-equivalence schemes", c6_reductions},
      {"7 characteristic formulae", c7_charform},
      {"8 bisimulation bases", c8_bases},
      {"9 pushdown versus finite-state", c9_pda_fs},
      {"10 encoders versus oracles", c10_encoders},
      {"11 distance-to-disabling functions", [&] { return c11_dd(inst); }},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    auto t0 = Clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << name << ": " << r.detail << " ["
              << seconds_since(t0) << " s]" << std::endl;
  }
  std::cout << "total " << seconds_since(start) << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}

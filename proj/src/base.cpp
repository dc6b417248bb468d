#include "prsequiv/base.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "prsequiv/error.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/semantics.hpp"

namespace prsequiv {

namespace {

std::uint32_t raw(ConstId c) { return static_cast<std::uint32_t>(c); }

void sort_pairs(const TermStore& st, std::vector<TermPair>& v) {
  std::sort(v.begin(), v.end(), [&](const TermPair& a, const TermPair& b) {
    int c = st.compare(a.first, b.first);
    if (c != 0) return c < 0;
    return st.less(a.second, b.second);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<TermPair> compute_base(std::vector<TermPair> candidates,
                                   const std::function<bool(const TermPair&, const GenOracle&)>& expands,
                                   const std::function<GenOracle(const std::vector<TermPair>&)>& make_gen) {
  std::vector<TermPair> b = std::move(candidates);
  for (;;) {
    std::vector<TermPair> r = std::move(b);
    GenOracle gen = make_gen(r);
    b.clear();
    for (const TermPair& p : r)
      if (expands(p, gen)) b.push_back(p);
    if (b.size() == r.size()) return b;
  }
}

std::string print_base(const TermStore& store, const std::vector<TermPair>& base) {
  std::ostringstream out;
  for (const auto& [l, r] : base) out << store.to_string(l) << " == " << store.to_string(r) << "\n";
  return out.str();
}

bool expands_strong(const PrsSystem& sys, const TermPair& p, const GenOracle& gen) {
  auto left = successors(sys, p.first);
  auto right = successors(sys, p.second);
  auto covered = [&](const std::vector<Step>& from, const std::vector<Step>& to, bool flip) {
    for (const Step& s : from) {
      bool ok = false;
      for (const Step& t : to) {
        if (t.action != s.action) continue;
        if (flip ? gen(t.target, s.target) : gen(s.target, t.target)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  return covered(left, right, false) && covered(right, left, true);
}

// ---------------------------------------------------------------------------
// Normed BPA

std::vector<TermPair> init_g_nbpa(const PrsSystem& sys, std::size_t ceiling) {
  if (!has_class(sys, ProcessClass::nBPA)) throw PreconditionError("system is not a normed BPA");
  TermStore& st = sys.store();
  auto norms = constant_norms(sys);
  std::vector<TermPair> out;
  std::vector<ConstId> word;
  std::function<void(std::uint64_t, TermId)> extend = [&](std::uint64_t left, TermId x) {
    if (left == 0) {
      if (out.size() >= ceiling) throw LimitExceeded("more than " + std::to_string(ceiling) + " base candidates");
      out.emplace_back(x, st.from_word(word));
      return;
    }
    for (ConstId c : sys.constants()) {
      std::uint64_t n = norms[raw(c)].value();
      if (n > left) continue;
      word.push_back(c);
      extend(left - n, x);
      word.pop_back();
    }
  };
  for (ConstId x : sys.constants()) extend(norms[raw(x)].value(), st.constant(x));
  return out;
}

NbpaCongruence::NbpaCongruence(const PrsSystem& sys, const std::vector<TermPair>& base)
    : sys_(sys), norms_(constant_norms(sys)) {
  TermStore& st = sys.store();
  for (const auto& [l, r] : base) {
    if (st.kind(l) != TermKind::Const || st.kind(r) == TermKind::Empty) continue;
    if (norm_of(l) != norm_of(r)) continue;
    auto w = st.word(r);
    std::vector<ConstId> tail(w.begin() + 1, w.end());
    by_heads_[{st.const_of(l), w[0]}].push_back(st.from_word(tail));
  }
}

std::uint64_t NbpaCongruence::norm_of(TermId t) {
  auto it = norm_cache_.find(t);
  if (it != norm_cache_.end()) return it->second;
  ExtNat n = norm_with(sys_.store(), norms_, t);
  if (n.is_omega()) throw PreconditionError("term is not normed: " + sys_.store().to_string(t));
  norm_cache_.emplace(t, n.value());
  return n.value();
}

bool NbpaCongruence::member(TermId a, TermId b) {
  if (a == b) return true;
  if (norm_of(a) != norm_of(b)) return false;
  TermStore& st = sys_.store();
  if (st.kind(a) == TermKind::Empty || st.kind(b) == TermKind::Empty) return false;
  TermPair key = st.less(a, b) ? TermPair{a, b} : TermPair{b, a};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  memo_[key] = false;  // cuts cycles; norms strictly drop on every productive branch

  auto wa = st.word(a);
  auto wb = st.word(b);
  if (norm_of(st.constant(wa[0])) > norm_of(st.constant(wb[0]))) std::swap(wa, wb);
  ConstId x = wa[0], y = wb[0];
  TermId gamma = st.from_word(std::span<const ConstId>(wa).subspan(1));
  TermId delta = st.from_word(std::span<const ConstId>(wb).subspan(1));

  bool result = false;
  if (x == y) result = member(gamma, delta);
  if (!result) {
    auto it = by_heads_.find({y, x});
    if (it != by_heads_.end())
      for (TermId xi : it->second)
        if (member(gamma, st.seq(xi, delta))) {
          result = true;
          break;
        }
  }
  if (!result && norm_of(st.constant(x)) == norm_of(st.constant(y))) {
    // A pair (X, Y) read right to left.
    auto it = by_heads_.find({x, y});
    if (it != by_heads_.end())
      for (TermId xi : it->second)
        if (st.kind(xi) == TermKind::Empty && member(gamma, delta)) {
          result = true;
          break;
        }
  }
  memo_[key] = result;
  return result;
}

bool gen_member_nbpa(const PrsSystem& sys, const std::vector<TermPair>& base, TermId a, TermId b) {
  NbpaCongruence g(sys, base);
  return g.member(a, b);
}

NbpaDecider::NbpaDecider(const PrsSystem& sys, std::size_t ceiling) : sys_(sys) {
  auto cand = init_g_nbpa(sys, ceiling);
  base_ = compute_base(
      std::move(cand), [&](const TermPair& p, const GenOracle& gen) { return expands_strong(sys, p, gen); },
      [&](const std::vector<TermPair>& r) -> GenOracle {
        auto g = std::make_shared<NbpaCongruence>(sys, r);
        return [g](TermId a, TermId b) { return g->member(a, b); };
      });
  gen_ = std::make_unique<NbpaCongruence>(sys, base_);
}

bool NbpaDecider::bisimilar(TermId a, TermId b) {
  const TermStore& st = sys_.store();
  if (!st.is_sequential(a) || !st.is_sequential(b)) throw PreconditionError("nBPA terms must be sequential");
  return gen_->member(a, b);
}

bool decide_nbpa_bisim(const PrsSystem& sys, TermId a, TermId b) {
  NbpaDecider d(sys);
  return d.bisimilar(a, b);
}

// ---------------------------------------------------------------------------
// Weak BPA vs FS

std::vector<TermPair> init_g_weak(const PrsSystem& bpa, const PrsSystem& fs) {
  TermStore& st = bpa.store();
  std::vector<TermPair> out;
  for (ConstId y : fs.constants()) {
    TermId yt = st.constant(y);
    out.emplace_back(st.empty(), yt);
    for (ConstId a : bpa.constants()) {
      out.emplace_back(st.constant(a), yt);
      for (ConstId x : fs.constants()) out.emplace_back(st.seq(st.constant(a), st.constant(x)), yt);
    }
  }
  if (out.size() > kCandidateCeiling) throw LimitExceeded("more than 10^6 base candidates");
  sort_pairs(st, out);
  return out;
}

struct WeakBpaFsDecider::GenIndex {
  // Per FS state Z: BPA constant -> FS states X with (A.X, Z) in R.
  std::vector<std::map<std::uint32_t, std::vector<std::uint32_t>>> next;
  std::vector<std::set<std::uint32_t>> done;  // A with (A, Z) in R
  std::vector<bool> eps;                      // (eps, Z) in R
};

WeakBpaFsDecider::WeakBpaFsDecider(const PrsSystem& bpa, const PrsSystem& fs) : bpa_(bpa), fs_(fs) {
  if (bpa.store_ptr() != fs.store_ptr()) throw PreconditionError("BPA and FS systems must share a term store");
  if (!has_class(bpa, ProcessClass::BPA)) throw PreconditionError("left system is not a BPA");
  if (!has_class(fs, ProcessClass::FS) && !fs.rules().empty()) throw PreconditionError("right system is not finite-state");
  for (ConstId c : bpa.constants())
    if (fs.has_constant(c))
      throw PreconditionError("BPA and FS systems share constant " + bpa.store().constant_name(c));

  TermStore& st = bpa.store();
  std::vector<PrsSystem::RuleSpec> rules;
  for (const PrsSystem* s : {&bpa, &fs})
    for (const Rule& r : s->rules()) rules.push_back({r.lhs, s->action_name(r.action), r.rhs});
  std::vector<ConstId> all = bpa.constants();
  all.insert(all.end(), fs.constants().begin(), fs.constants().end());
  joint_ = std::make_unique<PrsSystem>(bpa.store_ptr(), rules, all);
  norms_ = constant_norms(*joint_);

  std::vector<TermId> roots;
  for (ConstId c : fs.constants()) roots.push_back(st.constant(c));
  fs_lts_ = explore(fs, roots);
  fs_sat_ = saturate(fs_lts_);
  fs_block_ = weak_bisim_partition(fs_lts_).block;
  fs_index_.assign(st.constant_count(), -1);
  for (ConstId c : fs.constants()) fs_index_[raw(c)] = static_cast<int>(*fs_lts_.state_of(st.constant(c)));
  is_bpa_const_.assign(st.constant_count(), false);
  for (ConstId c : bpa.constants()) is_bpa_const_[raw(c)] = true;
  candidates_ = init_g_weak(bpa, fs);
}

WeakBpaFsDecider::GenIndex WeakBpaFsDecider::index(const std::vector<TermPair>& r) const {
  const TermStore& st = bpa_.store();
  std::size_t nf = fs_lts_.num_states();
  GenIndex g{std::vector<std::map<std::uint32_t, std::vector<std::uint32_t>>>(nf),
             std::vector<std::set<std::uint32_t>>(nf), std::vector<bool>(nf, false)};
  for (const auto& [l, rt] : r) {
    if (st.kind(rt) != TermKind::Const) continue;
    int z = fs_index_[raw(st.const_of(rt))];
    if (z < 0) continue;
    auto w = st.word(l);
    if (w.empty()) {
      g.eps[z] = true;
    } else if (w.size() == 1 && is_bpa_const_[raw(w[0])]) {
      g.done[z].insert(raw(w[0]));
    } else if (w.size() == 2 && is_bpa_const_[raw(w[0])] && fs_index_[raw(w[1])] >= 0) {
      g.next[z][raw(w[0])].push_back(static_cast<std::uint32_t>(fs_index_[raw(w[1])]));
    }
  }
  return g;
}

namespace {

// Gen automaton states: FS states 0..nf-1, then these three.
struct GenStates {
  std::uint32_t done, fsend, sink;
  explicit GenStates(std::size_t nf)
      : done(static_cast<std::uint32_t>(nf)), fsend(static_cast<std::uint32_t>(nf + 1)),
        sink(static_cast<std::uint32_t>(nf + 2)) {}
};

}  // namespace

bool WeakBpaFsDecider::gen_run(const GenIndex& g, std::span<const ConstId> word, std::uint32_t y) const {
  GenStates gs(fs_lts_.num_states());
  std::set<std::uint32_t> cur{y};
  for (ConstId c : word) {
    std::set<std::uint32_t> nxt;
    for (std::uint32_t s : cur) {
      if (s == gs.sink) {
        nxt.insert(gs.sink);
        continue;
      }
      if (s >= gs.done) continue;
      if (is_bpa_const_[raw(c)]) {
        bool any = false;
        if (auto it = g.next[s].find(raw(c)); it != g.next[s].end()) {
          nxt.insert(it->second.begin(), it->second.end());
          any = !it->second.empty();
        }
        if (g.done[s].count(raw(c))) {
          nxt.insert(gs.done);
          any = true;
        }
        if (any && norms_[raw(c)].is_omega()) nxt.insert(gs.sink);
      } else if (int x = fs_index_[raw(c)]; x >= 0 && fs_block_[static_cast<std::uint32_t>(x)] == fs_block_[s]) {
        nxt.insert(gs.fsend);
      }
    }
    cur = std::move(nxt);
    if (cur.empty()) return false;
  }
  for (std::uint32_t s : cur)
    if (s >= gs.done || g.eps[s]) return true;
  return false;
}

bool WeakBpaFsDecider::gen_member(const std::vector<TermPair>& r, TermId alpha, ConstId y) const {
  int z = raw(y) < fs_index_.size() ? fs_index_[raw(y)] : -1;
  if (z < 0) throw PreconditionError("not a constant of the finite-state system");
  auto w = bpa_.store().word(alpha);
  return gen_run(index(r), w, static_cast<std::uint32_t>(z));
}

ReachAutomaton WeakBpaFsDecider::reach_automaton(TermId start, const std::string& action) const {
  const TermStore& st = bpa_.store();
  const auto& syms = joint_->constants();
  std::map<std::uint32_t, std::uint32_t> idx;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < syms.size(); ++i) {
    idx[raw(syms[i])] = i;
    names.push_back(st.constant_name(syms[i]));
  }
  bool silent = action == kTau;
  std::vector<PdaRule> rules;
  for (const Rule& r : joint_->rules()) {
    std::uint32_t top = idx.at(raw(st.const_of(r.lhs)));
    Word push;
    for (ConstId c : st.word(r.rhs)) push.push_back(idx.at(raw(c)));
    bool is_tau = joint_->action_name(r.action) == kTau;
    bool is_a = joint_->action_name(r.action) == action;
    if (is_tau) {
      rules.push_back({0, top, r.action, 0, push});
      if (!silent) rules.push_back({1, top, r.action, 1, push});
    } else if (is_a && !silent) {
      rules.push_back({0, top, r.action, 1, push});
    }
  }
  PdaSystem pda({"pre", "post"}, names, joint_->actions(), std::move(rules));
  PdaConfig init{0, {}};
  for (ConstId c : st.word(start)) init.stack.push_back(idx.at(raw(c)));
  PAutomaton a = pda_post_star(pda, PAutomaton::for_configuration(2, init));
  return {std::move(a), silent ? 0u : 1u, syms};
}

const ReachAutomaton& WeakBpaFsDecider::cached_reach(TermId start, const std::string& action) {
  auto key = std::make_pair(start, action);
  auto it = reach_cache_.find(key);
  if (it == reach_cache_.end()) it = reach_cache_.emplace(key, reach_automaton(start, action)).first;
  return it->second;
}

bool WeakBpaFsDecider::reach_meets_gen(const ReachAutomaton& ra, const GenIndex& g, std::uint32_t y) const {
  const PAutomaton& a = ra.automaton;
  GenStates gs(fs_lts_.num_states());
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
  auto push = [&](std::uint32_t u, std::uint32_t s) {
    if (seen.insert({u, s}).second) stack.emplace_back(u, s);
  };
  push(ra.accept_control, y);
  for (const auto& [p, u] : a.epsilons())
    if (p == ra.accept_control) push(u, y);
  auto gen_accepting = [&](std::uint32_t s) { return s >= gs.done || g.eps[s]; };
  while (!stack.empty()) {
    auto [u, s] = stack.back();
    stack.pop_back();
    if (a.is_final(u) && gen_accepting(s)) return true;
    for (auto it = a.transitions().lower_bound({u, 0, 0}); it != a.transitions().end() && std::get<0>(*it) == u; ++it) {
      ConstId c = ra.symbols[std::get<1>(*it)];
      std::uint32_t v = std::get<2>(*it);
      if (s == gs.sink) {
        push(v, gs.sink);
        continue;
      }
      if (s >= gs.done) continue;
      if (is_bpa_const_[raw(c)]) {
        bool any = false;
        if (auto n = g.next[s].find(raw(c)); n != g.next[s].end())
          for (auto x : n->second) {
            push(v, x);
            any = true;
          }
        if (g.done[s].count(raw(c))) {
          push(v, gs.done);
          any = true;
        }
        if (any && norms_[raw(c)].is_omega()) push(v, gs.sink);
      } else if (int x = fs_index_[raw(c)]; x >= 0 && fs_block_[static_cast<std::uint32_t>(x)] == fs_block_[s]) {
        push(v, gs.fsend);
      }
    }
  }
  return false;
}

bool WeakBpaFsDecider::weak_expands(const TermPair& p, const std::vector<TermPair>& r) {
  const TermStore& st = bpa_.store();
  GenIndex g = index(r);
  auto y = static_cast<std::uint32_t>(fs_index_.at(raw(st.const_of(p.second))));
  for (const Step& s : successors(*joint_, p.first)) {
    const std::string& name = joint_->action_name(s.action);
    auto a = fs_sat_.find_action(name);
    if (!a) return false;
    auto word = st.word(s.target);
    bool ok = false;
    for (StateId y2 : fs_sat_.post(y, *a))
      if (gen_run(g, word, y2)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  for (const Edge& e : fs_lts_.out(y)) {
    const ReachAutomaton& ra = cached_reach(p.first, fs_lts_.action_name(e.action));
    if (!reach_meets_gen(ra, g, e.target)) return false;
  }
  return true;
}

const std::vector<TermPair>& WeakBpaFsDecider::base() {
  if (!base_) {
    std::vector<TermPair> b = candidates_;
    for (;;) {
      std::vector<TermPair> r = std::move(b);
      b.clear();
      for (const TermPair& p : r)
        if (weak_expands(p, r)) b.push_back(p);
      if (b.size() == r.size()) break;
    }
    base_ = std::move(b);
  }
  return *base_;
}

bool WeakBpaFsDecider::weakly_bisimilar(TermId alpha, ConstId y) { return gen_member(base(), alpha, y); }

bool decide_bpa_fs_weak(const PrsSystem& bpa, TermId alpha, const PrsSystem& fs, ConstId y) {
  WeakBpaFsDecider d(bpa, fs);
  return d.weakly_bisimilar(alpha, y);
}

}  // namespace prsequiv

#include "support.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "prsequiv/error.hpp"
#include "prsequiv/semantics.hpp"

#ifndef PRSEQUIV_DATA_DIR
#define PRSEQUIV_DATA_DIR "data"
#endif

namespace prsequiv::testing {

std::string data_path(const std::string& rel) { return std::string(PRSEQUIV_DATA_DIR) + "/" + rel; }

FiniteLts random_lts(Rng& rng, const LtsShape& shape) {
  std::uniform_int_distribution<std::size_t> nd(shape.min_states, shape.max_states);
  std::bernoulli_distribution edge(shape.density);
  std::size_t n = nd(rng);
  LtsBuilder b;
  std::vector<std::string> acts;
  for (std::size_t i = 0; i < shape.actions; ++i) acts.push_back(std::string(1, static_cast<char>('a' + i)));
  if (shape.tau) acts.push_back("tau");
  for (const auto& a : acts) b.add_action(a);
  for (std::size_t s = 0; s < n; ++s) b.add_state(std::to_string(s));
  for (StateId s = 0; s < n; ++s)
    for (ActionId a = 0; a < acts.size(); ++a) {
      std::size_t count = 0;
      for (StateId t = 0; t < n; ++t) {
        if (shape.max_branching && count >= *shape.max_branching) break;
        if (edge(rng)) {
          b.add_transition(s, a, t);
          ++count;
        }
      }
    }
  return std::move(b).build();
}

namespace {

// succ[s][a] as vectors.
std::vector<std::vector<std::vector<StateId>>> successor_table(const FiniteLts& lts) {
  std::vector<std::vector<std::vector<StateId>>> t(lts.num_states(),
                                                   std::vector<std::vector<StateId>>(lts.actions().size()));
  for (StateId s = 0; s < lts.num_states(); ++s)
    for (const Edge& e : lts.out(s)) t[s][e.action].push_back(e.target);
  return t;
}

bool matched(const std::vector<StateId>& answers, const Matrix& r, StateId target, bool target_left) {
  for (StateId u : answers)
    if (target_left ? r[target][u] : r[u][target]) return true;
  return false;
}

}  // namespace

Matrix naive_bisim(const FiniteLts& lts) {
  auto succ = successor_table(lts);
  std::size_t n = lts.num_states();
  Matrix r(n, std::vector<bool>(n, true));
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t) {
        if (!r[s][t]) continue;
        bool ok = true;
        for (ActionId a = 0; a < lts.actions().size() && ok; ++a) {
          for (StateId s2 : succ[s][a])
            if (!matched(succ[t][a], r, s2, true)) ok = false;
          for (StateId t2 : succ[t][a])
            if (!matched(succ[s][a], r, t2, false)) ok = false;
        }
        if (!ok) {
          r[s][t] = false;
          changed = true;
        }
      }
  }
  return r;
}

Matrix naive_sim(const FiniteLts& lts) {
  auto succ = successor_table(lts);
  std::size_t n = lts.num_states();
  Matrix r(n, std::vector<bool>(n, true));
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t) {
        if (!r[s][t]) continue;
        bool ok = true;
        for (ActionId a = 0; a < lts.actions().size() && ok; ++a)
          for (StateId s2 : succ[s][a])
            if (!matched(succ[t][a], r, s2, true)) ok = false;
        if (!ok) {
          r[s][t] = false;
          changed = true;
        }
      }
  }
  return r;
}

bool kbisim_rec(const FiniteLts& lts, StateId s, StateId t, std::size_t k) {
  if (k == 0) return true;
  auto answered = [&](StateId x, StateId y, bool x_left) {
    for (const Edge& e : lts.out(x)) {
      bool ok = false;
      for (const Edge& f : lts.out(y))
        if (f.action == e.action &&
            (x_left ? kbisim_rec(lts, e.target, f.target, k - 1) : kbisim_rec(lts, f.target, e.target, k - 1))) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };
  return answered(s, t, true) && answered(t, s, false);
}

Matrix weak_game_fixpoint(const FiniteLts& lts) {
  std::size_t n = lts.num_states();
  auto tau = lts.tau();
  // tau* closure by DFS.
  std::vector<std::vector<StateId>> closure(n);
  for (StateId s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<StateId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      StateId x = stack.back();
      stack.pop_back();
      closure[s].push_back(x);
      for (const Edge& e : lts.out(x))
        if (tau && e.action == *tau && !seen[e.target]) {
          seen[e.target] = true;
          stack.push_back(e.target);
        }
    }
  }
  // answers[s][a]: states t with s =a^=> t.
  std::vector<std::vector<std::vector<StateId>>> answers(n, std::vector<std::vector<StateId>>(lts.actions().size()));
  for (StateId s = 0; s < n; ++s)
    for (ActionId a = 0; a < lts.actions().size(); ++a) {
      std::set<StateId> out;
      if (tau && a == *tau) {
        out.insert(closure[s].begin(), closure[s].end());
      } else {
        for (StateId x : closure[s])
          for (const Edge& e : lts.out(x))
            if (e.action == a) out.insert(closure[e.target].begin(), closure[e.target].end());
      }
      answers[s][a].assign(out.begin(), out.end());
    }
  Matrix r(n, std::vector<bool>(n, true));
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t) {
        if (!r[s][t]) continue;
        bool ok = true;
        for (const Edge& e : lts.out(s))
          if (!matched(answers[t][e.action], r, e.target, true)) ok = false;
        for (const Edge& e : lts.out(t))
          if (ok && !matched(answers[s][e.action], r, e.target, false)) ok = false;
        if (!ok) {
          r[s][t] = false;
          changed = true;
        }
      }
  }
  return r;
}

std::vector<std::vector<ActionId>> traces_upto(const FiniteLts& lts, StateId s, std::size_t depth) {
  std::set<std::vector<ActionId>> out;
  std::vector<ActionId> cur;
  std::function<void(StateId)> go = [&](StateId x) {
    out.insert(cur);
    if (cur.size() == depth) return;
    for (const Edge& e : lts.out(x)) {
      cur.push_back(e.action);
      go(e.target);
      cur.pop_back();
    }
  };
  go(s);
  return {out.begin(), out.end()};
}

std::vector<std::uint32_t> approx_kbisim_classes(const FiniteLts& lts, std::size_t k) {
  std::size_t n = lts.num_states();
  std::vector<std::uint32_t> cls(n, 0);
  for (std::size_t level = 1; level <= k; ++level) {
    std::map<std::pair<std::int64_t, std::vector<std::pair<ActionId, std::uint32_t>>>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (StateId s = 0; s < n; ++s) {
      std::vector<std::pair<ActionId, std::uint32_t>> sig;
      std::int64_t tag = cls[s];
      if (!lts.complete(s)) {
        tag = -1 - static_cast<std::int64_t>(s);  // unknown behaviour: its own class
      } else {
        for (const Edge& e : lts.out(s)) sig.emplace_back(e.action, cls[e.target]);
        std::sort(sig.begin(), sig.end());
        sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      }
      auto [it, fresh] = ids.emplace(std::make_pair(tag, std::move(sig)), static_cast<std::uint32_t>(ids.size()));
      next[s] = it->second;
    }
    cls = std::move(next);
  }
  return cls;
}

ExtNat dd_oracle(const FiniteLts& lts, const DdSpec& spec, StateId s) {
  std::size_t n = lts.num_states();
  auto a = lts.find_action(spec.action);
  std::vector<bool> target(n, false);
  if (!spec.triple) {
    for (StateId t = 0; t < n; ++t) target[t] = !a || lts.post(t, *a).empty();
  } else {
    std::vector<std::vector<ExtNat>> f(spec.inner.size(), std::vector<ExtNat>(n));
    for (std::size_t i = 0; i < spec.inner.size(); ++i)
      for (StateId t = 0; t < n; ++t) f[i][t] = dd_oracle(lts, spec.inner[i], t);
    for (StateId t = 0; t < n; ++t) {
      bool finite = true;
      for (std::size_t i = 0; i < f.size(); ++i) finite = finite && f[i][t].is_finite();
      if (!finite) continue;
      bool ok = true;
      if (a)
        for (StateId r : lts.post(t, *a)) {
          bool equal = true;
          for (std::size_t i = 0; i < f.size(); ++i) {
            ExtInt change = f[i][r].is_omega()
                                ? ExtInt::omega()
                                : ExtInt(static_cast<std::int64_t>(f[i][r].value()) -
                                         static_cast<std::int64_t>(f[i][t].value()));
            if (!(change == spec.delta[i])) equal = false;
          }
          if (equal) ok = false;
        }
      target[t] = ok;
    }
  }
  // BFS from s.
  std::vector<std::size_t> dist(n, static_cast<std::size_t>(-1));
  std::deque<StateId> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    StateId x = q.front();
    q.pop_front();
    if (target[x]) return ExtNat(dist[x]);
    for (const Edge& e : lts.out(x))
      if (dist[e.target] == static_cast<std::size_t>(-1)) {
        dist[e.target] = dist[x] + 1;
        q.push_back(e.target);
      }
  }
  return ExtNat::omega();
}

namespace {

template <class Goal>
std::optional<std::size_t> bfs_to(const PrsSystem& sys, TermId t, std::size_t max_depth, Goal goal) {
  std::map<TermId, std::size_t> dist{{t, 0}};
  std::deque<TermId> q{t};
  while (!q.empty()) {
    TermId x = q.front();
    q.pop_front();
    std::size_t d = dist[x];
    if (goal(x)) return d;
    if (d == max_depth) continue;
    for (const Step& st : successors(sys, x))
      if (dist.emplace(st.target, d + 1).second) q.push_back(st.target);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> norm_q_bfs(const PrsSystem& sys, const std::vector<ConstId>& q, TermId t,
                                      std::size_t max_depth) {
  return bfs_to(sys, t, max_depth, [&](TermId x) {
    for (ConstId c : sys.store().occurrences(x))
      if (std::find(q.begin(), q.end(), c) != q.end()) return false;
    return true;
  });
}

std::optional<std::size_t> norm_bfs(const PrsSystem& sys, TermId t, std::size_t max_depth) {
  return bfs_to(sys, t, max_depth, [&](TermId x) { return x == sys.store().empty(); });
}

bool qbf_brute(const Qbf& q) {
  std::size_t n = q.vars;
  // value[mask] for full assignments, then fold quantifiers from the innermost.
  std::vector<bool> layer(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < layer.size(); ++mask) {
    bool all = true;
    for (const auto& cl : q.clauses) {
      bool sat = false;
      for (int l : cl) {
        bool v = (mask >> (std::abs(l) - 1)) & 1;
        sat = sat || (l > 0 ? v : !v);
      }
      all = all && sat;
    }
    layer[mask] = all;
  }
  for (std::size_t var = n; var >= 1; --var) {
    // Variable `var` is bit var-1; fold it away. Odd variables are universal.
    std::vector<bool> next(layer.size() / 2);
    for (std::size_t mask = 0; mask < next.size(); ++mask) {
      bool v0 = layer[mask], v1 = layer[mask | (std::size_t{1} << (var - 1))];
      next[mask] = var % 2 == 1 ? (v0 && v1) : (v0 || v1);
    }
    layer = std::move(next);
  }
  return layer[0];
}

Qbf random_qbf(Rng& rng, std::size_t vars, std::size_t max_clauses) {
  Qbf q;
  q.vars = vars;
  std::uniform_int_distribution<std::size_t> nc(1, max_clauses), len(1, 3);
  std::uniform_int_distribution<int> var(1, static_cast<int>(vars));
  std::bernoulli_distribution neg(0.5);
  std::size_t m = nc(rng);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> cl;
    std::size_t l = len(rng);
    for (std::size_t j = 0; j < l; ++j) cl.push_back(neg(rng) ? -var(rng) : var(rng));
    q.clauses.push_back(cl);
  }
  return q;
}

std::vector<MinskyMachine> all_minsky(std::size_t max_instructions, std::size_t counters) {
  std::vector<MinskyMachine> out;
  for (std::size_t n = 1; n <= max_instructions; ++n) {
    std::vector<MinskyInstr> choices;
    for (std::size_t j = 1; j <= counters; ++j)
      for (std::size_t k = 1; k <= n; ++k) {
        choices.push_back({MinskyInstr::Op::Inc, j, k, 0});
        for (std::size_t l = 1; l <= n; ++l) choices.push_back({MinskyInstr::Op::Test, j, k, l});
      }
    std::vector<std::size_t> pick(n - 1, 0);
    while (true) {
      MinskyMachine m;
      m.counters = counters;
      for (std::size_t i = 0; i + 1 < n; ++i) m.program.push_back(choices[pick[i]]);
      m.program.push_back({MinskyInstr::Op::Halt, 0, 0, 0});
      out.push_back(m);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

FiniteLts quotient(const FiniteLts& lts, const Partition& p) {
  LtsBuilder b;
  for (const auto& a : lts.actions()) b.add_action(a);
  for (std::uint32_t i = 0; i < p.num_blocks; ++i) b.add_state("B" + std::to_string(i));
  std::set<std::tuple<std::uint32_t, ActionId, std::uint32_t>> edges;
  for (StateId s = 0; s < lts.num_states(); ++s)
    for (const Edge& e : lts.out(s)) edges.insert({p.block[s], e.action, p.block[e.target]});
  for (auto [x, a, y] : edges) b.add_transition(x, a, y);
  b.set_initial(p.block[lts.initial()]);
  return std::move(b).build();
}

PdaSystem random_finite_pda(Rng& rng, std::size_t stack_symbols, std::size_t actions, std::size_t rules) {
  std::vector<std::string> stack, acts;
  for (std::size_t i = 0; i < stack_symbols; ++i) stack.push_back("X" + std::to_string(i));
  for (std::size_t i = 0; i < actions; ++i) acts.push_back(std::string(1, static_cast<char>('a' + i)));
  std::uniform_int_distribution<std::uint32_t> sym(0, static_cast<std::uint32_t>(stack_symbols - 1));
  std::uniform_int_distribution<std::uint32_t> act(0, static_cast<std::uint32_t>(actions - 1));
  std::uniform_int_distribution<int> ctl(0, 1), len3(0, 2), len2(0, 1);
  std::vector<PdaRule> rs;
  for (std::size_t i = 0; i < rules; ++i) {
    PdaRule r{};
    r.control = ctl(rng);
    r.top = sym(rng);
    r.action = act(rng);
    int l = r.control == 0 ? len3(rng) : len2(rng);
    r.next_control = (r.control == 1 || l == 2) ? 1 : static_cast<std::uint32_t>(ctl(rng) == 0 ? 0 : 1);
    if (r.control == 0 && r.next_control == 0 && l > 1) l = 1;
    for (int j = 0; j < l; ++j) r.push.push_back(sym(rng));
    rs.push_back(r);
  }
  return PdaSystem({"p", "q"}, stack, acts, rs);
}

std::vector<std::vector<ConstId>> words_by_weight(const std::vector<ConstId>& symbols,
                                                  const std::vector<std::uint64_t>& weights, std::uint64_t bound) {
  std::vector<std::vector<ConstId>> out;
  std::vector<ConstId> cur;
  std::function<void(std::uint64_t)> go = [&](std::uint64_t used) {
    out.push_back(cur);
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (used + weights[i] <= bound) {
        cur.push_back(symbols[i]);
        go(used + weights[i]);
        cur.pop_back();
      }
  };
  go(0);
  return out;
}

std::vector<std::vector<ConstId>> words_upto(const std::vector<ConstId>& symbols, std::size_t n) {
  return words_by_weight(symbols, std::vector<std::uint64_t>(symbols.size(), 1), n);
}

}  // namespace prsequiv::testing

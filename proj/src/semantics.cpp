#include "prsequiv/semantics.hpp"

#include <algorithm>
#include <deque>

#include "prsequiv/error.hpp"

namespace prsequiv {

namespace {

void succ_rec(const PrsSystem& sys, TermId t, std::vector<Step>& out) {
  TermStore& st = sys.store();
  for (std::uint32_t r : sys.rules_with_lhs(t)) out.push_back({sys.rules()[r].action, sys.rules()[r].rhs});

  switch (st.kind(t)) {
    case TermKind::Seq: {
      std::vector<TermId> ch(st.children(t).begin(), st.children(t).end());
      // Proper prefixes of length >= 2; length 1 is the head recursion below.
      for (std::uint32_t r : sys.seq_lhs_rules()) {
        auto l = st.children(sys.rules()[r].lhs);
        if (l.size() >= ch.size()) continue;
        if (!std::equal(l.begin(), l.end(), ch.begin())) continue;
        std::vector<TermId> parts{sys.rules()[r].rhs};
        parts.insert(parts.end(), ch.begin() + static_cast<std::ptrdiff_t>(l.size()), ch.end());
        out.push_back({sys.rules()[r].action, st.seq(parts)});
      }
      std::vector<Step> head;
      succ_rec(sys, ch[0], head);
      for (const Step& s : head) {
        ch[0] = s.target;
        out.push_back({s.action, st.seq(ch)});
      }
      break;
    }
    case TermKind::Par: {
      std::vector<TermId> ch(st.children(t).begin(), st.children(t).end());
      for (std::uint32_t r : sys.par_lhs_rules()) {
        auto l = st.children(sys.rules()[r].lhs);
        if (l.size() >= ch.size()) continue;
        // Both sides are sorted canonically, so sub-multiset is a merge walk.
        std::vector<TermId> rest;
        std::size_t i = 0;
        for (TermId c : ch) {
          if (i < l.size() && l[i] == c) {
            ++i;
          } else {
            rest.push_back(c);
          }
        }
        if (i != l.size()) continue;
        rest.push_back(sys.rules()[r].rhs);
        out.push_back({sys.rules()[r].action, st.par(rest)});
      }
      for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i > 0 && ch[i] == ch[i - 1]) continue;
        std::vector<Step> sub;
        succ_rec(sys, ch[i], sub);
        for (const Step& s : sub) {
          std::vector<TermId> parts = ch;
          parts[i] = s.target;
          out.push_back({s.action, st.par(parts)});
        }
      }
      break;
    }
    default:
      break;
  }
}

void check_constants(const PrsSystem& sys, TermId t) {
  for (ConstId c : sys.store().occurrences(t))
    if (!sys.has_constant(c))
      throw PreconditionError("constant " + sys.store().constant_name(c) + " does not occur in the system");
}

}  // namespace

std::vector<Step> successors(const PrsSystem& sys, TermId t) {
  check_constants(sys, t);
  std::vector<Step> out;
  succ_rec(sys, t, out);
  const TermStore& st = sys.store();
  std::sort(out.begin(), out.end(), [&](const Step& a, const Step& b) {
    if (a.action != b.action) return a.action < b.action;
    return st.less(a.target, b.target);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteLts explore(const PrsSystem& sys, std::span<const TermId> roots, const ExplorationLimit& limit) {
  LtsBuilder b(sys.store_ptr());
  for (const auto& a : sys.actions()) b.add_action(a);
  auto tau = sys.find_action(kTau);

  struct Info {
    TermId term;
    std::size_t depth;
    std::size_t taus;
  };
  std::vector<Info> info;
  std::unordered_map<TermId, StateId> index;
  std::deque<StateId> queue;

  auto add = [&](TermId t, std::size_t depth, std::size_t taus) {
    StateId s = b.add_state(sys.store().to_string(t), true, t);
    index.emplace(t, s);
    info.push_back({t, depth, taus});
    queue.push_back(s);
    return s;
  };

  for (TermId r : roots) {
    check_constants(sys, r);
    if (index.count(r)) continue;
    if (b.num_states() >= limit.max_states) throw LimitExceeded("more roots than max_states");
    add(r, 0, 0);
  }

  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    Info here = info[s];
    bool at_depth_limit = limit.max_depth && here.depth >= *limit.max_depth;
    for (const Step& step : successors(sys, here.term)) {
      bool is_tau = tau && step.action == *tau;
      auto it = index.find(step.target);
      if (it != index.end()) {
        b.add_transition(s, step.action, it->second);
        continue;
      }
      bool tau_blocked = is_tau && limit.tau_budget && here.taus >= *limit.tau_budget;
      if (at_depth_limit || tau_blocked || b.num_states() >= limit.max_states) {
        b.set_complete(s, false);
        continue;
      }
      StateId t = add(step.target, here.depth + 1, is_tau ? here.taus + 1 : 0);
      b.add_transition(s, step.action, t);
    }
  }
  return std::move(b).build();
}

std::vector<std::vector<StateId>> tau_closure(const FiniteLts& lts) {
  std::size_t n = lts.num_states();
  std::vector<std::vector<StateId>> clo(n);
  auto tau = lts.tau();
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (StateId s = 0; s < n; ++s) {
    ++stamp;
    std::vector<StateId> stack{s};
    seen[s] = stamp;
    while (!stack.empty()) {
      StateId u = stack.back();
      stack.pop_back();
      clo[s].push_back(u);
      if (!tau) continue;
      for (StateId v : lts.post(u, *tau))
        if (seen[v] != stamp) {
          seen[v] = stamp;
          stack.push_back(v);
        }
    }
    std::sort(clo[s].begin(), clo[s].end());
  }
  return clo;
}

namespace {

std::vector<StateId> weak_from(const FiniteLts& lts, const std::vector<std::vector<StateId>>& clo, StateId s,
                               ActionId a) {
  auto tau = lts.tau();
  if (tau && a == *tau) return clo[s];
  std::vector<bool> hit(lts.num_states(), false);
  for (StateId u : clo[s])
    for (StateId v : lts.post(u, a))
      for (StateId w : clo[v]) hit[w] = true;
  std::vector<StateId> r;
  for (StateId w = 0; w < hit.size(); ++w)
    if (hit[w]) r.push_back(w);
  return r;
}

void require_complete(const FiniteLts& lts, const char* what) {
  if (!lts.all_complete()) throw IncompleteLtsError(std::string(what) + " needs a completely explored LTS");
}

}  // namespace

std::vector<StateId> weak_successors(const FiniteLts& lts, StateId s, ActionId a) {
  require_complete(lts, "weak_successors");
  return weak_from(lts, tau_closure(lts), s, a);
}

FiniteLts saturate(const FiniteLts& lts) {
  require_complete(lts, "saturate");
  auto clo = tau_closure(lts);
  LtsBuilder b(lts.store());
  for (const auto& a : lts.actions()) b.add_action(a);
  ActionId tau = b.add_action(kTau);
  for (StateId s = 0; s < lts.num_states(); ++s) b.add_state(lts.label(s), true, lts.term(s));
  for (StateId s = 0; s < lts.num_states(); ++s) {
    for (StateId t : clo[s]) b.add_transition(s, tau, t);
    for (ActionId a = 0; a < lts.actions().size(); ++a) {
      if (lts.action_name(a) == kTau) continue;
      for (StateId t : weak_from(lts, clo, s, a)) b.add_transition(s, a, t);
    }
  }
  b.set_initial(lts.initial());
  return std::move(b).build();
}

}  // namespace prsequiv

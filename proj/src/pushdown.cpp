#include "prsequiv/pushdown.hpp"

#include <algorithm>
#include <map>

#include "prsequiv/error.hpp"

namespace prsequiv {

PdaSystem::PdaSystem(std::vector<std::string> controls, std::vector<std::string> stack,
                     std::vector<std::string> actions, std::vector<PdaRule> rules)
    : controls_(std::move(controls)), stack_(std::move(stack)), actions_(std::move(actions)), rules_(std::move(rules)) {
  for (const PdaRule& r : rules_) {
    if (r.control >= controls_.size() || r.next_control >= controls_.size() || r.top >= stack_.size() ||
        r.action >= actions_.size())
      throw PreconditionError("pushdown rule refers to an unknown index");
    for (auto x : r.push)
      if (x >= stack_.size()) throw PreconditionError("pushdown rule pushes an unknown symbol");
  }
}

PdaSystem PdaSystem::from_prs(const PrsSystem& sys) {
  auto part = pda_partition(sys);
  if (!part) throw PreconditionError("system is not a pushdown system (no control/stack partition fits)");
  const TermStore& st = sys.store();
  std::map<std::uint32_t, std::uint32_t> cidx, sidx;
  std::vector<std::string> cn, sn;
  for (ConstId c : part->control) {
    cidx[static_cast<std::uint32_t>(c)] = static_cast<std::uint32_t>(cn.size());
    cn.push_back(st.constant_name(c));
  }
  for (ConstId c : part->stack) {
    sidx[static_cast<std::uint32_t>(c)] = static_cast<std::uint32_t>(sn.size());
    sn.push_back(st.constant_name(c));
  }
  std::vector<PdaRule> rules;
  for (const Rule& r : sys.rules()) {
    auto l = st.word(r.lhs);
    auto w = st.word(r.rhs);
    PdaRule pr{cidx.at(static_cast<std::uint32_t>(l[0])), sidx.at(static_cast<std::uint32_t>(l[1])), r.action,
               cidx.at(static_cast<std::uint32_t>(w[0])), {}};
    for (std::size_t i = 1; i < w.size(); ++i) pr.push.push_back(sidx.at(static_cast<std::uint32_t>(w[i])));
    rules.push_back(std::move(pr));
  }
  PdaSystem p(std::move(cn), std::move(sn), sys.actions(), std::move(rules));
  p.source_ = &sys;
  p.control_const_ = part->control;
  p.stack_const_ = part->stack;
  return p;
}

std::optional<std::uint32_t> PdaSystem::find_control(std::string_view name) const {
  for (std::uint32_t i = 0; i < controls_.size(); ++i)
    if (controls_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> PdaSystem::find_stack(std::string_view name) const {
  for (std::uint32_t i = 0; i < stack_.size(); ++i)
    if (stack_[i] == name) return i;
  return std::nullopt;
}

TermId PdaSystem::to_term(const PdaConfig& c) const {
  if (!source_) throw PreconditionError("pushdown system has no term view");
  std::vector<ConstId> w{control_const_.at(c.control)};
  for (auto x : c.stack) w.push_back(stack_const_.at(x));
  return source_->store().from_word(w);
}

PdaConfig PdaSystem::from_term(TermId t) const {
  if (!source_) throw PreconditionError("pushdown system has no term view");
  auto w = source_->store().word(t);
  if (w.empty()) throw PreconditionError("a configuration needs a control state");
  auto find = [](const std::vector<ConstId>& v, ConstId c) -> std::optional<std::uint32_t> {
    auto it = std::find(v.begin(), v.end(), c);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - v.begin());
  };
  PdaConfig c;
  auto p = find(control_const_, w[0]);
  if (!p) throw PreconditionError("configuration must start with a control state");
  c.control = *p;
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto x = find(stack_const_, w[i]);
    if (!x) throw PreconditionError("configuration stack contains a non-stack constant");
    c.stack.push_back(*x);
  }
  return c;
}

PAutomaton PAutomaton::for_configuration(std::size_t num_controls, const PdaConfig& c) {
  PAutomaton a(num_controls);
  std::uint32_t cur = c.control;
  for (auto x : c.stack) {
    std::uint32_t nxt = a.add_state();
    a.add_transition(cur, x, nxt);
    cur = nxt;
  }
  a.set_final(cur);
  return a;
}

std::set<std::uint32_t> PAutomaton::run(std::uint32_t control, std::span<const std::uint32_t> w) const {
  auto close = [&](std::set<std::uint32_t>& s) {
    std::vector<std::uint32_t> add;
    for (auto x : s)
      for (auto it = eps_.lower_bound({x, 0}); it != eps_.end() && it->first == x; ++it) add.push_back(it->second);
    s.insert(add.begin(), add.end());
  };
  std::set<std::uint32_t> cur{control};
  close(cur);
  for (auto sym : w) {
    std::set<std::uint32_t> nxt;
    for (auto x : cur)
      for (auto it = trans_.lower_bound({x, sym, 0}); it != trans_.end() && std::get<0>(*it) == x && std::get<1>(*it) == sym;
           ++it)
        nxt.insert(std::get<2>(*it));
    close(nxt);
    cur = std::move(nxt);
    if (cur.empty()) break;
  }
  return cur;
}

bool PAutomaton::accepts(std::uint32_t control, std::span<const std::uint32_t> w) const {
  for (auto s : run(control, w))
    if (is_final(s)) return true;
  return false;
}

bool PAutomaton::accepts_prefix(std::uint32_t control, std::span<const std::uint32_t> w) const {
  auto start = run(control, w);
  std::vector<std::uint32_t> stack(start.begin(), start.end());
  std::set<std::uint32_t> seen = start;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (is_final(x)) return true;
    auto push = [&](std::uint32_t y) {
      if (seen.insert(y).second) stack.push_back(y);
    };
    for (auto it = trans_.lower_bound({x, 0, 0}); it != trans_.end() && std::get<0>(*it) == x; ++it) push(std::get<2>(*it));
    for (auto it = eps_.lower_bound({x, 0}); it != eps_.end() && it->first == x; ++it) push(it->second);
  }
  return false;
}

PAutomaton pda_post_star(const PdaSystem& pda, const PAutomaton& init) {
  PAutomaton a = init;
  for (const auto& [from, sym, to] : a.transitions())
    if (to < a.num_controls()) throw PreconditionError("post* needs an automaton without edges into control states");
  // One chain of fresh states per rule pushing two or more symbols.
  std::vector<std::vector<std::uint32_t>> chain(pda.rules().size());
  for (std::size_t i = 0; i < pda.rules().size(); ++i) {
    const PdaRule& r = pda.rules()[i];
    if (r.push.size() < 2) continue;
    std::uint32_t cur = r.next_control;
    for (std::size_t j = 0; j + 1 < r.push.size(); ++j) {
      std::uint32_t m = a.add_state();
      a.add_transition(cur, r.push[j], m);
      chain[i].push_back(m);
      cur = m;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pda.rules().size(); ++i) {
      const PdaRule& r = pda.rules()[i];
      std::set<std::uint32_t> targets;
      std::vector<std::uint32_t> from{r.control};
      for (const auto& [p, u] : a.epsilons())
        if (p == r.control) from.push_back(u);
      for (auto f : from)
        for (auto it = a.transitions().lower_bound({f, r.top, 0});
             it != a.transitions().end() && std::get<0>(*it) == f && std::get<1>(*it) == r.top; ++it)
          targets.insert(std::get<2>(*it));
      for (auto t : targets) {
        if (r.push.empty()) changed |= a.add_epsilon(r.next_control, t);
        else if (r.push.size() == 1) changed |= a.add_transition(r.next_control, r.push[0], t);
        else changed |= a.add_transition(chain[i].back(), r.push.back(), t);
      }
    }
  }
  return a;
}

std::size_t head_count(const PdaSystem& pda, std::size_t k) {
  std::size_t per = 0, pw = 1, g = pda.stack_symbols().size();
  for (std::size_t i = 0; i <= k; ++i) {
    per += pw;
    if (per > kHeadCeiling) return kHeadCeiling + 1;
    pw *= g;
    if (pw > kHeadCeiling) pw = kHeadCeiling + 1;
  }
  std::size_t total = per * pda.controls().size();
  return std::min(total, kHeadCeiling + 1);
}

void heads(const PdaSystem& pda, std::size_t k, const std::function<bool(const PdaConfig&)>& visit) {
  if (head_count(pda, k) > kHeadCeiling) throw LimitExceeded("more than 10^6 heads");
  std::size_t g = pda.stack_symbols().size();
  for (std::uint32_t q = 0; q < pda.controls().size(); ++q) {
    PdaConfig c{q, {}};
    // Preorder walk of the tree of words up to length k.
    std::function<bool()> walk = [&]() -> bool {
      if (!visit(c)) return false;
      if (c.stack.size() == k) return true;
      for (std::uint32_t x = 0; x < g; ++x) {
        c.stack.push_back(x);
        bool go = walk();
        c.stack.pop_back();
        if (!go) return false;
      }
      return true;
    };
    if (!walk()) return;
  }
}

}  // namespace prsequiv

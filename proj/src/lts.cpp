#include "prsequiv/lts.hpp"

#include <algorithm>
#include <deque>

namespace prsequiv {

std::size_t FiniteLts::num_transitions() const {
  std::size_t n = 0;
  for (const auto& o : out_) n += o.size();
  return n;
}

std::optional<ActionId> FiniteLts::find_action(std::string_view name) const {
  for (ActionId a = 0; a < actions_.size(); ++a)
    if (actions_[a] == name) return a;
  return std::nullopt;
}

std::vector<StateId> FiniteLts::post(StateId s, ActionId a) const {
  std::vector<StateId> r;
  auto edges = out(s);
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{a, 0});
  for (; it != edges.end() && it->action == a; ++it) r.push_back(it->target);
  return r;
}

bool FiniteLts::all_complete() const {
  return std::all_of(complete_.begin(), complete_.end(), [](bool b) { return b; });
}

std::optional<StateId> FiniteLts::find_state(std::string_view label) const {
  for (StateId s = 0; s < labels_.size(); ++s)
    if (labels_[s] == label) return s;
  return std::nullopt;
}

std::optional<StateId> FiniteLts::state_of(TermId t) const {
  auto it = by_term_.find(t);
  if (it == by_term_.end()) return std::nullopt;
  return it->second;
}

ActionId LtsBuilder::add_action(std::string_view name) {
  if (auto a = lts_.find_action(name)) return *a;
  lts_.actions_.emplace_back(name);
  return static_cast<ActionId>(lts_.actions_.size() - 1);
}

StateId LtsBuilder::add_state(std::string label, bool complete, std::optional<TermId> term) {
  auto s = static_cast<StateId>(lts_.out_.size());
  lts_.out_.emplace_back();
  lts_.complete_.push_back(complete);
  lts_.labels_.push_back(std::move(label));
  lts_.terms_.push_back(term);
  if (term) lts_.by_term_.emplace(*term, s);
  return s;
}

void LtsBuilder::add_transition(StateId src, ActionId action, StateId dst) {
  lts_.out_[src].push_back(Edge{action, dst});
}

FiniteLts LtsBuilder::build() && {
  for (auto& o : lts_.out_) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }
  return std::move(lts_);
}

UnionResult disjoint_union(const FiniteLts& left, const FiniteLts& right) {
  LtsBuilder b(left.store() ? left.store() : right.store());
  for (const auto& a : left.actions()) b.add_action(a);
  std::vector<ActionId> rmap;
  for (const auto& a : right.actions()) rmap.push_back(b.add_action(a));
  for (StateId s = 0; s < left.num_states(); ++s) b.add_state(left.label(s), left.complete(s), left.term(s));
  auto off = static_cast<StateId>(left.num_states());
  for (StateId s = 0; s < right.num_states(); ++s)
    b.add_state(right.label(s), right.complete(s));
  for (StateId s = 0; s < left.num_states(); ++s)
    for (const Edge& e : left.out(s)) b.add_transition(s, e.action, e.target);
  for (StateId s = 0; s < right.num_states(); ++s)
    for (const Edge& e : right.out(s)) b.add_transition(off + s, rmap[e.action], off + e.target);
  b.set_initial(left.initial());
  return {std::move(b).build(), off};
}

FiniteLts restrict_reachable(const FiniteLts& lts, std::span<const StateId> roots) {
  std::vector<StateId> map(lts.num_states(), static_cast<StateId>(-1));
  std::vector<StateId> order;
  std::deque<StateId> q;
  for (StateId r : roots)
    if (map[r] == static_cast<StateId>(-1)) {
      map[r] = static_cast<StateId>(order.size());
      order.push_back(r);
      q.push_back(r);
    }
  while (!q.empty()) {
    StateId s = q.front();
    q.pop_front();
    for (const Edge& e : lts.out(s))
      if (map[e.target] == static_cast<StateId>(-1)) {
        map[e.target] = static_cast<StateId>(order.size());
        order.push_back(e.target);
        q.push_back(e.target);
      }
  }
  LtsBuilder b(lts.store());
  for (const auto& a : lts.actions()) b.add_action(a);
  for (StateId s : order) b.add_state(lts.label(s), lts.complete(s), lts.term(s));
  for (StateId s : order)
    for (const Edge& e : lts.out(s)) b.add_transition(map[s], e.action, map[e.target]);
  return std::move(b).build();
}

}  // namespace prsequiv

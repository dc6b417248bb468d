#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "prsequiv/term.hpp"

namespace prsequiv {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

struct Edge {
  ActionId action;
  StateId target;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite labelled transition system. States flagged incomplete were cut off by an
// exploration limit and carry only part of their transitions.
class FiniteLts {
 public:
  std::size_t num_states() const { return out_.size(); }
  std::size_t num_transitions() const;
  const std::vector<std::string>& actions() const { return actions_; }
  const std::string& action_name(ActionId a) const { return actions_[a]; }
  std::optional<ActionId> find_action(std::string_view name) const;
  std::optional<ActionId> tau() const { return find_action("tau"); }

  std::span<const Edge> out(StateId s) const { return out_[s]; }
  // Successors of s under a, sorted.
  std::vector<StateId> post(StateId s, ActionId a) const;
  bool complete(StateId s) const { return complete_[s]; }
  bool all_complete() const;

  const std::string& label(StateId s) const { return labels_[s]; }
  std::optional<StateId> find_state(std::string_view label) const;
  std::optional<TermId> term(StateId s) const { return terms_[s]; }
  std::optional<StateId> state_of(TermId t) const;
  const std::shared_ptr<TermStore>& store() const { return store_; }
  StateId initial() const { return initial_; }

 private:
  friend class LtsBuilder;
  std::vector<std::string> actions_;
  std::vector<std::vector<Edge>> out_;
  std::vector<bool> complete_;
  std::vector<std::string> labels_;
  std::vector<std::optional<TermId>> terms_;
  std::unordered_map<TermId, StateId> by_term_;
  std::shared_ptr<TermStore> store_;
  StateId initial_ = 0;
};

class LtsBuilder {
 public:
  LtsBuilder() = default;
  explicit LtsBuilder(std::shared_ptr<TermStore> store) { lts_.store_ = std::move(store); }

  ActionId add_action(std::string_view name);
  StateId add_state(std::string label = {}, bool complete = true, std::optional<TermId> term = std::nullopt);
  void add_transition(StateId src, std::string_view action, StateId dst) { add_transition(src, add_action(action), dst); }
  void add_transition(StateId src, ActionId action, StateId dst);
  void set_complete(StateId s, bool c) { lts_.complete_[s] = c; }
  void set_initial(StateId s) { lts_.initial_ = s; }
  std::size_t num_states() const { return lts_.out_.size(); }
  FiniteLts build() &&;

 private:
  FiniteLts lts_;
};

struct UnionResult {
  FiniteLts lts;
  StateId right_offset;  // state i of the right operand is right_offset + i
};

// Disjoint union; alphabets are merged by action name.
UnionResult disjoint_union(const FiniteLts& left, const FiniteLts& right);

// Copy of lts restricted to the states reachable from the given roots.
FiniteLts restrict_reachable(const FiniteLts& lts, std::span<const StateId> roots);

}  // namespace prsequiv

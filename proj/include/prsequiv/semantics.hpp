#pragma once

#include <optional>
#include <span>
#include <vector>

#include "prsequiv/lts.hpp"
#include "prsequiv/system.hpp"

namespace prsequiv {

struct Step {
  std::uint32_t action;  // index into PrsSystem::actions()
  TermId target;
  friend bool operator==(const Step&, const Step&) = default;
};

// One-step successors of t, deduplicated, ordered by (action, canonical term order).
// A rule fires on the whole term, on a prefix of a sequential composition, on the
// first component of a sequential composition, on a sub-multiset of a parallel
// composition, or on any single parallel component.
std::vector<Step> successors(const PrsSystem& sys, TermId t);

struct ExplorationLimit {
  std::size_t max_states = 100000;
  std::optional<std::size_t> max_depth;
  // Maximal number of consecutive tau steps followed from a visible step or a root.
  std::optional<std::size_t> tau_budget;
};

// Breadth-first exploration from the roots. State i carries its term; a state is
// flagged incomplete when some successor was not added because of a limit.
FiniteLts explore(const PrsSystem& sys, std::span<const TermId> roots, const ExplorationLimit& limit = {});

// Reflexive-transitive tau closure of every state (sorted).
std::vector<std::vector<StateId>> tau_closure(const FiniteLts& lts);

// States t with s =a=> t; for a = tau this is the tau closure of s.
std::vector<StateId> weak_successors(const FiniteLts& lts, StateId s, ActionId a);

// LTS over the same states with s -a-> t iff s =a=> t. Tau is added to the alphabet
// if missing, so every state gets a tau self-loop.
FiniteLts saturate(const FiniteLts& lts);

}  // namespace prsequiv

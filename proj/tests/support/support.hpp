#pragma once

// Random instance generators and independent reference oracles. The oracles are
// written straight from the definitions and share no code with the library's
// algorithms beyond the LTS container.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prsequiv/dd.hpp"
#include "prsequiv/encoders.hpp"
#include "prsequiv/lts.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/pushdown.hpp"
#include "prsequiv/system.hpp"

namespace prsequiv::testing {

using Rng = std::mt19937_64;

std::string data_path(const std::string& rel);

struct LtsShape {
  std::size_t min_states = 1;
  std::size_t max_states = 8;
  std::size_t actions = 3;       // drawn from a, b, c, ...
  double density = 0.25;         // probability of each (s, a, t) edge
  bool tau = false;              // add "tau" as an extra action
  std::optional<std::size_t> max_branching;  // per (state, action)
};

FiniteLts random_lts(Rng& rng, const LtsShape& shape);

// Bool matrix helpers for the oracles.
using Matrix = std::vector<std::vector<bool>>;

// Greatest bisimulation by fixpoint iteration over the full relation.
Matrix naive_bisim(const FiniteLts& lts);
// Greatest simulation: m[s][t] iff s is simulated by t.
Matrix naive_sim(const FiniteLts& lts);
// s ~k t by the recursive definition.
bool kbisim_rec(const FiniteLts& lts, StateId s, StateId t, std::size_t k);
// Greatest weak bisimulation: each s -a-> s' answered by t =a^=> t' (tau answered by
// tau*), computed without saturating the LTS.
Matrix weak_game_fixpoint(const FiniteLts& lts);
// All traces of length <= depth.
std::vector<std::vector<ActionId>> traces_upto(const FiniteLts& lts, StateId s, std::size_t depth);

// ~k on a fragment explored by BFS, where incomplete states only matter at level 0.
// Level i of a state is trusted when its depth is at most k - i.
std::vector<std::uint32_t> approx_kbisim_classes(const FiniteLts& lts, std::size_t k);

// Distance-to-disabling straight from the definition.
ExtNat dd_oracle(const FiniteLts& lts, const DdSpec& spec, StateId s);

// Least steps from t to a term without Q constants, by BFS over `successors`, up to
// max_depth; nullopt when not found within the bound.
std::optional<std::size_t> norm_q_bfs(const PrsSystem& sys, const std::vector<ConstId>& q, TermId t,
                                      std::size_t max_depth);
// Least steps from t to eps by BFS, up to max_depth.
std::optional<std::size_t> norm_bfs(const PrsSystem& sys, TermId t, std::size_t max_depth);

// Exhaustive truth-table evaluation of the alternating prefix.
bool qbf_brute(const Qbf& q);
Qbf random_qbf(Rng& rng, std::size_t vars, std::size_t max_clauses);

// All Minsky machines with up to n instructions over `counters` counters.
std::vector<MinskyMachine> all_minsky(std::size_t max_instructions, std::size_t counters);

// Quotient of an LTS by a partition.
FiniteLts quotient(const FiniteLts& lts, const Partition& p);

// Random pushdown system whose reachable configurations are finite: control 0 may
// push two symbols and move to control 1, control 1 never grows the stack.
PdaSystem random_finite_pda(Rng& rng, std::size_t stack_symbols, std::size_t actions, std::size_t rules);

// Words over the given symbols with weight sum <= bound (weights >= 1).
std::vector<std::vector<ConstId>> words_by_weight(const std::vector<ConstId>& symbols,
                                                  const std::vector<std::uint64_t>& weights, std::uint64_t bound);
// Words of length <= n.
std::vector<std::vector<ConstId>> words_upto(const std::vector<ConstId>& symbols, std::size_t n);

}  // namespace prsequiv::testing

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prsequiv/formula.hpp"
#include "prsequiv/lts.hpp"

namespace prsequiv {

// Box conjuncts range over the actions of fs together with `extra_actions`, which
// should cover the alphabet of every process the formula is checked against.

// levels[i][f] holds xi^f_i: g |= xi^f_i iff g ~i f. All levels share one DAG.
std::vector<std::vector<FormulaId>> hm_char(const FiniteLts& fs, std::size_t k, FormulaStore& store,
                                            std::span<const std::string> extra_actions = {});

// Same for the weak approximants, with <<a>> and its dual over the saturated fs.
std::vector<std::vector<FormulaId>> weak_hm_char(const FiniteLts& fs, std::size_t k, FormulaStore& store,
                                                 std::span<const std::string> extra_actions = {});

// xi^f_k & AG(\/ over all fs states f' of xi^f'_k), with k = number of fs states unless
// overridden. g |= it iff g ~ f (g weakly bisimilar to f for the weak variant).
FormulaId ef_char(const FiniteLts& fs, StateId f, FormulaStore& store, bool weak = false,
                  std::span<const std::string> extra_actions = {}, std::optional<std::size_t> k = std::nullopt);

// Greatest-fixpoint characteristic formula for bisimilarity with f: one variable Xi per
// state reachable from f, eliminated into nested nu binders with f's outermost.
FormulaId mu_char_bisim(const FiniteLts& fs, StateId f, FormulaStore& store,
                        std::span<const std::string> extra_actions = {});

// psi: g |= psi iff f is simulated by g. rho: g |= rho iff g is simulated by f.
struct SimChar {
  FormulaId psi;
  FormulaId rho;
};
SimChar sim_char(const FiniteLts& fs, StateId f, FormulaStore& store, std::span<const std::string> extra_actions = {});

}  // namespace prsequiv

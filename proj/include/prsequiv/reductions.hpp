#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "prsequiv/lts.hpp"

namespace prsequiv {

struct SimInstance {
  FiniteLts left;
  StateId s;
  FiniteLts right;
  StateId t;
};

// Largest number of a-successors of any state, over all actions a.
std::size_t max_branching(const FiniteLts& lts);

// s ~ t iff s' is simulated by t'. The left side gets loops lam_a_i, which let the
// attacker announce that he plays the i-th a-move of the right process, and moves
// del_a_j to its own j-th a-successor (to a tick-looping state when there is none).
// The right side answers lam_a_i by picking j; the chosen gadget state then enforces
// del_a_j by sending every other action to a universal state. d defaults to the
// maximal branching and must not be smaller.
SimInstance bisim_to_sim(const FiniteLts& a, StateId s, const FiniteLts& b, StateId t,
                         std::optional<std::size_t> d = std::nullopt);

struct EqInstance {
  FiniteLts lts;
  StateId s;
  StateId t;
};

// s is simulated by t iff s' =sm t', where s' -x-> s, s' -x-> t and t' -x-> t for the
// first action x of the alphabet ("a" if the alphabet is empty).
EqInstance simpre_to_simeq(const FiniteLts& lts, StateId s, StateId t);

// Same states, keeping only the transitions s -a-> t where no other a-successor of s
// strictly simulates t. Then s =sm t iff their images are bisimilar.
FiniteLts max_quotient(const FiniteLts& lts);

}  // namespace prsequiv

#pragma once

#include <vector>

#include "prsequiv/formula.hpp"
#include "prsequiv/lts.hpp"

namespace prsequiv {

// States of a complete LTS satisfying a closed formula. Fixpoints must be
// alternation-free and every variable must occur under an even number of negations;
// otherwise PreconditionError. Modalities name actions; an action missing from the
// LTS has no transitions.
std::vector<bool> satisfying_states(const FiniteLts& lts, const FormulaStore& store, FormulaId f);
bool model_check(const FiniteLts& lts, StateId s, const FormulaStore& store, FormulaId f);

}  // namespace prsequiv

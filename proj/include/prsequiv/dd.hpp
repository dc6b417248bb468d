#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prsequiv/ext_nat.hpp"
#include "prsequiv/lts.hpp"
#include "prsequiv/system.hpp"

namespace prsequiv {

// Distance-to-disabling function. Basic dd(a) measures the distance to the nearest
// state without an a-move. dd(a; F; delta) measures the distance to the nearest state
// t where every F value is finite and no a-move t -a-> r changes the F values by
// exactly delta.
struct DdSpec {
  std::string action;
  bool triple = false;
  std::vector<DdSpec> inner;
  std::vector<ExtInt> delta;  // same length as inner; each -1, n >= 0 or omega

  static DdSpec basic(std::string a) { return {std::move(a), false, {}, {}}; }
  static DdSpec make_triple(std::string a, std::vector<DdSpec> f, std::vector<ExtInt> d);
  std::string to_string() const;
  std::size_t depth() const;
};

// Syntax: dd(a) | dd(a; [spec, ...]; [delta, ...]) with deltas written -1, 0, 1, ... or w.
DdSpec parse_dd_spec(std::string_view text);

// Values at all states; requires a complete LTS.
std::vector<ExtNat> dd_eval_all(const FiniteLts& lts, const DdSpec& spec);
ExtNat dd_eval(const FiniteLts& lts, const DdSpec& spec, StateId s);
// Same on a partially explored LTS: nullopt where the cut-off states could matter.
std::vector<std::optional<ExtNat>> dd_eval_partial(const FiniteLts& lts, const DdSpec& spec);

// Change of the F values along src -> dst. Throws PreconditionError if some F value at
// src is omega (the change is then undefined for the whole vector).
std::vector<ExtInt> change_vector(const FiniteLts& lts, std::span<const DdSpec> f, StateId src, StateId dst);

// For a BPP system: cost(X) = 0 for X outside Q, otherwise the least
// 1 + sum of costs over the right-hand sides of X's rules.
std::vector<ExtNat> cost_q(const PrsSystem& sys, std::span<const ConstId> q);
// Least number of steps to a term without Q constants; additive over components.
ExtNat norm_q(const PrsSystem& sys, std::span<const ConstId> q, TermId t);

struct FindQOptions {
  std::size_t max_constants = 14;  // subsets are enumerated exhaustively
  std::size_t max_states = 20000;  // per exploration used to fix sample values
  std::size_t max_depth = 64;
};

// Smallest (then lexicographically first) Q with norm_Q = spec on every sample whose
// spec value a bounded exploration determines.
std::optional<std::vector<ConstId>> find_q(const PrsSystem& sys, const DdSpec& spec, std::span<const TermId> samples,
                                           const FindQOptions& opt = {});

}  // namespace prsequiv

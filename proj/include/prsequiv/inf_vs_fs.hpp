#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prsequiv/game.hpp"
#include "prsequiv/lts.hpp"
#include "prsequiv/pushdown.hpp"

namespace prsequiv {

// Breadth-first LTS of a pushdown system from one configuration. States at the depth
// bound (or past max_states) are flagged incomplete. Labels read `p.X.Y`.
FiniteLts explore_pda(const PdaSystem& pda, const PdaConfig& root, std::optional<std::size_t> max_depth = std::nullopt,
                      std::size_t max_states = 100000);
std::string pda_config_label(const PdaSystem& pda, const PdaConfig& c);

// States f' of fs with head ~k f'. A head whose stack holds k symbols stands for every
// configuration extending it: k rounds pop at most k symbols, so the unknown rest of
// the stack is never exposed to a move.
std::vector<StateId> kbisim_vs_fs(const PdaSystem& pda, const PdaConfig& head, const FiniteLts& fs, std::size_t k);

struct PdaFsVerdict {
  bool bisimilar = false;
  std::size_t k = 0;
  // Set when the start is not ~k f: the attacker's winning strategy in the k-round game
  // played on `fragment` (left) against fs (right).
  std::optional<GameOutcome> attacker;
  std::optional<FiniteLts> fragment;
  // Set when some reachable configuration matches no fs state up to ~k.
  std::optional<PdaConfig> bad_head;
};

// start ~ f iff start ~k f and every reachable configuration is ~k some fs state,
// with k the number of fs states. Reachability of heads is read off post*.
PdaFsVerdict decide_pda_fs_bisim(const PdaSystem& pda, const PdaConfig& start, const FiniteLts& fs, StateId f);

// g ~ f iff g ~k f and no g' reachable from g is ~k-unrelated to every finite-state
// process; the oracles supply both conditions.
template <class G, class F>
bool generic_thm3(const std::function<bool(const G&, const F&, std::size_t)>& k_equiv,
                  const std::function<bool(const G&, std::size_t)>& reaches_bad, const G& g, const F& f, std::size_t k) {
  return k_equiv(g, f, k) && !reaches_bad(g, k);
}

}  // namespace prsequiv

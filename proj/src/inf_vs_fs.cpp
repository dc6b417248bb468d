#include "prsequiv/inf_vs_fs.hpp"

#include <deque>
#include <map>

#include "prsequiv/error.hpp"

namespace prsequiv {

std::string pda_config_label(const PdaSystem& pda, const PdaConfig& c) {
  std::string s = pda.controls().at(c.control);
  for (auto x : c.stack) s += "." + pda.stack_symbols().at(x);
  return s;
}

FiniteLts explore_pda(const PdaSystem& pda, const PdaConfig& root, std::optional<std::size_t> max_depth,
                      std::size_t max_states) {
  LtsBuilder b;
  for (const std::string& a : pda.actions()) b.add_action(a);
  std::map<PdaConfig, StateId> ids;
  std::vector<std::size_t> depth;
  std::deque<PdaConfig> queue;
  auto add = [&](const PdaConfig& c, std::size_t d) -> std::optional<StateId> {
    if (auto it = ids.find(c); it != ids.end()) return it->second;
    if (ids.size() >= max_states) return std::nullopt;
    StateId s = b.add_state(pda_config_label(pda, c));
    ids.emplace(c, s);
    depth.push_back(d);
    queue.push_back(c);
    return s;
  };
  add(root, 0);
  while (!queue.empty()) {
    PdaConfig c = queue.front();
    queue.pop_front();
    StateId s = ids.at(c);
    if (max_depth && depth[s] >= *max_depth) {
      b.set_complete(s, false);
      continue;
    }
    if (c.stack.empty()) continue;
    for (const PdaRule& r : pda.rules()) {
      if (r.control != c.control || r.top != c.stack[0]) continue;
      PdaConfig n{r.next_control, r.push};
      n.stack.insert(n.stack.end(), c.stack.begin() + 1, c.stack.end());
      auto t = add(n, depth[s] + 1);
      if (!t) {
        b.set_complete(s, false);
        continue;
      }
      b.add_transition(s, r.action, *t);
    }
  }
  b.set_initial(0);
  return std::move(b).build();
}

std::vector<StateId> kbisim_vs_fs(const PdaSystem& pda, const PdaConfig& head, const FiniteLts& fs, std::size_t k) {
  if (head.stack.size() > k) throw PreconditionError("head is longer than k");
  if (!fs.all_complete()) throw IncompleteLtsError("finite-state side must be completely explored");
  FiniteLts frag = explore_pda(pda, head, k);
  GameArena arena(frag, fs, GameKind::Bisimulation);
  std::vector<StateId> out;
  for (StateId f = 0; f < fs.num_states(); ++f)
    if (solve_game(arena, 0, f, k).winner() == Player::Defender) out.push_back(f);
  return out;
}

PdaFsVerdict decide_pda_fs_bisim(const PdaSystem& pda, const PdaConfig& start, const FiniteLts& fs, StateId f) {
  if (!fs.all_complete()) throw IncompleteLtsError("finite-state side must be completely explored");
  if (f >= fs.num_states()) throw PreconditionError("state out of range");
  PdaFsVerdict v;
  v.k = fs.num_states();

  FiniteLts frag = explore_pda(pda, start, v.k);
  {
    GameArena arena(frag, fs, GameKind::Bisimulation);
    GameSolution sol = solve_game(arena, 0, f, v.k);
    if (sol.winner() == Player::Attacker) {
      v.attacker = sol.outcome();
      v.fragment = std::move(frag);
      return v;
    }
  }

  PAutomaton reach = pda_post_star(pda, PAutomaton::for_configuration(pda.controls().size(), start));
  heads(pda, v.k, [&](const PdaConfig& h) {
    bool reachable = h.stack.size() < v.k ? reach.accepts(h.control, h.stack) : reach.accepts_prefix(h.control, h.stack);
    if (!reachable) return true;
    if (kbisim_vs_fs(pda, h, fs, v.k).empty()) {
      v.bad_head = h;
      return false;
    }
    return true;
  });
  v.bisimilar = !v.bad_head;
  return v;
}

}  // namespace prsequiv

#include "prsequiv/game.hpp"

#include <algorithm>
#include <deque>

#include "prsequiv/error.hpp"
#include "prsequiv/semantics.hpp"

namespace prsequiv {

GameArena::GameArena(const FiniteLts& left, const FiniteLts& right, GameKind kind)
    : kind_(kind),
      left_(kind == GameKind::WeakBisimulation ? saturate(left) : left),
      right_(kind == GameKind::WeakBisimulation ? saturate(right) : right) {
  std::vector<ActionId> maps[2];
  for (const FiniteLts* l : {&left_, &right_}) {
    auto& m = maps[l == &left_ ? 0 : 1];
    for (const auto& name : l->actions()) {
      auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
      if (it == alphabet_.end()) {
        alphabet_.push_back(name);
        it = alphabet_.end() - 1;
      }
      m.push_back(static_cast<ActionId>(it - alphabet_.begin()));
    }
  }
  for (int s = 0; s < 2; ++s) {
    const FiniteLts& l = s == 0 ? left_ : right_;
    succ_[s].assign(l.num_states(), std::vector<std::vector<StateId>>(alphabet_.size()));
    for (StateId x = 0; x < l.num_states(); ++x)
      for (const Edge& e : l.out(x)) succ_[s][x][maps[s][e.action]].push_back(e.target);
  }
}

void GameArena::require_expandable(Side s, StateId x) const {
  if (!side(s).complete(x))
    throw IncompleteLtsError("the game needs the transitions of cut-off state " + side(s).label(x));
}

std::vector<Move> GameArena::legal_moves(const GamePosition& p) const {
  std::vector<Move> out;
  auto add_side = [&](Side s, StateId x, std::optional<ActionId> only) {
    for (ActionId a = 0; a < alphabet_.size(); ++a) {
      if (only && a != *only) continue;
      for (StateId y : post(s, x, a)) out.push_back({s, a, y});
    }
  };
  if (!p.pending) {
    add_side(Side::Left, p.left, std::nullopt);
    if (kind_ != GameKind::Simulation) add_side(Side::Right, p.right, std::nullopt);
  } else {
    Side s = other(p.pending->side);
    add_side(s, s == Side::Left ? p.left : p.right, p.pending->action);
  }
  return out;
}

GamePosition GameArena::apply_move(const GamePosition& p, const Move& m) const {
  auto legal = legal_moves(p);
  if (std::find(legal.begin(), legal.end(), m) == legal.end()) throw PreconditionError("illegal move " + describe(m));
  GamePosition q = p;
  if (!p.pending) {
    q.pending = m;
    return q;
  }
  StateId l = p.pending->side == Side::Left ? p.pending->target : m.target;
  StateId r = p.pending->side == Side::Left ? m.target : p.pending->target;
  return {l, r, std::nullopt, p.round + 1};
}

std::string GameArena::describe(const Move& m) const {
  std::string side_name = m.side == Side::Left ? "left" : "right";
  std::string act = m.action < alphabet_.size() ? alphabet_[m.action] : "#" + std::to_string(m.action);
  if (m.target >= num_states(m.side)) return side_name + " -" + act + "-> #" + std::to_string(m.target);
  const std::string& lab = label(m.side, m.target);
  return side_name + " -" + act + "-> " + (lab.empty() ? std::to_string(m.target) : lab);
}

GameSolution solve_game(const GameArena& arena, StateId s, StateId t, std::optional<std::size_t> bound) {
  GameSolution sol;
  sol.arena_ = &arena;
  sol.root_ = arena.start(s, t);
  sol.bound_ = bound;

  // Build the arena reachable from the root, breadth first in rounds.
  std::vector<std::size_t> depth;
  std::deque<std::uint32_t> queue;
  auto intern = [&](const PositionKey& k, std::size_t d) {
    auto [it, fresh] = sol.index_.emplace(k, static_cast<std::uint32_t>(sol.keys_.size()));
    if (fresh) {
      sol.keys_.push_back(k);
      sol.moves_.emplace_back();
      sol.expanded_.push_back(false);
      depth.push_back(d);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(sol.root_.key(), 0);
  while (!queue.empty()) {
    std::uint32_t i = queue.front();
    queue.pop_front();
    PositionKey k = sol.keys_[i];
    std::size_t d = depth[i];
    if (!k.pending && bound && d >= *bound) continue;
    GamePosition p{k.left, k.right, k.pending, d};
    if (!k.pending) {
      arena.require_expandable(Side::Left, k.left);
      if (arena.kind() != GameKind::Simulation) arena.require_expandable(Side::Right, k.right);
    } else {
      Side resp = other(k.pending->side);
      arena.require_expandable(resp, resp == Side::Left ? k.left : k.right);
    }
    sol.expanded_[i] = true;
    for (const Move& m : arena.legal_moves(p)) {
      GamePosition q = arena.apply_move(p, m);
      std::uint32_t j = intern(q.key(), k.pending ? d + 1 : d);
      sol.moves_[i].emplace_back(m, j);
    }
  }

  // Attacker attractor with ranks, processed bucket by bucket in increasing rank.
  std::size_t n = sol.keys_.size();
  sol.rank_.assign(n, kUnranked);
  std::vector<std::vector<std::uint32_t>> preds(n);
  std::vector<std::size_t> counter(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (const auto& [m, j] : sol.moves_[i]) preds[j].push_back(i);
  std::vector<std::vector<std::uint32_t>> bucket(2);
  auto limit = bound.value_or(kUnranked - 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!sol.keys_[i].pending) continue;
    counter[i] = sol.moves_[i].size();
    if (sol.expanded_[i] && counter[i] == 0) {
      sol.rank_[i] = 0;
      for (std::uint32_t a : preds[i])
        if (sol.rank_[a] == kUnranked && limit >= 1) {
          sol.rank_[a] = 1;
          bucket[1].push_back(a);
        }
    }
  }
  for (std::size_t r = 1; r < bucket.size(); ++r) {
    for (std::size_t bi = 0; bi < bucket[r].size(); ++bi) {
      std::uint32_t a = bucket[r][bi];
      for (std::uint32_t dpos : preds[a]) {
        if (--counter[dpos] != 0) continue;
        sol.rank_[dpos] = r;
        for (std::uint32_t a2 : preds[dpos]) {
          if (sol.rank_[a2] != kUnranked || r + 1 > limit) continue;
          sol.rank_[a2] = r + 1;
          if (bucket.size() <= r + 1) bucket.resize(r + 2);
          bucket[r + 1].push_back(a2);
        }
      }
    }
  }
  if (sol.rank_[0] != kUnranked) {
    sol.winner_ = Player::Attacker;
    sol.rounds_ = sol.rank_[0];
  }
  return sol;
}

std::optional<std::size_t> GameSolution::rank(const GamePosition& p) const {
  auto it = index_.find(p.key());
  if (it == index_.end() || rank_[it->second] == kUnranked) return std::nullopt;
  return rank_[it->second];
}

std::optional<Move> GameSolution::best_move(const GamePosition& p) const {
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  std::uint32_t i = it->second;
  const auto& ms = moves_[i];
  if (ms.empty()) return std::nullopt;
  auto ord = [&](std::uint32_t j) { return rank_[j] == kUnranked ? kUnranked : rank_[j]; };
  std::optional<std::pair<Move, std::uint32_t>> best;
  if (!keys_[i].pending) {
    // Attacker: least rank, then lowest (action, target).
    for (const auto& mv : ms) {
      if (!best) {
        best = mv;
        continue;
      }
      auto key = [&](const std::pair<Move, std::uint32_t>& x) {
        return std::make_tuple(ord(x.second), x.first.action, x.first.target, x.first.side);
      };
      if (key(mv) < key(*best)) best = mv;
    }
  } else {
    // Defender: stay outside the attractor with the lowest target; otherwise delay.
    for (const auto& mv : ms) {
      if (!best) {
        best = mv;
        continue;
      }
      auto key = [&](const std::pair<Move, std::uint32_t>& x) {
        std::size_t r = ord(x.second);
        std::size_t badness = r == kUnranked ? 0 : kUnranked - r;
        return std::make_tuple(badness, x.first.target);
      };
      if (key(mv) < key(*best)) best = mv;
    }
  }
  return best->first;
}

GameOutcome GameSolution::outcome() const {
  GameOutcome out;
  out.winner = winner_;
  out.rounds_to_win = rounds_;
  std::vector<std::uint32_t> stack{0};
  std::vector<bool> seen(keys_.size(), false);
  seen[0] = true;
  while (!stack.empty()) {
    std::uint32_t i = stack.back();
    stack.pop_back();
    if (!expanded_[i]) continue;
    bool attacker_turn = !keys_[i].pending;
    bool winners_turn = attacker_turn == (winner_ == Player::Attacker);
    const PositionKey& k = keys_[i];
    GamePosition p{k.left, k.right, k.pending, 0};
    if (winners_turn) {
      auto m = best_move(p);
      if (!m) continue;
      out.strategy.emplace(k, *m);
      for (const auto& [mv, j] : moves_[i])
        if (mv == *m && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
    } else {
      for (const auto& [mv, j] : moves_[i])
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
  }
  return out;
}

GameOutcome game_solve(const FiniteLts& left, StateId s, const FiniteLts& right, StateId t, GameKind kind,
                       std::optional<std::size_t> bound) {
  GameArena arena(left, right, kind);
  return solve_game(arena, s, t, bound).outcome();
}

GameOutcome game_solve(const FiniteLts& lts, StateId s, StateId t, GameKind kind, std::optional<std::size_t> bound) {
  return game_solve(lts, s, lts, t, kind, bound);
}

}  // namespace prsequiv

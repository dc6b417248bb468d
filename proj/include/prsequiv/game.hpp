#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prsequiv/lts.hpp"

namespace prsequiv {

enum class GameKind { Simulation, Bisimulation, WeakBisimulation };
enum class Player { Attacker, Defender };
enum class Side : std::uint8_t { Left, Right };

inline Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct Move {
  Side side;
  ActionId action;  // index into GameArena::alphabet()
  StateId target;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// Attacker positions have no pending move; defender positions carry the attacker's
// move that still has to be answered.
struct PositionKey {
  StateId left;
  StateId right;
  std::optional<Move> pending;
  friend auto operator<=>(const PositionKey&, const PositionKey&) = default;
};

struct GamePosition {
  StateId left = 0;
  StateId right = 0;
  std::optional<Move> pending;
  std::size_t round = 0;

  Player to_move() const { return pending ? Player::Defender : Player::Attacker; }
  PositionKey key() const { return {left, right, pending}; }
};

// Two LTSs with their alphabets merged by name. For the weak game both sides are
// saturated first, which needs complete LTSs.
class GameArena {
 public:
  GameArena(const FiniteLts& left, const FiniteLts& right, GameKind kind);

  GameKind kind() const { return kind_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t num_states(Side s) const { return side(s).num_states(); }
  bool complete(Side s, StateId x) const { return side(s).complete(x); }
  const std::string& label(Side s, StateId x) const { return side(s).label(x); }
  const std::vector<StateId>& post(Side s, StateId x, ActionId a) const { return succ_[idx(s)][x][a]; }

  GamePosition start(StateId left, StateId right) const { return {left, right, std::nullopt, 0}; }
  std::vector<Move> legal_moves(const GamePosition& p) const;
  // Throws PreconditionError for a move that is not legal at p.
  GamePosition apply_move(const GamePosition& p, const Move& m) const;
  std::string describe(const Move& m) const;
  // Throws IncompleteLtsError if x was cut off by exploration.
  void require_expandable(Side s, StateId x) const;

 private:
  static int idx(Side s) { return s == Side::Left ? 0 : 1; }
  const FiniteLts& side(Side s) const { return s == Side::Left ? left_ : right_; }

  GameKind kind_;
  FiniteLts left_;
  FiniteLts right_;
  std::vector<std::string> alphabet_;
  std::vector<std::vector<std::vector<StateId>>> succ_[2];
};

struct GameOutcome {
  Player winner = Player::Defender;
  // Least number of rounds in which the attacker forces a win, when he wins.
  std::optional<std::size_t> rounds_to_win;
  // Memoryless winning strategy of the winner on every position reachable under it.
  std::map<PositionKey, Move> strategy;
};

// Solved arena rooted at one start position. With a bound k the game lasts k rounds
// and the defender wins if he survives them; states that were cut off by exploration
// are only an error if the k-round game needs their transitions.
class GameSolution {
 public:
  Player winner() const { return winner_; }
  std::optional<std::size_t> rounds_to_win() const { return rounds_; }
  // Optimal move for the player to move at p (nullopt if that player is stuck).
  std::optional<Move> best_move(const GamePosition& p) const;
  // Attractor rank of an attacker position (rounds the attacker needs), if winning.
  std::optional<std::size_t> rank(const GamePosition& p) const;
  GameOutcome outcome() const;

 private:
  friend GameSolution solve_game(const GameArena&, StateId, StateId, std::optional<std::size_t>);
  const GameArena* arena_ = nullptr;
  GamePosition root_;
  std::optional<std::size_t> bound_;
  Player winner_ = Player::Defender;
  std::optional<std::size_t> rounds_;
  std::map<PositionKey, std::uint32_t> index_;
  std::vector<PositionKey> keys_;
  std::vector<std::vector<std::pair<Move, std::uint32_t>>> moves_;
  std::vector<std::size_t> rank_;  // kUnranked when not in the attacker attractor
  std::vector<bool> expanded_;
};

inline constexpr std::size_t kUnranked = static_cast<std::size_t>(-1);

GameSolution solve_game(const GameArena& arena, StateId s, StateId t, std::optional<std::size_t> bound = std::nullopt);

GameOutcome game_solve(const FiniteLts& left, StateId s, const FiniteLts& right, StateId t, GameKind kind,
                       std::optional<std::size_t> bound = std::nullopt);
GameOutcome game_solve(const FiniteLts& lts, StateId s, StateId t, GameKind kind,
                       std::optional<std::size_t> bound = std::nullopt);

inline std::vector<Move> legal_moves(const GameArena& arena, const GamePosition& p) { return arena.legal_moves(p); }
inline GamePosition apply_move(const GameArena& arena, const GamePosition& p, const Move& m) {
  return arena.apply_move(p, m);
}

}  // namespace prsequiv

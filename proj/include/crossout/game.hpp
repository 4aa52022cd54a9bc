#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossout/permutation.hpp"

namespace crossout {

// Alice prefers higher values w(i); Bob prefers positions further right.
enum class Player { Alice, Bob };

inline Player opponent(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }
inline Mark mark_of(Player p) { return p == Player::Alice ? Mark::A : Mark::B; }
inline Player player_of(Mark m) { return m == Mark::A ? Player::Alice : Player::Bob; }
inline char to_char(Player p) { return to_char(mark_of(p)); }
/// Accepts "A"/"B"/"alice"/"bob" (any case).
Player player_from_string(const std::string& s);

struct MoveRecord {
  int move = 0;  // 1-based
  Player player = Player::Alice;
  int position = 0;
  int value = 0;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// Immutable snapshot of a dinner game. Moves alternate and Bob always has
/// the last move, so Alice opens even-length games and Bob odd-length ones.
class GameState {
 public:
  explicit GameState(Permutation w, std::optional<Player> human_role = std::nullopt);

  const Permutation& w() const noexcept { return w_; }
  std::optional<Player> human_role() const noexcept { return human_role_; }
  const std::vector<MoveRecord>& history() const noexcept { return history_; }
  /// Uneaten positions, increasing.
  const std::vector<int>& remaining() const noexcept { return remaining_; }
  std::vector<int> legal_moves() const { return remaining_; }

  bool over() const noexcept { return remaining_.empty(); }
  /// Mover of the next move; StateError once the game is over.
  Player turn() const;
  bool is_engine_turn() const;

  /// New state with `position` eaten by the current mover. Throws
  /// MoveError if the position is not remaining, StateError if over.
  GameState apply_move(int position) const;

  /// Eater of each position eaten so far.
  std::map<int, Player> eaten() const;

 private:
  Permutation w_;
  std::optional<Player> human_role_;
  std::vector<MoveRecord> history_;
  std::vector<int> remaining_;
};

GameState new_game(Permutation w, std::optional<Player> human_role = std::nullopt);
/// Uniform random permutation of 1..size from a seeded shuffle.
GameState new_random_game(int size, std::uint64_t seed,
                          std::optional<Player> human_role = std::nullopt);
Permutation random_permutation(int size, std::uint64_t seed);

/// Reverse-induction assignment of `remaining` when `next_mover` moves
/// first. Working back from the final move (always Bob's), each mover is
/// given the opponent's least favorite unassigned morsel: Bob the smallest
/// value, Alice the leftmost position.
struct Assignment {
  std::map<int, Player> eater;
  std::vector<int> reverse_order;  // last move first
};

Assignment crossout_assignment(const Permutation& w, std::span<const int> remaining,
                               Player next_mover);

/// The crossout-optimal move for whoever is to move.
int optimal_move(const GameState& s);
/// optimal_move, but only when it is the engine's turn (StateError otherwise).
int engine_move(const GameState& s);
/// Predicted eater of every remaining position under optimal play from here.
std::map<int, Player> analysis(const GameState& s);
/// Both sides play optimal_move from the opening.
std::vector<MoveRecord> playout_optimal(const Permutation& w);

/// True iff no i < j has i eaten by Bob, j eaten by Alice and w(i) > w(j).
/// StateError unless the game is over.
bool no_trade_check(const GameState& final_state);

/// Final allocation as a marking: marks from who ate what, mark_order the
/// reverse of the play order.
Marking allocation(const GameState& final_state);

}  // namespace crossout

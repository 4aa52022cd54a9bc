#include "crossout/game.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "crossout/errors.hpp"

namespace crossout {

Player player_from_string(const std::string& s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "a" || lower == "alice") return Player::Alice;
  if (lower == "b" || lower == "bob") return Player::Bob;
  throw ValidationError("unknown player '" + s + "'");
}

GameState::GameState(Permutation w, std::optional<Player> human_role)
    : w_(std::move(w)), human_role_(human_role), remaining_(w_.size()) {
  std::iota(remaining_.begin(), remaining_.end(), 1);
}

Player GameState::turn() const {
  if (over()) throw StateError("game is over");
  // The final move is Bob's; movers alternate backwards from it.
  return remaining_.size() % 2 == 1 ? Player::Bob : Player::Alice;
}

bool GameState::is_engine_turn() const {
  return !over() && (!human_role_ || turn() != *human_role_);
}

GameState GameState::apply_move(int position) const {
  const Player mover = turn();
  const auto it = std::lower_bound(remaining_.begin(), remaining_.end(), position);
  if (it == remaining_.end() || *it != position) throw MoveError("not in remaining");
  GameState next = *this;
  next.remaining_.erase(next.remaining_.begin() + (it - remaining_.begin()));
  next.history_.push_back({static_cast<int>(history_.size()) + 1, mover, position,
                           w_.at(position)});
  return next;
}

std::map<int, Player> GameState::eaten() const {
  std::map<int, Player> out;
  for (const MoveRecord& m : history_) out[m.position] = m.player;
  return out;
}

GameState new_game(Permutation w, std::optional<Player> human_role) {
  return GameState(std::move(w), human_role);
}

Permutation random_permutation(int size, std::uint64_t seed) {
  if (size < 1) throw ValidationError("game size must be at least 1");
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

GameState new_random_game(int size, std::uint64_t seed, std::optional<Player> human_role) {
  return GameState(random_permutation(size, seed), human_role);
}

Assignment crossout_assignment(const Permutation& w, std::span<const int> remaining,
                               Player next_mover) {
  Assignment out;
  const int r = static_cast<int>(remaining.size());
  if (r == 0) return out;
  std::vector<int> by_position(remaining.begin(), remaining.end());
  std::sort(by_position.begin(), by_position.end());
  std::vector<int> by_value = by_position;
  std::sort(by_value.begin(), by_value.end(),
            [&](int a, int b) { return w.at(a) < w.at(b); });

  Player mover = r % 2 == 1 ? next_mover : opponent(next_mover);  // last mover
  std::size_t left = 0;
  std::size_t low = 0;
  for (int step = 0; step < r; ++step) {
    int pos;
    if (mover == Player::Bob) {
      while (out.eater.count(by_value[low])) ++low;
      pos = by_value[low];
    } else {
      while (out.eater.count(by_position[left])) ++left;
      pos = by_position[left];
    }
    out.eater[pos] = mover;
    out.reverse_order.push_back(pos);
    mover = opponent(mover);
  }
  return out;
}

int optimal_move(const GameState& s) {
  const Assignment a = crossout_assignment(s.w(), s.remaining(), s.turn());
  return a.reverse_order.back();
}

int engine_move(const GameState& s) {
  if (s.over()) throw StateError("game is over");
  if (!s.is_engine_turn()) throw StateError("not the engine's turn");
  return optimal_move(s);
}

std::map<int, Player> analysis(const GameState& s) {
  if (s.over()) return {};
  return crossout_assignment(s.w(), s.remaining(), s.turn()).eater;
}

std::vector<MoveRecord> playout_optimal(const Permutation& w) {
  GameState s(w);
  while (!s.over()) s = s.apply_move(optimal_move(s));
  return s.history();
}

bool no_trade_check(const GameState& final_state) {
  if (!final_state.over()) throw StateError("game is not over");
  const std::map<int, Player> eaten = final_state.eaten();
  const Permutation& w = final_state.w();
  for (int i = 1; i <= w.size(); ++i) {
    if (eaten.at(i) != Player::Bob) continue;
    for (int j = i + 1; j <= w.size(); ++j)
      if (eaten.at(j) == Player::Alice && w.at(i) > w.at(j)) return false;
  }
  return true;
}

Marking allocation(const GameState& final_state) {
  if (!final_state.over()) throw StateError("game is not over");
  Marking m;
  m.marks.assign(final_state.w().size(), Mark::A);
  for (const MoveRecord& r : final_state.history()) m.marks[r.position - 1] = mark_of(r.player);
  for (auto it = final_state.history().rbegin(); it != final_state.history().rend(); ++it)
    m.mark_order.push_back(it->position);
  return m;
}

}  // namespace crossout

#include <doctest.h>

#include "crossout/errors.hpp"
#include "crossout/game.hpp"

using namespace crossout;

namespace {
const Permutation kExample({2, 6, 4, 1, 3, 11, 5, 7, 10, 12, 9, 8});

std::vector<int> positions_of(const std::vector<MoveRecord>& h, Player p) {
  std::vector<int> out;
  for (const MoveRecord& m : h)
    if (m.player == p) out.push_back(m.position);
  return out;
}

std::string marks_of(const std::map<int, Player>& a) {
  std::string s;
  for (const auto& [pos, p] : a) s += to_char(p);
  return s;
}
}  // namespace

TEST_CASE("new games") {
  const GameState fig = new_game(kExample);
  CHECK(fig.turn() == Player::Alice);
  CHECK(fig.remaining().size() == 12);
  CHECK(new_game(Permutation({1, 2})).turn() == Player::Alice);
  CHECK(new_game(Permutation({1, 2, 3})).turn() == Player::Bob);

  CHECK(new_random_game(8, 42).w() == new_random_game(8, 42).w());
  CHECK(new_random_game(8, 42).w().size() == 8);
  CHECK_THROWS_AS(new_random_game(0, 1), ValidationError);
}

TEST_CASE("engine moves") {
  const GameState fig = new_game(kExample);
  CHECK(engine_move(fig) == 10);
  CHECK(fig.w().at(10) == 12);
  CHECK(engine_move(new_game(Permutation({1, 2}))) == 2);

  GameState human_alice = new_game(kExample, Player::Alice);
  CHECK_THROWS_AS(engine_move(human_alice), StateError);

  GameState last = new_game(Permutation({3, 1, 2}));
  last = last.apply_move(engine_move(last));
  last = last.apply_move(engine_move(last));
  REQUIRE(last.remaining().size() == 1);
  CHECK(engine_move(last) == last.remaining().front());
  last = last.apply_move(engine_move(last));
  CHECK_THROWS_AS(engine_move(last), StateError);
  CHECK_THROWS_AS(last.turn(), StateError);
}

TEST_CASE("illegal moves") {
  const GameState s = new_game(Permutation({2, 1}));
  CHECK_THROWS_AS(s.apply_move(3), MoveError);
  const GameState after = s.apply_move(1);
  CHECK_THROWS_AS(after.apply_move(1), MoveError);
  CHECK(after.legal_moves() == std::vector<int>{2});
  CHECK(s.remaining().size() == 2);  // snapshots are immutable
}

TEST_CASE("optimal playouts") {
  const auto h = playout_optimal(kExample);
  CHECK(positions_of(h, Player::Alice) == std::vector<int>{10, 9, 8, 6, 2, 1});
  CHECK(positions_of(h, Player::Bob) == std::vector<int>{11, 12, 7, 3, 5, 4});
  CHECK(h.front().player == Player::Alice);
  CHECK(h.back().player == Player::Bob);

  const auto h12 = playout_optimal(Permutation({1, 2}));
  REQUIRE(h12.size() == 2);
  CHECK(h12[0] == MoveRecord{1, Player::Alice, 2, 2});
  CHECK(h12[1] == MoveRecord{2, Player::Bob, 1, 1});

  const auto h1 = playout_optimal(Permutation({1}));
  REQUIRE(h1.size() == 1);
  CHECK(h1[0].player == Player::Bob);
}

TEST_CASE("playout invariants for every permutation up to N = 8") {
  for (int n = 1; n <= 8; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      const Marking marking = crossout_mark(w);
      GameState s = new_game(w);
      REQUIRE(marks_of(analysis(s)) == marking.to_string());
      REQUIRE(optimal_move(s) == marking.mark_order.back());
      while (!s.over()) s = s.apply_move(optimal_move(s));
      const Marking alloc = allocation(s);
      REQUIRE(alloc == marking);
      REQUIRE(no_trade_check(s));
    });
  }
}

TEST_CASE("analysis") {
  GameState s = new_game(kExample);
  CHECK(marks_of(analysis(s)) == "AABBBABAAABB");

  // Alice deviates by eating position 1 first; the 11-morsel subgame with
  // Bob to move is re-solved by reverse induction from Bob's final move.
  s = s.apply_move(1);
  const auto sub = analysis(s);
  CHECK(sub.size() == 11);
  CHECK(marks_of(sub) == "AABBABBAABB");
  CHECK(sub.at(10) == Player::Alice);

  GameState one = new_game(Permutation({2, 1})).apply_move(2);
  CHECK(analysis(one) == std::map<int, Player>{{1, Player::Bob}});
}

TEST_CASE("no-trade check") {
  // Alice eats position 2 (value 1), Bob position 1 (value 2): both prefer
  // to swap.
  GameState s = new_game(Permutation({2, 1})).apply_move(2).apply_move(1);
  CHECK_FALSE(no_trade_check(s));
  GameState single = new_game(Permutation({1})).apply_move(1);
  CHECK(no_trade_check(single));
  CHECK_THROWS_AS(no_trade_check(new_game(Permutation({1}))), StateError);
}

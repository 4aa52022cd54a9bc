#include <doctest.h>

#include "crossout/dyck_path.hpp"
#include "crossout/errors.hpp"
#include "oracles.hpp"

using namespace crossout;

TEST_CASE("Dyck path validation and representations") {
  CHECK_THROWS_AS(DyckPath::parse("DU"), ValidationError);
  CHECK_THROWS_AS(DyckPath::parse("UUD"), ValidationError);
  CHECK_THROWS_AS(DyckPath::parse("UXD"), ValidationError);
  CHECK_THROWS_AS(DyckPath::from_down_steps(3, std::vector<int>{}), ValidationError);
  CHECK_THROWS_AS(DyckPath::from_down_steps(4, std::vector<int>{1, 4}), ValidationError);

  const std::vector<int> down = {2, 6, 7, 10, 11, 12};
  const DyckPath p = DyckPath::from_down_steps(12, down);
  CHECK(p.down_steps() == down);
  CHECK(DyckPath::parse(p.to_string()) == p);
  CHECK(DyckPath::parse("").length() == 0);
}

TEST_CASE("down-step heights") {
  CHECK(DyckPath::parse("UUDD").heights().h == std::vector<int>{2, 1});

  const std::vector<int> pb_down = {4, 5, 6, 8, 12, 13, 14};
  const Heights hb = DyckPath::from_down_steps(14, pb_down).heights();
  CHECK(hb.h == std::vector<int>{3, 2, 1, 1, 3, 2, 1});
  CHECK(hb.h_star == std::vector<int>{3, 2, 1, 1, 2, 1, 0});

  const std::vector<int> pa_down = {2, 6, 7, 10, 11, 12};
  CHECK(DyckPath::from_down_steps(12, pa_down).heights().h ==
        std::vector<int>{1, 3, 2, 3, 2, 1});
}

TEST_CASE("Dyck enumeration matches brute force and Catalan numbers") {
  CHECK(enumerate_dyck(0).size() == 1);
  const auto four = enumerate_dyck(4);
  REQUIRE(four.size() == 2);
  CHECK(four[0].to_string() == "UUDD");
  CHECK(four[1].to_string() == "UDUD");

  const auto catalan = oracle::catalan_table(8);
  for (int n = 0; n <= 8; ++n) {
    const auto paths = enumerate_dyck(2 * n);
    CHECK(static_cast<long long>(paths.size()) == catalan[n]);
    if (n <= 6) {
      const auto words = oracle::dyck_words(2 * n);
      REQUIRE(words.size() == paths.size());
      for (std::size_t i = 0; i < words.size(); ++i) CHECK(paths[i].to_string() == words[i]);
    }
  }
  CHECK(enumerate_dyck(12).size() == 132);
  CHECK_THROWS_AS(enumerate_dyck(5), ValidationError);
  CHECK_THROWS_AS(enumerate_dyck(-2), ValidationError);
}

TEST_CASE("Hermite labelings") {
  const auto uudd = enumerate_hermite(DyckPath::parse("UUDD"), false);
  CHECK(uudd == std::vector<std::vector<int>>{{1, 1}, {2, 1}});
  CHECK(enumerate_hermite(DyckPath::parse("UDUD"), false).size() == 1);

  // Starred labelings leave the final down step unlabeled.
  const auto starred = enumerate_hermite(DyckPath::parse("UUDUDD"), true);
  CHECK(starred == std::vector<std::vector<int>>{{1, 1}, {2, 1}});

  std::size_t total = 0;
  for (const DyckPath& p : enumerate_dyck(4)) total += enumerate_hermite(p, false).size();
  CHECK(total == 3);

  LabeledDyckPath bad{DyckPath::parse("UUDD"), {3, 1}};
  CHECK_THROWS_AS(bad.validate(false), ConstraintViolation);
  try {
    bad.validate(false);
  } catch (const ConstraintViolation& e) {
    CHECK(e.index() == 1);
  }
  LabeledDyckPath short_labels{DyckPath::parse("UUDD"), {1}};
  CHECK_THROWS_AS(short_labels.validate(false), ValidationError);
  CHECK_NOTHROW(short_labels.validate(true));
}

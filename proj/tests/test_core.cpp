#include <doctest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/paths.hpp"
#include "sweeplab/word.hpp"

using namespace sweeplab;

TEST_CASE("path points") {
  auto pts = mkpath_points(Word("NE"));
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Point{0, 0});
  CHECK(pts[1] == Point{0, 1});
  CHECK(pts[2] == Point{1, 1});
  CHECK(mkpath_points(Word("ENEENNEE")).back() == Point{5, 3});
  CHECK(mkpath_points(Word("")).size() == 1);
  CHECK_THROWS_AS(Word("NXE"), AlphabetError);
}

TEST_CASE("mkptn and mkwd") {
  CHECK(mkptn(Word("ENEENNEE")) == Partition({3, 3, 1}));
  CHECK(mkptn(Word("EEENENNE")) == Partition({4, 4, 3}));
  CHECK(mkptn(Word("NNNEEE")).length() == 0);
  CHECK(mkwd(Partition({3, 3, 1}), {3, 5}).str() == "ENEENNEE");
  CHECK(mkwd(Partition(std::vector<std::int64_t>{}), {2, 2}).str() == "NNEE");
  auto w = mkwd(Partition({4, 4, 4, 2, 2, 1}), {7, 10});
  CHECK(w.count('N') == 7);
  CHECK(w.count('E') == 10);
  CHECK(mkptn(w) == Partition({4, 4, 4, 2, 2, 1}));
  CHECK_THROWS_AS(mkwd(Partition({4}), {2, 3}), ShapeError);
  CHECK_THROWS_AS(mkwd(Partition({1, 1, 1}), {2, 3}), ShapeError);
}

TEST_CASE("mkptn round trip over a rectangle") {
  for (const auto& s : oracle::words({{'N', 4}, {'E', 4}})) {
    Word w(s);
    CHECK(mkwd(mkptn(w), {4, 4}) == w);
    CHECK(mkptn(w).size() == oracle::area(s));
  }
}

TEST_CASE("partition parsing") {
  CHECK(Partition::parse("4,4,4,2,2,1") == Partition({4, 4, 4, 2, 2, 1}));
  CHECK(Partition::parse("") == Partition(std::vector<std::int64_t>{}));
  CHECK(Partition::parse("3,3,1").to_string() == "3,3,1");
  CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2,x"), ParseError);
}

TEST_CASE("levels") {
  auto l = levels(Word("ENEENNEE"), SweepParams{5, -3});
  CHECK(l.step_levels() == std::vector<std::int64_t>{-3, 2, -1, -4, 1, 6, 3, 0});
  CHECK(levels(Word("NNENE"), SweepParams{8, -5}).points ==
        std::vector<std::int64_t>{0, 8, 16, 11, 19, 14});
  for (auto lv : levels(Word("NENNEE"), SweepParams{0, 0}).points) CHECK(lv == 0);
  auto ws = levels(Word("ENEENNEE"), SweepParams{5, -3}, LevelConvention::kWestSouth).step_levels();
  CHECK(ws == std::vector<std::int64_t>{0, -3, 2, -1, -4, 1, 6, 3});
}

TEST_CASE("level overflow is rejected") {
  auto big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  CHECK_THROWS_AS(levels(Word("NN"), SweepParams{big, 0}), OverflowError);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<std::int64_t>::max(), 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
  CHECK(checked_add(-3, 5) == 2);
}

TEST_CASE("dyck test") {
  CHECK(is_dyck(Word("NNEE"), SweepParams{1, -1}));
  CHECK_FALSE(is_dyck(Word("ENNE"), SweepParams{1, -1}));
  CHECK_FALSE(is_dyck(Word("ENEENNEE"), SweepParams{5, -3}));
}

TEST_CASE("rev and flip") {
  CHECK(rev(Word("NEE")).str() == "EEN");
  CHECK(flip(Word("NEE")).str() == "ENN");
  CHECK_THROWS_AS(flip(Word("NDE", Alphabet::schroder())), AlphabetError);
  // flip . rev acts as conjugation on partitions in a square.
  for (const auto& s : oracle::words({{'N', 3}, {'E', 3}})) {
    Word w(s);
    auto pi = mkptn(w);
    std::vector<std::int64_t> conj;
    for (std::int64_t c = 1; c <= pi.part(0); ++c) {
      std::int64_t len = 0;
      for (auto p : pi.parts()) len += p >= c;
      conj.push_back(len);
    }
    CHECK(mkptn(flip(rev(w))) == Partition(conj));
  }
}

TEST_CASE("word enumeration counts") {
  auto two = enumerate_words({1, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].str() == "EN");
  CHECK(two[1].str() == "NE");
  CHECK(enumerate_words({3, 3}).size() == 20);
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t a = 0; a <= n; ++a) {
      CHECK(WordSpace::rect({a, n - a}).size() == oracle::binomial(n, a));
    }
  }
}

TEST_CASE("dyck enumeration against a filter") {
  CHECK(enumerate_dyck({3, 3}, {1, -1}).size() == 5);
  CHECK(enumerate_dyck({2, 3}, {3, -2}).size() == 2);
  CHECK(enumerate_dyck({0, 3}, {1, -1}).empty());
  CHECK(enumerate_dyck({0, 0}, {1, -1}).size() == 1);
  for (std::int64_t r = -2; r <= 2; ++r) {
    for (std::int64_t s = -2; s <= 2; ++s) {
      auto ws = oracle::words({{'N', 3}, {'E', 4}});
      std::size_t count = 0;
      for (const auto& w : ws) {
        auto lv = oracle::en_levels(w, oracle::ne(r, s));
        count += std::all_of(lv.begin(), lv.end(), [](auto l) { return l >= 0; });
      }
      CHECK(enumerate_dyck({3, 4}, {r, s}).size() == count);
    }
  }
}

TEST_CASE("word space ranking") {
  WordSpace space(Alphabet::schroder(), {2, 2, 3});
  CHECK(space.size() == 210);
  auto all = space.all();
  REQUIRE(all.size() == 210);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    CHECK(space.rank(space.unrank(i)) == i);
    CHECK(space.unrank(i) == all[i]);
  }
  std::vector<Word> part;
  space.for_each([&](const Word& w) { part.push_back(w); }, 50, 60);
  REQUIRE(part.size() == 10);
  CHECK(part.front() == all[50]);
}

TEST_CASE("random words survive rank round trips") {
  std::mt19937 rng(11);
  auto space = WordSpace::rect({9, 11});
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
  for (int i = 0; i < 200; ++i) {
    auto r = pick(rng);
    auto w = space.unrank(r);
    CHECK(w.count('N') == 9);
    CHECK(space.rank(w) == r);
  }
}

TEST_CASE("weights parse") {
  auto wt = WeightFn::parse("N=1,D=0,E=-1");
  CHECK(wt('N') == 1);
  CHECK(wt('D') == 0);
  CHECK(wt('E') == -1);
  CHECK(wt.alphabet().symbols() == "DEN");
  CHECK_THROWS_AS(WeightFn::parse("N1"), ParseError);
  CHECK_THROWS_AS(WeightFn::parse("N=x"), ParseError);
}

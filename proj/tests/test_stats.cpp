#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/laurent.hpp"
#include "sweeplab/paths.hpp"
#include "sweeplab/stats.hpp"
#include "sweeplab/sweep.hpp"

using namespace sweeplab;

namespace {

LaurentPoly2 from_coeffs(const std::vector<std::int64_t>& c) {
  LaurentPoly2 p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(i, 0, c[i]);
  return p;
}

LaurentPoly2 random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 3), coef(-4, 4), terms(0, 4);
  LaurentPoly2 p;
  for (int i = terms(rng); i > 0; --i) p.add_term(exp(rng), exp(rng), coef(rng));
  return p;
}

}  // namespace

TEST_CASE("area") {
  CHECK(area(Word("ENEENNEE")) == 7);
  CHECK(area(Word("NNNEEE")) == 0);
  CHECK(area(Word("EEENN")) == 6);
  for (const auto& w : enumerate_words({4, 4})) CHECK(area(w) == oracle::area(w.str()));
}

TEST_CASE("min level and area star") {
  CHECK(min_level(Word("ENEENNEE"), {5, -3}) == -4);
  CHECK(area_star(Word("ENEENNEE"), {5, -3}) == 3);
  for (const auto& w : enumerate_dyck({4, 6}, {3, -2})) {
    CHECK(min_level(w, {3, -2}) == 0);
    CHECK(area_star(w, {3, -2}) == area(w));
  }
  // Scaling (r,s) changes area*.
  CHECK(area_star(Word("EN"), {1, -1}) != area_star(Word("EN"), {2, -2}));
}

TEST_CASE("dyck statistics") {
  CHECK(dyck_area_vector(Word("NNEE")) == std::vector<std::int64_t>{0, 1});
  CHECK(dyck_area(Word("NNEE")) == 1);
  CHECK(dinv(Word("NNEE")) == 0);
  CHECK(dyck_area(Word("NENE")) == 0);
  CHECK(dinv(Word("NENE")) == 1);
  CHECK_THROWS_AS(dinv(Word("ENNE")), DomainError);
  for (std::int64_t n = 1; n <= 8; ++n) {
    auto full = n * (n - 1) / 2;
    for (const auto& w : enumerate_dyck({n, n}, {1, -1})) {
      CHECK(area(w) + dyck_area(w) == full);
      CHECK(area(sweep_minus(w, {1, -1})) + dinv(w) == full);
    }
  }
  auto sb = stat_bundle(Word("NENE"), {1, -1});
  CHECK(sb.dinv.value() == 1);
  CHECK_FALSE(stat_bundle(Word("EN"), {1, -1}).dinv.has_value());
}

TEST_CASE("classical catalan relation") {
  // n = 2 by hand: NNEE has (Area, dinv) = (1, 0), NENE has (0, 1).
  CHECK(classical_qt_catalan(2) == LaurentPoly2::q() + LaurentPoly2::t());
  CHECK(qt_catalan({1, -1}, {2, 2}).to_string() == "+1*t^1 +1*q^1");
  for (std::int64_t n = 1; n <= 7; ++n) {
    auto c = qt_catalan({1, -1}, {n, n});
    auto full = n * (n - 1) / 2;
    CHECK(classical_qt_catalan(n) == c.invert_both().shifted(full, full));
  }
}

TEST_CASE("rational catalan") {
  auto c = qt_catalan({3, -2}, {2, 3});
  CHECK(c.q_at_one().swap_qt() == c.t_at_one());
  CHECK(c == c.swap_qt());
  CHECK(c.to_string() == "+1*t^1 +1*q^1");
  auto w = qt_catalan({3, -2}, {2, 3}, EnumLimits{1000, 3});
  CHECK(w == c);
}

TEST_CASE("square polynomial") {
  // W(N,E) = {NE, EN}: both have area* 0, as do their images.
  CHECK(qt_square({1, 1}).to_string() == "+2");
  for (std::int64_t n = 1; n <= 4; ++n) {
    auto s = qt_square({n, n});
    CHECK(s == s.swap_qt());
    CHECK(s.at_one() == oracle::binomial(2 * n, n));
  }
  auto s23 = qt_square({2, 3});
  CHECK(s23 == s23.swap_qt());
}

TEST_CASE("q binomial against the gaussian recurrence") {
  CHECK(q_binomial(2, 2).to_string() == "+1 +1*q^1 +2*q^2 +1*q^3 +1*q^4");
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) CHECK(q_binomial(a, b) == from_coeffs(oracle::gaussian(a + b, a)));
  }
  CHECK(q_int(3).to_string() == "+1 +1*q^1 +1*q^2");
  CHECK(q_factorial(3) == q_int(2) * q_int(3));
}

TEST_CASE("t = 1/q identities at single points") {
  // [5]_q q^1 C_{3,-2,2,3}(q,1/q) = qbin(2,3)
  auto lhs = q_int(5) * LaurentPoly2::monomial(1, 0) * qt_catalan({3, -2}, {2, 3}).t_to_inverse_q();
  CHECK(lhs == q_binomial(2, 3));
  // [3]_{q^2} q^2 S_{2,4}(q,1/q) = 3 qbin(2,4)
  auto lhs2 = q_int(3).q_power(2) * LaurentPoly2::monomial(2, 0) * qt_square({2, 4}).t_to_inverse_q();
  CHECK(lhs2 == q_binomial(2, 4).scaled(3));
  CHECK(check_catalan_t_inv_q({2, 3}).status == PointStatus::kPass);
  CHECK(check_square_t_inv_q(2, 2).status == PointStatus::kPass);
  CHECK(check_rectangle_t_inv_q({2, 4}).status == PointStatus::kPass);
}

TEST_CASE("laurent ring axioms") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.swap_qt().swap_qt() == a);
    CHECK(a.invert_both() == a.invert_q().invert_t());
    CHECK((a * b).t_to_inverse_q() == a.t_to_inverse_q() * b.t_to_inverse_q());
  }
}

TEST_CASE("laurent edge cases") {
  CHECK(LaurentPoly2().to_string() == "0");
  CHECK(LaurentPoly2::monomial(-1, 2, -3).to_string() == "-3*q^-1*t^2");
  CHECK(LaurentPoly2::monomial(1, 1, 0).term_count() == 0);
  CHECK(LaurentPoly2::monomial(2, 0, 5).to_csv() == "q,t,c\n2,0,5\n");
  CHECK_THROWS_AS(LaurentPoly2::monomial(LaurentPoly2::kMaxExponent + 1, 0), OverflowError);
  CHECK_THROWS_AS(divide_exact_q(q_int(3), q_int(2)), DomainError);
  CHECK_THROWS_AS(divide_exact_q(LaurentPoly2::t(), q_int(2)), DomainError);
  CHECK(divide_exact_q(q_int(4), q_int(2)) == LaurentPoly2::constant(1) + LaurentPoly2::monomial(2, 0));
  // Central binomial coefficient C(80,40) needs more than 64 bits.
  CHECK(q_binomial(40, 40).at_one().str() == "107507208733336176461620");
}

TEST_CASE("polynomial budget") {
  CHECK_THROWS_AS(qt_catalan({1, -1}, {6, 6}, EnumLimits{100, 1}), BudgetError);
}

TEST_CASE("conjecture suites at small range") {
  CheckRange range{2, 2, 6, {}};
  for (const auto& name : conjecture_names()) {
    auto points = check_conjecture(name, range);
    CHECK(!points.empty());
    for (const auto& p : points) CHECK(p.status == PointStatus::kPass);
  }
  CHECK_THROWS_AS(check_conjecture("no-such", range), ParseError);
}

TEST_CASE("single conjecture points") {
  auto p = check_conjecture_point("joint-symmetry-catalan", {{"r", 3}, {"s", -2}, {"a", 2}, {"b", 3}});
  CHECK(p.status == PointStatus::kPass);
  auto skipped = check_conjecture_point("joint-symmetry-square", {{"a", 5}, {"b", 5}}, EnumLimits{10, 1});
  CHECK(skipped.status == PointStatus::kSkipped);
  CHECK_THROWS_AS(check_conjecture_point("joint-symmetry-square", {{"a", 5}}), ParseError);
}

#include "sweeplab/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "sweeplab/error.hpp"

namespace sweeplab {

namespace {

std::int64_t guard(std::int64_t e) {
  if (e > LaurentPoly2::kMaxExponent || e < -LaurentPoly2::kMaxExponent) {
    throw OverflowError("exponent " + std::to_string(e) + " exceeds the supported range");
  }
  return e;
}

template <class F>
LaurentPoly2 map_exponents(const LaurentPoly2& p, F f) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms()) {
    auto [i, j] = f(e.first, e.second);
    out.add_term(i, j, c);
  }
  return out;
}

}  // namespace

LaurentPoly2 LaurentPoly2::constant(const Coeff& c) { return monomial(0, 0, c); }

LaurentPoly2 LaurentPoly2::monomial(std::int64_t i, std::int64_t j, const Coeff& c) {
  LaurentPoly2 p;
  p.add_term(i, j, c);
  return p;
}

void LaurentPoly2::add_term(std::int64_t i, std::int64_t j, const Coeff& c) {
  if (c == 0) return;
  Exponent e{guard(i), guard(j)};
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly2::Coeff LaurentPoly2::coeff(std::int64_t i, std::int64_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Coeff(0) : it->second;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
  LaurentPoly2 out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out.add_term(guard(e1.first + e2.first), guard(e1.second + e2.second), c1 * c2);
    }
  }
  *this = std::move(out);
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const { return scaled(-1); }

LaurentPoly2 LaurentPoly2::scaled(const Coeff& c) const {
  LaurentPoly2 out;
  for (const auto& [e, v] : terms_) out.add_term(e.first, e.second, v * c);
  return out;
}

LaurentPoly2 LaurentPoly2::shifted(std::int64_t di, std::int64_t dj) const {
  return map_exponents(*this, [&](std::int64_t i, std::int64_t j) {
    return Exponent{guard(i + guard(di)), guard(j + guard(dj))};
  });
}

LaurentPoly2 LaurentPoly2::swap_qt() const {
  return map_exponents(*this, [](std::int64_t i, std::int64_t j) { return Exponent{j, i}; });
}

LaurentPoly2 LaurentPoly2::invert_q() const {
  return map_exponents(*this, [](std::int64_t i, std::int64_t j) { return Exponent{-i, j}; });
}

LaurentPoly2 LaurentPoly2::invert_t() const {
  return map_exponents(*this, [](std::int64_t i, std::int64_t j) { return Exponent{i, -j}; });
}

LaurentPoly2 LaurentPoly2::invert_both() const {
  return map_exponents(*this, [](std::int64_t i, std::int64_t j) { return Exponent{-i, -j}; });
}

LaurentPoly2 LaurentPoly2::t_to_inverse_q() const {
  return map_exponents(*this,
                       [](std::int64_t i, std::int64_t j) { return Exponent{guard(i - j), 0}; });
}

LaurentPoly2 LaurentPoly2::q_power(std::int64_t k) const {
  return map_exponents(*this, [&](std::int64_t i, std::int64_t j) {
    if (i != 0 && (k > kMaxExponent / (i < 0 ? -i : i) || k < -kMaxExponent / (i < 0 ? -i : i))) {
      throw OverflowError("q-power substitution overflows");
    }
    return Exponent{i * k, j};
  });
}

LaurentPoly2::Coeff LaurentPoly2::at_one() const {
  Coeff sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly2 LaurentPoly2::q_at_one() const {
  return map_exponents(*this, [](std::int64_t, std::int64_t j) { return Exponent{0, j}; });
}

LaurentPoly2 LaurentPoly2::t_at_one() const {
  return map_exponents(*this, [](std::int64_t i, std::int64_t) { return Exponent{i, 0}; });
}

bool LaurentPoly2::is_univariate_q() const {
  for (const auto& [e, c] : terms_) {
    if (e.second != 0) return false;
  }
  return true;
}

bool LaurentPoly2::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

std::int64_t LaurentPoly2::min_q_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.begin()->first.first;
}

std::int64_t LaurentPoly2::max_q_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.rbegin()->first.first;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ' ';
    first = false;
    out << (c < 0 ? '-' : '+') << (c < 0 ? Coeff(-c) : c);
    if (e.first != 0) out << "*q^" << e.first;
    if (e.second != 0) out << "*t^" << e.second;
  }
  return out.str();
}

std::string LaurentPoly2::to_csv() const {
  std::ostringstream out;
  out << "q,t,c\n";
  for (const auto& [e, c] : terms_) out << e.first << ',' << e.second << ',' << c << '\n';
  return out.str();
}

LaurentPoly2 divide_exact_q(const LaurentPoly2& num, const LaurentPoly2& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (!num.is_univariate_q() || !den.is_univariate_q()) {
    throw DomainError("exact division is only defined for polynomials in q");
  }
  // Long division from the top degree down.
  LaurentPoly2 rem = num, quot;
  auto dtop = den.max_q_degree();
  const auto& lead = den.terms().rbegin()->second;
  while (!rem.is_zero() && rem.max_q_degree() >= dtop) {
    auto rtop = rem.max_q_degree();
    const auto& rc = rem.terms().rbegin()->second;
    if (rc % lead != 0) break;
    auto term = LaurentPoly2::monomial(rtop - dtop, 0, rc / lead);
    quot += term;
    rem -= term * den;
  }
  if (!rem.is_zero()) throw DomainError("polynomial division is not exact");
  return quot;
}

LaurentPoly2 q_int(std::int64_t n) {
  if (n < 0) throw ParameterError("[n]_q needs n >= 0");
  LaurentPoly2 out;
  for (std::int64_t i = 0; i < n; ++i) out.add_term(i, 0, 1);
  return out;
}

LaurentPoly2 q_factorial(std::int64_t n) {
  if (n < 0) throw ParameterError("[n]_q! needs n >= 0");
  auto out = LaurentPoly2::constant(1);
  for (std::int64_t i = 2; i <= n; ++i) out *= q_int(i);
  return out;
}

LaurentPoly2 q_binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw ParameterError("q-binomial needs a, b >= 0");
  // Divide one factor at a time so intermediate quotients stay small.
  auto out = LaurentPoly2::constant(1);
  auto lo = std::min(a, b);
  for (std::int64_t i = 1; i <= lo; ++i) {
    out = divide_exact_q(out * q_int(a + b - lo + i), q_int(i));
  }
  return out;
}

}  // namespace sweeplab

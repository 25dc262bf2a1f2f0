#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace sweeplab {

// Exact Laurent polynomial in q and t with arbitrary-precision coefficients.
// Zero coefficients are never stored, so == is structural equality.
class LaurentPoly2 {
 public:
  using Coeff = boost::multiprecision::cpp_int;
  using Exponent = std::pair<std::int64_t, std::int64_t>;  // (q, t)
  using Terms = std::map<Exponent, Coeff>;

  // Exponents beyond this bound throw OverflowError.
  static constexpr std::int64_t kMaxExponent = std::int64_t{1} << 48;

  LaurentPoly2() = default;
  static LaurentPoly2 constant(const Coeff& c);
  static LaurentPoly2 monomial(std::int64_t i, std::int64_t j, const Coeff& c = 1);
  static LaurentPoly2 q() { return monomial(1, 0); }
  static LaurentPoly2 t() { return monomial(0, 1); }

  void add_term(std::int64_t i, std::int64_t j, const Coeff& c);
  const Terms& terms() const { return terms_; }
  Coeff coeff(std::int64_t i, std::int64_t j) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(LaurentPoly2 a, const LaurentPoly2& b) { return a *= b; }
  LaurentPoly2 operator-() const;
  LaurentPoly2 scaled(const Coeff& c) const;
  bool operator==(const LaurentPoly2& o) const = default;

  // Multiply by q^di t^dj.
  LaurentPoly2 shifted(std::int64_t di, std::int64_t dj) const;
  LaurentPoly2 swap_qt() const;
  LaurentPoly2 invert_q() const;     // q -> 1/q
  LaurentPoly2 invert_t() const;     // t -> 1/t
  LaurentPoly2 invert_both() const;  // q -> 1/q, t -> 1/t
  // t -> 1/q; the result has no t.
  LaurentPoly2 t_to_inverse_q() const;
  // q -> q^k.
  LaurentPoly2 q_power(std::int64_t k) const;
  // Evaluation at q = t = 1.
  Coeff at_one() const;
  // q = 1 (result in t) or t = 1 (result in q).
  LaurentPoly2 q_at_one() const;
  LaurentPoly2 t_at_one() const;

  bool is_univariate_q() const;
  bool has_nonnegative_coefficients() const;
  std::int64_t min_q_degree() const;
  std::int64_t max_q_degree() const;

  // Canonical text: terms ascending by (q, t) exponents, each written as
  // "<sign><|c|>" followed by "*q^i" and "*t^j" for nonzero exponents,
  // separated by spaces; the zero polynomial is "0".
  std::string to_string() const;
  // Rows "q,t,c" after a "q,t,c" header.
  std::string to_csv() const;

 private:
  Terms terms_;
};

// Exact quotient of two polynomials in q alone (t exponents must be 0).
// Throws DomainError if den is zero or does not divide num.
LaurentPoly2 divide_exact_q(const LaurentPoly2& num, const LaurentPoly2& den);

// [n]_q = 1 + q + ... + q^{n-1}.
LaurentPoly2 q_int(std::int64_t n);
// [n]_q! = [1]_q [2]_q ... [n]_q.
LaurentPoly2 q_factorial(std::int64_t n);
// [a+b]_q! / ([a]_q! [b]_q!), computed by exact division.
LaurentPoly2 q_binomial(std::int64_t a, std::int64_t b);

}  // namespace sweeplab

#include "sweeplab/stats.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "sweeplab/error.hpp"
#include "sweeplab/paths.hpp"
#include "sweeplab/sweep.hpp"

namespace sweeplab {

std::int64_t area(const Word& w) {
  w.require_ne("area");
  std::int64_t east = 0, total = 0;
  for (char c : w.str()) {
    if (c == 'E') {
      ++east;
    } else {
      total += east;
    }
  }
  return total;
}

std::int64_t min_level(const Word& w, const SweepParams& params) {
  w.require_ne("min_level");
  auto pts = levels(w, params).points;
  return *std::min_element(pts.begin(), pts.end());
}

std::int64_t area_star(const Word& w, const SweepParams& params) {
  return checked_add(area(w), min_level(w, params));
}

std::vector<std::int64_t> dyck_area_vector(const Word& w) {
  w.require_ne("dyck_area_vector");
  if (w.count('N') != w.count('E') || !is_dyck(w, SweepParams{1, -1})) {
    throw DomainError(w.str() + " is not a classical Dyck word");
  }
  std::vector<std::int64_t> g;
  std::int64_t x = 0;
  for (char c : w.str()) {
    if (c == 'N') {
      g.push_back(static_cast<std::int64_t>(g.size()) - x);
    } else {
      ++x;
    }
  }
  return g;
}

std::int64_t dyck_area(const Word& w) {
  auto g = dyck_area_vector(w);
  return std::accumulate(g.begin(), g.end(), std::int64_t{0});
}

std::int64_t dinv(const Word& w) {
  auto g = dyck_area_vector(w);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      auto d = g[i] - g[j];
      if (d == 0 || d == 1) ++count;
    }
  }
  return count;
}

StatBundle stat_bundle(const Word& w, const SweepParams& params) {
  StatBundle b;
  b.area = area(w);
  b.ml = min_level(w, params);
  b.area_star = checked_add(b.area, b.ml);
  if (w.count('N') == w.count('E') && is_dyck(w, SweepParams{1, -1})) {
    b.dyck_area = dyck_area(w);
    b.dinv = dinv(w);
  }
  return b;
}

namespace {

using Monomial = std::pair<std::int64_t, std::int64_t>;
// Returns false to skip a word.
using StatPair = std::function<bool(const Word&, Monomial&)>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    return std::hash<std::int64_t>()(m.first) * 1000003u ^ std::hash<std::int64_t>()(m.second);
  }
};

// Sums q^i t^j over a word space; shards are merged in rank order.
LaurentPoly2 accumulate(const WordSpace& space, const EnumLimits& limits, const StatPair& f) {
  auto total = space.size();
  if (total > limits.budget) {
    throw BudgetError("enumeration of " + std::to_string(total) + " words exceeds budget " +
                      std::to_string(limits.budget));
  }
  auto shards = std::min<std::uint64_t>(std::max(1u, limits.workers),
                                        std::max<std::uint64_t>(total, 1));
  std::vector<std::unordered_map<Monomial, std::uint64_t, MonomialHash>> parts(shards);
  std::vector<std::exception_ptr> errors(shards);
  auto run = [&](std::uint64_t s) {
    try {
      Monomial m;
      space.for_each(
          [&](const Word& w) {
            if (f(w, m)) ++parts[s][m];
          },
          total * s / shards, total * (s + 1) / shards);
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t s = 0; s < shards; ++s) pool.emplace_back(run, s);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  LaurentPoly2 out;
  for (const auto& part : parts) {
    for (const auto& [m, c] : part) out.add_term(m.first, m.second, LaurentPoly2::Coeff(c));
  }
  return out;
}

}  // namespace

LaurentPoly2 qt_catalan(const SweepParams& params, const RectShape& shape,
                        const EnumLimits& limits) {
  return accumulate(WordSpace::rect(shape), limits, [&](const Word& w, Monomial& m) {
    if (!is_dyck(w, params)) return false;
    m = {area(w), area(sweep_minus(w, params))};
    return true;
  });
}

LaurentPoly2 qt_catalan_plus_rev(const SweepParams& params, const RectShape& shape,
                                 const EnumLimits& limits) {
  return accumulate(WordSpace::rect(shape), limits, [&](const Word& w, Monomial& m) {
    if (!is_dyck(w, params)) return false;
    m = {area(w), area(sweep_plus(rev(w), params))};
    return true;
  });
}

LaurentPoly2 qt_square(const RectShape& shape, const EnumLimits& limits) {
  SweepParams params{shape.b, -shape.a};
  return accumulate(WordSpace::rect(shape), limits, [&](const Word& w, Monomial& m) {
    m = {area_star(w, params), area_star(sweep_minus(w, params), params)};
    return true;
  });
}

LaurentPoly2 classical_qt_catalan(std::int64_t n, const EnumLimits& limits) {
  if (n < 0) throw ParameterError("C_n needs n >= 0");
  return accumulate(WordSpace::rect({n, n}), limits, [](const Word& w, Monomial& m) {
    if (!is_dyck(w, SweepParams{1, -1})) return false;
    m = {dyck_area(w), dinv(w)};
    return true;
  });
}

// ---- conjectures ----

std::string_view status_name(PointStatus s) {
  switch (s) {
    case PointStatus::kPass:
      return "pass";
    case PointStatus::kFail:
      return "fail";
    case PointStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

const std::vector<std::string>& conjecture_names() {
  static const std::vector<std::string> names{
      "joint-symmetry-catalan", "joint-symmetry-square", "catalan-t-inv-q",
      "square-t-inv-q",         "rectangle-t-inv-q",     "general-bijectivity"};
  return names;
}

namespace {

CheckPoint compare(std::vector<std::pair<std::string, std::int64_t>> params,
                   const LaurentPoly2& expected, const LaurentPoly2& actual) {
  CheckPoint p;
  p.params = std::move(params);
  if (expected != actual) {
    p.status = PointStatus::kFail;
    p.expected = expected.to_string();
    p.actual = actual.to_string();
  }
  return p;
}

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

}  // namespace

CheckPoint check_catalan_symmetry(const SweepParams& params, const RectShape& shape,
                                  const EnumLimits& limits) {
  auto c = qt_catalan(params, shape, limits);
  return compare({{"r", params.r}, {"s", params.s}, {"a", shape.a}, {"b", shape.b}},
                 c.swap_qt(), c);
}

CheckPoint check_square_symmetry(const RectShape& shape, const EnumLimits& limits) {
  auto s = qt_square(shape, limits);
  return compare({{"a", shape.a}, {"b", shape.b}}, s.swap_qt(), s);
}

CheckPoint check_catalan_t_inv_q(const RectShape& shape, const EnumLimits& limits) {
  auto [a, b] = shape;
  if (a < 1 || b < 1 || std::gcd(a, b) != 1) {
    throw ParameterError("catalan-t-inv-q needs coprime a, b >= 1");
  }
  // [a+b]_q q^{(a-1)(b-1)/2} C_{b,-a,a,b}(q,1/q) = qbin(a+b; a)
  auto c = qt_catalan({b, -a}, shape, limits).t_to_inverse_q();
  auto lhs = q_int(a + b) * c.shifted((a - 1) * (b - 1) / 2, 0);
  return compare({{"a", a}, {"b", b}}, q_binomial(a, b), lhs);
}

CheckPoint check_rectangle_t_inv_q(const RectShape& shape, const EnumLimits& limits) {
  auto [a, b] = shape;
  if (a < 1 || b < 1) throw ParameterError("rectangle-t-inv-q needs a, b >= 1");
  // k = gcd(a,b), a = a'k, b = b'k:
  // [a'+b']_{q^k} q^{k(a'-1)(b'-1)/2 + a'b' C(k,2)} S_{a,b}(q,1/q) = (a'+b') qbin(a+b; a)
  auto k = std::gcd(a, b);
  auto a1 = a / k, b1 = b / k;
  auto s = qt_square(shape, limits).t_to_inverse_q();
  auto shift = k * (a1 - 1) * (b1 - 1) / 2 + a1 * b1 * choose2(k);
  auto lhs = q_int(a1 + b1).q_power(k) * s.shifted(shift, 0);
  return compare({{"a", a}, {"b", b}}, q_binomial(a, b).scaled(a1 + b1), lhs);
}

CheckPoint check_square_t_inv_q(std::int64_t n, std::int64_t m, const EnumLimits& limits) {
  if (n < 1 || m < 1) throw ParameterError("square-t-inv-q needs n, m >= 1");
  // [m+1]_{q^n} q^{m C(n,2)} S_{n,mn}(q,1/q) = (m+1) qbin(mn+n; n)
  auto s = qt_square({n, m * n}, limits).t_to_inverse_q();
  auto lhs = q_int(m + 1).q_power(n) * s.shifted(m * choose2(n), 0);
  return compare({{"n", n}, {"m", m}}, q_binomial(n, m * n).scaled(m + 1), lhs);
}

CheckPoint check_sweep_injective(const SweepParams& params, const RectShape& shape,
                                 const EnumLimits& limits) {
  auto space = WordSpace::rect(shape);
  if (space.size() > limits.budget) throw BudgetError("domain exceeds budget");
  CheckPoint p;
  p.params = {{"r", params.r}, {"s", params.s}, {"a", shape.a}, {"b", shape.b}};
  std::map<std::string, std::string> seen;
  space.for_each([&](const Word& w) {
    if (p.status == PointStatus::kFail) return;
    auto img = sweep_minus(w, params).str();
    auto [it, fresh] = seen.emplace(img, w.str());
    if (!fresh) {
      p.status = PointStatus::kFail;
      p.expected = it->second;
      p.actual = w.str();
      p.note = "both sweep to " + img;
    }
  });
  return p;
}

namespace {

std::int64_t param(const ParamList& params, std::string_view key) {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  throw ParseError("missing parameter '" + std::string(key) + "'");
}

void require_keys(const ParamList& params, std::initializer_list<std::string_view> keys) {
  if (params.size() != keys.size()) throw ParseError("wrong parameter set for this check");
  for (auto key : keys) param(params, key);
}

}  // namespace

std::vector<ParamList> conjecture_points(std::string_view name, const CheckRange& range) {
  std::vector<ParamList> out;
  auto rect = [&](bool coprime) {
    for (std::int64_t total = 2; total <= range.sizemax; ++total) {
      for (std::int64_t a = 1; a < total; ++a) {
        if (coprime && std::gcd(a, total - a) != 1) continue;
        out.push_back({{"a", a}, {"b", total - a}});
      }
    }
  };
  auto rs = [&] {
    for (auto r = -range.rmax; r <= range.rmax; ++r) {
      for (auto s = -range.smax; s <= range.smax; ++s) {
        for (std::int64_t total = 1; total <= range.sizemax; ++total) {
          for (std::int64_t a = 0; a <= total; ++a) {
            out.push_back({{"r", r}, {"s", s}, {"a", a}, {"b", total - a}});
          }
        }
      }
    }
  };
  if (name == "joint-symmetry-catalan" || name == "general-bijectivity") {
    rs();
  } else if (name == "joint-symmetry-square" || name == "rectangle-t-inv-q") {
    rect(false);
  } else if (name == "catalan-t-inv-q") {
    rect(true);
  } else if (name == "square-t-inv-q") {
    for (std::int64_t n = 1; n + n <= range.sizemax; ++n) {
      for (std::int64_t m = 1; n * m + n <= range.sizemax; ++m) out.push_back({{"n", n}, {"m", m}});
    }
  } else {
    throw ParseError("unknown conjecture '" + std::string(name) + "'");
  }
  return out;
}

CheckPoint check_conjecture_point(std::string_view name, const ParamList& params,
                                  const EnumLimits& limits) {
  try {
    if (name == "joint-symmetry-catalan" || name == "general-bijectivity") {
      require_keys(params, {"r", "s", "a", "b"});
      SweepParams rs{param(params, "r"), param(params, "s")};
      RectShape shape{param(params, "a"), param(params, "b")};
      return name == "general-bijectivity" ? check_sweep_injective(rs, shape, limits)
                                           : check_catalan_symmetry(rs, shape, limits);
    }
    if (name == "square-t-inv-q") {
      require_keys(params, {"n", "m"});
      return check_square_t_inv_q(param(params, "n"), param(params, "m"), limits);
    }
    require_keys(params, {"a", "b"});
    RectShape shape{param(params, "a"), param(params, "b")};
    if (name == "joint-symmetry-square") return check_square_symmetry(shape, limits);
    if (name == "catalan-t-inv-q") return check_catalan_t_inv_q(shape, limits);
    if (name == "rectangle-t-inv-q") return check_rectangle_t_inv_q(shape, limits);
  } catch (const BudgetError& e) {
    CheckPoint p;
    p.params = params;
    p.status = PointStatus::kSkipped;
    p.note = e.what();
    return p;
  }
  throw ParseError("unknown conjecture '" + std::string(name) + "'");
}

std::vector<CheckPoint> check_conjecture(std::string_view name, const CheckRange& range) {
  std::vector<CheckPoint> out;
  for (const auto& params : conjecture_points(name, range)) {
    out.push_back(check_conjecture_point(name, params, range.limits));
  }
  return out;
}

}  // namespace sweeplab

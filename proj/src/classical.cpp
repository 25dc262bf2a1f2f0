#include "sweeplab/classical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sweeplab/error.hpp"
#include "sweeplab/paths.hpp"
#include "sweeplab/sweep.hpp"

namespace sweeplab {

namespace {

void check_shape(const TrapezoidShape& shape) {
  if (shape.n <= 0 || shape.k < 0 || shape.m <= 0) {
    throw ParameterError("trapezoid needs n > 0, k >= 0, m > 0");
  }
}

// x-coordinate of the north step in each row.
std::vector<std::int64_t> north_columns(const Word& p) {
  std::vector<std::int64_t> xs;
  std::int64_t x = 0;
  for (char c : p.str()) {
    if (c == 'N') {
      xs.push_back(x);
    } else {
      ++x;
    }
  }
  return xs;
}

std::string reversed(const std::string& s) { return std::string(s.rbegin(), s.rend()); }

}  // namespace

bool in_trapezoid(const Word& p, const TrapezoidShape& shape) {
  check_shape(shape);
  p.require_ne("in_trapezoid");
  if (static_cast<std::int64_t>(p.count('N')) != shape.n) return false;
  if (static_cast<std::int64_t>(p.count('E')) != shape.k + shape.m * shape.n) return false;
  auto xs = north_columns(p);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] > shape.k + shape.m * static_cast<std::int64_t>(i)) return false;
  }
  return true;
}

std::vector<Word> enumerate_trapezoid(const TrapezoidShape& shape) {
  check_shape(shape);
  std::vector<Word> out;
  WordSpace::rect({shape.n, shape.k + shape.m * shape.n}).for_each([&](const Word& w) {
    if (in_trapezoid(w, shape)) out.push_back(w);
  });
  return out;
}

std::vector<std::int64_t> area_vector_trapezoid(const Word& p, const TrapezoidShape& shape) {
  if (!in_trapezoid(p, shape)) throw DomainError("path " + p.str() + " is not in the trapezoid");
  auto xs = north_columns(p);
  std::vector<std::int64_t> g(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    g[i] = shape.k + shape.m * static_cast<std::int64_t>(i) - xs[i];
  }
  return g;
}

Word path_from_trapezoid_area(const std::vector<std::int64_t>& g, const TrapezoidShape& shape) {
  check_shape(shape);
  if (static_cast<std::int64_t>(g.size()) != shape.n) throw DomainError("area vector has wrong length");
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool ok = g[i] >= 0 && (i == 0 ? g[0] <= shape.k : g[i] <= g[i - 1] + shape.m);
    if (!ok) throw DomainError("not a trapezoid area vector");
  }
  std::string letters;
  std::int64_t x = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto target = shape.k + shape.m * static_cast<std::int64_t>(i) - g[i];
    letters.append(static_cast<std::size_t>(target - x), 'E');
    x = target;
    letters.push_back('N');
  }
  letters.append(static_cast<std::size_t>(shape.k + shape.m * shape.n - x), 'E');
  return Word(std::move(letters));
}

std::vector<std::int64_t> area_vector_square(const Word& p) {
  p.require_ne("area_vector_square");
  if (p.count('N') != p.count('E')) throw DomainError("square paths need as many N as E steps");
  auto xs = north_columns(p);
  std::vector<std::int64_t> g(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) g[i] = static_cast<std::int64_t>(i) - xs[i];
  return g;
}

Word path_from_square_area(const std::vector<std::int64_t>& g) {
  auto n = static_cast<std::int64_t>(g.size());
  for (std::int64_t i = 0; i < n; ++i) {
    auto gi = g[static_cast<std::size_t>(i)];
    bool ok = gi + n - i >= 0 && (i == 0 ? gi <= 0 : gi <= g[static_cast<std::size_t>(i - 1)] + 1);
    if (!ok) throw DomainError("not a square area vector");
  }
  std::string letters;
  std::int64_t x = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    auto target = i - g[static_cast<std::size_t>(i)];
    letters.append(static_cast<std::size_t>(target - x), 'E');
    x = target;
    letters.push_back('N');
  }
  letters.append(static_cast<std::size_t>(n - x), 'E');
  return Word(std::move(letters));
}

TrapezoidBlocks trapezoid_blocks(const Word& p, const TrapezoidShape& shape) {
  TrapezoidBlocks blocks;
  blocks.g = area_vector_trapezoid(p, shape);
  auto top = *std::max_element(blocks.g.begin(), blocks.g.end()) + shape.m;
  auto last = std::max(top, shape.k);
  for (std::int64_t i = 0; i <= last; ++i) {
    std::string sigma;
    for (auto gj : blocks.g) {
      if (gj == i) {
        sigma.push_back('N');
      } else if (gj < i && gj >= i - shape.m) {
        sigma.push_back('E');
      }
    }
    std::string tau;
    if (i <= shape.k) {
      tau = reversed(sigma);
    } else if (!sigma.empty()) {
      if (sigma.front() != 'E') throw std::logic_error("trapezoid block must start with E");
      tau = "E" + reversed(sigma.substr(1));
    }
    blocks.sigma[i] = std::move(sigma);
    blocks.tau[i] = std::move(tau);
  }
  return blocks;
}

namespace {

Word join_trapezoid(const std::map<std::int64_t, std::string>& parts, std::int64_t k) {
  std::string out;
  for (const auto& [i, part] : parts) {
    if (i >= 1 && i <= k) out.push_back('E');
    out += part;
  }
  return Word(std::move(out));
}

}  // namespace

Word phi_trapezoid(const Word& p, const TrapezoidShape& shape) {
  return join_trapezoid(trapezoid_blocks(p, shape).sigma, shape.k);
}

Word phi_prime_trapezoid(const Word& p, const TrapezoidShape& shape) {
  return join_trapezoid(trapezoid_blocks(p, shape).tau, shape.k);
}

Word phi_hl(const Word& p) {
  p.require_ne("phi_hl");
  auto n = static_cast<std::int64_t>(p.count('N'));
  if (n == 0 || p.count('E') != p.count('N') || !is_dyck(p, SweepParams{1, -1})) {
    throw DomainError("phi_hl needs a nonempty classical Dyck path, got '" + p.str() + "'");
  }
  return flip(rev(phi_trapezoid(p, {n, 0, 1})));
}

SquareBlocks square_blocks(const Word& p) {
  SquareBlocks blocks;
  blocks.g = area_vector_square(p);
  auto n = static_cast<std::int64_t>(blocks.g.size());
  for (std::int64_t i = -n; i <= n; ++i) {
    std::string sigma;
    for (auto gj : blocks.g) {
      if (gj == i) {
        sigma.push_back('E');
      } else if (gj == i - 1) {
        sigma.push_back('N');
      }
    }
    std::string tau;
    if (i >= 0) {
      tau = reversed(sigma);
    } else if (!sigma.empty()) {
      if (sigma.back() != 'E') throw std::logic_error("negative square block must end with E");
      tau = reversed(sigma.substr(0, sigma.size() - 1)) + "E";
    }
    blocks.tau[i] = std::move(tau);
  }
  return blocks;
}

Word phi_lw(const Word& p) {
  auto blocks = square_blocks(p);
  auto n = static_cast<std::int64_t>(blocks.g.size());
  std::string out;
  for (std::int64_t i = -1; i >= -n; --i) out += blocks.tau[i];
  for (std::int64_t i = n; i >= 0; --i) out += blocks.tau[i];
  return Word(std::move(out));
}

WeightFn schroder_weights() { return WeightFn(Alphabet::schroder(), {0, -1, 1}); }

namespace {

Word as_schroder(const Word& w) {
  for (char c : w.str()) {
    if (!Alphabet::schroder().contains(c)) {
      throw AlphabetError(std::string("letter '") + c + "' is not a Schroder step");
    }
  }
  return Word(w.str(), Alphabet::schroder());
}

}  // namespace

Word schroder_sweep(const Word& w) { return sweep_general(as_schroder(w), schroder_weights()); }

bool is_schroder_dyck(const Word& w) { return is_dyck(as_schroder(w), schroder_weights()); }

// ---- coprime maps ----

namespace {

struct CoprimeFrame {
  std::int64_t a;
  std::int64_t b;
  Word word;
  std::vector<std::int64_t> north_x;   // column of the north step in row y
  std::vector<std::int64_t> east_y;    // height of the east step in column x
};

CoprimeFrame frame(const Partition& pi, std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw ParameterError("a and b must be positive");
  if (std::gcd(a, b) != 1) {
    throw ParameterError("gcd(a,b) must be 1 so that square levels are distinct");
  }
  CoprimeFrame f{a, b, mkwd(pi, {a, b}), {}, {}};
  if (!is_dyck(f.word, SweepParams{b, -a})) {
    throw DomainError("partition (" + pi.to_string() + ") is not a (b,-a)-Dyck partition");
  }
  std::int64_t x = 0, y = 0;
  for (char c : f.word.str()) {
    if (c == 'N') {
      f.north_x.push_back(x);
      ++y;
    } else {
      f.east_y.push_back(y);
      ++x;
    }
  }
  return f;
}

// Level of the square [x, x+1] x [y, y+1]: that of its south-east corner.
std::int64_t square_level(const CoprimeFrame& f, std::int64_t x, std::int64_t y) {
  return checked_add(checked_mul(f.b, y), -checked_mul(f.a, x + 1));
}

std::vector<std::int64_t> delta_c(const CoprimeFrame& f) {
  std::vector<std::int64_t> out;
  for (std::int64_t y = 0; y < f.a; ++y) {
    for (auto x = f.north_x[static_cast<std::size_t>(y)];; ++x) {
      auto level = square_level(f, x, y);
      if (level <= 0) break;
      out.push_back(level);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string frontier_word(const std::vector<std::int64_t>& dc, std::int64_t len) {
  std::string z(static_cast<std::size_t>(std::max<std::int64_t>(len, 1)), 'E');
  for (auto level : dc) {
    if (level < len) z[static_cast<std::size_t>(level)] = 'N';
  }
  return z;
}

std::set<std::int64_t> ws_levels(const CoprimeFrame& f) {
  auto seq = levels(f.word, SweepParams{f.b, -f.a}, LevelConvention::kWestSouth);
  auto steps = seq.step_levels();
  return {steps.begin(), steps.end()};
}

}  // namespace

std::vector<std::int64_t> delta_complement(const Partition& pi, std::int64_t a, std::int64_t b) {
  return delta_c(frame(pi, a, b));
}

Partition zeta_f(const Partition& pi, std::int64_t a, std::int64_t b) {
  auto hooks = delta_complement(pi, a, b);
  // Row i from the bottom (1-based) with first-column hook h has h - i + 1 cells.
  std::vector<std::int64_t> rows;
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    rows.push_back(hooks[i] - static_cast<std::int64_t>(i));
  }
  std::reverse(rows.begin(), rows.end());
  return Partition(std::move(rows));
}

std::string zeta_frontier_word(const Partition& pi, std::int64_t a, std::int64_t b,
                               std::int64_t len) {
  return frontier_word(delta_complement(pi, a, b), len);
}

Partition zeta_f_frontier(const Partition& pi, std::int64_t a, std::int64_t b) {
  auto dc = delta_complement(pi, a, b);
  auto len = dc.empty() ? 1 : dc.back() + 1;
  return mkptn(Word(frontier_word(dc, len)));
}

std::vector<std::int64_t> zeta_retained_rows(const Partition& pi, std::int64_t a,
                                             std::int64_t b) {
  auto f = frame(pi, a, b);
  std::vector<std::int64_t> rows;
  for (std::int64_t y = 0; y < a; ++y) {
    auto level = square_level(f, f.north_x[static_cast<std::size_t>(y)], y);
    if (level > 0) rows.push_back(level);
  }
  std::sort(rows.rbegin(), rows.rend());
  return rows;
}

Partition zeta(const Partition& pi, std::int64_t a, std::int64_t b) {
  auto dc = delta_complement(pi, a, b);
  auto len = dc.empty() ? 1 : dc.back() + 1;
  auto z = frontier_word(dc, len);
  std::vector<std::int64_t> rows;
  for (auto m : zeta_retained_rows(pi, a, b)) {
    // Cells [i, m] of row m have hook length m - i.
    std::int64_t count = 0;
    for (std::int64_t i = std::max<std::int64_t>(0, m - b); i < m; ++i) {
      if (z[static_cast<std::size_t>(i)] == 'E') ++count;
    }
    rows.push_back(count);
  }
  return Partition(std::move(rows));
}

Partition zeta_frontier(const Partition& pi, std::int64_t a, std::int64_t b) {
  auto f = frame(pi, a, b);
  auto ws = ws_levels(f);
  auto top = ws.empty() ? 0 : *ws.rbegin();
  auto z = frontier_word(delta_c(f), std::max<std::int64_t>(top - a + 1, 1));
  std::string kept;
  for (std::int64_t i = 0; i + a <= top; ++i) {
    if (ws.count(i + a)) kept.push_back(z[static_cast<std::size_t>(i)]);
  }
  return mkptn(Word(std::move(kept)));
}

DiscardSets zeta_discard_sets(const Partition& pi, std::int64_t a, std::int64_t b,
                              std::int64_t m) {
  auto f = frame(pi, a, b);
  auto dc = delta_c(f);
  auto z = frontier_word(dc, std::max<std::int64_t>(m + 1, 1));
  auto frontier = [&](std::int64_t level) {
    // The unique square with this level has x + 1 in 1..b.
    for (std::int64_t xp = 1; xp <= b; ++xp) {
      auto num = level + a * xp;
      if (num % b != 0) continue;
      auto y = num / b;
      auto x = xp - 1;
      bool east_of_north = y < a && f.north_x[static_cast<std::size_t>(y)] == x;
      bool north_of_east = f.east_y[static_cast<std::size_t>(x)] == y;
      return east_of_north || north_of_east;
    }
    return false;
  };
  DiscardSets out;
  for (std::int64_t j = 1; j < m; ++j) {
    if (z[static_cast<std::size_t>(j)] == 'E' && !frontier(j)) out.b_set.push_back(j);
  }
  for (std::int64_t i = 0; i < m; ++i) {
    if (z[static_cast<std::size_t>(i)] == 'E' && m - i > b) out.c_set.emplace_back(i, m);
  }
  return out;
}

GeneratorData generator_data(const Partition& pi, std::int64_t a, std::int64_t b) {
  auto f = frame(pi, a, b);
  GeneratorData data;
  for (std::int64_t x = 0; x < b; ++x) {
    data.generators.push_back(square_level(f, x, f.east_y[static_cast<std::size_t>(x)]));
  }
  std::sort(data.generators.begin(), data.generators.end());
  data.delta_complement = delta_c(f);
  return data;
}

std::int64_t gm_count(std::int64_t beta, std::int64_t a,
                      const std::vector<std::int64_t>& delta_complement) {
  auto lo = std::lower_bound(delta_complement.begin(), delta_complement.end(), beta);
  auto hi = std::lower_bound(delta_complement.begin(), delta_complement.end(), beta + a);
  return static_cast<std::int64_t>(hi - lo);
}

std::vector<std::int64_t> gm_column_lengths(const Partition& pi, std::int64_t a,
                                            std::int64_t b) {
  auto data = generator_data(pi, a, b);
  std::vector<std::int64_t> cols;
  for (auto beta : data.generators) cols.push_back(gm_count(beta, a, data.delta_complement));
  return cols;
}

Partition gorsky_mazin(const Partition& pi, std::int64_t a, std::int64_t b) {
  return Partition(gm_column_lengths(pi, a, b)).transpose();
}

}  // namespace sweeplab

#include "sweeplab/inversion.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <thread>

#include "sweeplab/error.hpp"

namespace sweeplab {

namespace {

std::int64_t count_of(const Word& w, char c) { return static_cast<std::int64_t>(w.count(c)); }

// x of the north step in row y.
std::vector<std::int64_t> north_columns(const Word& q) {
  std::vector<std::int64_t> out;
  std::int64_t x = 0;
  for (char c : q.str()) {
    if (c == 'N') {
      out.push_back(x);
    } else {
      ++x;
    }
  }
  return out;
}

// Height of the east step in column x.
std::vector<std::int64_t> east_heights(const Word& q) {
  std::vector<std::int64_t> out;
  std::int64_t y = 0;
  for (char c : q.str()) {
    if (c == 'E') {
      out.push_back(y);
    } else {
      ++y;
    }
  }
  return out;
}

// Assigns each step of q its label from per-column and per-row tables.
StepLabeling label_steps(const Word& q, const std::vector<std::int64_t>& column_label,
                         const std::vector<std::int64_t>& row_label) {
  StepLabeling out;
  out.reserve(q.size());
  std::size_t x = 0, y = 0;
  for (char c : q.str()) {
    if (c == 'E') {
      out.push_back(column_label[x++]);
    } else {
      out.push_back(row_label[y++]);
    }
  }
  return out;
}

WeightFn ne_weights(std::int64_t north, std::int64_t east) {
  return WeightFn(Alphabet::ne(), {east, north});
}

Word checked_preimage(const Word& p, const Word& q, const Word& image, const char* what) {
  if (image != q) {
    throw NotInImageError(std::string(what) + ": " + q.str() + " is not in the image");
  }
  return p;
}

}  // namespace

Word replay_inverse(const Word& q, const StepLabeling& labels, const ReplaySpec& spec) {
  if (labels.size() != q.size()) {
    throw NotInImageError("label count does not match word length");
  }
  std::map<std::int64_t, std::deque<std::size_t>> slots;
  for (std::size_t j = 0; j < q.size(); ++j) slots[labels[j]].push_back(j);

  auto take = [&](std::int64_t level, bool first) {
    auto it = slots.find(level);
    if (it == slots.end() || it->second.empty()) {
      throw NotInImageError("no unused step at level " + std::to_string(level));
    }
    std::size_t idx = 0;
    if (first) {
      idx = it->second.front();
      it->second.pop_front();
    } else {
      idx = it->second.back();
      it->second.pop_back();
    }
    return idx;
  };

  const bool leftward = spec.direction == ScanDirection::kLeftward;
  std::string p(q.size(), '?');
  if (spec.convention == LevelConvention::kEastNorth) {
    // Step t carries the level of its end point: walk back from the final level.
    std::int64_t level = spec.origin;
    for (char c : q.str()) level = checked_add(level, spec.weights(c));
    for (std::size_t t = q.size(); t-- > 0;) {
      auto idx = take(level, leftward);
      p[t] = q[idx];
      level = checked_add(level, -spec.weights(q[idx]));
    }
    if (level != spec.origin) throw NotInImageError("replay does not return to the origin");
  } else {
    std::int64_t level = spec.origin;
    for (std::size_t t = 0; t < q.size(); ++t) {
      auto idx = take(level, !leftward);
      p[t] = q[idx];
      level = checked_add(level, spec.weights(q[idx]));
    }
  }
  return Word(std::move(p), q.alphabet());
}

Word replay_inverse(const Word& q, const StepLabeling& labels, const SweepParams& params,
                    NamedVariant variant) {
  q.require_ne("replay_inverse");
  if (variant != NamedVariant::kMinus && variant != NamedVariant::kPlus) {
    throw ParameterError("replay is implemented for sw- and sw+ only");
  }
  bool minus = variant == NamedVariant::kMinus;
  ReplaySpec spec{WeightFn::from_params(params), LevelConvention::kEastNorth,
                  minus ? ScanDirection::kLeftward : ScanDirection::kRightward, 0};
  auto p = replay_inverse(q, labels, spec);
  return checked_preimage(p, q, minus ? sweep_minus(p, params) : sweep_plus(p, params),
                          "replay");
}

// ---- Haglund ----

namespace {

// c_0 = n > c_1 > ... > c_r = 0.
std::vector<std::int64_t> haglund_corners(const Word& q) {
  q.require_ne("haglund_bounce");
  auto n = count_of(q, 'N');
  if (count_of(q, 'E') != n) throw DomainError("Haglund bounce needs a square path");
  if (!is_dyck(q, SweepParams{1, -1})) {
    throw NotInImageError(q.str() + " is not a Dyck path");
  }
  auto cols = north_columns(q);
  std::vector<std::int64_t> c{n};
  while (c.back() > 0) {
    auto next = cols[static_cast<std::size_t>(c.back() - 1)];
    if (next >= c.back()) throw NotInImageError("bounce path jams");
    c.push_back(next);
  }
  return c;
}

}  // namespace

BouncePath haglund_bounce(const Word& q) {
  auto c = haglund_corners(q);
  BouncePath out;
  out.corners.push_back({c[0], c[0]});
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    auto h = c[i] - c[i + 1];
    out.h.push_back(h);
    out.v.push_back(h);
    out.corners.push_back({c[i + 1], c[i]});
    out.corners.push_back({c[i + 1], c[i + 1]});
  }
  return out;
}

StepLabeling haglund_labels(const Word& q) {
  auto c = haglund_corners(q);
  auto n = static_cast<std::size_t>(c[0]);
  std::vector<std::int64_t> col(n), row(n);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    auto label = static_cast<std::int64_t>(i);
    for (auto x = c[i + 1]; x < c[i]; ++x) col[static_cast<std::size_t>(x)] = label;
    // rows [c_{i+1}, c_i) sit left of V_i
    for (auto y = c[i + 1]; y < c[i]; ++y) row[static_cast<std::size_t>(y)] = label + 1;
  }
  return label_steps(q, col, row);
}

Word invert_haglund(const Word& q) {
  return replay_inverse(q, haglund_labels(q), SweepParams{1, -1}, NamedVariant::kMinus);
}

// ---- trapezoid ----

namespace {

struct TrapezoidBounce {
  BouncePath path;
  std::vector<std::int64_t> xs;  // X_i: column of V_i
  std::vector<std::int64_t> ys;  // Y_i: bottom of V_i
};

TrapezoidBounce trapezoid_bounce_full(const Word& q, const TrapezoidShape& shape) {
  q.require_ne("trapezoid_bounce");
  if (shape.n < 1 || shape.k < 0 || shape.m < 1) {
    throw ParameterError("trapezoid needs n > 0, k >= 0, m > 0");
  }
  auto width = checked_add(shape.k, checked_mul(shape.m, shape.n));
  if (count_of(q, 'N') != shape.n || count_of(q, 'E') != width) {
    throw DomainError(q.str() + " does not end at (k+mn, n)");
  }
  auto heights = east_heights(q);
  auto top = [&](std::int64_t x) {
    return x < width ? heights[static_cast<std::size_t>(x)] : shape.n;
  };

  TrapezoidBounce out;
  std::int64_t x = 0, y = 0;
  out.path.corners.push_back({0, 0});
  auto guard = 2 * (shape.n + width) + 4;
  for (std::int64_t i = 0;; ++i) {
    if (i > guard) throw NotInImageError("trapezoid bounce does not terminate");
    auto t = top(x);
    if (t < y) throw NotInImageError("bounce path leaves the region under Q");
    out.xs.push_back(x);
    out.ys.push_back(y);
    out.path.v.push_back(t - y);
    y = t;
    out.path.corners.push_back({x, y});
    if (x == width) break;
    std::int64_t h = i < shape.k ? 1 : 0;
    for (auto j = std::max<std::int64_t>(0, i - shape.m + 1); j <= i; ++j) {
      h += out.path.v[static_cast<std::size_t>(j)];
    }
    if (h == 0) throw NotInImageError("trapezoid bounce jams");
    if (x + h > width) throw NotInImageError("trapezoid bounce overshoots");
    out.path.h.push_back(h);
    x += h;
    out.path.corners.push_back({x, y});
  }
  return out;
}

}  // namespace

BouncePath trapezoid_bounce(const Word& q, const TrapezoidShape& shape) {
  return trapezoid_bounce_full(q, shape).path;
}

StepLabeling trapezoid_labels(const Word& q, const TrapezoidShape& shape) {
  auto b = trapezoid_bounce_full(q, shape);
  std::vector<std::int64_t> col(q.count('E')), row(q.count('N'));
  for (std::size_t i = 0; i < b.xs.size(); ++i) {
    auto label = static_cast<std::int64_t>(i);
    for (auto y = b.ys[i]; y < b.ys[i] + b.path.v[i]; ++y) {
      row[static_cast<std::size_t>(y)] = label;
    }
    if (i > 0) {
      for (auto x = b.xs[i - 1]; x < b.xs[i]; ++x) col[static_cast<std::size_t>(x)] = label;
    }
  }
  return label_steps(q, col, row);
}

ReplaySpec trapezoid_replay_spec(const TrapezoidShape& shape) {
  return {ne_weights(shape.m, -1), LevelConvention::kWestSouth, ScanDirection::kLeftward,
          shape.k};
}

SweepSpec trapezoid_sweep_spec() {
  return {LevelConvention::kWestSouth, LevelOrder::kIncreasing, ScanDirection::kLeftward, 0};
}

Word trapezoid_sweep(const Word& p, const TrapezoidShape& shape) {
  if (!in_trapezoid(p, shape)) throw DomainError(p.str() + " is not in the trapezoid");
  return sweep_with(p, ne_weights(shape.m, -1), trapezoid_sweep_spec(), shape.k);
}

Word invert_phi_prime(const Word& q, const TrapezoidShape& shape) {
  auto p = replay_inverse(q, trapezoid_labels(q, shape), trapezoid_replay_spec(shape));
  if (!in_trapezoid(p, shape)) throw NotInImageError(q.str() + " is not in the image");
  return checked_preimage(p, q, trapezoid_sweep(p, shape), "phi' inverse");
}

Word invert_phi_dyck(const Word& q) {
  auto n = count_of(q, 'N');
  return rev(flip(invert_phi_prime(q, {n, 0, 1})));
}

// ---- square paths ----

SquareBounce square_bounce(const Word& q) {
  q.require_ne("square_bounce");
  auto n = count_of(q, 'N');
  if (count_of(q, 'E') != n) throw DomainError("square bounce needs W(N^n E^n)");
  auto pts = mkpath_points(q);
  SquareBounce out;
  std::int64_t k = 0;
  for (const auto& p : pts) k = std::max(k, p.x - p.y);
  out.break_diagonal = k;
  for (const auto& p : pts) {
    if (p.x - p.y == k) {
      out.break_point = p;
      break;
    }
  }
  const auto brk = out.break_point;
  auto cols = north_columns(q);
  auto heights = east_heights(q);
  auto guard = 2 * n + 4;

  // Positive side from (n, n): V_{-1} down to (n, n - k), then H_i / V_i.
  auto& pos = out.positive;
  pos.corners.push_back({n, n});
  pos.v.push_back(k);
  std::int64_t c = n;
  pos.corners.push_back({c, c - k});
  for (std::int64_t it = 0; !(Point{c, c - k} == brk); ++it) {
    if (it > guard || c - k <= brk.y) throw NotInImageError("positive bounce misses the break point");
    auto next = cols[static_cast<std::size_t>(c - k - 1)];
    if (next >= c) throw NotInImageError("positive bounce jams");
    pos.h.push_back(c - next);
    pos.corners.push_back({next, c - k});
    pos.v.push_back(c - next);
    pos.corners.push_back({next, next - k});
    c = next;
  }

  // Negative side from (0, 0): H_{-1} east to (k, 0), then V / H alternately.
  auto& neg = out.negative;
  neg.corners.push_back({0, 0});
  neg.h.push_back(k);
  std::int64_t y = 0;
  neg.corners.push_back({k, 0});
  for (std::int64_t it = 0; !(Point{k + y, y} == brk); ++it) {
    if (it > guard || k + y >= brk.x) throw NotInImageError("negative bounce misses the break point");
    auto x = k + y;
    auto next = x == 0 ? 0 : heights[static_cast<std::size_t>(x - 1)];
    if (next <= y) throw NotInImageError("negative bounce jams");
    neg.v.push_back(next - y);
    neg.corners.push_back({x, next});
    neg.h.push_back(next - y);
    neg.corners.push_back({k + next, next});
    y = next;
  }
  return out;
}

StepLabeling square_labels(const Word& q) {
  auto sb = square_bounce(q);
  auto n = count_of(q, 'N');
  auto k = sb.break_diagonal;
  std::vector<std::int64_t> col(static_cast<std::size_t>(n)), row(static_cast<std::size_t>(n));
  auto fill = [](std::vector<std::int64_t>& v, std::int64_t lo, std::int64_t hi, std::int64_t label) {
    for (auto i = lo; i < hi; ++i) v[static_cast<std::size_t>(i)] = label;
  };

  // Positive: rows left of V_{i-1} and columns above H_i carry label i.
  const auto& pos = sb.positive;
  std::int64_t top = n, c = n;
  for (std::size_t i = 0; i < pos.v.size(); ++i) {
    auto label = static_cast<std::int64_t>(i);
    fill(row, c - k, top, label);
    if (i < pos.h.size()) {
      fill(col, c - pos.h[i], c, label);
      top = c - k;
      c -= pos.h[i];
    }
  }

  // Negative: columns above H_{-j} and rows left of V_{-j-1} carry label -j.
  const auto& neg = sb.negative;
  std::int64_t left = 0, y = 0;
  for (std::size_t j = 0; j < neg.h.size(); ++j) {
    auto label = -static_cast<std::int64_t>(j) - 1;
    fill(col, left, left + neg.h[j], label);
    left += neg.h[j];
    if (j < neg.v.size()) {
      fill(row, y, y + neg.v[j], label);
      y += neg.v[j];
    }
  }
  return label_steps(q, col, row);
}

Word invert_phi_lw(const Word& q) {
  return replay_inverse(q, square_labels(q), SweepParams{1, -1}, NamedVariant::kMinus);
}

// ---- Gorsky-Mazin ----

Word gm_sweep(const Word& p, std::int64_t n, std::int64_t b) {
  p.require_ne("gm_sweep");
  if (count_of(p, 'N') != n || count_of(p, 'E') != b) {
    throw DomainError(p.str() + " is not in W(N^n E^b)");
  }
  SweepParams params{b, -n};
  if (!is_dyck(p, params)) throw DomainError(p.str() + " is not (b,-n)-Dyck");
  return sweep_plus(rev(p), params);
}

namespace {

std::int64_t gm_b(std::int64_t n, std::int64_t m, GmSign sign) {
  if (n < 1 || m < 1) throw ParameterError("GM inversion needs n >= 1 and m >= 1");
  auto b = checked_add(checked_mul(n, m), sign == GmSign::kPlus ? 1 : -1);
  if (b < 1) throw ParameterError("GM inversion needs b = nm +- 1 >= 1");
  return b;
}

// Q lists the steps of P by increasing (b,-n) level; the coarse label
// my - x of a step determines its block. For b = nm + 1 every block ends
// with its e_i-th east step; for b = nm - 1 block 0 is the first north step
// and every later block is e_i east steps followed by a run of north steps.
struct GmBlocks {
  BouncePath path;
  StepLabeling labels;
};

GmBlocks gm_blocks(const Word& q, std::int64_t n, std::int64_t m, GmSign sign) {
  q.require_ne("gm_bounce");
  auto b = gm_b(n, m, sign);
  if (count_of(q, 'N') != n || count_of(q, 'E') != b) {
    throw DomainError(q.str() + " is not in W(N^n E^b)");
  }
  const auto& s = q.str();
  GmBlocks out;
  out.labels.assign(s.size(), 0);
  std::size_t pos = 0;
  std::int64_t x = 0, y = 0;
  out.path.corners.push_back({0, 0});
  auto guard = static_cast<std::int64_t>(2 * s.size() + 4);
  for (std::int64_t i = 0; pos < s.size(); ++i) {
    if (i > guard) throw NotInImageError("GM bounce does not terminate");
    std::int64_t e = 0;
    for (std::int64_t j = std::max<std::int64_t>(0, i - m); j < i; ++j) {
      e += out.path.v[static_cast<std::size_t>(j)];
    }
    if (sign == GmSign::kPlus && i == 0) e += 1;
    if (sign == GmSign::kMinus && i == 1) e -= 1;
    if (e < 0) throw NotInImageError("GM bounce has a negative block");

    std::int64_t east = 0, north = 0;
    auto take = [&] {
      (s[pos] == 'E' ? east : north) += 1;
      (s[pos] == 'E' ? x : y) += 1;
      out.labels[pos++] = i;
    };
    if (sign == GmSign::kMinus && i == 0) {
      if (s[0] != 'N') throw NotInImageError("GM image must start with N");
      take();
    } else if (sign == GmSign::kPlus) {
      while (pos < s.size() && east < e) take();
      if (east < e) throw NotInImageError("GM bounce runs past the end");
    } else {
      while (pos < s.size() && (s[pos] == 'N' || east < e)) take();
      if (east < e) throw NotInImageError("GM bounce runs past the end");
    }
    out.path.h.push_back(east);
    out.path.v.push_back(north);
    out.path.corners.push_back({x, y});
  }
  return out;
}

}  // namespace

BouncePath gm_bounce(const Word& q, std::int64_t n, std::int64_t m, GmSign sign) {
  return gm_blocks(q, n, m, sign).path;
}

StepLabeling gm_labels(const Word& q, std::int64_t n, std::int64_t m, GmSign sign) {
  return gm_blocks(q, n, m, sign).labels;
}

Word invert_gm(const Word& q, std::int64_t n, std::int64_t m, GmSign sign) {
  auto b = gm_b(n, m, sign);
  // Coarse levels m*y - x of P's start points, walked from (0,0). Within a
  // block the fine level orders steps by y, which for b = nm + 1 is path
  // order and for b = nm - 1 is reversed path order.
  ReplaySpec spec{ne_weights(m, -1), LevelConvention::kWestSouth,
                  sign == GmSign::kPlus ? ScanDirection::kRightward : ScanDirection::kLeftward,
                  0};
  auto p = replay_inverse(q, gm_labels(q, n, m, sign), spec);
  if (!is_dyck(p, SweepParams{b, -n})) throw NotInImageError(q.str() + " is not in the image");
  return checked_preimage(p, q, gm_sweep(p, n, b), "GM inverse");
}

// ---- brute force ----

std::vector<Word> brute_force_inverse(const Word& q, const WordMap& map,
                                      const BruteDomain& domain, std::uint64_t budget,
                                      unsigned workers) {
  auto total = domain.space.size();
  if (total > budget) {
    throw BudgetError("domain has " + std::to_string(total) + " words, budget is " +
                      std::to_string(budget));
  }
  workers = std::max(1u, workers);
  auto shards = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1));
  std::vector<std::vector<Word>> found(shards);
  std::vector<std::exception_ptr> errors(shards);

  auto run = [&](std::uint64_t shard) {
    try {
      auto first = total * shard / shards;
      auto last = total * (shard + 1) / shards;
      domain.space.for_each(
          [&](const Word& w) {
            if (domain.member && !domain.member(w)) return;
            Word image;
            try {
              image = map(w);
            } catch (const DomainError&) {
              return;
            }
            if (image == q) found[shard].push_back(w);
          },
          first, last);
    } catch (...) {
      errors[shard] = std::current_exception();
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
  std::vector<Word> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sweeplab

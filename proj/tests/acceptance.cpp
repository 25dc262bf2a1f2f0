// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "sweeplab/classical.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/harness.hpp"
#include "sweeplab/inversion.hpp"
#include "sweeplab/paths.hpp"
#include "sweeplab/stats.hpp"
#include "sweeplab/sweep.hpp"

using namespace sweeplab;

namespace {

// Failure detail for the current criterion; empty means pass.
std::string g_detail;

void expect(bool ok, const std::string& what) {
  if (!ok && g_detail.empty()) g_detail = what;
}

std::vector<Word> dyck(std::int64_t n) { return enumerate_dyck({n, n}, {1, -1}); }

bool injective(const std::vector<Word>& domain, const std::function<Word(const Word&)>& f,
               std::string& collision) {
  std::unordered_set<std::string> seen;
  for (const auto& w : domain) {
    if (!seen.insert(f(w).str()).second) {
      collision = w.str();
      return false;
    }
  }
  return true;
}

void criterion1() {
  Word w("ENEENNEE");
  auto q = sweep_minus(w, {5, -3});
  expect(q.str() == "EEENENNE", "sw-_{5,-3}(ENEENNEE) = " + q.str());
  BruteDomain dom{WordSpace::rect({3, 5}), {}};
  auto pre = brute_force_inverse(q, [](const Word& x) { return sweep_minus(x, {5, -3}); }, dom);
  expect(pre == std::vector<Word>{w}, "brute force inverse is not the single preimage");
}

void criterion2() {
  auto a = sweep_minus(Word("NENEE"), {3, -2}), b = sweep_minus(Word("NEENE"), {3, -2});
  expect(a != b, "NENEE and NEENE collide under the implemented order");
  SweepSpec wrong{LevelConvention::kEastNorth, LevelOrder::kDecreasing, ScanDirection::kLeftward,
                  std::numeric_limits<std::int64_t>::max()};
  auto wt = WeightFn::from_params({3, -2});
  expect(sweep_with(Word("NENEE"), wt, wrong).str() == "NNEEE" &&
             sweep_with(Word("NEENE"), wt, wrong).str() == "NNEEE",
         "negative control does not reproduce the collision");
}

void criterion3() {
  std::string col;
  for (std::int64_t r = -4; r <= 4; ++r) {
    for (std::int64_t s = -4; s <= 4; ++s) {
      for (std::int64_t total = 1; total <= 9; ++total) {
        for (std::int64_t a = 0; a <= total; ++a) {
          if (!injective(enumerate_words({a, total - a}),
                         [r, s](const Word& w) { return sweep_minus(w, {r, s}); }, col)) {
            expect(false, "sw- collision at r=" + std::to_string(r) + " s=" + std::to_string(s) +
                              " on " + col);
          }
        }
      }
    }
  }
  for (std::int64_t wd = -2; wd <= 2; ++wd) {
    for (std::int64_t we = -2; we <= 2; ++we) {
      for (std::int64_t wn = -2; wn <= 2; ++wn) {
        WeightFn wt(Alphabet::schroder(), {wd, we, wn});
        for (std::int64_t cd = 0; cd <= 8; ++cd) {
          for (std::int64_t ce = 0; cd + ce <= 8; ++ce) {
            for (std::int64_t cn = 0; cd + ce + cn <= 8; ++cn) {
              WordSpace space(Alphabet::schroder(), {cd, ce, cn});
              if (!injective(space.all(), [&](const Word& w) { return sweep_general(w, wt); }, col)) {
                expect(false, "general sweep collision on " + col + " with " + wt.to_string());
              }
            }
          }
        }
      }
    }
  }
}

void criterion4() {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = 0; k <= 2; ++k) {
      for (std::int64_t m = 1; m <= 2; ++m) {
        for (const auto& p : enumerate_trapezoid({n, k, m})) {
          expect(phi_prime_trapezoid(p, {n, k, m}) == flip(rev(sweep_minus(rev(flip(p)), {1, -m}))),
                 "phi' differs on " + p.str());
        }
      }
    }
  }
  Word p("ENNEENEEEEENNEEENNEEENEEEE");
  auto b = trapezoid_blocks(p, {8, 2, 2});
  expect(b.g == std::vector<std::int64_t>{1, 3, 3, 0, 2, 1, 3, 2}, "example g vector");
  std::vector<std::string> sigma{"N", "NEN", "EENEN", "ENNEENE", "EEEEE", "EEE"};
  std::vector<std::string> tau{"N", "NEN", "NENEE", "EENEENN", "EEEEE", "EEE"};
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    expect(b.sigma.at(i) == sigma[i] && b.tau.at(i) == tau[i], "example block " + std::to_string(i));
  }
  expect(phi_trapezoid(p, {8, 2, 2}).str() == "NENENEEENENENNEENEEEEEEEEE", "example sigma word");
  expect(phi_prime_trapezoid(p, {8, 2, 2}).str() == "NENENENENEEEENEENNEEEEEEEE", "example tau word");
}

void criterion5() {
  for (std::int64_t n = 1; n <= 7; ++n) {
    for (const auto& p : dyck(n)) {
      auto q = sweep_minus(p, {1, -1});
      expect(phi_trapezoid(p, {n, 0, 1}) == rev(flip(q)), "phi differs on " + p.str());
      expect(phi_hl(p) == q, "phi_HL differs on " + p.str());
    }
  }
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_words({n, n})) {
      expect(phi_lw(p) == sweep_minus(p, {1, -1}), "phi_LW differs on " + p.str());
    }
  }
  Word w("ENEENENNNNEENEEEENNNENEENNNNENEE");
  expect(area_vector_square(w) ==
             std::vector<std::int64_t>{-1, -2, -2, -1, 0, 1, 0, -3, -2, -1, -1, -2, -1, 0, 1, 1},
         "example g vector");
  auto b = square_blocks(w);
  std::map<std::int64_t, std::string> tau{{-3, "E"},        {-2, "ENEEE"},  {-1, "NEENENNEE"},
                                          {0, "ENNNEENN"}, {1, "EENNEN"}, {2, "NNN"}};
  for (const auto& [i, s] : tau) expect(b.tau.at(i) == s, "example tau block " + std::to_string(i));
}

void criterion6() {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 7}}) {
    for (const auto& w : enumerate_dyck({a, b}, {b, -a})) {
      auto pi = mkptn(w);
      auto expected = mkptn(sweep_plus(rev(w), {b, -a}));
      expect(zeta(pi, a, b) == expected, "zeta differs on " + pi.to_string());
      expect(gorsky_mazin(pi, a, b) == expected, "G differs on " + pi.to_string());
    }
  }
  Partition pi({4, 4, 4, 2, 2, 1});
  auto expected = mkptn(sweep_plus(rev(mkwd(pi, {7, 10})), {10, -7}));
  expect(expected == Partition({8, 6, 4, 2}), "7,10 sweep");
  expect(zeta(pi, 7, 10) == expected && gorsky_mazin(pi, 7, 10) == expected, "7,10 maps");
  auto cols = gm_column_lengths(pi, 7, 10);
  std::vector<std::int64_t> nonzero;
  for (auto c : cols) {
    if (c) nonzero.push_back(c);
  }
  expect(nonzero == std::vector<std::int64_t>{4, 4, 3, 3, 2, 2, 1, 1}, "7,10 column lengths");
}

void criterion7() {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (const auto& p : dyck(n)) {
      expect(invert_haglund(sweep_minus(p, {1, -1})) == p, "haglund round trip on " + p.str());
    }
  }
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = 0; k <= 2; ++k) {
      for (std::int64_t m = 1; m <= 2; ++m) {
        for (const auto& p : enumerate_trapezoid({n, k, m})) {
          expect(invert_phi_prime(phi_prime_trapezoid(p, {n, k, m}), {n, k, m}) == p,
                 "trapezoid round trip on " + p.str());
        }
      }
    }
  }
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_words({n, n})) {
      expect(invert_phi_lw(sweep_minus(p, {1, -1})) == p, "square round trip on " + p.str());
    }
  }
  for (auto sign : {GmSign::kPlus, GmSign::kMinus}) {
    std::int64_t b = sign == GmSign::kPlus ? 7 : 5;
    for (const auto& p : enumerate_dyck({3, b}, {b, -3})) {
      expect(invert_gm(gm_sweep(p, 3, b), 3, 2, sign) == p, "gm round trip on " + p.str());
    }
  }
  Word omega("NENNENNENNNENNENEEENEEENENNEENEE"), vp("NNEENNNNNEENNEENEEENNEENNEEENNEE");
  expect(phi_trapezoid(omega, {16, 0, 1}) == vp && invert_phi_dyck(vp) == omega, "omega pair");
  Word aw("NENNNEEENNENNEENNNEENEEENNEE"), ay("NNENNNNEENENNENENEEENENNEEEE");
  expect(sweep_minus(aw, {1, -1}) == ay && invert_haglund(ay) == aw, "dyck pair");
}

void criterion8() {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (const auto& p : dyck(n)) {
      auto lv = levels(p, SweepParams{1, -1}).step_levels();
      std::map<std::int64_t, std::int64_t> ns, es;
      for (std::size_t i = 0; i < p.size(); ++i) (p[i] == 'N' ? ns : es)[lv[i]]++;
      for (const auto& [i, c] : ns) expect(c == es[i - 1], "n_i = e_{i-1} fails on " + p.str());
      auto b = haglund_bounce(sweep_minus(p, {1, -1}));
      for (std::size_t i = 0; i < b.h.size(); ++i) expect(b.h[i] == es[i], "h_i = e_i fails on " + p.str());
      for (std::size_t i = 0; i < b.v.size(); ++i) {
        expect(b.v[i] == ns[i + 1], "v_{i-1} = n_i fails on " + p.str());
      }
    }
  }
}

void criterion9() {
  for (std::int64_t n = 1; n <= 8; ++n) {
    auto full = n * (n - 1) / 2;
    for (const auto& w : dyck(n)) {
      expect(area(w) + dyck_area(w) == full, "area + Area on " + w.str());
      expect(area(sweep_minus(w, {1, -1})) + dinv(w) == full, "area(sw) + dinv on " + w.str());
    }
  }
  expect(classical_qt_catalan(2) == LaurentPoly2::q() + LaurentPoly2::t(), "C_2 = q + t");
  for (std::int64_t n = 1; n <= 7; ++n) {
    auto full = n * (n - 1) / 2;
    expect(classical_qt_catalan(n) == qt_catalan({1, -1}, {n, n}).invert_both().shifted(full, full),
           "C_n relation at n = " + std::to_string(n));
  }
}

void criterion10() {
  struct Run {
    const char* name;
    CheckRange range;
  };
  std::vector<Run> runs{{"joint-symmetry-catalan", {3, 3, 8, {}}},
                        {"joint-symmetry-square", {0, 0, 8, {}}},
                        {"catalan-t-inv-q", {0, 0, 11, {}}},
                        {"square-t-inv-q", {0, 0, 10, {}}},
                        {"rectangle-t-inv-q", {0, 0, 11, {}}}};
  for (const auto& run : runs) {
    for (const auto& p : check_conjecture(run.name, run.range)) {
      if (p.status != PointStatus::kPass) {
        expect(false, std::string(run.name) + " " + std::string(status_name(p.status)) +
                          " at " + format_params(p.params) + "; replay: sweeplab verify conjecture:" +
                          run.name + " --point " + format_params(p.params));
      }
    }
  }
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, void (*)()>> criteria{
      {"sample sweep and brute-force inverse", criterion1},
      {"level order regression and negative control", criterion2},
      {"sweep injectivity on two and three letters", criterion3},
      {"phi' as a conjugated sweep; example blocks", criterion4},
      {"phi, phi_HL, phi_LW as sweeps; square example", criterion5},
      {"zeta and Gorsky-Mazin as sweeps", criterion6},
      {"inversion round trips; published pairs", criterion7},
      {"level counts and bounce lengths", criterion8},
      {"area, dinv and C_n identities", criterion9},
      {"conjecture suites", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    g_detail.clear();
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second();
    } catch (const std::exception& e) {
      g_detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = g_detail.empty();
    failures += !ok;
    std::printf("criterion %2zu: %s  %7.2fs  %s%s%s\n", i + 1, ok ? "PASS" : "FAIL", secs,
                criteria[i].first, ok ? "" : " -- ", g_detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sweeplab/classical.hpp"
#include "sweeplab/paths.hpp"
#include "sweeplab/sweep.hpp"
#include "sweeplab/word.hpp"

namespace sweeplab {

// Recreated sweep level of every step of an output word Q, in Q order.
using StepLabeling = std::vector<std::int64_t>;

// How the forward sweep assigned levels: enough to replay it backwards.
struct ReplaySpec {
  WeightFn weights;
  LevelConvention convention = LevelConvention::kEastNorth;
  ScanDirection direction = ScanDirection::kLeftward;
  std::int64_t origin = 0;
};

// Rebuilds P from Q and its labels. EN labels are replayed from the final
// level backwards, WS labels from the origin forwards. Throws NotInImageError
// when a required level has no unused step or the walk ends off the origin.
Word replay_inverse(const Word& q, const StepLabeling& labels, const ReplaySpec& spec);

// Replay for sw- (variant kMinus) or sw+ (variant kPlus); the result is
// checked to sweep back to q.
Word replay_inverse(const Word& q, const StepLabeling& labels, const SweepParams& params,
                    NamedVariant variant);

// Staircase moves of a bounce path. `corners` lists the lattice points where
// the path turns, starting from its first point.
struct BouncePath {
  std::vector<std::int64_t> h;  // horizontal move lengths
  std::vector<std::int64_t> v;  // vertical move lengths
  std::vector<Point> corners;
};

// Haglund's bounce from (n,n) to (0,0) of a classical Dyck path Q.
BouncePath haglund_bounce(const Word& q);
// Labels: E steps above H_i and N steps left of V_{i-1} get label i.
StepLabeling haglund_labels(const Word& q);
// Inverse of sw-_{1,-1} (= phi_HL) on Dyck paths.
Word invert_haglund(const Word& q);

// Bounce for trapezoid paths: north v_i until Q, then east
// h_i = v_i + ... + v_{i-m+1} + [i < k].
BouncePath trapezoid_bounce(const Word& q, const TrapezoidShape& shape);
StepLabeling trapezoid_labels(const Word& q, const TrapezoidShape& shape);
// The level convention of phi' read as a sweep: WS levels, N = +m, E = -1,
// origin k, levels 0, 1, 2, ... scanned right to left.
ReplaySpec trapezoid_replay_spec(const TrapezoidShape& shape);
SweepSpec trapezoid_sweep_spec();
// phi'_{n,k,m} computed as that sweep (equals flip.rev.sw-_{1,-m}.rev.flip).
Word trapezoid_sweep(const Word& p, const TrapezoidShape& shape);
Word invert_phi_prime(const Word& q, const TrapezoidShape& shape);
// Inverse of phi_{n,0,1} (omega): rev.flip of the phi' inverse.
Word invert_phi_dyck(const Word& q);

// Break diagonal y = x - k, break point and both bounce paths of a square path.
struct SquareBounce {
  std::int64_t break_diagonal = 0;
  Point break_point;
  BouncePath positive;  // from (n,n): V_{-1}, H_0, V_0, H_1, ...
  BouncePath negative;  // from (0,0): H_{-1}, V_{-2}, H_{-2}, ...
};
SquareBounce square_bounce(const Word& q);
StepLabeling square_labels(const Word& q);
// Inverse of sw-_{1,-1} (= phi_LW) on W(N^n E^n).
Word invert_phi_lw(const Word& q);

enum class GmSign { kPlus, kMinus };  // b = nm + 1 or b = nm - 1

// The Gorsky-Mazin map read as a sweep: sw+_{b,-n} . rev on D_{b,-n}(N^n E^b).
Word gm_sweep(const Word& p, std::int64_t n, std::int64_t b);
// m-bounce of Q with offset +1 at i = 0 (b = nm + 1) or -1 at i = m - 1
// (b = nm - 1).
BouncePath gm_bounce(const Word& q, std::int64_t n, std::int64_t m, GmSign sign);
// Labels are the (b,-n) WS levels of the preimage's steps.
StepLabeling gm_labels(const Word& q, std::int64_t n, std::int64_t m, GmSign sign);
Word invert_gm(const Word& q, std::int64_t n, std::int64_t m, GmSign sign);

// Exhaustive preimage search over an enumerable domain.
struct BruteDomain {
  WordSpace space;
  std::function<bool(const Word&)> member;  // empty = whole space
};
using WordMap = std::function<Word(const Word&)>;

// Every w in the domain with map(w) == q, sorted. Throws BudgetError when the
// domain has more than `budget` words. `workers` > 1 shards by rank range.
std::vector<Word> brute_force_inverse(const Word& q, const WordMap& map,
                                      const BruteDomain& domain,
                                      std::uint64_t budget = 10'000'000,
                                      unsigned workers = 1);

}  // namespace sweeplab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sweeplab/laurent.hpp"
#include "sweeplab/word.hpp"

namespace sweeplab {

// Pairs i < j with w_i = E and w_j = N; equals |mkptn(w)|.
std::int64_t area(const Word& w);
// Minimum of the EN levels l_0..l_n.
std::int64_t min_level(const Word& w, const SweepParams& params);
// area + min_level. Depends on the actual (r, s), not only on -s/r.
std::int64_t area_star(const Word& w, const SweepParams& params);

// Classical Dyck statistics on D_{1,-1}(N^n E^n); DomainError otherwise.
// g_i = i - x_i where x_i is the column of the i-th north step.
std::vector<std::int64_t> dyck_area_vector(const Word& w);
std::int64_t dyck_area(const Word& w);  // Area = g_0 + ... + g_{n-1}
std::int64_t dinv(const Word& w);       // pairs i < j with g_i - g_j in {0, 1}

struct StatBundle {
  std::int64_t area = 0;
  std::int64_t ml = 0;
  std::int64_t area_star = 0;
  std::optional<std::int64_t> dyck_area;  // classical Dyck words only
  std::optional<std::int64_t> dinv;
};
StatBundle stat_bundle(const Word& w, const SweepParams& params);

// Enumeration limits shared by the polynomial builders.
struct EnumLimits {
  std::uint64_t budget = 50'000'000;  // words enumerated, BudgetError beyond
  unsigned workers = 1;               // rank-range shards, merged in order
};

// C_{r,s,a,b}: sum over D_{r,s}(N^a E^b) of q^area(w) t^area(sw-(w)).
LaurentPoly2 qt_catalan(const SweepParams& params, const RectShape& shape,
                        const EnumLimits& limits = {});
// Same domain paired with sw+ . rev instead of sw-.
LaurentPoly2 qt_catalan_plus_rev(const SweepParams& params, const RectShape& shape,
                                 const EnumLimits& limits = {});
// S_{a,b}: sum over all of W(N^a E^b) of q^area*(w) t^area*(sw-(w)), (r,s) = (b,-a).
LaurentPoly2 qt_square(const RectShape& shape, const EnumLimits& limits = {});
// C_n(q,t): sum over classical Dyck paths of q^Area t^dinv.
LaurentPoly2 classical_qt_catalan(std::int64_t n, const EnumLimits& limits = {});

// ---- conjecture checks ----

enum class PointStatus { kPass, kFail, kSkipped };
std::string_view status_name(PointStatus s);

// Named integer parameters of one check, in a fixed order ("a", "b", ...).
using ParamList = std::vector<std::pair<std::string, std::int64_t>>;

// One parameter point of a check. Failures carry the two sides that differ
// (polynomials in canonical text, or colliding words).
struct CheckPoint {
  ParamList params;
  PointStatus status = PointStatus::kPass;
  std::string expected;
  std::string actual;
  std::string note;
};

struct CheckRange {
  std::int64_t rmax = 3;
  std::int64_t smax = 3;
  std::int64_t sizemax = 8;  // bound on a + b (or nm + n)
  EnumLimits limits;
};

// joint-symmetry-catalan, joint-symmetry-square, catalan-t-inv-q,
// square-t-inv-q, rectangle-t-inv-q, general-bijectivity.
const std::vector<std::string>& conjecture_names();
std::vector<CheckPoint> check_conjecture(std::string_view name, const CheckRange& range);
// The parameter points check_conjecture visits, and a single one of them.
// Points that exceed the budget come back as kSkipped.
std::vector<ParamList> conjecture_points(std::string_view name, const CheckRange& range);
CheckPoint check_conjecture_point(std::string_view name, const ParamList& params,
                                  const EnumLimits& limits = {});

// Single points, exposed for replaying counterexamples.
CheckPoint check_catalan_symmetry(const SweepParams& params, const RectShape& shape,
                                  const EnumLimits& limits = {});
CheckPoint check_square_symmetry(const RectShape& shape, const EnumLimits& limits = {});
CheckPoint check_catalan_t_inv_q(const RectShape& shape, const EnumLimits& limits = {});
CheckPoint check_square_t_inv_q(std::int64_t n, std::int64_t m, const EnumLimits& limits = {});
CheckPoint check_rectangle_t_inv_q(const RectShape& shape, const EnumLimits& limits = {});
CheckPoint check_sweep_injective(const SweepParams& params, const RectShape& shape,
                                 const EnumLimits& limits = {});

}  // namespace sweeplab

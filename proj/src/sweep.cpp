#include "sweeplab/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "sweeplab/error.hpp"
#include "sweeplab/paths.hpp"

namespace sweeplab {

namespace {

struct VariantRow {
  NamedVariant variant;
  std::string_view name;
};

constexpr VariantRow kRows[] = {
    {NamedVariant::kMinus, "minus"},
    {NamedVariant::kPlus, "plus"},
    {NamedVariant::kRevMinus, "rev-minus"},
    {NamedVariant::kRevPlus, "rev-plus"},
    {NamedVariant::kMinusRev, "minus-rev"},
    {NamedVariant::kPlusRev, "plus-rev"},
    {NamedVariant::kRevMinusRev, "rev-minus-rev"},
    {NamedVariant::kRevPlusRev, "rev-plus-rev"},
};

}  // namespace

std::string_view variant_name(NamedVariant v) {
  for (const auto& row : kRows) {
    if (row.variant == v) return row.name;
  }
  return "?";
}

NamedVariant parse_variant(std::string_view name) {
  for (const auto& row : kRows) {
    if (row.name == name) return row.variant;
  }
  throw ParseError("unknown sweep variant '" + std::string(name) + "'");
}

SweepSpec variant_spec(NamedVariant v, const SweepParams& params, const RectShape& shape) {
  using C = LevelConvention;
  using O = LevelOrder;
  using D = ScanDirection;
  auto total = [&] {
    return checked_add(checked_mul(params.r, shape.a), checked_mul(params.s, shape.b));
  };
  switch (v) {
    case NamedVariant::kMinus:
      return {C::kEastNorth, O::kDecreasing, D::kLeftward, -1};
    case NamedVariant::kPlus:
      return {C::kEastNorth, O::kDecreasing, D::kRightward, 0};
    case NamedVariant::kRevMinus:
      return {C::kEastNorth, O::kIncreasing, D::kRightward, 0};
    case NamedVariant::kRevPlus:
      return {C::kEastNorth, O::kIncreasing, D::kLeftward, 1};
    case NamedVariant::kMinusRev:
      return {C::kWestSouth, O::kIncreasing, D::kRightward, checked_add(total(), 1)};
    case NamedVariant::kPlusRev:
      return {C::kWestSouth, O::kIncreasing, D::kLeftward, total()};
    case NamedVariant::kRevMinusRev:
      return {C::kWestSouth, O::kDecreasing, D::kLeftward, total()};
    case NamedVariant::kRevPlusRev:
      return {C::kWestSouth, O::kDecreasing, D::kRightward, checked_add(total(), -1)};
  }
  throw ParseError("unknown sweep variant");
}

std::vector<std::size_t> sweep_permutation(const std::vector<std::int64_t>& step_levels,
                                           LevelOrder order, ScanDirection direction,
                                           std::int64_t start_level) {
  // Sort key: (pass, signed level, signed position). The first pass holds the
  // levels on the start side of start_level, the second pass wraps around.
  using Key = std::tuple<int, std::int64_t, std::int64_t>;
  std::vector<std::pair<Key, std::size_t>> keyed;
  keyed.reserve(step_levels.size());
  for (std::size_t i = 0; i < step_levels.size(); ++i) {
    auto level = step_levels[i];
    int pass = 0;
    std::int64_t lkey = 0;
    if (order == LevelOrder::kDecreasing) {
      pass = level <= start_level ? 0 : 1;
      lkey = -level;
    } else {
      pass = level >= start_level ? 0 : 1;
      lkey = level;
    }
    auto pos = static_cast<std::int64_t>(i);
    auto pkey = direction == ScanDirection::kLeftward ? -pos : pos;
    keyed.push_back({Key{pass, lkey, pkey}, i});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> perm;
  perm.reserve(keyed.size());
  for (const auto& [key, idx] : keyed) perm.push_back(idx);
  return perm;
}

SweepTrace trace_sweep(const Word& w, const WeightFn& wt, const SweepSpec& spec,
                       std::int64_t origin) {
  SweepTrace trace;
  trace.step_levels = levels(w, wt, spec.convention, origin).step_levels();
  trace.order = sweep_permutation(trace.step_levels, spec.order, spec.direction, spec.start_level);
  std::string out;
  out.reserve(w.size());
  for (auto idx : trace.order) out.push_back(w[idx]);
  trace.output = Word(std::move(out), w.alphabet());
  return trace;
}

Word sweep_with(const Word& w, const WeightFn& wt, const SweepSpec& spec, std::int64_t origin) {
  return trace_sweep(w, wt, spec, origin).output;
}

Word sweep_minus(const Word& w, const SweepParams& params) {
  w.require_ne("sweep_minus");
  return sweep_with(w, WeightFn::from_params(params),
                    {LevelConvention::kEastNorth, LevelOrder::kDecreasing,
                     ScanDirection::kLeftward, -1});
}

Word sweep_plus(const Word& w, const SweepParams& params) {
  w.require_ne("sweep_plus");
  return sweep_with(w, WeightFn::from_params(params),
                    {LevelConvention::kEastNorth, LevelOrder::kDecreasing,
                     ScanDirection::kRightward, 0});
}

Word sweep_general(const Word& w, const WeightFn& wt) {
  return sweep_with(w, wt,
                    {LevelConvention::kEastNorth, LevelOrder::kDecreasing,
                     ScanDirection::kLeftward, -1});
}

Word sweep_variant(const Word& w, const SweepParams& params, NamedVariant v) {
  w.require_ne("sweep_variant");
  RectShape shape{static_cast<std::int64_t>(w.count('N')),
                  static_cast<std::int64_t>(w.count('E'))};
  return sweep_with(w, WeightFn::from_params(params), variant_spec(v, params, shape));
}

Word sweep_variant_composite(const Word& w, const SweepParams& params, NamedVariant v) {
  switch (v) {
    case NamedVariant::kMinus:
      return sweep_minus(w, params);
    case NamedVariant::kPlus:
      return sweep_plus(w, params);
    case NamedVariant::kRevMinus:
      return rev(sweep_minus(w, params));
    case NamedVariant::kRevPlus:
      return rev(sweep_plus(w, params));
    case NamedVariant::kMinusRev:
      return sweep_minus(rev(w), params);
    case NamedVariant::kPlusRev:
      return sweep_plus(rev(w), params);
    case NamedVariant::kRevMinusRev:
      return rev(sweep_minus(rev(w), params));
    case NamedVariant::kRevPlusRev:
      return rev(sweep_plus(rev(w), params));
  }
  throw ParseError("unknown sweep variant");
}

Word sweep_perturbed(const Word& w, const PerturbedSlope& slope) {
  if (!(slope.base.r > 0 && slope.base.s < 0)) {
    throw RegimeError("perturbed slopes are defined for r > 0 and s < 0");
  }
  return slope.side == SlopeSide::kBelow ? sweep_minus(w, slope.base)
                                         : sweep_plus(w, slope.base);
}

}  // namespace sweeplab

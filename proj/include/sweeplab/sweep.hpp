#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sweeplab/word.hpp"

namespace sweeplab {

enum class LevelOrder {
  // start, start-1, ..., min, then max, ..., start+1
  kDecreasing,
  // start, start+1, ..., max, then min, ..., start-1
  kIncreasing,
};

enum class ScanDirection {
  kLeftward,   // right to left within a level
  kRightward,  // left to right within a level
};

// The four parameters that define a sweep. Level classes with no steps are
// skipped; only realized step levels are visited.
struct SweepSpec {
  LevelConvention convention = LevelConvention::kEastNorth;
  LevelOrder order = LevelOrder::kDecreasing;
  ScanDirection direction = ScanDirection::kLeftward;
  std::int64_t start_level = -1;
};

// The eight rows of the symmetry table, in table order.
enum class NamedVariant {
  kMinus,        // sw-
  kPlus,         // sw+
  kRevMinus,     // rev . sw-
  kRevPlus,      // rev . sw+
  kMinusRev,     // sw- . rev
  kPlusRev,      // sw+ . rev
  kRevMinusRev,  // rev . sw- . rev
  kRevPlusRev,   // rev . sw+ . rev
};

inline constexpr NamedVariant kAllVariants[] = {
    NamedVariant::kMinus,    NamedVariant::kPlus,     NamedVariant::kRevMinus,
    NamedVariant::kRevPlus,  NamedVariant::kMinusRev, NamedVariant::kPlusRev,
    NamedVariant::kRevMinusRev, NamedVariant::kRevPlusRev};

// CLI selector strings: "minus", "plus", "rev-minus", ...
std::string_view variant_name(NamedVariant v);
NamedVariant parse_variant(std::string_view name);

// Direct (convention, order, direction, start) parameters of a table row for
// words in W(N^a E^b); the start level depends on ra + sb.
SweepSpec variant_spec(NamedVariant v, const SweepParams& params, const RectShape& shape);

// Output position -> input index for the sweep of the given step levels.
std::vector<std::size_t> sweep_permutation(const std::vector<std::int64_t>& step_levels,
                                           LevelOrder order, ScanDirection direction,
                                           std::int64_t start_level);

// Core engine: levels from `wt` starting at `origin`, then the sweep in `spec`.
Word sweep_with(const Word& w, const WeightFn& wt, const SweepSpec& spec,
                std::int64_t origin = 0);

Word sweep_minus(const Word& w, const SweepParams& params);
Word sweep_plus(const Word& w, const SweepParams& params);
// Generalized sweep over any alphabet: levels -1 down to min, then max down
// to 0, right to left within each level.
Word sweep_general(const Word& w, const WeightFn& wt);

// Table row computed from its four parameters.
Word sweep_variant(const Word& w, const SweepParams& params, NamedVariant v);
// Table row computed as the composite of rev with sw- / sw+.
Word sweep_variant_composite(const Word& w, const SweepParams& params, NamedVariant v);

enum class SlopeSide { kBelow, kAbove };

// Sweep at an irrational slope infinitesimally below or above -s/r.
struct PerturbedSlope {
  SweepParams base;
  SlopeSide side = SlopeSide::kBelow;
};

// Exact dispatch: below -> sw-, above -> sw+. Requires r > 0 and s < 0.
Word sweep_perturbed(const Word& w, const PerturbedSlope& slope);

// Levels and emission order of a sweep, for --trace output.
struct SweepTrace {
  std::vector<std::int64_t> step_levels;
  std::vector<std::size_t> order;  // input indices in output order
  Word output;
};
SweepTrace trace_sweep(const Word& w, const WeightFn& wt, const SweepSpec& spec,
                       std::int64_t origin = 0);

}  // namespace sweeplab

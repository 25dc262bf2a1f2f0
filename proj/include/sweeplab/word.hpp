#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sweeplab {

// Ordered set of distinct single-character letters. Symbols are kept in
// ascending character order, which is also the enumeration order.
class Alphabet {
 public:
  Alphabet() : Alphabet(ne()) {}
  explicit Alphabet(std::string_view symbols);

  // {E, N}: the lattice-path alphabet.
  static Alphabet ne();
  // {D, E, N}: Schroder paths with a diagonal step.
  static Alphabet schroder();

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool contains(char c) const;
  // Position of c in symbols(); throws AlphabetError if absent.
  std::size_t index_of(char c) const;

  bool operator==(const Alphabet& other) const = default;

 private:
  std::string symbols_;
};

// A finite word over an alphabet. External format is the plain ASCII string
// of its letters, e.g. "ENEENNEE".
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters, Alphabet alphabet = Alphabet::ne());

  const std::string& str() const { return letters_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  std::size_t count(char c) const;

  // Throws AlphabetError unless the alphabet is exactly {E, N}.
  void require_ne(std::string_view op) const;

  bool operator==(const Word& other) const = default;
  auto operator<=>(const Word& other) const { return letters_ <=> other.letters_; }

 private:
  std::string letters_;
  Alphabet alphabet_;
};

// Height a (number of N's) and width b (number of E's) of a rectangle.
struct RectShape {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

// Weight of N is r, weight of E is s. gcd(r, s) is never normalized away.
struct SweepParams {
  std::int64_t r = 0;
  std::int64_t s = 0;
};

// Integer weight for every letter of an alphabet.
class WeightFn {
 public:
  WeightFn() = default;
  WeightFn(const Alphabet& alphabet, const std::vector<std::int64_t>& weights);

  static WeightFn from_params(const SweepParams& params);
  // "N=1,D=0,E=-1"; the alphabet is the set of named letters.
  static WeightFn parse(std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  std::int64_t operator()(char c) const;
  bool has(char c) const { return defined_[static_cast<unsigned char>(c)]; }

  std::string to_string() const;

 private:
  Alphabet alphabet_;
  std::array<std::int64_t, 256> weight_{};
  std::array<bool, 256> defined_{};
};

enum class LevelConvention { kEastNorth, kWestSouth };

// Levels l_0..l_n of the lattice points visited by a word; steps are labelled
// by their end point (EN) or start point (WS).
struct LevelSequence {
  std::vector<std::int64_t> points;
  LevelConvention convention = LevelConvention::kEastNorth;

  std::size_t steps() const { return points.empty() ? 0 : points.size() - 1; }
  // Level carried by step i (0-based) under the stored convention.
  std::int64_t step(std::size_t i) const {
    return convention == LevelConvention::kEastNorth ? points[i + 1] : points[i];
  }
  std::vector<std::int64_t> step_levels() const;
};

// Levels starting from `origin` (0 for every canonical sweep). Throws
// OverflowError instead of wrapping and AlphabetError for unweighted letters.
LevelSequence levels(const Word& w, const WeightFn& wt,
                     LevelConvention conv = LevelConvention::kEastNorth,
                     std::int64_t origin = 0);
LevelSequence levels(const Word& w, const SweepParams& params,
                     LevelConvention conv = LevelConvention::kEastNorth,
                     std::int64_t origin = 0);

// Checked 64-bit helpers shared by the level computations.
std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

// Integer partition with weakly decreasing parts, canonical form has no
// trailing zeros. External format "4,4,4,2,2,1"; empty partition is "".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::int64_t> parts);

  static Partition parse(std::string_view text);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::int64_t size() const;  // sum of parts
  std::int64_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool fits(const RectShape& shape) const;
  Partition transpose() const;
  std::string to_string() const;

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<std::int64_t> parts_;
};

}  // namespace sweeplab

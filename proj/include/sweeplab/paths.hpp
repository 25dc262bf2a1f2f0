#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sweeplab/word.hpp"

namespace sweeplab {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
};

// (0,0) followed by the point reached after each step; N = (0,1), E = (1,0).
std::vector<Point> mkpath_points(const Word& w);

// Partition of the whole squares above and left of the path inside its
// bounding rectangle. Row i from the top has as many cells as there are E's
// before the i-th N counted from the end of the word.
Partition mkptn(const Word& w);

// Frontier word of a partition inside an a x b rectangle; inverse of mkptn.
Word mkwd(const Partition& pi, const RectShape& shape);

// Every step level is nonnegative under the EN convention.
bool is_dyck(const Word& w, const SweepParams& params);
bool is_dyck(const Word& w, const WeightFn& wt);

Word rev(const Word& w);
// Swaps N and E; only defined on the {N,E} alphabet.
Word flip(const Word& w);

// All words with prescribed letter multiplicities, in lexicographic order.
// Supports random access by rank so ranges can be sharded across workers.
class WordSpace {
 public:
  // counts[i] copies of alphabet.symbols()[i].
  WordSpace(Alphabet alphabet, std::vector<std::int64_t> counts);
  // W(N^a E^b).
  static WordSpace rect(const RectShape& shape);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::size_t length() const { return length_; }
  // Multinomial coefficient; throws BudgetError if it does not fit 64 bits.
  std::uint64_t size() const { return size_; }

  Word unrank(std::uint64_t rank) const;
  std::uint64_t rank(const Word& w) const;

  // Calls f on every word with rank in [first, last).
  void for_each(const std::function<void(const Word&)>& f, std::uint64_t first = 0,
                std::uint64_t last = UINT64_MAX) const;
  std::vector<Word> all() const;

 private:
  std::uint64_t multinomial(std::vector<std::int64_t> counts) const;

  Alphabet alphabet_;
  std::vector<std::int64_t> counts_;
  std::size_t length_ = 0;
  std::uint64_t size_ = 0;
};

std::vector<Word> enumerate_words(const RectShape& shape);
std::vector<Word> enumerate_dyck(const RectShape& shape, const SweepParams& params);

}  // namespace sweeplab

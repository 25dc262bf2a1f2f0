#include "sweeplab/paths.hpp"

#include <algorithm>

#include "sweeplab/error.hpp"

namespace sweeplab {

std::vector<Point> mkpath_points(const Word& w) {
  w.require_ne("mkpath");
  std::vector<Point> pts;
  pts.reserve(w.size() + 1);
  Point p;
  pts.push_back(p);
  for (char c : w.str()) {
    if (c == 'N') {
      ++p.y;
    } else {
      ++p.x;
    }
    pts.push_back(p);
  }
  return pts;
}

Partition mkptn(const Word& w) {
  w.require_ne("mkptn");
  std::vector<std::int64_t> rows;
  std::int64_t east = 0;
  for (char c : w.str()) {
    if (c == 'E') {
      ++east;
    } else {
      rows.push_back(east);
    }
  }
  std::reverse(rows.begin(), rows.end());
  return Partition(std::move(rows));
}

Word mkwd(const Partition& pi, const RectShape& shape) {
  if (shape.a < 0 || shape.b < 0) throw ShapeError("rectangle sides must be nonnegative");
  if (!pi.fits(shape)) {
    throw ShapeError("partition (" + pi.to_string() + ") does not fit in " +
                     std::to_string(shape.a) + "x" + std::to_string(shape.b));
  }
  std::string letters;
  letters.reserve(static_cast<std::size_t>(shape.a + shape.b));
  std::int64_t east = 0;
  // Bottom row first: row a-1-j from the top.
  for (std::int64_t j = 0; j < shape.a; ++j) {
    auto row = pi.part(static_cast<std::size_t>(shape.a - 1 - j));
    letters.append(static_cast<std::size_t>(row - east), 'E');
    east = row;
    letters.push_back('N');
  }
  letters.append(static_cast<std::size_t>(shape.b - east), 'E');
  return Word(std::move(letters));
}

bool is_dyck(const Word& w, const WeightFn& wt) {
  std::int64_t level = 0;
  for (char c : w.str()) {
    level = checked_add(level, wt(c));
    if (level < 0) return false;
  }
  return true;
}

bool is_dyck(const Word& w, const SweepParams& params) {
  w.require_ne("is_dyck");
  return is_dyck(w, WeightFn::from_params(params));
}

Word rev(const Word& w) {
  return Word(std::string(w.str().rbegin(), w.str().rend()), w.alphabet());
}

Word flip(const Word& w) {
  w.require_ne("flip");
  std::string out = w.str();
  for (char& c : out) c = (c == 'N') ? 'E' : 'N';
  return Word(std::move(out));
}

namespace {

std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) throw BudgetError("word space size exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

WordSpace::WordSpace(Alphabet alphabet, std::vector<std::int64_t> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
  if (counts_.size() != alphabet_.size()) {
    throw AlphabetError("one letter count per alphabet symbol required");
  }
  for (auto c : counts_) {
    if (c < 0) throw ShapeError("letter counts must be nonnegative");
    length_ += static_cast<std::size_t>(c);
  }
  size_ = multinomial(counts_);
}

WordSpace WordSpace::rect(const RectShape& shape) {
  return WordSpace(Alphabet::ne(), {shape.b, shape.a});
}

std::uint64_t WordSpace::multinomial(std::vector<std::int64_t> counts) const {
  unsigned __int128 acc = 1;
  std::uint64_t total = 0;
  for (auto c : counts) {
    total += static_cast<std::uint64_t>(c);
    acc *= binomial_checked(total, static_cast<std::uint64_t>(c));
    if (acc > UINT64_MAX) throw BudgetError("word space size exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

Word WordSpace::unrank(std::uint64_t rank) const {
  if (rank >= size_) throw DomainError("word rank out of range");
  auto remaining = counts_;
  std::string letters;
  letters.reserve(length_);
  for (std::size_t pos = 0; pos < length_; ++pos) {
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (remaining[i] == 0) continue;
      --remaining[i];
      auto block = multinomial(remaining);
      if (rank < block) {
        letters.push_back(alphabet_.symbols()[i]);
        break;
      }
      rank -= block;
      ++remaining[i];
    }
  }
  return Word(std::move(letters), alphabet_);
}

std::uint64_t WordSpace::rank(const Word& w) const {
  auto remaining = counts_;
  std::uint64_t r = 0;
  for (char c : w.str()) {
    auto idx = alphabet_.index_of(c);
    for (std::size_t i = 0; i < idx; ++i) {
      if (remaining[i] == 0) continue;
      --remaining[i];
      r += multinomial(remaining);
      ++remaining[i];
    }
    if (remaining[idx] == 0) throw DomainError("word does not belong to this word space");
    --remaining[idx];
  }
  if (w.size() != length_) throw DomainError("word does not belong to this word space");
  return r;
}

void WordSpace::for_each(const std::function<void(const Word&)>& f, std::uint64_t first,
                         std::uint64_t last) const {
  last = std::min(last, size_);
  if (first >= last) return;
  std::string letters = unrank(first).str();
  for (std::uint64_t r = first; r < last; ++r) {
    f(Word(letters, alphabet_));
    std::next_permutation(letters.begin(), letters.end());
  }
}

std::vector<Word> WordSpace::all() const {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(size_));
  for_each([&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Word> enumerate_words(const RectShape& shape) {
  return WordSpace::rect(shape).all();
}

std::vector<Word> enumerate_dyck(const RectShape& shape, const SweepParams& params) {
  std::vector<Word> out;
  auto wt = WeightFn::from_params(params);
  WordSpace::rect(shape).for_each([&](const Word& w) {
    if (is_dyck(w, wt)) out.push_back(w);
  });
  return out;
}

}  // namespace sweeplab

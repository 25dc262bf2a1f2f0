#include "sweeplab/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sweeplab/error.hpp"

namespace sweeplab {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  std::sort(symbols_.begin(), symbols_.end());
  if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
    throw AlphabetError("alphabet has repeated symbols: " + std::string(symbols));
  }
  for (char c : symbols_) {
    if (c <= ' ' || c == ',' || c == '=' || static_cast<unsigned char>(c) > 126) {
      throw AlphabetError("alphabet symbol must be printable ASCII");
    }
  }
}

Alphabet Alphabet::ne() {
  static const Alphabet kNE{std::string_view("EN")};
  return kNE;
}

Alphabet Alphabet::schroder() {
  static const Alphabet kNDE{std::string_view("DEN")};
  return kNDE;
}

bool Alphabet::contains(char c) const {
  return symbols_.find(c) != std::string::npos;
}

std::size_t Alphabet::index_of(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) {
    throw AlphabetError(std::string("letter '") + c + "' not in alphabet {" + symbols_ + "}");
  }
  return pos;
}

Word::Word(std::string letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(std::move(alphabet)) {
  for (char c : letters_) {
    if (!alphabet_.contains(c)) {
      throw AlphabetError(std::string("letter '") + c + "' not in alphabet {" +
                          alphabet_.symbols() + "}");
    }
  }
}

std::size_t Word::count(char c) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), c));
}

void Word::require_ne(std::string_view op) const {
  if (!(alphabet_ == Alphabet::ne())) {
    throw AlphabetError(std::string(op) + " requires a word over {N,E}");
  }
}

WeightFn::WeightFn(const Alphabet& alphabet, const std::vector<std::int64_t>& weights)
    : alphabet_(alphabet) {
  if (weights.size() != alphabet.size()) {
    throw AlphabetError("weight function must assign one weight per letter");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    auto c = static_cast<unsigned char>(alphabet.symbols()[i]);
    weight_[c] = weights[i];
    defined_[c] = true;
  }
}

WeightFn WeightFn::from_params(const SweepParams& params) {
  // Alphabet::ne() orders symbols as E, N.
  return WeightFn(Alphabet::ne(), {params.s, params.r});
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

WeightFn WeightFn::parse(std::string_view text) {
  std::string symbols;
  std::vector<std::pair<char, std::int64_t>> entries;
  for (auto item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq != 1 || item.size() < 3) {
      throw ParseError("weight entries look like N=1, got '" + std::string(item) + "'");
    }
    entries.emplace_back(item[0], parse_int(item.substr(2), "weight"));
    symbols.push_back(item[0]);
  }
  Alphabet alphabet(symbols);
  std::vector<std::int64_t> weights(alphabet.size());
  for (auto [c, w] : entries) weights[alphabet.index_of(c)] = w;
  return WeightFn(alphabet, weights);
}

std::int64_t WeightFn::operator()(char c) const {
  auto u = static_cast<unsigned char>(c);
  if (!defined_[u]) throw AlphabetError(std::string("letter '") + c + "' has no weight");
  return weight_[u];
}

std::string WeightFn::to_string() const {
  std::string out;
  for (char c : alphabet_.symbols()) {
    if (!out.empty()) out += ',';
    out += c;
    out += '=';
    out += std::to_string((*this)(c));
  }
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw OverflowError("64-bit level overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw OverflowError("64-bit level overflow");
  return out;
}

std::vector<std::int64_t> LevelSequence::step_levels() const {
  std::vector<std::int64_t> out(steps());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = step(i);
  return out;
}

LevelSequence levels(const Word& w, const WeightFn& wt, LevelConvention conv,
                     std::int64_t origin) {
  LevelSequence seq;
  seq.convention = conv;
  seq.points.reserve(w.size() + 1);
  seq.points.push_back(origin);
  for (char c : w.str()) seq.points.push_back(checked_add(seq.points.back(), wt(c)));
  return seq;
}

LevelSequence levels(const Word& w, const SweepParams& params, LevelConvention conv,
                     std::int64_t origin) {
  w.require_ne("levels with (r,s)");
  return levels(w, WeightFn::from_params(params), conv, origin);
}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ShapeError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ShapeError("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::int64_t> parts;
  if (!text.empty()) {
    for (auto item : split(text, ',')) parts.push_back(parse_int(item, "partition part"));
  }
  try {
    return Partition(std::move(parts));
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

std::int64_t Partition::size() const {
  std::int64_t total = 0;
  for (auto p : parts_) total = checked_add(total, p);
  return total;
}

bool Partition::fits(const RectShape& shape) const {
  if (static_cast<std::int64_t>(parts_.size()) > shape.a) return false;
  return parts_.empty() || parts_.front() <= shape.b;
}

Partition Partition::transpose() const {
  std::vector<std::int64_t> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (auto p : parts_) {
    for (std::int64_t j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

}  // namespace sweeplab

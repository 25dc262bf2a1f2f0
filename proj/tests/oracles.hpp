#pragma once

// Independent reference implementations. These deliberately avoid the
// library's level/sweep engine and compute everything with plain loops.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

inline std::int64_t weight_of(char c, const std::map<char, std::int64_t>& wt) { return wt.at(c); }

// EN levels: level of the endpoint of each step.
inline std::vector<std::int64_t> en_levels(const std::string& w, const std::map<char, std::int64_t>& wt) {
  std::vector<std::int64_t> out;
  std::int64_t l = 0;
  for (char c : w) {
    l += weight_of(c, wt);
    out.push_back(l);
  }
  return out;
}

// Scan k = -1, -2, ..., min, then max, ..., 0; right to left inside a level.
inline std::string sweep_minus(const std::string& w, const std::map<char, std::int64_t>& wt) {
  auto lv = en_levels(w, wt);
  if (w.empty()) return w;
  auto lo = std::min<std::int64_t>(*std::min_element(lv.begin(), lv.end()), -1);
  auto hi = std::max<std::int64_t>(*std::max_element(lv.begin(), lv.end()), 0);
  std::vector<std::int64_t> ks;
  for (auto k = -1; k >= lo; --k) ks.push_back(k);
  for (auto k = hi; k >= 0; --k) ks.push_back(k);
  std::string out;
  for (auto k : ks) {
    for (auto i = static_cast<std::int64_t>(w.size()) - 1; i >= 0; --i) {
      if (lv[i] == k) out.push_back(w[i]);
    }
  }
  return out;
}

// Scan k = 0, -1, ..., min, then max, ..., 1; left to right inside a level.
inline std::string sweep_plus(const std::string& w, const std::map<char, std::int64_t>& wt) {
  auto lv = en_levels(w, wt);
  if (w.empty()) return w;
  auto lo = std::min<std::int64_t>(*std::min_element(lv.begin(), lv.end()), 0);
  auto hi = std::max<std::int64_t>(*std::max_element(lv.begin(), lv.end()), 0);
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 0; k >= lo; --k) ks.push_back(k);
  for (auto k = hi; k >= 1; --k) ks.push_back(k);
  std::string out;
  for (auto k : ks) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (lv[i] == k) out.push_back(w[i]);
    }
  }
  return out;
}

inline std::map<char, std::int64_t> ne(std::int64_t r, std::int64_t s) { return {{'N', r}, {'E', s}}; }

inline std::string rev(std::string w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// All words with the given letter counts, by recursion.
inline void words_rec(std::map<char, int>& left, std::string& cur, std::vector<std::string>& out) {
  bool any = false;
  for (auto& [c, n] : left) {
    if (n == 0) continue;
    any = true;
    --n;
    cur.push_back(c);
    words_rec(left, cur, out);
    cur.pop_back();
    ++n;
  }
  if (!any) out.push_back(cur);
}

inline std::vector<std::string> words(std::map<char, int> counts) {
  std::vector<std::string> out;
  std::string cur;
  words_rec(counts, cur, out);
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of E-before-N pairs.
inline std::int64_t area(const std::string& w) {
  std::int64_t es = 0, a = 0;
  for (char c : w) {
    if (c == 'E') ++es;
    else a += es;
  }
  return a;
}

// Gaussian binomial via [n choose k] = [n-1 choose k-1] + q^k [n-1 choose k],
// as a coefficient vector.
inline std::vector<std::int64_t> gaussian(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  auto a = gaussian(n - 1, k - 1), b = gaussian(n - 1, k);
  std::vector<std::int64_t> out(std::max(a.size(), b.size() + k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + k] += b[i];
  return out;
}

}  // namespace oracle

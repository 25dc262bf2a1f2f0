#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sweeplab/word.hpp"

namespace sweeplab {

// Paths from (0,0) to (k+mn, n) staying weakly left of x = k + my.
struct TrapezoidShape {
  std::int64_t n = 1;
  std::int64_t k = 0;
  std::int64_t m = 1;
};

bool in_trapezoid(const Word& p, const TrapezoidShape& shape);
std::vector<Word> enumerate_trapezoid(const TrapezoidShape& shape);

// g_i = squares in row i between the path and the line x = k + my.
std::vector<std::int64_t> area_vector_trapezoid(const Word& p, const TrapezoidShape& shape);
// Inverse; throws DomainError unless 0 <= g_0 <= k, g_i >= 0, g_i <= g_{i-1} + m.
Word path_from_trapezoid_area(const std::vector<std::int64_t>& g, const TrapezoidShape& shape);

// g_i + n - i = squares in row i between the path and x = n.
std::vector<std::int64_t> area_vector_square(const Word& p);
// Inverse; throws DomainError unless g_0 <= 0, g_i + n - i >= 0, g_i <= g_{i-1} + 1.
Word path_from_square_area(const std::vector<std::int64_t>& g);

// Intermediate blocks of the trapezoid maps, keyed by level i.
struct TrapezoidBlocks {
  std::vector<std::int64_t> g;
  std::map<std::int64_t, std::string> sigma;
  std::map<std::int64_t, std::string> tau;
};
TrapezoidBlocks trapezoid_blocks(const Word& p, const TrapezoidShape& shape);

Word phi_trapezoid(const Word& p, const TrapezoidShape& shape);
Word phi_prime_trapezoid(const Word& p, const TrapezoidShape& shape);

// HL map on classical Dyck paths: flip . rev . phi_{n,0,1}.
Word phi_hl(const Word& p);

struct SquareBlocks {
  std::vector<std::int64_t> g;
  std::map<std::int64_t, std::string> tau;
};
SquareBlocks square_blocks(const Word& p);
// LW map on W(N^n E^n).
Word phi_lw(const Word& p);

// Sweep over {N, D, E} with weights 1, 0, -1.
Word schroder_sweep(const Word& w);
WeightFn schroder_weights();
bool is_schroder_dyck(const Word& w);

// ---- coprime (a, b) maps on partitions in D_{b,-a}(a, b) ----

// Levels of the squares between the path of pi and the line by = ax, sorted.
std::vector<std::int64_t> delta_complement(const Partition& pi, std::int64_t a, std::int64_t b);

// First stage of zeta: nu with first-column hook lengths = delta_complement.
Partition zeta_f(const Partition& pi, std::int64_t a, std::int64_t b);
// Same partition via the frontier word z_0 z_1 z_2 ...
Partition zeta_f_frontier(const Partition& pi, std::int64_t a, std::int64_t b);
// Frontier word z_0..z_len-1 (z_0 = E, z_i = N iff i is in delta_complement).
std::string zeta_frontier_word(const Partition& pi, std::int64_t a, std::int64_t b,
                               std::int64_t len);

// zeta via hook lengths: keep rows of nu indexed by squares east of north
// steps, count cells with hook length <= b.
Partition zeta(const Partition& pi, std::int64_t a, std::int64_t b);
// zeta via the frontier word: keep z_i when i + a is a WS step level.
Partition zeta_frontier(const Partition& pi, std::int64_t a, std::int64_t b);

// Row indices m retained by zeta (descending, i.e. top row first).
std::vector<std::int64_t> zeta_retained_rows(const Partition& pi, std::int64_t a,
                                             std::int64_t b);

// Cells discarded from the row of nu indexed by m: B_m counts discarded east
// steps of the frontier word, C_m the cells of hook length > b as [i, m].
struct DiscardSets {
  std::vector<std::int64_t> b_set;
  std::vector<std::pair<std::int64_t, std::int64_t>> c_set;
};
DiscardSets zeta_discard_sets(const Partition& pi, std::int64_t a, std::int64_t b,
                              std::int64_t m);

struct GeneratorData {
  std::vector<std::int64_t> generators;         // b-generators, ascending
  std::vector<std::int64_t> delta_complement;   // ascending
};
GeneratorData generator_data(const Partition& pi, std::int64_t a, std::int64_t b);

// |{beta, ..., beta + a - 1} intersect delta_complement|
std::int64_t gm_count(std::int64_t beta, std::int64_t a,
                      const std::vector<std::int64_t>& delta_complement);
std::vector<std::int64_t> gm_column_lengths(const Partition& pi, std::int64_t a,
                                            std::int64_t b);
Partition gorsky_mazin(const Partition& pi, std::int64_t a, std::int64_t b);

}  // namespace sweeplab

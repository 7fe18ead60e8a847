#pragma once
// Test-side oracles, independent of the library's enumeration code.

#include <cstdint>
#include <vector>

namespace oracle {

// Multiplies a truncated power series in q^{1/2} (index = 2*level) by
// 1/(1 - q^{k/2}) (repeatable part) or (1 + q^{k/2}) (distinct part).
inline void times_repeat(std::vector<std::int64_t>& s, int step) {
  for (std::size_t i = step; i < s.size(); ++i) s[i] += s[i - step];
}
inline void times_distinct(std::vector<std::int64_t>& s, int step) {
  for (std::size_t i = s.size(); i-- > static_cast<std::size_t>(step);) s[i] += s[i - step];
}

// Coefficients of prod_{r half-odd} (1 + q^r)^colors up to `twice_max`.
inline std::vector<std::int64_t> fermion_dims(int colors, int twice_max) {
  std::vector<std::int64_t> s(twice_max + 1, 0);
  s[0] = 1;
  for (int c = 0; c < colors; ++c)
    for (int step = 1; step <= twice_max; step += 2) times_distinct(s, step);
  return s;
}

// NS Verma: prod_{n>=1} 1/(1-q^n) * prod_{r half-odd} (1+q^r).
inline std::vector<std::int64_t> ns_verma_dims(int twice_max, bool with_super = true) {
  std::vector<std::int64_t> s(twice_max + 1, 0);
  s[0] = 1;
  for (int step = 2; step <= twice_max; step += 2) times_repeat(s, step);
  if (with_super)
    for (int step = 1; step <= twice_max; step += 2) times_distinct(s, step);
  return s;
}

// Affine Verma over a floor of dim f with `dim` colors: f * prod 1/(1-q^n)^dim.
inline std::vector<std::int64_t> affine_verma_dims(int dim, int floor, int twice_max) {
  std::vector<std::int64_t> s(twice_max + 1, 0);
  s[0] = floor;
  for (int c = 0; c < dim; ++c)
    for (int step = 2; step <= twice_max; step += 2) times_repeat(s, step);
  return s;
}

// Level-one sl2 vacuum character: sum_n q^{n^2} / prod (1 - q^m), integer levels.
inline std::vector<std::int64_t> sl2_level1_vacuum(int max_level) {
  std::vector<std::int64_t> p(max_level + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= max_level; ++m)
    for (int i = m; i <= max_level; ++i) p[i] += p[i - m];
  std::vector<std::int64_t> out(max_level + 1, 0);
  for (int n = -10; n <= 10; ++n)
    for (int i = 0; i + n * n <= max_level; ++i) out[i + n * n] += p[i];
  return out;
}

// Vacuum module L(1/2, 0) of the Virasoro algebra, indexed by twice the
// level: the integer-level part of one fermion's Fock space, zero in between.
inline std::vector<std::int64_t> ising_vacuum_dims(int max_level) {
  auto s = fermion_dims(1, 2 * max_level);
  for (std::size_t i = 1; i < s.size(); i += 2) s[i] = 0;
  return s;
}

}  // namespace oracle

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohn/group.hpp"

namespace cohn {

inline Permutation perm_identity(long degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Permutation perm_cycle(long degree, const std::vector<long>& cyc) {
  Permutation p = perm_identity(degree);
  for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

inline Group cyclic_group(long n) {
  std::vector<long> table(n * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return group_from_table_trusted(std::move(table), n);
}

inline Group klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

inline Group dihedral_group(long m) {  // order 2m, m >= 3
  std::vector<long> rot(m), refl(m);
  for (long x = 0; x < m; ++x) { rot[x] = (x + 1) % m; refl[x] = (m - x) % m; }
  return group_from_permutations(m, {rot, refl});
}

inline Group symmetric_group(long n) {
  std::vector<Permutation> gens{perm_cycle(n, {0, 1})};
  std::vector<long> full(n);
  std::iota(full.begin(), full.end(), 0);
  gens.push_back(perm_cycle(n, full));
  return group_from_permutations(n, gens);
}

inline Group alternating_group(long n) {
  internal_check(n == 4 || n == 5, "alternating_group covers degrees 4 and 5");
  if (n == 4) return group_from_permutations(4, {perm_cycle(4, {0, 1, 2}), perm_cycle(4, {1, 2, 3})});
  return group_from_permutations(5, {perm_cycle(5, {0, 1, 2, 3, 4}), perm_cycle(5, {0, 1, 2})});
}

inline Group quaternion_group() {
  // basis 1, i, j, k with signs; index = sign*4 + axis
  static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{+1, +1, +1, +1},
                               {+1, -1, +1, -1},
                               {+1, -1, -1, +1},
                               {+1, +1, -1, -1}};
  std::vector<long> table(64);
  for (long i = 0; i < 8; ++i)
    for (long j = 0; j < 8; ++j) {
      long a = i % 4, b = j % 4;
      int sign = (i / 4 + j / 4) % 2 ? -1 : 1;
      sign *= sg[a][b];
      table[i * 8 + j] = (sign < 0 ? 4 : 0) + ax[a][b];
    }
  return group_from_table(std::move(table), 8);  // full validation, cheap at order 8
}

// The named battery used by invariants and verification suites.
inline std::vector<std::pair<std::string, Group>> battery_groups() {
  return {
      {"Z/2", cyclic_group(2)},   {"Z/3", cyclic_group(3)},  {"Z/4", cyclic_group(4)},
      {"Z/6", cyclic_group(6)},   {"Z/9", cyclic_group(9)},  {"Z/2xZ/2", klein_four()},
      {"Q8", quaternion_group()}, {"D4", dihedral_group(4)}, {"D5", dihedral_group(5)},
      {"S3", symmetric_group(3)}, {"S4", symmetric_group(4)}, {"A4", alternating_group(4)},
      {"A5", alternating_group(5)},
  };
}

}  // namespace cohn

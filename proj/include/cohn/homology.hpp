#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohn/error.hpp"
#include "cohn/group.hpp"
#include "cohn/intmat.hpp"
#include "cohn/numbers.hpp"

namespace cohn {

// Isomorphism type of a finitely generated abelian group.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // d_1 | d_2 | ..., each >= 2

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const Int& d : torsion) {
      if (!out.empty()) out += " x ";
      out += "Z/" + int_str(d);
    }
    return out;
  }
};

inline AbelianGroup abelian_from_divisors(long free_rank, const std::vector<Int>& divisors) {
  AbelianGroup a;
  a.free_rank = free_rank;
  for (const Int& d : divisors)
    if (d > 1) a.torsion.push_back(d);
  for (std::size_t k = 1; k < a.torsion.size(); ++k)
    internal_check(a.torsion[k] % a.torsion[k - 1] == 0, "elementary divisors out of chain order");
  return a;
}

// keep only the p-power part of each divisor (the Z_(p) view of the group)
inline AbelianGroup strip_to_p_part(const AbelianGroup& a, long p) {
  AbelianGroup out;
  out.free_rank = a.free_rank;
  for (const Int& d : a.torsion) {
    Int pp = 1, rest = d;
    while (rest % p == 0) { pp *= p; rest /= p; }
    if (pp > 1) out.torsion.push_back(pp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// bar resolution boundaries with trivial coefficients
//
// Basis of degree n: tuples (g_1, ..., g_n); boundary
//   d[g_1|...|g_n] = [g_2|...|g_n]
//                  + sum_i (-1)^i [g_1|...|g_i g_{i+1}|...|g_n]
//                  + (-1)^n [g_1|...|g_{n-1}].
// The normalized variant restricts every slot to non-identity elements and
// drops faces that collapse to the identity; same homology, ranks (m-1)^n.

struct HomologyOptions {
  Budget budget{};
  int normalized = -1;  // -1: automatic (normalized above order 24)
};

inline bool use_normalized_bar(const Group& g, const HomologyOptions& opt) {
  if (opt.normalized >= 0) return opt.normalized != 0;
  return g->order > 24;
}

// base^n with an overflow/budget guard
inline long bar_rank(long base, long n, const Budget& budget) {
  long r = 1;
  for (long k = 0; k < n; ++k) {
    if (base != 0 && r > static_cast<long>(budget.max_triplets) / base)
      fail(errc::budget_exceeded, "bar basis larger than the triplet budget");
    r *= base;
  }
  return r;
}

struct BarSlice {
  Group group;
  long degree = 0;
  bool normalized = false;
  SparseIntMat d;  // rank(degree-1) x rank(degree)
};

inline BarSlice bar_boundary(const Group& g, long n, const HomologyOptions& opt = {}) {
  require(n >= 1, errc::index_out_of_range, "bar boundary needs degree >= 1");
  bool norm = use_normalized_bar(g, opt);
  long base = norm ? g->order - 1 : g->order;
  long rows = bar_rank(base, n - 1, opt.budget);
  long cols = bar_rank(base, n, opt.budget);
  if (cols > 0 && static_cast<std::size_t>(cols) * (n + 1) > opt.budget.max_triplets)
    fail(errc::budget_exceeded, "bar boundary estimate exceeds the triplet budget");

  BarSlice slice{g, n, norm, SparseIntMat(rows, cols, opt.budget)};
  std::vector<long> t(n), face(n - 1);
  auto elem = [&](long digit) { return norm ? digit + 1 : digit; };
  auto digit_of = [&](long element) { return norm ? element - 1 : element; };
  auto face_index = [&]() {
    long idx = 0;
    for (long k = 0; k + 1 < n; ++k) idx = idx * base + face[k];
    return idx;
  };
  for (long j = 0; j < cols; ++j) {
    long rem = j;
    for (long k = n - 1; k >= 0; --k) { t[k] = rem % base; rem /= base; }
    // face 0: drop the first slot
    for (long k = 1; k < n; ++k) face[k - 1] = t[k];
    slice.d.add(face_index(), j, Int(1));
    // middle faces: multiply adjacent slots
    for (long i = 1; i < n; ++i) {
      long prod = g->mult(elem(t[i - 1]), elem(t[i]));
      if (norm && prod == 0) continue;
      for (long k = 0; k < i - 1; ++k) face[k] = t[k];
      face[i - 1] = digit_of(prod);
      for (long k = i + 1; k < n; ++k) face[k - 1] = t[k];
      slice.d.add(face_index(), j, Int(i % 2 == 0 ? 1 : -1));
    }
    // face n: drop the last slot
    for (long k = 0; k + 1 < n; ++k) face[k] = t[k];
    slice.d.add(face_index(), j, Int(n % 2 == 0 ? 1 : -1));
  }
  return slice;
}

// d_lo composed with random columns of d_hi must vanish
inline bool boundary_square_spot_check(const BarSlice& lo, const BarSlice& hi, Rng& rng,
                                       int trials) {
  internal_check(lo.degree + 1 == hi.degree && lo.normalized == hi.normalized &&
                     lo.group.get() == hi.group.get(),
                 "mismatched consecutive bar slices");
  if (hi.d.cols == 0) return true;
  for (int t = 0; t < trials; ++t) {
    long j = rng.next(0, hi.d.cols - 1);
    std::map<long, Int> acc;
    for (long r : hi.d.col[j]) {
      const Int& v = *hi.d.get(r, j);
      for (long i : lo.d.col[r]) acc[i] += *lo.d.get(i, r) * v;
    }
    for (const auto& [i, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// H_i(G, Z) and H_i(G, Z_(p))

inline AbelianGroup group_homology(const Group& g, long i, const HomologyOptions& opt = {}) {
  require(i >= 0, errc::index_out_of_range, "homology degree must be >= 0");
  bool norm = use_normalized_bar(g, opt);
  long base = norm ? g->order - 1 : g->order;
  long rank_ci = bar_rank(base, i, opt.budget);
  long rank_di = 0;
  if (i >= 1) rank_di = static_cast<long>(elementary_divisors(bar_boundary(g, i, opt).d).size());
  std::vector<Int> div = elementary_divisors(bar_boundary(g, i + 1, opt).d);
  long free_rank = rank_ci - rank_di - static_cast<long>(div.size());
  internal_check(free_rank >= 0, "negative free rank from boundary ranks");
  return abelian_from_divisors(free_rank, div);
}

// computed over Z, then localized; Z_(p) is flat, so no correction terms
inline AbelianGroup group_homology_plocal(const Group& g, long i, long p,
                                          const HomologyOptions& opt = {}) {
  require(is_prime(p), errc::not_prime, std::to_string(p) + " is not prime");
  return strip_to_p_part(group_homology(g, i, opt), p);
}

// ---------------------------------------------------------------------------
// first-gap graded values for perfect groups
//
// For perfect G the localization is Z and the graded pieces in the gap regime
// are read off group homology one degree up: if the pieces vanish in degrees
// 1..i-1 (that is, H_2..H_i = 0), the degree-i piece is H_{i+1}(G, Z).

inline AbelianGroup first_gap_lambda(const Group& g, long i, const HomologyOptions& opt = {}) {
  require(is_perfect(*g), errc::not_perfect, "first-gap values need a perfect group");
  require(i >= 1, errc::index_out_of_range, "gap degree must be >= 1");
  for (long j = 2; j <= i; ++j)
    require(group_homology(g, j, opt).is_zero(), errc::gap_hypothesis_fails,
            "H_" + std::to_string(j) + " is nonzero, the gap hypothesis fails");
  return group_homology(g, i + 1, opt);
}

// first degree 1 <= i <= bound with H_i(G, Z_(p)) != 0
inline std::optional<long> quillen_scan(const Group& g, long p, long bound,
                                        const HomologyOptions& opt = {}) {
  require(is_prime(p), errc::not_prime, std::to_string(p) + " is not prime");
  require(bound >= 1, errc::index_out_of_range, "scan bound must be >= 1");
  for (long i = 1; i <= bound; ++i)
    if (!group_homology_plocal(g, i, p, opt).is_zero()) return i;
  return std::nullopt;
}

}  // namespace cohn

#pragma once

#include <string>
#include <vector>

#include "cohn/error.hpp"
#include "cohn/group.hpp"
#include "cohn/groupring.hpp"
#include "cohn/homology.hpp"
#include "cohn/intmat.hpp"
#include "cohn/lambda.hpp"

namespace cohn {

// Bounded complex of finitely generated free Z[G]-modules, degrees lo..hi.
// boundary[k] is the differential into degree lo+k, of shape
// ranks[k] x ranks[k+1]; there are hi-lo of them.
struct FreeComplex {
  Group group;
  long lo = 0, hi = 0;
  std::vector<long> ranks;
  std::vector<GroupRingMat<Int>> boundary;

  long rank_at(long degree) const {
    if (degree < lo || degree > hi) return 0;
    return ranks[degree - lo];
  }
};

// empty string when well formed, else the reason (shared by the internal
// constructors, which treat defects as bugs, and the parser, which treats
// them as input errors)
inline std::string complex_defect(const FreeComplex& c) {
  if (!c.group) return "missing group";
  if (c.hi < c.lo) return "degree range is empty";
  long len = c.hi - c.lo + 1;
  if (static_cast<long>(c.ranks.size()) != len) return "rank list does not match degree range";
  for (long r : c.ranks)
    if (r < 0) return "negative rank";
  if (static_cast<long>(c.boundary.size()) != len - 1) return "boundary count does not match";
  for (long k = 0; k + 1 < len; ++k) {
    const auto& b = c.boundary[k];
    if (b.group.get() != c.group.get()) return "boundary over the wrong group";
    if (b.rows != c.ranks[k] || b.cols != c.ranks[k + 1]) return "boundary shape mismatch";
  }
  for (long k = 0; k + 2 < len; ++k) {
    auto dd = mul(c.boundary[k], c.boundary[k + 1]);
    for (const auto& entry : dd.e)
      if (!entry.is_zero()) return "d o d is nonzero";
  }
  return "";
}

inline FreeComplex make_complex(Group g, long lo, std::vector<long> ranks,
                                std::vector<GroupRingMat<Int>> boundary) {
  FreeComplex c{std::move(g), lo, lo + static_cast<long>(ranks.size()) - 1, std::move(ranks),
                std::move(boundary)};
  std::string defect = complex_defect(c);
  internal_check(defect.empty(), "malformed complex: " + defect);
  return c;
}

// zero-pad the degree range outward
inline FreeComplex extend_complex(const FreeComplex& c, long lo, long hi) {
  internal_check(lo <= c.lo && hi >= c.hi, "extension must contain the original range");
  std::vector<long> ranks;
  std::vector<GroupRingMat<Int>> boundary;
  for (long d = lo; d <= hi; ++d) ranks.push_back(c.rank_at(d));
  for (long d = lo; d < hi; ++d) {
    if (d + 1 > c.lo && d + 1 <= c.hi)
      boundary.push_back(c.boundary[d + 1 - c.lo - 1]);
    else
      boundary.emplace_back(c.group, c.rank_at(d), c.rank_at(d + 1));
  }
  return make_complex(c.group, lo, std::move(ranks), std::move(boundary));
}

inline FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
  internal_check(a.group.get() == b.group.get(), "summands over different groups");
  long lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
  std::vector<long> ranks;
  std::vector<GroupRingMat<Int>> boundary;
  for (long d = lo; d <= hi; ++d) ranks.push_back(a.rank_at(d) + b.rank_at(d));
  for (long d = lo; d < hi; ++d) {
    GroupRingMat<Int> m(a.group, a.rank_at(d) + b.rank_at(d), a.rank_at(d + 1) + b.rank_at(d + 1));
    auto put_block = [&](const FreeComplex& c, long roff, long coff) {
      if (d + 1 <= c.lo || d + 1 > c.hi) return;
      const auto& blk = c.boundary[d + 1 - c.lo - 1];
      for (long i = 0; i < blk.rows; ++i)
        for (long j = 0; j < blk.cols; ++j) m.at(roff + i, coff + j) = blk.at(i, j);
    };
    put_block(a, 0, 0);
    put_block(b, a.rank_at(d), a.rank_at(d + 1));
    boundary.push_back(std::move(m));
  }
  return make_complex(a.group, lo, std::move(ranks), std::move(boundary));
}

// two-term complex in degrees n, n+1 whose only differential is alpha
inline FreeComplex make_w0_complex(const GroupRingMat<Int>& alpha, long n) {
  require(wh_membership(alpha), errc::not_in_wh,
          "differential does not augment to an invertible integer matrix");
  return make_complex(alpha.group, n, {alpha.rows, alpha.cols}, {alpha});
}

// ---------------------------------------------------------------------------
// chain maps and cones

struct ChainMap {
  FreeComplex source, target;  // equal degree ranges (extend_complex to align)
  std::vector<GroupRingMat<Int>> f;  // one block per degree
};

inline ChainMap make_chain_map(FreeComplex source, FreeComplex target,
                               std::vector<GroupRingMat<Int>> f) {
  internal_check(source.group.get() == target.group.get(), "chain map across different groups");
  internal_check(source.lo == target.lo && source.hi == target.hi,
                 "chain map needs aligned degree ranges");
  long len = source.hi - source.lo + 1;
  internal_check(static_cast<long>(f.size()) == len, "one block per degree required");
  for (long k = 0; k < len; ++k)
    internal_check(f[k].rows == target.ranks[k] && f[k].cols == source.ranks[k],
                   "chain map block shape mismatch");
  for (long k = 0; k + 1 < len; ++k)
    internal_check(mul(target.boundary[k], f[k + 1]) == mul(f[k], source.boundary[k]),
                   "chain map does not commute with the boundaries");
  return ChainMap{std::move(source), std::move(target), std::move(f)};
}

inline ChainMap identity_chain_map(const FreeComplex& c) {
  std::vector<GroupRingMat<Int>> f;
  for (long r : c.ranks) f.push_back(gr_identity_matrix(c.group, r));
  return make_chain_map(c, c, std::move(f));
}

inline ChainMap zero_chain_map(const FreeComplex& source, const FreeComplex& target) {
  internal_check(source.lo == target.lo && source.hi == target.hi, "ranges must align");
  std::vector<GroupRingMat<Int>> f;
  for (std::size_t k = 0; k < source.ranks.size(); ++k)
    f.emplace_back(source.group, target.ranks[k], source.ranks[k]);
  return make_chain_map(source, target, std::move(f));
}

// cone(f)_n = source_{n-1} (+) target_n with d(x, y) = (-dx, f(x) + dy)
inline FreeComplex mapping_cone(const ChainMap& cm) {
  const FreeComplex& s = cm.source;
  const FreeComplex& t = cm.target;
  long lo = s.lo, hi = s.hi + 1;
  auto srank = [&](long d) { return s.rank_at(d - 1); };
  std::vector<long> ranks;
  for (long d = lo; d <= hi; ++d) ranks.push_back(srank(d) + t.rank_at(d));
  std::vector<GroupRingMat<Int>> boundary;
  for (long d = lo; d < hi; ++d) {
    // differential cone_{d+1} -> cone_d
    GroupRingMat<Int> m(s.group, srank(d) + t.rank_at(d), srank(d + 1) + t.rank_at(d + 1));
    if (d > s.lo && d <= s.hi) {
      const auto& ds = s.boundary[d - s.lo - 1];  // source_{d} -> source_{d-1}
      for (long i = 0; i < ds.rows; ++i)
        for (long j = 0; j < ds.cols; ++j) m.at(i, j) = -ds.at(i, j);
    }
    if (d >= s.lo && d <= s.hi) {
      const auto& blk = cm.f[d - s.lo];  // target_d x source_d
      for (long i = 0; i < blk.rows; ++i)
        for (long j = 0; j < blk.cols; ++j) m.at(srank(d) + i, j) = blk.at(i, j);
    }
    if (d + 1 <= t.hi) {
      const auto& dt = t.boundary[d - t.lo];  // target_{d+1} -> target_d
      for (long i = 0; i < dt.rows; ++i)
        for (long j = 0; j < dt.cols; ++j) m.at(srank(d) + i, srank(d + 1) + j) = dt.at(i, j);
    }
    boundary.push_back(std::move(m));
  }
  return make_complex(s.group, lo, std::move(ranks), std::move(boundary));
}

// ---------------------------------------------------------------------------
// degreewise coefficient homology

struct Coefficients {
  enum Kind { integers, p_local, p_local_group };
  Kind kind = integers;
  long p = 0;

  static Coefficients Z() { return {integers, 0}; }
  static Coefficients Zp(long p) { return {p_local, p}; }
  static Coefficients ZpGp(long p) { return {p_local_group, p}; }
};

// one descriptor per degree lo..hi; for the Z_(p)[G_p] choice the complex is
// blown up through G -> G_p and the regular representation, and the answer is
// read as a Z_(p)-module (free rank counted over Z_(p))
inline std::vector<AbelianGroup> coefficient_homology(const FreeComplex& c,
                                                      const Coefficients& coeff,
                                                      const HomologyOptions& opt = {}) {
  if (coeff.kind != Coefficients::integers)
    require(is_prime(coeff.p), errc::not_prime, std::to_string(coeff.p) + " is not prime");

  long unit = 1;  // scalar rank per free generator
  std::vector<IntMat> mats;
  if (coeff.kind == Coefficients::p_local_group) {
    auto [q, pi] = p_quotient(c.group, coeff.p);
    unit = q->order;
    for (const auto& b : c.boundary) {
      IntMat big(b.rows * unit, b.cols * unit);
      for (long i = 0; i < b.rows; ++i)
        for (long j = 0; j < b.cols; ++j) {
          IntMat rep = regular_representation(map_through(pi, b.at(i, j)));
          for (long a = 0; a < unit; ++a)
            for (long bb = 0; bb < unit; ++bb) big.at(i * unit + a, j * unit + bb) = rep.at(a, bb);
        }
      mats.push_back(std::move(big));
    }
  } else {
    for (const auto& b : c.boundary) mats.push_back(augmentation_matrix(b));
  }

  std::vector<std::vector<Int>> div;
  for (const auto& m : mats)
    div.push_back(elementary_divisors(SparseIntMat::from_dense(m, opt.budget)));

  long len = c.hi - c.lo + 1;
  std::vector<AbelianGroup> out;
  for (long k = 0; k < len; ++k) {
    long rank_in = k > 0 ? static_cast<long>(div[k - 1].size()) : 0;   // rank of d into degree k-1
    long rank_out = k < len - 1 ? static_cast<long>(div[k].size()) : 0;
    long free_rank = c.ranks[k] * unit - rank_in - rank_out;
    internal_check(free_rank >= 0, "negative free rank in complex homology");
    AbelianGroup h = abelian_from_divisors(free_rank, k < len - 1 ? div[k] : std::vector<Int>{});
    if (coeff.kind != Coefficients::integers) h = strip_to_p_part(h, coeff.p);
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------
// W-acyclicity
//
// The pullback square gives a short exact coefficient sequence
//   0 -> Lambda -> Z (+) prod_p Z_(p)[G_p] -> prod_p Z_(p) -> 0,
// and W-acyclicity (homology over Lambda vanishing) is equivalent, for
// bounded complexes of f.g. free modules, to the vanishing of the homology
// with Z coefficients and with every Z_(p)[G_p] coefficient: vanishing makes
// the connecting square map an isomorphism of zero modules, and conversely an
// acyclic bounded free Lambda-complex is contractible, so every base change
// of it is acyclic too.

inline bool is_w_acyclic(const FreeComplex& c, const HomologyOptions& opt = {}) {
  auto all_zero = [](const std::vector<AbelianGroup>& hs) {
    for (const auto& h : hs)
      if (!h.is_zero()) return false;
    return true;
  };
  bool ok = all_zero(coefficient_homology(c, Coefficients::Z(), opt));
  for (const auto& pq : nontrivial_p_quotients(c.group))
    if (ok) ok = all_zero(coefficient_homology(c, Coefficients::ZpGp(pq.p), opt));
  if (ok) {
    long euler = 0;
    for (long k = 0; k < static_cast<long>(c.ranks.size()); ++k)
      euler += ((c.lo + k) % 2 == 0 ? 1 : -1) * c.ranks[k];
    internal_check(euler == 0, "acyclic verdict with nonzero Euler characteristic");
  }
  return ok;
}

inline bool is_w_equivalence(const ChainMap& f, const HomologyOptions& opt = {}) {
  return is_w_acyclic(mapping_cone(f), opt);
}

}  // namespace cohn

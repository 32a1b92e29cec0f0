#pragma once

#include <map>
#include <vector>

#include "cohn/error.hpp"
#include "cohn/group.hpp"
#include "cohn/intmat.hpp"
#include "cohn/numbers.hpp"

namespace cohn {

inline bool scalar_is_zero(const Int& v) { return v == 0; }
inline bool scalar_is_zero(const Rat& v) { return v == 0; }
inline bool scalar_is_zero(const PLocal& v) { return v.is_zero(); }

// Element of R[G]: sparse coefficient map keyed by canonical element index.
// No zero coefficients are ever stored; iteration order is index order.
template <class S>
struct GroupRing {
  Group group;
  std::map<long, S> coeffs;

  GroupRing() = default;
  explicit GroupRing(Group g) : group(std::move(g)) {}

  bool is_zero() const { return coeffs.empty(); }

  void add_term(long idx, const S& c) {
    internal_check(idx >= 0 && idx < group->order, "coefficient index out of range");
    if (scalar_is_zero(c)) return;
    auto it = coeffs.find(idx);
    if (it == coeffs.end()) {
      coeffs.emplace(idx, c);
    } else {
      it->second = it->second + c;
      if (scalar_is_zero(it->second)) coeffs.erase(it);
    }
  }

  bool operator==(const GroupRing& o) const {
    internal_check(group.get() == o.group.get(), "comparing elements over different groups");
    return coeffs == o.coeffs;
  }
};

template <class S>
inline void check_same_group(const GroupRing<S>& a, const GroupRing<S>& b) {
  require(a.group.get() == b.group.get(), errc::group_mismatch,
          "operands live over different groups");
}

template <class S>
inline GroupRing<S> gr_term(const Group& g, long idx, S c) {
  GroupRing<S> e(g);
  e.add_term(idx, c);
  return e;
}

template <class S>
inline GroupRing<S> gr_unit(const Group& g, S one) {
  return gr_term(g, 0, std::move(one));
}

template <class S>
inline GroupRing<S> operator+(const GroupRing<S>& a, const GroupRing<S>& b) {
  check_same_group(a, b);
  GroupRing<S> out = a;
  for (const auto& [i, c] : b.coeffs) out.add_term(i, c);
  return out;
}

template <class S>
inline GroupRing<S> operator-(const GroupRing<S>& a) {
  GroupRing<S> out(a.group);
  for (const auto& [i, c] : a.coeffs) out.coeffs.emplace(i, -c);
  return out;
}

template <class S>
inline GroupRing<S> operator-(const GroupRing<S>& a, const GroupRing<S>& b) {
  return a + (-b);
}

// convolution product
template <class S>
inline GroupRing<S> operator*(const GroupRing<S>& a, const GroupRing<S>& b) {
  check_same_group(a, b);
  GroupRing<S> out(a.group);
  for (const auto& [i, ci] : a.coeffs)
    for (const auto& [j, cj] : b.coeffs) out.add_term(a.group->mult(i, j), ci * cj);
  return out;
}

template <class S>
inline GroupRing<S> scale(const S& s, const GroupRing<S>& a) {
  GroupRing<S> out(a.group);
  for (const auto& [i, c] : a.coeffs) out.add_term(i, s * c);
  return out;
}

// augmentation: sum of coefficients (every group element to 1)
template <class S>
inline S augmentation(const GroupRing<S>& e, S zero) {
  S acc = std::move(zero);
  for (const auto& [i, c] : e.coeffs) acc = acc + c;
  return acc;
}

inline Int augmentation(const GroupRing<Int>& e) { return augmentation(e, Int(0)); }

// omega = |P| - (sum of all elements of P), for a p-group P. Central, and
// omega^2 = |P| * omega; both are asserted here because downstream identity
// checks lean on them.
template <class S>
inline GroupRing<S> omega_element(const Group& p_group, const S& one) {
  auto facs = factorize(p_group->order);
  require(p_group->order == 1 || facs.size() == 1, errc::not_p_group,
          "omega needs a p-group, got order " + std::to_string(p_group->order));
  GroupRing<S> omega(p_group);
  S n = one;  // build |P| as repeated addition to stay generic
  for (long k = 1; k < p_group->order; ++k) n = n + one;
  omega.add_term(0, n);
  for (long x = 0; x < p_group->order; ++x) omega.add_term(x, -one);
  GroupRing<S> n_omega = scale(n, omega);
  internal_check(omega * omega == n_omega, "omega^2 != n*omega");
  for (long x = 0; x < p_group->order; ++x) {
    auto gx = gr_term(p_group, x, one);
    internal_check(gx * omega == omega * gx, "omega is not central");
  }
  return omega;
}

// matrix of left multiplication by e in the canonical basis:
// column j holds the coefficients of e * g_j
inline IntMat regular_representation(const GroupRing<Int>& e) {
  long n = e.group->order;
  IntMat m(n, n);
  for (long j = 0; j < n; ++j)
    for (const auto& [k, c] : e.coeffs) m.at(e.group->mult(k, j), j) += c;
  return m;
}

inline RatMat regular_representation_rat(const GroupRing<PLocal>& e) {
  long n = e.group->order;
  RatMat m(n, n);
  for (long j = 0; j < n; ++j)
    for (const auto& [k, c] : e.coeffs) m.at(e.group->mult(k, j), j) += c.v;
  return m;
}

// Inversion in Z_(p)[P] for a p-group P: solve rep(e) * v = delta_identity
// over Q and read v as the coefficient vector of the inverse. The solution
// exists and is p-local whenever the augmentation is a unit of Z_(p); a
// non-p-local coefficient would contradict that, so it is an internal error.
inline GroupRing<PLocal> pgroup_local_invert(const GroupRing<PLocal>& e) {
  require(!e.coeffs.empty(), errc::not_a_unit, "zero element has no inverse");
  long p = e.coeffs.begin()->second.p;
  require(is_prime_power(e.group->order, p), errc::not_p_group,
          "group order " + std::to_string(e.group->order) + " is not a power of " +
              std::to_string(p));
  PLocal aug = augmentation(e, PLocal(p, Rat(0)));
  require(aug.is_unit(), errc::not_a_unit,
          "augmentation " + aug.str() + " is not a unit of Z_(" + std::to_string(p) + ")");

  long n = e.group->order;
  RatMat rep = regular_representation_rat(e);
  RatMat aug_sys(n, n + 1);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) aug_sys.at(i, j) = rep.at(i, j);
  aug_sys.at(0, n) = 1;  // right hand side: coefficient vector of 1

  // forward elimination with partial (first nonzero) pivoting
  long rank = 0;
  for (long c = 0; c < n && rank < n; ++c) {
    long piv = -1;
    for (long r = rank; r < n; ++r)
      if (aug_sys.at(r, c) != 0) { piv = r; break; }
    internal_check(piv >= 0, "regular representation singular for a unit augmentation");
    if (piv != rank)
      for (long j = 0; j <= n; ++j) std::swap(aug_sys.at(rank, j), aug_sys.at(piv, j));
    Rat d = aug_sys.at(rank, c);
    for (long j = 0; j <= n; ++j) aug_sys.at(rank, j) /= d;
    for (long r = 0; r < n; ++r) {
      if (r == rank) continue;
      Rat f = aug_sys.at(r, c);
      if (f == 0) continue;
      for (long j = 0; j <= n; ++j) aug_sys.at(r, j) -= f * aug_sys.at(rank, j);
    }
    ++rank;
  }
  internal_check(rank == n, "regular representation singular for a unit augmentation");

  GroupRing<PLocal> inv(e.group);
  for (long i = 0; i < n; ++i) {
    const Rat& v = aug_sys.at(i, n);
    if (v == 0) continue;
    internal_check(v.get_den() % p != 0, "inverse coefficient is not p-local");
    inv.add_term(i, PLocal(p, v));
  }
  auto one = gr_unit(e.group, PLocal(p, Rat(1)));
  internal_check(e * inv == one && inv * e == one, "inverse verification failed");
  return inv;
}

// push an integer group-ring element through a group homomorphism
inline GroupRing<Int> map_through(const GroupHom& f, const GroupRing<Int>& e) {
  require(f.source.get() == e.group.get(), errc::group_mismatch,
          "element does not live over the homomorphism source");
  GroupRing<Int> out(f.target);
  for (const auto& [i, c] : e.coeffs) out.add_term(f.images[i], c);
  return out;
}

// same, landing in Z_(p)[target]
inline GroupRing<PLocal> map_through_plocal(const GroupHom& f, const GroupRing<Int>& e, long p) {
  require(f.source.get() == e.group.get(), errc::group_mismatch,
          "element does not live over the homomorphism source");
  GroupRing<PLocal> out(f.target);
  for (const auto& [i, c] : e.coeffs) out.add_term(f.images[i], PLocal::integer(p, c));
  return out;
}

// ---------------------------------------------------------------------------
// matrices over a group ring

template <class S>
struct GroupRingMat {
  Group group;
  long rows = 0, cols = 0;
  std::vector<GroupRing<S>> e;

  GroupRingMat() = default;
  GroupRingMat(Group g, long r, long c)
      : group(std::move(g)), rows(r), cols(c), e(static_cast<std::size_t>(r) * c, GroupRing<S>(group)) {}

  GroupRing<S>& at(long r, long c) { return e[static_cast<std::size_t>(r) * cols + c]; }
  const GroupRing<S>& at(long r, long c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const GroupRingMat& o) const {
    return rows == o.rows && cols == o.cols && e == o.e;
  }
};

template <class S>
inline GroupRingMat<S> mul(const GroupRingMat<S>& x, const GroupRingMat<S>& y) {
  require(x.group.get() == y.group.get(), errc::group_mismatch, "matrix groups differ");
  internal_check(x.cols == y.rows, "dimension mismatch in matrix product");
  GroupRingMat<S> z(x.group, x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (long j = 0; j < y.cols; ++j)
        if (!y.at(k, j).is_zero()) z.at(i, j) = z.at(i, j) + x.at(i, k) * y.at(k, j);
    }
  return z;
}

// entrywise augmentation of a Z[G] matrix
inline IntMat augmentation_matrix(const GroupRingMat<Int>& m) {
  IntMat out(m.rows, m.cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) out.at(i, j) = augmentation(m.at(i, j));
  return out;
}

inline GroupRingMat<Int> gr_identity_matrix(const Group& g, long n) {
  GroupRingMat<Int> m(g, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = gr_unit(g, Int(1));
  return m;
}

}  // namespace cohn

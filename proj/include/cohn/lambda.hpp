#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "cohn/error.hpp"
#include "cohn/group.hpp"
#include "cohn/groupring.hpp"
#include "cohn/intmat.hpp"

namespace cohn {

// Everything Lambda(G) needs: the nontrivial p-quotients (ascending primes)
// and the universal nilpotent quotient G' they multiply up to.
struct LambdaContext {
  Group g;
  Group gprime;
  GroupHom to_gprime;
  std::vector<PQuotient> quotients;
};

using Ctx = std::shared_ptr<const LambdaContext>;

inline Ctx build_context(const Group& g) {
  auto ctx = std::make_shared<LambdaContext>();
  ctx->g = g;
  ctx->quotients = nontrivial_p_quotients(g);
  auto [gp, pi] = universal_nilpotent_quotient(g);
  ctx->gprime = gp;
  ctx->to_gprime = pi;
  long prod = 1;
  for (const auto& q : ctx->quotients) prod *= q.q->order;
  internal_check(prod == gp->order && g->order % prod == 0,
                 "product of p-quotients inconsistent with the nilpotent quotient");
  return ctx;
}

// Pullback element: an integer z plus one Z_(p)[G_p] component per context
// prime, tied together by augmentation(component) = z.
struct LambdaElement {
  Ctx ctx;
  Int z = 0;
  std::vector<GroupRing<PLocal>> comp;

  bool is_zero() const {
    if (z != 0) return false;
    for (const auto& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const LambdaElement& o) const {
    internal_check(ctx.get() == o.ctx.get(), "comparing elements over different contexts");
    return z == o.z && comp == o.comp;
  }
};

inline void check_pullback(const LambdaElement& e) {
  for (std::size_t k = 0; k < e.comp.size(); ++k) {
    long p = e.ctx->quotients[k].p;
    PLocal aug = augmentation(e.comp[k], PLocal(p, Rat(0)));
    internal_check(aug.v == Rat(e.z), "component augmentation disagrees with the Z corner");
  }
}

inline LambdaElement lambda_from_int(const Ctx& ctx, Int z) {
  LambdaElement e;
  e.ctx = ctx;
  e.z = std::move(z);
  for (const auto& q : ctx->quotients)
    e.comp.push_back(gr_term(q.q, 0L, PLocal::integer(q.p, e.z)));
  check_pullback(e);
  return e;
}

inline LambdaElement lambda_zero(const Ctx& ctx) { return lambda_from_int(ctx, 0); }
inline LambdaElement lambda_one(const Ctx& ctx) { return lambda_from_int(ctx, 1); }

// the canonical ring map Z[G] -> Lambda(G)
inline LambdaElement canonical_map(const Ctx& ctx, const GroupRing<Int>& e) {
  require(ctx->g.get() == e.group.get(), errc::context_mismatch,
          "element lives over a different group than the context");
  LambdaElement out;
  out.ctx = ctx;
  out.z = augmentation(e);
  for (const auto& q : ctx->quotients) out.comp.push_back(map_through_plocal(q.pi, e, q.p));
  check_pullback(out);
  return out;
}

inline LambdaElement operator+(const LambdaElement& a, const LambdaElement& b) {
  internal_check(a.ctx.get() == b.ctx.get(), "mixed contexts");
  LambdaElement out{a.ctx, a.z + b.z, {}};
  for (std::size_t k = 0; k < a.comp.size(); ++k) out.comp.push_back(a.comp[k] + b.comp[k]);
  check_pullback(out);
  return out;
}
inline LambdaElement operator-(const LambdaElement& a) {
  LambdaElement out{a.ctx, -a.z, {}};
  for (const auto& c : a.comp) out.comp.push_back(-c);
  return out;
}
inline LambdaElement operator-(const LambdaElement& a, const LambdaElement& b) { return a + (-b); }
inline LambdaElement operator*(const LambdaElement& a, const LambdaElement& b) {
  internal_check(a.ctx.get() == b.ctx.get(), "mixed contexts");
  LambdaElement out{a.ctx, a.z * b.z, {}};
  for (std::size_t k = 0; k < a.comp.size(); ++k) out.comp.push_back(a.comp[k] * b.comp[k]);
  check_pullback(out);
  return out;
}

// Lambda -> Z is a local morphism, so e is a unit exactly when z = +-1.
inline bool lambda_is_unit(const LambdaElement& e) { return e.z == 1 || e.z == -1; }

inline LambdaElement lambda_invert(const LambdaElement& e) {
  require(lambda_is_unit(e), errc::not_a_unit,
          "Z corner " + int_str(e.z) + " is not +-1, element is not a unit");
  LambdaElement out{e.ctx, e.z, {}};  // 1/z = z for z = +-1
  for (const auto& c : e.comp) out.comp.push_back(pgroup_local_invert(c));
  check_pullback(out);
  internal_check(e * out == lambda_one(e.ctx) && out * e == lambda_one(e.ctx),
                 "unit inverse verification failed");
  return out;
}

// ---------------------------------------------------------------------------
// W^h / W^s membership over B = Z: determinant of the augmented matrix

inline bool wh_membership(const GroupRingMat<Int>& m) {
  require(m.rows == m.cols, errc::not_square, "W membership needs a square matrix");
  Int d = det(augmentation_matrix(m));
  return d == 1 || d == -1;
}

inline bool ws_membership(const GroupRingMat<Int>& m) {
  require(m.rows == m.cols, errc::not_square, "W membership needs a square matrix");
  return det(augmentation_matrix(m)) == 1;
}

// ---------------------------------------------------------------------------
// matrices over Lambda

struct LambdaMat {
  Ctx ctx;
  long rows = 0, cols = 0;
  std::vector<LambdaElement> e;

  LambdaMat() = default;
  LambdaMat(Ctx c, long r, long n)
      : ctx(std::move(c)), rows(r), cols(n), e(static_cast<std::size_t>(r) * n, lambda_zero(ctx)) {}

  LambdaElement& at(long r, long c) { return e[static_cast<std::size_t>(r) * cols + c]; }
  const LambdaElement& at(long r, long c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

  static LambdaMat identity(const Ctx& ctx, long n) {
    LambdaMat m(ctx, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = lambda_one(ctx);
    return m;
  }
  bool operator==(const LambdaMat& o) const {
    return rows == o.rows && cols == o.cols && e == o.e;
  }
};

inline LambdaMat mul(const LambdaMat& x, const LambdaMat& y) {
  internal_check(x.ctx.get() == y.ctx.get() && x.cols == y.rows, "lambda matrix product mismatch");
  LambdaMat z(x.ctx, x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k)
      for (long j = 0; j < y.cols; ++j)
        z.at(i, j) = z.at(i, j) + x.at(i, k) * y.at(k, j);
  return z;
}

inline LambdaMat lambda_matrix_of(const Ctx& ctx, const GroupRingMat<Int>& m) {
  LambdaMat out(ctx, m.rows, m.cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) out.at(i, j) = canonical_map(ctx, m.at(i, j));
  return out;
}

// Invert a square Lambda matrix whose Z corner is invertible over Z. The Z
// corner inverts exactly; each p corner is blown up through the regular
// representation to an (n*|G_p|) rational matrix, inverted, and read back.
// Read-back coefficients must be p-local (that is the content of the p-group
// local-ring property), so a violation is internal.
inline LambdaMat lambda_matrix_invert(const LambdaMat& m) {
  require(m.rows == m.cols, errc::not_square, "inverse of a non-square matrix");
  long n = m.rows;
  IntMat zc(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) zc.at(i, j) = m.at(i, j).z;
  Int d = det(zc);
  require(d == 1 || d == -1, errc::not_invertible_over_z,
          "Z corner determinant " + int_str(d) + " is not +-1");

  auto zinv_q = rat_inverse(RatMat::from_int(zc));
  internal_check(zinv_q.has_value(), "unimodular matrix failed to invert");
  IntMat zinv(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const Rat& v = zinv_q->at(i, j);
      internal_check(v.get_den() == 1, "inverse of a unimodular matrix must be integral");
      zinv.at(i, j) = v.get_num();
    }

  LambdaMat out(m.ctx, n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      out.at(i, j).ctx = m.ctx;
      out.at(i, j).z = zinv.at(i, j);
      out.at(i, j).comp.resize(m.ctx->quotients.size());
    }

  for (std::size_t k = 0; k < m.ctx->quotients.size(); ++k) {
    const auto& q = m.ctx->quotients[k];
    long g = q.q->order;
    RatMat blow(n * g, n * g);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        RatMat block = regular_representation_rat(m.at(i, j).comp[k]);
        for (long a = 0; a < g; ++a)
          for (long b = 0; b < g; ++b) blow.at(i * g + a, j * g + b) = block.at(a, b);
      }
    auto binv = rat_inverse(blow);
    internal_check(binv.has_value(), "p corner blow-up singular despite unimodular Z corner");
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        GroupRing<PLocal> entry(q.q);
        for (long a = 0; a < g; ++a) {
          const Rat& v = binv->at(i * g + a, j * g + 0);  // column of the identity basis vector
          if (v == 0) continue;
          internal_check(v.get_den() % q.p != 0, "inverse entry is not p-local");
          entry.add_term(a, PLocal(q.p, v));
        }
        out.at(i, j).comp[k] = std::move(entry);
      }
  }

  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) check_pullback(out.at(i, j));
  LambdaMat id = LambdaMat::identity(m.ctx, n);
  internal_check(mul(m, out) == id && mul(out, m) == id, "matrix inverse verification failed");
  return out;
}

// ---------------------------------------------------------------------------
// identity checks

// (1-x)(1-y) = 0 in Lambda for coprime-order x, y; checked both ways round.
inline bool coprime_vanishing_check(const Ctx& ctx, long x, long y) {
  long ox = element_order(*ctx->g, x), oy = element_order(*ctx->g, y);
  require(std::gcd(ox, oy) == 1, errc::not_coprime_orders,
          "orders " + std::to_string(ox) + ", " + std::to_string(oy) + " share a factor");
  auto one = gr_unit(ctx->g, Int(1));
  LambdaElement a = canonical_map(ctx, one - gr_term(ctx->g, x, Int(1)));
  LambdaElement b = canonical_map(ctx, one - gr_term(ctx->g, y, Int(1)));
  return (a * b).is_zero() && (b * a).is_zero();
}

// per-prime components of x need lifts that are trivial at the other primes;
// those exist because G -> G' is onto (asserted at context build)
inline std::vector<long> isolated_lifts(const Ctx& ctx, long x, std::size_t k) {
  long tuple = 0;
  for (std::size_t i = 0; i < ctx->quotients.size(); ++i)
    tuple = tuple * ctx->quotients[i].q->order + (i == k ? ctx->quotients[k].pi.images[x] : 0);
  std::vector<long> lifts;
  for (long g = 0; g < ctx->g->order && lifts.size() < 2; ++g)
    if (ctx->to_gprime.images[g] == tuple) lifts.push_back(g);
  internal_check(!lifts.empty(), "no lift found although G -> G' is onto");
  return lifts;
}

// phi(1-x) = sum_p phi(1-x_p), lift independent
inline bool sublemma_check(const Ctx& ctx, long x) {
  auto one = gr_unit(ctx->g, Int(1));
  auto phi_one_minus = [&](long g) {
    return canonical_map(ctx, one - gr_term(ctx->g, g, Int(1)));
  };
  LambdaElement lhs = phi_one_minus(x);
  LambdaElement rhs = lambda_zero(ctx);
  for (std::size_t k = 0; k < ctx->quotients.size(); ++k) {
    auto lifts = isolated_lifts(ctx, x, k);
    LambdaElement term = phi_one_minus(lifts[0]);
    if (lifts.size() > 1)
      internal_check(term == phi_one_minus(lifts[1]), "lift independence failed");
    rhs = rhs + term;
  }
  return lhs == rhs;
}

// perfect subgroups die in Lambda: phi(h) = 1 for every member
inline bool perfect_subgroup_kill_check(const Ctx& ctx, const NormalSubgroup& h) {
  require(h.parent.get() == ctx->g.get(), errc::context_mismatch,
          "subgroup belongs to a different group");
  auto comm = commutator_subgroup(*ctx->g, h.members, h.members);
  require(comm == h.members, errc::not_perfect, "subgroup is not perfect");
  for (long x : h.members)
    if (!(canonical_map(ctx, gr_term(ctx->g, x, Int(1))) == lambda_one(ctx))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// nilpotency classification

struct NilpotencyReport {
  bool nilpotent = false;
  NormalSubgroup kernel;  // of G -> G'
  bool verdict = false;   // the five equivalent conditions hold
  std::vector<std::pair<long, GroupRing<Int>>> omegas;  // nilpotent case only
};

inline NilpotencyReport nilpotency_report(const Group& g) {
  NilpotencyReport rep;
  rep.nilpotent = is_nilpotent(g);
  rep.verdict = rep.nilpotent;
  auto [gp, pi] = universal_nilpotent_quotient(g);
  std::vector<long> ker;
  for (long x = 0; x < g->order; ++x)
    if (pi.images[x] == 0) ker.push_back(x);
  rep.kernel = NormalSubgroup{g, std::move(ker)};
  if (rep.nilpotent) {
    for (auto [p, e] : factorize(g->order)) {
      std::vector<long> sp;
      for (long x = 0; x < g->order; ++x)
        if (is_prime_power(element_order(*g, x), p)) sp.push_back(x);
      internal_check(subgroup_closure(*g, sp) == sp,
                     "p-power elements fail to form a subgroup in a nilpotent group");
      GroupRing<Int> omega(g);
      omega.add_term(0, Int(static_cast<long>(sp.size())));
      for (long x : sp) omega.add_term(x, Int(-1));
      Int np(static_cast<long>(sp.size()));
      internal_check(omega * omega == scale(np, omega), "omega_p^2 != n_p omega_p");
      for (long x = 0; x < g->order; ++x) {
        auto gx = gr_term(g, x, Int(1));
        internal_check(gx * omega == omega * gx, "omega_p is not central");
      }
      rep.omegas.emplace_back(p, std::move(omega));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// display names and descriptors

inline std::string p_group_display_name(const Group& g) {
  long n = g->order;
  if (n == 1) return "1";
  for (long x = 0; x < n; ++x)
    if (element_order(*g, x) == n) return "C" + std::to_string(n);
  bool abelian = true;
  for (long a = 0; a < n && abelian; ++a)
    for (long b = 0; b < a; ++b)
      if (g->mult(a, b) != g->mult(b, a)) { abelian = false; break; }
  if (abelian) {
    std::string out;
    for (long d : abelian_invariants(*g)) {
      if (!out.empty()) out += "x";
      out += "C" + std::to_string(d);
    }
    return out;
  }
  return "P" + std::to_string(n);  // nonabelian p-group, named by order
}

struct RingDescriptor {
  long p = 0;
  long gp_order = 1;
  std::string text;
};

// names Z_(p)[G_p]; the localization of Z[G] -> Z/p agrees with it and is
// reported through the same descriptor
inline RingDescriptor mod_p_localization_descriptor(const Group& g, long p) {
  require(is_prime(p), errc::not_prime, std::to_string(p) + " is not prime");
  auto [q, pi] = p_quotient(g, p);
  RingDescriptor d;
  d.p = p;
  d.gp_order = q->order;
  if (q->order == 1)
    d.text = "Z_(" + std::to_string(p) + ")";
  else
    d.text = "Z_(" + std::to_string(p) + ")[" + p_group_display_name(q) + "]";
  return d;
}

inline std::string lambda_descriptor(const Ctx& ctx, bool nilpotent) {
  std::string out = "Λ = ";
  if (ctx->quotients.empty()) {
    out += "Z";
  } else {
    std::string upper, lower;
    for (std::size_t k = 0; k < ctx->quotients.size(); ++k) {
      const auto& q = ctx->quotients[k];
      if (k) { upper += " × "; lower += "×"; }
      upper += "Z_(" + std::to_string(q.p) + ")[" + p_group_display_name(q.q) + "]";
      lower += "Z_(" + std::to_string(q.p) + ")";
    }
    if (ctx->quotients.size() > 1) upper = "(" + upper + ")";
    out += upper + " ×_{" + lower + "} Z";
  }
  out += nilpotent ? "; nilpotent" : "; not nilpotent";
  return out;
}

}  // namespace cohn

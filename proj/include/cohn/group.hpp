#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cohn/error.hpp"
#include "cohn/numbers.hpp"

namespace cohn {

// Multiplication-table group. Index 0 is the identity; the element ordering is
// fixed at construction (breadth-first closure order for permutation input)
// so every serialized artifact downstream is reproducible.
struct FiniteGroup {
  long order = 1;
  std::vector<long> table;     // order x order, row-major
  std::vector<long> inverses;
  std::vector<std::string> element_names;  // optional display labels

  long mult(long i, long j) const { return table[i * order + j]; }
  long inv(long i) const { return inverses[i]; }
};

using Group = std::shared_ptr<const FiniteGroup>;

struct GroupHom {
  Group source, target;
  std::vector<long> images;  // one target index per source element
};

struct NormalSubgroup {
  Group parent;
  std::vector<long> members;  // sorted, contains 0
};

namespace detail {

inline void validate_latin(const FiniteGroup& g) {
  long n = g.order;
  internal_check(static_cast<long>(g.table.size()) == n * n, "table size mismatch");
  std::vector<char> seen(n);
  for (long i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (long j = 0; j < n; ++j) {
      long v = g.mult(i, j);
      require(v >= 0 && v < n && !seen[v], errc::parse_error,
              "row " + std::to_string(i) + " of the multiplication table is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (long j = 0; j < n; ++j) {
      long v = g.mult(j, i);
      require(!seen[v], errc::parse_error,
              "column " + std::to_string(i) + " of the multiplication table repeats");
      seen[v] = 1;
    }
    require(g.mult(0, i) == i && g.mult(i, 0) == i, errc::parse_error,
            "index 0 is not the identity");
  }
}

inline void fill_inverses(FiniteGroup& g) {
  g.inverses.assign(g.order, -1);
  for (long i = 0; i < g.order; ++i)
    for (long j = 0; j < g.order; ++j)
      if (g.mult(i, j) == 0) { g.inverses[i] = j; break; }
  for (long i = 0; i < g.order; ++i)
    internal_check(g.inverses[i] >= 0, "element without inverse");
}

}  // namespace detail

// Build from a raw table (external input): full validation, including
// associativity, since a Latin square with identity need not be a group.
inline Group group_from_table(std::vector<long> table, long n) {
  require(n >= 1 && static_cast<long>(table.size()) == n * n, errc::parse_error,
          "multiplication table must be " + std::to_string(n) + "^2 entries");
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->table = std::move(table);
  detail::validate_latin(*g);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        require(g->mult(g->mult(a, b), c) == g->mult(a, g->mult(b, c)), errc::parse_error,
                "multiplication table is not associative");
  detail::fill_inverses(*g);
  return g;
}

// Internal constructions (closures, quotients, products) are groups by
// construction; they get the cheap checks only.
inline Group group_from_table_trusted(std::vector<long> table, long n) {
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->table = std::move(table);
  detail::validate_latin(*g);
  detail::fill_inverses(*g);
  return g;
}

using Permutation = std::vector<long>;

inline std::string cycle_name(const Permutation& p) {
  long d = static_cast<long>(p.size());
  std::vector<char> used(d, 0);
  std::string out;
  for (long s = 0; s < d; ++s) {
    if (used[s] || p[s] == s) { used[s] = 1; continue; }
    out += "(";
    long x = s;
    bool first = true;
    while (!used[x]) {
      used[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Closure of a permutation generating set, breadth first. New elements of a
// layer are the products (known element) * (generator), enumerated with the
// generator index as the outer key and the left factor index as the inner
// one; that fixes the canonical ordering.
inline Group group_from_permutations(long degree, const std::vector<Permutation>& gens,
                                     long order_cap = 1 << 14) {
  require(degree >= 1, errc::parse_error, "degree must be positive");
  for (const auto& p : gens) {
    require(static_cast<long>(p.size()) == degree, errc::not_a_bijection,
            "generator length differs from the degree");
    std::vector<char> seen(degree, 0);
    for (long v : p) {
      require(v >= 0 && v < degree && !seen[v], errc::not_a_bijection,
              "generator is not a bijection on 0.." + std::to_string(degree - 1));
      seen[v] = 1;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, long> index{{id, 0}};
  std::vector<long> frontier{0};
  while (!frontier.empty()) {
    std::vector<long> next;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (long i : frontier) {
        Permutation w(degree);
        for (long x = 0; x < degree; ++x) w[x] = elems[i][gens[j][x]];  // (a*g)(x) = a(g(x))
        if (index.emplace(w, static_cast<long>(elems.size())).second) {
          elems.push_back(w);
          next.push_back(static_cast<long>(elems.size()) - 1);
          require(static_cast<long>(elems.size()) <= order_cap, errc::order_cap_exceeded,
                  "closure exceeded the order cap " + std::to_string(order_cap));
        }
      }
    }
    frontier = std::move(next);
  }

  long n = static_cast<long>(elems.size());
  std::vector<long> table(n * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Permutation w(degree);
      for (long x = 0; x < degree; ++x) w[x] = elems[i][elems[j][x]];
      table[i * n + j] = index.at(w);
    }
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->table = std::move(table);
  g->element_names.reserve(n);
  for (const auto& p : elems) g->element_names.push_back(cycle_name(p));
  detail::validate_latin(*g);
  detail::fill_inverses(*g);
  return g;
}

inline long element_order(const FiniteGroup& g, long x) {
  require(x >= 0 && x < g.order, errc::index_out_of_range,
          "element index " + std::to_string(x) + " out of range");
  long k = 1, y = x;
  while (y != 0) { y = g.mult(y, x); ++k; }
  return k;
}

// Subgroup generated by a set of indices (plain closure inside the table).
inline std::vector<long> subgroup_closure(const FiniteGroup& g, std::vector<long> gens) {
  std::set<long> members{0};
  for (long x : gens) members.insert(x);
  std::vector<long> queue(members.begin(), members.end());
  while (!queue.empty()) {
    long a = queue.back();
    queue.pop_back();
    for (long b : std::vector<long>(members.begin(), members.end())) {
      for (long w : {g.mult(a, b), g.mult(b, a)}) {
        if (members.insert(w).second) queue.push_back(w);
      }
    }
  }
  return {members.begin(), members.end()};
}

inline NormalSubgroup coprime_generated_subgroup(const Group& g, long p) {
  require(is_prime(p), errc::not_prime, std::to_string(p) + " is not prime");
  std::vector<long> gens;
  for (long x = 0; x < g->order; ++x)
    if (element_order(*g, x) % p != 0) gens.push_back(x);
  auto members = subgroup_closure(*g, std::move(gens));
  // the generating set is conjugation invariant, so the subgroup is normal;
  // assert it rather than trust it
  std::set<long> mem(members.begin(), members.end());
  for (long a = 0; a < g->order; ++a)
    for (long h : members)
      internal_check(mem.count(g->mult(g->mult(a, h), g->inv(a))) == 1,
                     "coprime-generated subgroup failed normality");
  return NormalSubgroup{g, std::move(members)};
}

inline void check_hom(const GroupHom& f) {
  internal_check(f.images.size() == static_cast<std::size_t>(f.source->order),
                 "homomorphism image list has wrong length");
  internal_check(f.images[0] == 0, "homomorphism does not fix the identity");
  for (long a = 0; a < f.source->order; ++a)
    for (long b = 0; b < f.source->order; ++b)
      internal_check(f.images[f.source->mult(a, b)] ==
                         f.target->mult(f.images[a], f.images[b]),
                     "images do not respect multiplication");
}

// Quotient by a normal subgroup. Cosets are ordered by their least member,
// which puts the identity coset first and re-canonicalizes the ordering.
inline std::pair<Group, GroupHom> quotient(const Group& g, const NormalSubgroup& n) {
  internal_check(n.parent.get() == g.get(), "subgroup belongs to a different group");
  long ord = g->order;
  std::vector<long> coset(ord, -1);
  long classes = 0;
  for (long a = 0; a < ord; ++a) {
    if (coset[a] >= 0) continue;
    for (long h : n.members) coset[g->mult(a, h)] = classes;
    internal_check(coset[a] == classes, "coset enumeration broke");
    ++classes;
  }
  std::vector<long> rep(classes, -1);
  for (long a = ord - 1; a >= 0; --a) rep[coset[a]] = a;  // least member wins
  std::vector<long> table(classes * classes);
  for (long i = 0; i < classes; ++i)
    for (long j = 0; j < classes; ++j) table[i * classes + j] = coset[g->mult(rep[i], rep[j])];
  Group q = group_from_table_trusted(std::move(table), classes);
  GroupHom pi{g, q, coset};
  check_hom(pi);
  return {q, pi};
}

// Largest p-group quotient: G modulo the subgroup generated by the elements
// of order coprime to p.
inline std::pair<Group, GroupHom> p_quotient(const Group& g, long p) {
  auto n = coprime_generated_subgroup(g, p);
  auto [q, pi] = quotient(g, n);
  internal_check(is_prime_power(q->order, p), "p-quotient order is not a power of p");
  return {q, pi};
}

struct PQuotient {
  long p;
  Group q;
  GroupHom pi;
};

inline std::vector<PQuotient> nontrivial_p_quotients(const Group& g) {
  std::vector<PQuotient> out;
  for (auto [p, e] : factorize(g->order)) {
    auto [q, pi] = p_quotient(g, p);
    if (q->order > 1) out.push_back(PQuotient{p, q, pi});
  }
  return out;
}

// Direct product with index pairing (a, b) -> a*|B| + b.
inline Group direct_product(const Group& a, const Group& b) {
  long na = a->order, nb = b->order, n = na * nb;
  std::vector<long> table(n * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
      table[i * n + j] = a->mult(ia, ja) * nb + b->mult(ib, jb);
    }
  return group_from_table_trusted(std::move(table), n);
}

inline Group trivial_group() { return group_from_table_trusted({0}, 1); }

// Subgroup generated by commutators [a, b], a in A, b in B.
inline std::vector<long> commutator_subgroup(const FiniteGroup& g, const std::vector<long>& a,
                                             const std::vector<long>& b) {
  std::vector<long> gens;
  for (long x : a)
    for (long y : b)
      gens.push_back(g.mult(g.mult(x, y), g.mult(g.inv(x), g.inv(y))));
  return subgroup_closure(g, std::move(gens));
}

inline std::vector<long> all_indices(const FiniteGroup& g) {
  std::vector<long> v(g.order);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline bool is_perfect(const FiniteGroup& g) {
  return static_cast<long>(commutator_subgroup(g, all_indices(g), all_indices(g)).size()) ==
         g.order;
}

// Lower central series nilpotency, cross-checked against the order identity
// |G| = prod |G_p| (the projection to the product of the p-quotients is
// bijective exactly for nilpotent G).
inline bool is_nilpotent(const Group& g) {
  std::vector<long> gamma = all_indices(*g);
  while (true) {
    std::vector<long> next = commutator_subgroup(*g, all_indices(*g), gamma);
    if (next == gamma) break;
    gamma = std::move(next);
  }
  bool by_series = gamma.size() == 1;

  long prod = 1;
  for (const auto& pq : nontrivial_p_quotients(g)) prod *= pq.q->order;
  bool by_quotients = prod == g->order;
  internal_check(by_series == by_quotients,
                 "lower central series disagrees with the p-quotient order identity");
  return by_series;
}

// The universal nilpotent quotient G' = prod of the nontrivial G_p, with the
// induced surjection G -> G'.
inline std::pair<Group, GroupHom> universal_nilpotent_quotient(const Group& g) {
  auto pqs = nontrivial_p_quotients(g);
  Group prod = trivial_group();
  std::vector<long> images(g->order, 0);
  for (const auto& pq : pqs) {
    long nb = pq.q->order;
    Group next = direct_product(prod, pq.q);
    for (long x = 0; x < g->order; ++x) images[x] = images[x] * nb + pq.pi.images[x];
    prod = next;
  }
  GroupHom pi{g, prod, std::move(images)};
  check_hom(pi);
  std::set<long> distinct(pi.images.begin(), pi.images.end());
  internal_check(static_cast<long>(distinct.size()) == prod->order,
                 "projection to the nilpotent quotient is not onto");
  return {prod, pi};
}

// ---------------------------------------------------------------------------
// abelian structure helpers (independent oracle for degree-1 homology)

// Invariant factors d_1 | d_2 | ... (each > 1) of a finite abelian group,
// recovered from the element-order statistics, prime by prime.
inline std::vector<long> abelian_invariants(const FiniteGroup& g) {
  for (long a = 0; a < g.order; ++a)
    for (long b = 0; b < a; ++b)
      internal_check(g.mult(a, b) == g.mult(b, a), "abelian_invariants on a nonabelian group");

  // per prime: multiplicity m_k of cyclic factors of order >= p^k equals
  // log_p #{x : x^(p^k) = e} - log_p #{x : x^(p^(k-1)) = e}
  std::map<long, std::vector<long>> factors;  // prime -> cyclic factor exponents, descending
  for (auto [p, e] : factorize(g.order)) {
    std::vector<long> counts{1};  // counts[k] = #{x : order(x) divides p^k}
    while (true) {
      long k = static_cast<long>(counts.size());
      long c = 0;
      for (long x = 0; x < g.order; ++x) {
        long y = x;
        for (long t = 1; t < k; ++t) {  // y = x^(p^k) by repeated p-th powers
          long z = 0;
          for (long s = 0; s < p; ++s) z = g.mult(z, y);
          y = z;
        }
        long z = 0;
        for (long s = 0; s < p; ++s) z = g.mult(z, y);
        if (z == 0) ++c;
      }
      counts.push_back(c);
      if (c == counts[k - 1]) break;  // stabilized at the full p-part
    }
    std::vector<long> exps;
    for (std::size_t k = 1; k + 1 < counts.size(); ++k) {
      long mk = 0, ratio = counts[k] / counts[k - 1];
      while (ratio > 1) { ratio /= p; ++mk; }
      // mk factors have exponent >= k; materialize by difference below
      exps.push_back(mk);
    }
    // exps[k-1] = number of factors with exponent >= k; convert to a list
    std::vector<long> list;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      long here = exps[k] - (k + 1 < exps.size() ? exps[k + 1] : 0);
      for (long t = 0; t < here; ++t) list.push_back(static_cast<long>(k) + 1);
    }
    std::sort(list.rbegin(), list.rend());
    if (!list.empty()) factors[p] = list;
  }

  std::size_t chains = 0;
  for (auto& [p, list] : factors) chains = std::max(chains, list.size());
  std::vector<long> inv(chains, 1);
  for (auto& [p, list] : factors)
    for (std::size_t i = 0; i < list.size(); ++i) {
      long pw = 1;
      for (long t = 0; t < list[i]; ++t) pw *= p;
      inv[chains - 1 - i] *= pw;  // largest factors align at the top of the chain
    }
  return inv;  // ascending divisibility chain
}

inline std::vector<long> abelianization_invariants(const Group& g) {
  auto comm = commutator_subgroup(*g, all_indices(*g), all_indices(*g));
  auto [q, pi] = quotient(g, NormalSubgroup{g, std::move(comm)});
  return abelian_invariants(*q);
}

}  // namespace cohn

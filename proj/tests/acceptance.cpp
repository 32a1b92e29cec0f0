// Acceptance gate: every release-blocking check, one pass/fail line each.
// Wall-clock limits are part of each verdict. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>

#include "cohn/suites.hpp"
#include "cohn/zoo.hpp"

using namespace cohn;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body,
               double limit_s) {
  bool ok = false;
  std::string extra;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    extra = std::string(" [threw: ") + e.what() + "]";
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt >= limit_s) {
    ok = false;
    extra += " [over time limit]";
  }
  std::printf("%s criterion %d: %s (%.2fs)%s\n", ok ? "pass" : "FAIL", n, name.c_str(), dt,
              extra.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Self-contained closure and lower-central-series walk on the raw table, kept
// free of the library's subgroup helpers so it can act as an oracle.
std::vector<long> raw_closure(const FiniteGroup& g, const std::set<long>& gens) {
  std::set<long> s{0};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<long> cur(s.begin(), s.end());
    for (long a : cur)
      for (long b : cur)
        if (s.insert(g.mult(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

bool raw_lcs_nilpotent(const Group& g) {
  std::vector<long> gamma(g->order);
  std::iota(gamma.begin(), gamma.end(), 0);
  while (true) {
    std::set<long> comms;
    for (long x = 0; x < g->order; ++x)
      for (long y : gamma)
        comms.insert(g->mult(g->mult(x, y), g->mult(g->inv(x), g->inv(y))));
    auto next = raw_closure(*g, comms);
    if (next == gamma) return gamma.size() == 1;
    gamma = std::move(next);
  }
}

bool quotient_structure() {
  struct Case {
    Group g;
    std::vector<std::pair<long, long>> expect;  // (p, |G_p|)
  };
  std::vector<Case> cases = {
      {symmetric_group(3), {{2, 2}}},  {alternating_group(4), {{3, 3}}},
      {dihedral_group(5), {{2, 2}}},   {cyclic_group(6), {{2, 2}, {3, 3}}},
      {symmetric_group(4), {{2, 2}}},  {alternating_group(5), {}},
  };
  for (const auto& c : cases) {
    auto pqs = nontrivial_p_quotients(c.g);
    if (pqs.size() != c.expect.size()) return false;
    for (std::size_t k = 0; k < pqs.size(); ++k)
      if (pqs[k].p != c.expect[k].first || pqs[k].q->order != c.expect[k].second) return false;

    // oracle: |G_p| = |G| / |closure of the p'-order elements|, and the
    // reported projection must kill exactly that closure
    for (auto [p, e] : factorize(c.g->order)) {
      std::set<long> coprime;
      for (long x = 0; x < c.g->order; ++x)
        if (std::gcd(element_order(*c.g, x), p) == 1) coprime.insert(x);
      auto kernel = raw_closure(*c.g, coprime);
      long expect_order = c.g->order / static_cast<long>(kernel.size());
      const PQuotient* found = nullptr;
      for (const auto& pq : pqs)
        if (pq.p == p) found = &pq;
      if (!found) {
        if (expect_order != 1) return false;
        continue;
      }
      if (found->q->order != expect_order) return false;
      std::set<long> ker_set(kernel.begin(), kernel.end());
      for (long x = 0; x < c.g->order; ++x)
        if ((found->pi.images[x] == 0) != (ker_set.count(x) > 0)) return false;
    }
  }
  return true;
}

bool matrix_battery() {
  auto g = symmetric_group(3);
  auto ctx = build_context(g);
  Rng rng(7321);
  for (int t = 0; t < 100; ++t) {
    auto m = random_wh_matrix(rng, g, 3);
    if (!wh_membership(m)) return false;
    auto lm = lambda_matrix_of(ctx, m);
    auto inv = lambda_matrix_invert(lm);
    auto id = LambdaMat::identity(ctx, 3);
    if (!(mul(lm, inv) == id) || !(mul(inv, lm) == id)) return false;
  }
  // pinned value: the 2-component of (2 - x)^{-1} is 2/3 + (1/3) xbar
  GroupRingMat<Int> m(g, 1, 1);
  m.at(0, 0) = gr_unit(g, Int(2)) - gr_term(g, 1, Int(1));
  auto inv = lambda_matrix_invert(lambda_matrix_of(ctx, m));
  if (ctx->quotients.size() != 1) return false;
  GroupRing<PLocal> expect(ctx->quotients[0].q);
  expect.add_term(0, PLocal(2, Rat(2, 3)));
  expect.add_term(1, PLocal(2, Rat(1, 3)));
  return inv.at(0, 0).comp[0] == expect && inv.at(0, 0).z == Int(1);
}

bool first_gap_a5() {
  HomologyOptions opt;
  opt.normalized = 1;
  auto gap = first_gap_lambda(alternating_group(5), 1, opt);
  return gap.str() == "Z/2";
}

bool classification_vs_series() {
  for (const auto& [name, g] : battery_groups()) {
    auto rep = nilpotency_report(g);
    bool oracle = raw_lcs_nilpotent(g);
    if (rep.nilpotent != oracle || rep.verdict != oracle) return false;
    if (!rep.nilpotent) {
      if (!rep.omegas.empty()) return false;
      continue;
    }
    auto facs = factorize(g->order);
    if (rep.omegas.size() != facs.size()) return false;
    for (const auto& [p, omega] : rep.omegas) {
      long pp = 1, n = g->order;
      while (n % p == 0) {
        n /= p;
        pp *= p;
      }
      Int np = omega.coeffs.at(0) + 1;
      if (np != Int(pp)) return false;
      if (!(omega * omega == scale(np, omega))) return false;
      if (augmentation(omega) != 0) return false;
      // support: -1 on every p-power-order element except the identity
      for (const auto& [x, c] : omega.coeffs)
        if (x != 0 && c != Int(-1)) return false;
      for (long x = 1; x < g->order; ++x) {
        bool in_support = omega.coeffs.count(x) > 0;
        if (in_support != is_prime_power(element_order(*g, x), p)) return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "p-quotient lists match the closure oracle", quotient_structure, 5.0);
  criterion(2, "suite lemma32 (exhaustive coprime vanishing)",
            [] { return suite_lemma32().pass; }, 30.0);
  criterion(3, "suite prop110 (p-local inversion battery)",
            [] { return suite_prop110().pass; }, 60.0);
  criterion(4, "seeded 3x3 matrix inversion over Z[S3]", matrix_battery, 60.0);
  criterion(5, "suite example2 (first gap of A5)", first_gap_a5, 900.0);
  criterion(6, "suite quillen (coprime homology vanishing)",
            [] { return suite_quillen().pass; }, 300.0);
  criterion(7, "suite cex2 (product matrices)", [] { return suite_cex2().pass; }, 1.0);
  criterion(8, "suite complexes (acyclicity and two-of-three)",
            [] { return suite_complexes().pass; }, 300.0);
  criterion(9, "nilpotency classification vs lower central series",
            classification_vs_series, 60.0);
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}

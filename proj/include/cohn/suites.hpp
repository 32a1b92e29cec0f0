#pragma once

// Named verification suites behind the `verify` command. Every suite uses
// fixed seeds so its report text is byte-identical across runs.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cohn/cex2.hpp"
#include "cohn/complexes.hpp"
#include "cohn/homology.hpp"
#include "cohn/lambda.hpp"
#include "cohn/report.hpp"
#include "cohn/zoo.hpp"

namespace cohn {

// ---------------------------------------------------------------------------
// seeded random material shared by the batteries

inline GroupRing<Int> random_small_element(Rng& rng, const Group& g) {
  GroupRing<Int> e(g);
  long terms = rng.next(1, 3);
  for (long t = 0; t < terms; ++t)
    e.add_term(rng.next(0, g->order - 1), Int(rng.next(-2, 2)));
  return e;
}

// sum of c*(g - e) terms, so the augmentation is exactly zero
inline GroupRing<Int> random_aug_kernel_element(Rng& rng, const Group& g) {
  GroupRing<Int> e(g);
  long terms = rng.next(1, 3);
  for (long t = 0; t < terms; ++t) {
    long gi = rng.next(1, g->order - 1);
    Int c(rng.next(-2, 2));
    e.add_term(gi, c);
    e.add_term(0, -c);
  }
  return e;
}

// p-local element with the augmentation forced into (or out of) the units
inline GroupRing<PLocal> random_plocal_element(Rng& rng, const Group& g, long p,
                                               bool unit_augmentation) {
  GroupRing<Int> base(g);
  for (long idx = 0; idx < g->order; ++idx) base.add_term(idx, Int(rng.next(-5, 5)));
  Int s = augmentation(base);
  if (unit_augmentation) {
    if (s % p == 0) base.add_term(0, Int(1));
  } else {
    base.add_term(0, -(s % p));
  }
  static const long denoms[] = {1, 1, 3, 5, 7};
  long q = denoms[rng.next(0, 4)];
  if (q == p) q = 1;
  GroupRing<PLocal> out(g);
  for (const auto& [idx, c] : base.coeffs) out.add_term(idx, PLocal(p, Rat(c) / q));
  return out;
}

// identity matrix worked over by operations that preserve the class:
// transvections, unit row scalings by +-g, and augmentation-kernel bumps
inline GroupRingMat<Int> random_wh_matrix(Rng& rng, const Group& g, long n) {
  auto m = gr_identity_matrix(g, n);
  long ops = rng.next(4, 8);
  for (long t = 0; t < ops; ++t) {
    long kind = rng.next(0, 2);
    if (kind == 0 && n >= 2) {
      long i = rng.next(0, n - 1), j = rng.next(0, n - 1);
      if (i == j) j = (j + 1) % n;
      auto r = random_small_element(rng, g);
      for (long c = 0; c < n; ++c) m.at(i, c) = m.at(i, c) + r * m.at(j, c);
    } else if (kind == 1) {
      long i = rng.next(0, n - 1), c = rng.next(0, n - 1);
      m.at(i, c) = m.at(i, c) + random_aug_kernel_element(rng, g);
    } else {
      auto u = gr_term(g, rng.next(0, g->order - 1), Int(rng.coin() ? 1 : -1));
      long i = rng.next(0, n - 1);
      for (long c = 0; c < n; ++c) m.at(i, c) = u * m.at(i, c);
    }
  }
  internal_check(wh_membership(m), "construction left the unimodular class");
  return m;
}

// ---------------------------------------------------------------------------
// suites

// exhaustive coprime-order vanishing over the six-group battery
inline RunReport suite_lemma32() {
  RunReport rep;
  rep.command = "verify lemma32";
  std::vector<std::pair<std::string, Group>> battery = {
      {"Z/6", cyclic_group(6)},   {"S3", symmetric_group(3)}, {"D4", dihedral_group(4)},
      {"D5", dihedral_group(5)},  {"A4", alternating_group(4)}, {"S4", symmetric_group(4)},
  };
  for (const auto& [name, g] : battery) {
    auto ctx = build_context(g);
    long pairs = 0;
    bool ok = true;
    for (long x = 0; x < g->order; ++x)
      for (long y = 0; y < g->order; ++y) {
        if (std::gcd(element_order(*g, x), element_order(*g, y)) != 1) continue;
        ++pairs;
        ok = ok && coprime_vanishing_check(ctx, x, y);
      }
    rep.check(name + ": products vanish on all " + std::to_string(pairs) +
                  " coprime-order pairs",
              ok);
  }
  return rep;
}

// phi(1-x) decomposes through lifted isolated parts, for every battery element
inline RunReport suite_sublemma() {
  RunReport rep;
  rep.command = "verify sublemma";
  for (const auto& [name, g] : battery_groups()) {
    auto ctx = build_context(g);
    bool ok = true;
    for (long x = 0; x < g->order; ++x) ok = ok && sublemma_check(ctx, x);
    rep.check(name + ": decomposition holds for all " + std::to_string(g->order) +
                  " elements",
              ok);
  }
  return rep;
}

// p-local inversion over p-group rings, 50 unit and 50 non-unit draws each
inline RunReport suite_prop110() {
  RunReport rep;
  rep.command = "verify prop110";
  struct Case {
    std::string name;
    Group g;
    long p;
  };
  std::vector<Case> battery = {
      {"Z/2", cyclic_group(2), 2},  {"Z/4", cyclic_group(4), 2},
      {"Z/2xZ/2", klein_four(), 2}, {"Z/3", cyclic_group(3), 3},
      {"Z/9", cyclic_group(9), 3},  {"Q8", quaternion_group(), 2},
      {"D4", dihedral_group(4), 2},
  };
  Rng rng(9001);
  for (const auto& c : battery) {
    auto one = gr_unit(c.g, PLocal(c.p, Rat(1)));
    bool units_ok = true, nonunits_ok = true;
    for (int t = 0; t < 50; ++t) {
      auto e = random_plocal_element(rng, c.g, c.p, true);
      auto inv = pgroup_local_invert(e);
      units_ok = units_ok && e * inv == one && inv * e == one;
    }
    for (int t = 0; t < 50; ++t) {
      auto e = random_plocal_element(rng, c.g, c.p, false);
      bool threw = false;
      try {
        pgroup_local_invert(e);
      } catch (const Error& err) {
        threw = err.code() == errc::not_a_unit;
      }
      nonunits_ok = nonunits_ok && threw;
    }
    rep.check(c.name + ": 50 unit augmentations invert two-sidedly", units_ok);
    rep.check(c.name + ": 50 non-unit augmentations are rejected", nonunits_ok);
  }
  return rep;
}

// the first gap piece over the perfect group A5 in low degree
inline RunReport suite_example2(const HomologyOptions& opt = {}) {
  RunReport rep;
  rep.command = "verify example2";
  auto gap = first_gap_lambda(alternating_group(5), 1, opt);
  rep.note("first gap piece over A5 computes to " + gap.str());
  rep.check("gap piece in degree 1 is Z/2", gap.str() == "Z/2");
  return rep;
}

// p-torsion must appear in low degree exactly when p divides the order
inline RunReport suite_quillen(const HomologyOptions& opt = {}, long bound = 4) {
  RunReport rep;
  rep.command = "verify quillen";
  struct Hit {
    std::string name;
    Group g;
    long p;
    long degree;
  };
  std::vector<Hit> hits = {
      {"Z/2", cyclic_group(2), 2, 1}, {"Z/4", cyclic_group(4), 2, 1},
      {"S3", symmetric_group(3), 2, 1}, {"S3", symmetric_group(3), 3, 3},
      {"A4", alternating_group(4), 2, 2}, {"A4", alternating_group(4), 3, 1},
  };
  for (const auto& h : hits) {
    auto found = quillen_scan(h.g, h.p, bound, opt);
    rep.check(h.name + " at p=" + std::to_string(h.p) + ": first p-torsion in degree " +
                  std::to_string(h.degree),
              found && *found == h.degree);
  }
  std::vector<std::pair<std::string, long>> misses = {{"Z/3", 2}, {"Z/2", 3}};
  for (const auto& [name, p] : misses) {
    Group g = name == "Z/3" ? cyclic_group(3) : cyclic_group(2);
    auto found = quillen_scan(g, p, bound, opt);
    rep.check(name + " at coprime p=" + std::to_string(p) + ": no p-torsion through degree " +
                  std::to_string(bound),
              !found.has_value());
  }
  return rep;
}

// the two generators with coefficients in K produce nonvanishing products
inline RunReport suite_cex2() {
  RunReport rep;
  rep.command = "verify cex2";
  auto prods = cex2_products();  // throws if any product misses its closed form
  rep.note("all three products matched their closed-form displays");
  rep.check("(1-x)(1-y) is nonzero over K", !prods.one_minus_x_times_one_minus_y.is_zero());
  rep.check("(1-y)(1-x) is nonzero over K", !prods.one_minus_y_times_one_minus_x.is_zero());
  rep.check("xy - yx is nonzero over K", !prods.commutator_xy_minus_yx.is_zero());
  rep.check("(1-x)(1-y) - (1-y)(1-x) = xy - yx",
            prods.one_minus_x_times_one_minus_y - prods.one_minus_y_times_one_minus_x ==
                prods.commutator_xy_minus_yx);
  return rep;
}

// W-acyclicity of cofibers: seeded two-term complexes, sums, and cones
inline RunReport suite_complexes(const HomologyOptions& opt = {}) {
  RunReport rep;
  rep.command = "verify complexes";
  Group s3 = symmetric_group(3), a4 = alternating_group(4);
  Rng rng(404);

  auto bad_two_term = [&](const Group& g) {
    long n = rng.next(1, 2);
    GroupRingMat<Int> d(g, n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) d.at(i, j) = random_aug_kernel_element(rng, g);
    return make_complex(g, 0, {n, n}, {d});
  };

  {
    auto m = gr_identity_matrix(s3, 1);
    m.at(0, 0) = gr_unit(s3, Int(2)) - gr_term(s3, 1, Int(1));
    rep.check("fixed [[2-x]] cofiber over Z[S3] is W-acyclic",
              is_w_acyclic(make_w0_complex(m, 0), opt));
    GroupRingMat<Int> d(s3, 1, 1);
    d.at(0, 0) = gr_unit(s3, Int(1)) - gr_term(s3, 2, Int(1));
    rep.check("fixed [[1-y]] two-term complex is not W-acyclic",
              !is_w_acyclic(make_complex(s3, 0, {1, 1}, {d}), opt));
  }

  bool w0_ok = true;
  for (int t = 0; t < 20; ++t) {
    const Group& g = t % 2 == 0 ? s3 : a4;
    auto m = random_wh_matrix(rng, g, rng.next(1, 3));
    w0_ok = w0_ok && is_w_acyclic(make_w0_complex(m, 0), opt);
  }
  rep.check("20 seeded unimodular cofibers over Z[S3] and Z[A4] are W-acyclic", w0_ok);

  bool bad_ok = true;
  for (int t = 0; t < 6; ++t)
    bad_ok = bad_ok && !is_w_acyclic(bad_two_term(t % 2 == 0 ? s3 : a4), opt);
  rep.check("6 seeded augmentation-kernel two-term complexes are not W-acyclic", bad_ok);

  bool two_of_three_ok = true;
  for (int t = 0; t < 20; ++t) {
    const Group& g = t % 2 == 0 ? s3 : a4;
    auto a = make_w0_complex(random_wh_matrix(rng, g, rng.next(1, 2)), 0);
    auto b = make_w0_complex(random_wh_matrix(rng, g, rng.next(1, 2)), 0);
    bool case_ok = true;
    switch (t % 4) {
      case 0:
        case_ok = is_w_acyclic(direct_sum(a, b), opt);
        break;
      case 1: {
        auto bad = bad_two_term(g);
        case_ok = is_w_acyclic(direct_sum(a, bad), opt) == is_w_acyclic(bad, opt) &&
                  !is_w_acyclic(direct_sum(a, bad), opt);
        break;
      }
      case 2:
        case_ok = is_w_acyclic(mapping_cone(zero_chain_map(a, b)), opt);
        break;
      case 3:
        case_ok = is_w_acyclic(mapping_cone(identity_chain_map(a)), opt);
        break;
    }
    two_of_three_ok = two_of_three_ok && case_ok;
  }
  rep.check("two-out-of-three holds on 20 seeded sum and cone constructions", two_of_three_ok);
  return rep;
}

inline RunReport run_suite(const std::string& name, const HomologyOptions& opt = {},
                           long bound = 4) {
  if (name == "lemma32") return suite_lemma32();
  if (name == "sublemma") return suite_sublemma();
  if (name == "prop110") return suite_prop110();
  if (name == "example2") return suite_example2(opt);
  if (name == "quillen") return suite_quillen(opt, bound);
  if (name == "cex2") return suite_cex2();
  if (name == "complexes") return suite_complexes(opt);
  fail(errc::unknown_suite, "no suite named '" + name +
                                "'; known: lemma32 sublemma prop110 example2 quillen cex2 "
                                "complexes");
}

}  // namespace cohn

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cohn/error.hpp"

namespace cohn {

// Arbitrary-precision integers and rationals. mpq_class keeps fractions
// reduced with positive denominators, which is exactly the invariant the
// rational type needs.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Exact quotient; caller guarantees divisibility.
inline Int int_exact_div(const Int& a, const Int& b) {
  internal_check(b != 0 && a % b == 0, "exact division with nonzero remainder");
  return a / b;
}

inline std::string int_str(const Int& a) { return a.get_str(); }

inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization of a small positive integer, ascending primes.
inline std::vector<std::pair<long, int>> factorize(long n) {
  internal_check(n >= 1, "factorize needs a positive argument");
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime_power(long n, long p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// The ring Z_(p): rationals whose denominator is coprime to a fixed prime.
// The full rational is stored and the coprimality invariant is checked at
// construction, never lazily.
struct PLocal {
  long p = 0;
  Rat v;

  PLocal() = default;
  PLocal(long prime, Rat value) : p(prime), v(std::move(value)) {
    require(is_prime(p), errc::not_prime, "Z_(p) needs a prime, got " + std::to_string(p));
    require(v.get_den() % p != 0, errc::not_a_unit,
            "denominator " + v.get_den().get_str() + " not coprime to " + std::to_string(p));
  }
  static PLocal integer(long prime, Int n) { return PLocal(prime, Rat(std::move(n))); }

  bool is_zero() const { return v == 0; }
  // x is a unit of Z_(p) iff p does not divide the numerator.
  bool is_unit() const { return v != 0 && v.get_num() % p != 0; }
  // x lies in Z_(p) by construction; "integral" here means it is a p-local
  // integer already (denominator 1 not required, only coprime, which holds).
  bool equals(const PLocal& o) const { return p == o.p && v == o.v; }

  std::string str() const { return rat_str(v); }
};

inline void check_same_prime(const PLocal& a, const PLocal& b) {
  require(a.p == b.p, errc::context_mismatch, "mixed Z_(p) primes in one operation");
}

inline PLocal operator+(const PLocal& a, const PLocal& b) {
  check_same_prime(a, b);
  return PLocal(a.p, a.v + b.v);
}
inline PLocal operator-(const PLocal& a, const PLocal& b) {
  check_same_prime(a, b);
  return PLocal(a.p, a.v - b.v);
}
inline PLocal operator*(const PLocal& a, const PLocal& b) {
  check_same_prime(a, b);
  return PLocal(a.p, a.v * b.v);
}
inline PLocal operator-(const PLocal& a) { return PLocal(a.p, -a.v); }
inline bool operator==(const PLocal& a, const PLocal& b) { return a.equals(b); }

inline PLocal plocal_invert(const PLocal& x) {
  require(x.is_unit(), errc::not_a_unit,
          "numerator " + x.v.get_num().get_str() + " divisible by " + std::to_string(x.p));
  return PLocal(x.p, Rat(1) / x.v);
}

// Deterministic RNG for seeded batteries. mt19937_64 output is fixed by the
// standard; std::uniform_int_distribution is not, so draw by reduction.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  // uniform-ish in [lo, hi]; the tiny modulo bias is irrelevant for tests
  long next(long lo, long hi) {
    internal_check(lo <= hi, "bad rng range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng() % span);
  }
  bool coin() { return (eng() & 1) != 0; }
};

}  // namespace cohn

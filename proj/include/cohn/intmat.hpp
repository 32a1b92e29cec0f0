#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cohn/error.hpp"
#include "cohn/numbers.hpp"

namespace cohn {

// ---------------------------------------------------------------------------
// dense integer matrices

struct IntMat {
  long rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMat() = default;
  IntMat(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {
    internal_check(r >= 0 && c >= 0, "negative matrix dimensions");
  }

  Int& at(long r, long c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(long r, long c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static IntMat identity(long n) {
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline IntMat mul(const IntMat& x, const IntMat& y) {
  internal_check(x.cols == y.rows, "dimension mismatch in matrix product");
  IntMat z(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (long j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

// Exact determinant, fraction-free (Bareiss) elimination.
inline Int det(const IntMat& m) {
  require(m.rows == m.cols, errc::not_square, "determinant of a non-square matrix");
  long n = m.rows;
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      long swap = -1;
      for (long r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) { swap = r; break; }
      if (swap < 0) return 0;
      for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j)
        a.at(i, j) = int_exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

// ---------------------------------------------------------------------------
// dense rational matrices (exact Gauss-Jordan)

struct RatMat {
  long rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

  Rat& at(long r, long c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rat& at(long r, long c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static RatMat identity(long n) {
    RatMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static RatMat from_int(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
  }
};

inline RatMat mul(const RatMat& x, const RatMat& y) {
  internal_check(x.cols == y.rows, "dimension mismatch in matrix product");
  RatMat z(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (long j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

// Inverse over Q; nullopt when singular.
inline std::optional<RatMat> rat_inverse(const RatMat& m) {
  internal_check(m.rows == m.cols, "inverse of a non-square matrix");
  long n = m.rows;
  RatMat a = m, inv = RatMat::identity(n);
  for (long k = 0; k < n; ++k) {
    long piv = -1;
    for (long r = k; r < n; ++r)
      if (a.at(r, k) != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != k)
      for (long j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    Rat d = a.at(k, k);
    for (long j = 0; j < n; ++j) { a.at(k, j) /= d; inv.at(k, j) /= d; }
    for (long r = 0; r < n; ++r) {
      if (r == k || a.at(r, k) == 0) continue;
      Rat f = a.at(r, k);
      for (long j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(k, j);
        inv.at(r, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// sparse integer matrices with a memory budget

// The budget is accounted in stored nonzero entries ("triplets"); one entry
// costs roughly 48 bytes (index, limb pointer, one limb, node overhead).
struct Budget {
  std::size_t max_triplets = default_triplets(2048);
  static std::size_t default_triplets(std::size_t mb) { return mb * 1024 * 1024 / 48; }
  static Budget from_mb(std::size_t mb) { return Budget{default_triplets(mb)}; }
};

struct SparseIntMat {
  long rows = 0, cols = 0;
  std::vector<std::map<long, Int>> row;  // row -> (col -> value), ordered for determinism
  std::vector<std::set<long>> col;       // col -> set of rows with an entry
  std::size_t nnz = 0;
  Budget budget;

  SparseIntMat() = default;
  SparseIntMat(long r, long c, Budget b = Budget{}) : rows(r), cols(c), row(r), col(c), budget(b) {}

  const Int* get(long r, long c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? nullptr : &it->second;
  }

  void set(long r, long c, Int v) {
    auto it = row[r].find(c);
    if (v == 0) {
      if (it != row[r].end()) {
        row[r].erase(it);
        col[c].erase(r);
        --nnz;
      }
      return;
    }
    if (it == row[r].end()) {
      if (nnz >= budget.max_triplets)
        fail(errc::budget_exceeded, "sparse matrix exceeded its triplet budget");
      ++nnz;
      row[r].emplace(c, std::move(v));
      col[c].insert(r);
    } else {
      it->second = std::move(v);
    }
  }

  void add(long r, long c, const Int& delta) {
    if (delta == 0) return;
    const Int* cur = get(r, c);
    set(r, c, cur ? Int(*cur + delta) : delta);
  }

  IntMat dense() const {
    IntMat m(rows, cols);
    for (long r = 0; r < rows; ++r)
      for (const auto& [c, v] : row[r]) m.at(r, c) = v;
    return m;
  }
  static SparseIntMat from_dense(const IntMat& m, Budget b = Budget{}) {
    SparseIntMat s(m.rows, m.cols, b);
    for (long r = 0; r < m.rows; ++r)
      for (long c = 0; c < m.cols; ++c)
        if (m.at(r, c) != 0) s.set(r, c, m.at(r, c));
    return s;
  }
};

// ---------------------------------------------------------------------------
// Smith normal form
//
// Deterministic pivoting: candidates come from the shortest active row and
// the shortest active column, preferring unit entries and then the smaller
// fill bound (column nnz - 1) * (row nnz - 1). Every finalized pivot divides
// all entries left in the active submatrix, so the diagonal comes out as a
// divisibility chain.

namespace detail {

struct SnfEngine {
  SparseIntMat m;
  bool with_transforms;
  IntMat U, V;
  std::vector<char> row_done, col_done;
  std::set<std::pair<long, long>> col_sizes;  // (nnz, col) over nonempty active columns
  std::set<std::pair<long, long>> row_sizes;  // (nnz, row), same for rows
  std::vector<std::pair<std::pair<long, long>, Int>> pivots;  // ((row, col), value)

  SnfEngine(SparseIntMat mat, bool transforms)
      : m(std::move(mat)),
        with_transforms(transforms),
        row_done(m.rows, 0),
        col_done(m.cols, 0) {
    if (with_transforms) {
      U = IntMat::identity(m.rows);
      V = IntMat::identity(m.cols);
    }
    for (long c = 0; c < m.cols; ++c)
      if (!m.col[c].empty()) col_sizes.insert({static_cast<long>(m.col[c].size()), c});
    for (long r = 0; r < m.rows; ++r)
      if (!m.row[r].empty()) row_sizes.insert({static_cast<long>(m.row[r].size()), r});
  }

  static bool is_unit_value(const Int& v) { return v == 1 || v == -1; }

  void put(long r, long c, Int v) {
    long cbefore = static_cast<long>(m.col[c].size());
    long rbefore = static_cast<long>(m.row[r].size());
    m.set(r, c, std::move(v));
    long cafter = static_cast<long>(m.col[c].size());
    long rafter = static_cast<long>(m.row[r].size());
    if (cbefore != cafter && !col_done[c]) {
      if (cbefore) col_sizes.erase({cbefore, c});
      if (cafter) col_sizes.insert({cafter, c});
    }
    if (rbefore != rafter && !row_done[r]) {
      if (rbefore) row_sizes.erase({rbefore, r});
      if (rafter) row_sizes.insert({rafter, r});
    }
  }

  void retire_column(long c) {
    if (!m.col[c].empty()) col_sizes.erase({static_cast<long>(m.col[c].size()), c});
  }
  void retire_row(long r) {
    if (!m.row[r].empty()) row_sizes.erase({static_cast<long>(m.row[r].size()), r});
  }

  // row[dst] -= q * row[src]; q taken by value because callers pass entries of
  // m that the updates below erase or overwrite
  void row_op(long dst, long src, Int q) {
    if (q == 0) return;
    std::vector<std::pair<long, Int>> updates(m.row[src].begin(), m.row[src].end());
    for (auto& [c, v] : updates) {
      const Int* cur = m.get(dst, c);
      put(dst, c, cur ? Int(*cur - q * v) : Int(-q * v));
    }
    if (with_transforms)
      for (long j = 0; j < U.cols; ++j) U.at(dst, j) -= q * U.at(src, j);
  }

  // col[dst] -= q * col[src]
  void col_op(long dst, long src, Int q) {
    if (q == 0) return;
    std::vector<std::pair<long, Int>> updates;
    for (long r : m.col[src]) updates.emplace_back(r, *m.get(r, src));
    for (auto& [r, v] : updates) {
      const Int* cur = m.get(r, dst);
      put(r, dst, cur ? Int(*cur - q * v) : Int(-q * v));
    }
    if (with_transforms)
      for (long i = 0; i < V.rows; ++i) V.at(i, dst) -= q * V.at(i, src);
  }

  void negate_row(long r) {
    std::vector<long> cs;
    for (const auto& [c, v] : m.row[r]) cs.push_back(c);
    for (long c : cs) put(r, c, Int(-*m.get(r, c)));
    if (with_transforms)
      for (long j = 0; j < U.cols; ++j) U.at(r, j) = -U.at(r, j);
  }

  bool active(long r, long c) const { return !row_done[r] && !col_done[c]; }

  // pivot rule: look only inside the shortest active row and the shortest
  // active column, taking the entry of smallest absolute value with the
  // shorter opposite side as tiebreak; between the two candidates a unit
  // beats a non-unit, then the smaller fill bound
  // (column nnz - 1) * (row nnz - 1) wins
  std::optional<std::pair<long, long>> find_pivot() const {
    auto fill_bound = [&](long r, long c) {
      return static_cast<unsigned long long>(m.col[c].size() - 1) *
             static_cast<unsigned long long>(m.row[r].size() - 1);
    };
    std::optional<std::pair<long, long>> row_cand;
    if (!row_sizes.empty()) {
      long r = row_sizes.begin()->second;
      long best_c = -1;
      Int best_abs = 0;
      std::size_t best_len = 0;
      for (const auto& [c, v] : m.row[r]) {
        Int av = int_abs(v);
        std::size_t len = m.col[c].size();
        if (best_c < 0 || av < best_abs || (av == best_abs && len < best_len)) {
          best_c = c;
          best_abs = av;
          best_len = len;
        }
      }
      row_cand = std::make_pair(r, best_c);
    }
    std::optional<std::pair<long, long>> col_cand;
    if (!col_sizes.empty()) {
      long c = col_sizes.begin()->second;
      long best_r = -1;
      Int best_abs = 0;
      std::size_t best_len = 0;
      for (long r : m.col[c]) {
        Int av = int_abs(*m.get(r, c));
        std::size_t len = m.row[r].size();
        if (best_r < 0 || av < best_abs || (av == best_abs && len < best_len)) {
          best_r = r;
          best_abs = av;
          best_len = len;
        }
      }
      col_cand = std::make_pair(best_r, c);
    }
    if (!row_cand || !col_cand) return row_cand ? row_cand : col_cand;
    bool ru = is_unit_value(*m.get(row_cand->first, row_cand->second));
    bool cu = is_unit_value(*m.get(col_cand->first, col_cand->second));
    if (ru != cu) return ru ? row_cand : col_cand;
    return fill_bound(row_cand->first, row_cand->second) <=
                   fill_bound(col_cand->first, col_cand->second)
               ? row_cand
               : col_cand;
  }

  // lowest active row besides r carrying an entry in column c
  long column_partner(long r, long c) const {
    for (long r2 : m.col[c])
      if (r2 != r && !row_done[r2]) return r2;
    return -1;
  }
  long row_partner(long r, long c) const {
    for (const auto& [c2, v] : m.row[r])
      if (c2 != c && !col_done[c2]) return c2;
    return -1;
  }

  // first active entry not divisible by d (lowest row, then lowest column)
  std::optional<std::pair<long, long>> find_nondivisible(const Int& d) const {
    for (long r = 0; r < m.rows; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : m.row[r])
        if (!col_done[c] && v % d != 0) return std::make_pair(r, c);
    }
    return std::nullopt;
  }

  void run() {
    while (true) {
      auto piv = find_pivot();
      if (!piv) break;
      auto [r, c] = *piv;
      // gcd-reduce the column, then the row; a nonzero remainder is strictly
      // smaller than the pivot and swaps in as the new pivot, so this
      // terminates, and a unit pivot clears both sides with no remainders
      while (true) {
        if (*m.get(r, c) < 0) negate_row(r);
        Int pv = *m.get(r, c);
        long r2 = column_partner(r, c);
        if (r2 >= 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), m.get(r2, c)->get_mpz_t(), pv.get_mpz_t());
          row_op(r2, r, q);
          if (m.get(r2, c)) r = r2;
          continue;
        }
        long c2 = row_partner(r, c);
        if (c2 >= 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), m.get(r, c2)->get_mpz_t(), pv.get_mpz_t());
          col_op(c2, c, q);
          if (m.get(r, c2)) c = c2;
          continue;
        }
        // the pivot must divide everything still active (trivial for 1);
        // pulling an offending row into the cleared pivot row forces the
        // next reduction below pv
        if (pv != 1) {
          if (auto bad = find_nondivisible(pv)) {
            row_op(r, bad->first, Int(-1));
            continue;
          }
        }
        break;
      }
      pivots.push_back({{r, c}, *m.get(r, c)});
      retire_column(c);
      retire_row(r);
      row_done[r] = 1;
      col_done[c] = 1;
    }
  }
};

}  // namespace detail

struct SnfResult {
  std::vector<Int> diag;  // length min(rows, cols), divisibility chain then zeros
  IntMat U, V;            // unimodular, U * M * V = diag
};

// Nonzero elementary divisors (the divisibility chain); rank = list size.
// Wide matrices run as their transpose: the divisors are the same, and the
// elimination copies pivot rows around, so the short dimension should be rows.
inline std::vector<Int> elementary_divisors(SparseIntMat m) {
  if (m.cols > m.rows) {
    SparseIntMat t(m.cols, m.rows, m.budget);
    for (long r = 0; r < m.rows; ++r)
      for (const auto& [c, v] : m.row[r]) t.set(c, r, v);
    m = std::move(t);
  }
  detail::SnfEngine eng(std::move(m), false);
  eng.run();
  std::vector<Int> out;
  out.reserve(eng.pivots.size());
  for (auto& p : eng.pivots) out.push_back(p.second);
  return out;
}

inline SnfResult smith_normal_form(const IntMat& m) {
  detail::SnfEngine eng(SparseIntMat::from_dense(m), true);
  eng.run();
  // permute pivot k to slot (k, k)
  long n = std::min(m.rows, m.cols);
  SnfResult res;
  res.diag.assign(n, Int(0));
  res.U = std::move(eng.U);
  res.V = std::move(eng.V);
  std::vector<long> row_of(m.rows), col_of(m.cols);
  for (long i = 0; i < m.rows; ++i) row_of[i] = i;
  for (long j = 0; j < m.cols; ++j) col_of[j] = j;
  // row_pos[i]: current slot of original row i (and same for columns)
  std::vector<long> row_pos(m.rows), col_pos(m.cols);
  for (long i = 0; i < m.rows; ++i) row_pos[i] = i;
  for (long j = 0; j < m.cols; ++j) col_pos[j] = j;
  auto swap_rows = [&](long a, long b) {
    if (a == b) return;
    for (long j = 0; j < res.U.cols; ++j) std::swap(res.U.at(a, j), res.U.at(b, j));
    std::swap(row_of[a], row_of[b]);
    row_pos[row_of[a]] = a;
    row_pos[row_of[b]] = b;
  };
  auto swap_cols = [&](long a, long b) {
    if (a == b) return;
    for (long i = 0; i < res.V.rows; ++i) std::swap(res.V.at(i, a), res.V.at(i, b));
    std::swap(col_of[a], col_of[b]);
    col_pos[col_of[a]] = a;
    col_pos[col_of[b]] = b;
  };
  for (std::size_t k = 0; k < eng.pivots.size(); ++k) {
    auto [rc, val] = eng.pivots[k];
    swap_rows(static_cast<long>(k), row_pos[rc.first]);
    swap_cols(static_cast<long>(k), col_pos[rc.second]);
    res.diag[k] = val;
  }
  return res;
}

}  // namespace cohn

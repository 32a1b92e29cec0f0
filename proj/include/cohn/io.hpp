#pragma once

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cohn/complexes.hpp"
#include "cohn/error.hpp"
#include "cohn/group.hpp"
#include "cohn/groupring.hpp"
#include "cohn/lambda.hpp"

namespace cohn {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

inline std::vector<long> parse_longs(const std::string& line, const std::string& what) {
  std::istringstream ss(line);
  std::vector<long> out;
  long v;
  while (ss >> v) out.push_back(v);
  std::string rest;
  require(!(ss.clear(), ss >> rest), errc::parse_error, what + ": unexpected token '" + rest + "'");
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// groups: `perm <degree>` + one generator per line, or `table <n>` + n rows

inline Group parse_group(const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  require(!lines.empty(), errc::parse_error, "empty group file");
  std::istringstream head(lines[0]);
  std::string kind;
  long n = 0;
  require(static_cast<bool>(head >> kind >> n), errc::parse_error,
          "group header must be 'perm <degree>' or 'table <n>'");
  if (kind == "perm") {
    std::vector<Permutation> gens;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      auto img = detail::parse_longs(lines[k], "generator line");
      require(static_cast<long>(img.size()) == n, errc::parse_error,
              "generator line needs exactly " + std::to_string(n) + " images");
      gens.push_back(std::move(img));
    }
    require(!gens.empty(), errc::parse_error, "perm group needs at least one generator");
    return group_from_permutations(n, gens);
  }
  if (kind == "table") {
    require(static_cast<long>(lines.size()) == n + 1, errc::parse_error,
            "table group needs exactly " + std::to_string(n) + " rows");
    std::vector<long> table;
    for (long r = 0; r < n; ++r) {
      auto row = detail::parse_longs(lines[r + 1], "table row");
      require(static_cast<long>(row.size()) == n, errc::parse_error,
              "table row needs exactly " + std::to_string(n) + " entries");
      table.insert(table.end(), row.begin(), row.end());
    }
    return group_from_table(std::move(table), n);
  }
  fail(errc::parse_error, "unknown group kind '" + kind + "'");
}

inline std::string serialize_group(const Group& g) {
  std::string out = "table " + std::to_string(g->order) + "\n";
  for (long i = 0; i < g->order; ++i) {
    for (long j = 0; j < g->order; ++j) {
      if (j) out += " ";
      out += std::to_string(g->mult(i, j));
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// group-ring elements: `(<coeff>)*g<k>` terms joined by ` + `; `0` for zero

inline std::string serialize_element(const GroupRing<Int>& e) {
  if (e.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : e.coeffs) {
    if (!out.empty()) out += " + ";
    out += "(" + int_str(c) + ")*g" + std::to_string(k);
  }
  return out;
}

inline std::string serialize_element(const GroupRing<PLocal>& e) {
  if (e.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : e.coeffs) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*g" + std::to_string(k);
  }
  return out;
}

namespace detail {

// split on '+', yield (coefficient string, element index) pairs
inline std::vector<std::pair<std::string, long>> element_terms(const std::string& text,
                                                               long order) {
  static const std::regex term_re(R"(^\((-?[0-9]+(?:/[0-9]+)?)\)\*g([0-9]+)$)");
  std::vector<std::pair<std::string, long>> out;
  std::string body = text;
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t plus = body.find('+', pos);
    parts.push_back(body.substr(pos, plus == std::string::npos ? plus : plus - pos));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  for (auto& part : parts) {
    std::size_t a = part.find_first_not_of(" \t");
    require(a != std::string::npos, errc::parse_error, "empty term in element");
    std::size_t b = part.find_last_not_of(" \t");
    std::string term = part.substr(a, b - a + 1);
    std::smatch m;
    require(std::regex_match(term, m, term_re), errc::parse_error,
            "bad element term '" + term + "'");
    long k = std::stol(m[2].str());
    require(k < order, errc::parse_error,
            "element index g" + std::to_string(k) + " out of range");
    out.emplace_back(m[1].str(), k);
  }
  return out;
}

}  // namespace detail

inline GroupRing<Int> parse_element(const Group& g, const std::string& text) {
  GroupRing<Int> e(g);
  std::string t = text;
  std::size_t a = t.find_first_not_of(" \t\r\n");
  require(a != std::string::npos, errc::parse_error, "empty element");
  std::size_t b = t.find_last_not_of(" \t\r\n");
  t = t.substr(a, b - a + 1);
  if (t == "0") return e;
  for (const auto& [coeff, k] : detail::element_terms(t, g->order)) {
    require(coeff.find('/') == std::string::npos, errc::parse_error,
            "integer coefficient required, got '" + coeff + "'");
    e.add_term(k, Int(coeff));
  }
  return e;
}

inline GroupRing<PLocal> parse_element_plocal(const Group& g, long p, const std::string& text) {
  GroupRing<PLocal> e(g);
  std::string t = text;
  std::size_t a = t.find_first_not_of(" \t\r\n");
  require(a != std::string::npos, errc::parse_error, "empty element");
  std::size_t b = t.find_last_not_of(" \t\r\n");
  t = t.substr(a, b - a + 1);
  if (t == "0") return e;
  for (const auto& [coeff, k] : detail::element_terms(t, g->order)) {
    std::size_t slash = coeff.find('/');
    require(slash == std::string::npos || Int(coeff.substr(slash + 1)) != 0, errc::parse_error,
            "zero denominator in '" + coeff + "'");
    Rat v(coeff);
    v.canonicalize();
    e.add_term(k, PLocal(p, std::move(v)));
  }
  return e;
}

// ---------------------------------------------------------------------------
// matrices: `matrix <rows> <cols>` + one element per line, row-major

inline std::string serialize_matrix(const GroupRingMat<Int>& m) {
  std::string out = "matrix " + std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
  for (const auto& e : m.e) out += serialize_element(e) + "\n";
  return out;
}

inline GroupRingMat<Int> parse_matrix(const Group& g, const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  require(!lines.empty(), errc::parse_error, "empty matrix file");
  std::istringstream head(lines[0]);
  std::string kind;
  long r = 0, c = 0;
  require(static_cast<bool>(head >> kind >> r >> c) && kind == "matrix" && r >= 0 && c >= 0 &&
              r <= 4096 && c <= 4096,
          errc::parse_error, "matrix header must be 'matrix <rows> <cols>'");
  require(static_cast<long>(lines.size()) == r * c + 1, errc::parse_error,
          "matrix needs exactly " + std::to_string(r * c) + " entry lines");
  GroupRingMat<Int> m(g, r, c);
  for (long k = 0; k < r * c; ++k) m.e[k] = parse_element(g, lines[k + 1]);
  return m;
}

// ---------------------------------------------------------------------------
// complexes: header, ranks line, then one `boundary <n>` block per
// differential with row-major element lines

inline std::string serialize_complex(const FreeComplex& c) {
  std::string out = "complex " + std::to_string(c.lo) + " " + std::to_string(c.hi) + "\n";
  out += "ranks";
  for (long r : c.ranks) out += " " + std::to_string(r);
  out += "\n";
  for (std::size_t k = 0; k < c.boundary.size(); ++k) {
    out += "boundary " + std::to_string(c.lo + static_cast<long>(k) + 1) + "\n";
    for (const auto& e : c.boundary[k].e) out += serialize_element(e) + "\n";
  }
  return out;
}

inline FreeComplex parse_complex(const Group& g, const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  require(lines.size() >= 2, errc::parse_error, "complex needs a header and a ranks line");
  std::istringstream head(lines[0]);
  std::string kind;
  long lo = 0, hi = 0;
  require(static_cast<bool>(head >> kind >> lo >> hi) && kind == "complex" && hi >= lo,
          errc::parse_error, "complex header must be 'complex <lo> <hi>' with lo <= hi");
  require(lines[1].rfind("ranks", 0) == 0, errc::parse_error, "second line must list ranks");
  auto ranks = detail::parse_longs(lines[1].substr(5), "ranks line");
  require(static_cast<long>(ranks.size()) == hi - lo + 1, errc::parse_error,
          "ranks line needs one entry per degree");
  for (long r : ranks) require(r >= 0, errc::parse_error, "ranks must be nonnegative");

  FreeComplex c{g, lo, hi, ranks, {}};
  std::size_t at = 2;
  for (long n = lo + 1; n <= hi; ++n) {
    require(at < lines.size() && lines[at] == "boundary " + std::to_string(n), errc::parse_error,
            "expected 'boundary " + std::to_string(n) + "'");
    ++at;
    long rows = ranks[n - 1 - lo], cols = ranks[n - lo];
    GroupRingMat<Int> m(g, rows, cols);
    require(at + rows * cols <= lines.size(), errc::parse_error,
            "boundary " + std::to_string(n) + " needs " + std::to_string(rows * cols) +
                " entry lines");
    for (long k = 0; k < rows * cols; ++k) m.e[k] = parse_element(g, lines[at + k]);
    at += rows * cols;
    c.boundary.push_back(std::move(m));
  }
  require(at == lines.size(), errc::parse_error, "trailing lines after the last boundary");
  std::string defect = complex_defect(c);
  require(defect.empty(), errc::parse_error, "invalid complex: " + defect);
  return c;
}

// ---------------------------------------------------------------------------
// Lambda elements: `z=<int>; p=<prime>:<element>` segments, ascending primes

inline std::string serialize_lambda(const LambdaElement& e) {
  std::string out = "z=" + int_str(e.z);
  for (std::size_t k = 0; k < e.comp.size(); ++k)
    out += "; p=" + std::to_string(e.ctx->quotients[k].p) + ":" + serialize_element(e.comp[k]);
  return out;
}

}  // namespace cohn

// cohn: exact Cohn localization of integral group rings at the augmentation.
//
// Commands
//   analyze <group>                   invariants, quotient list, pullback descriptor
//   invert <group> <matrix>           class membership, inverse over Lambda, verification
//   localize-element <group> <elt>    image of an integral element under the canonical map
//   homology <group> <degree> [p]     integral or p-local group homology
//   verify <suite>                    named check bundles with seeded batteries
//
// Exit codes: 0 pass, 1 check failure, 2 input error, 3 budget exceeded.
// Reports are byte-stable on stdout; wall time goes to stderr.

#include <chrono>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cohn/io.hpp"
#include "cohn/suites.hpp"

namespace {

using namespace cohn;

int emit(const RunReport& rep) {
  std::cout << rep.text();
  return rep.pass ? 0 : 1;
}

int cmd_analyze(const std::string& group_path) {
  std::string bytes = read_file(group_path);
  Group g = parse_group(bytes);
  RunReport rep;
  rep.command = "analyze " + group_path;
  rep.inputs_digest = content_digest(bytes);

  rep.note("group order: " + std::to_string(g->order));
  std::map<long, long> hist;
  for (long x = 0; x < g->order; ++x) ++hist[element_order(*g, x)];
  std::string line = "order histogram:";
  for (auto [o, n] : hist) line += " " + std::to_string(o) + ":" + std::to_string(n);
  rep.note(line);

  auto quots = nontrivial_p_quotients(g);
  line = "nontrivial quotients:";
  if (quots.empty()) line += " none";
  for (const auto& q : quots)
    line += " (" + std::to_string(q.p) + ", " + std::to_string(q.q->order) + ")";
  rep.note(line);

  auto tb = nilpotency_report(g);
  rep.note(std::string("nilpotent: ") + (tb.nilpotent ? "yes" : "no"));
  rep.note(lambda_descriptor(build_context(g), tb.nilpotent));
  return emit(rep);
}

int cmd_invert(const std::string& group_path, const std::string& matrix_path) {
  std::string gb = read_file(group_path), mb = read_file(matrix_path);
  Group g = parse_group(gb);
  auto m = parse_matrix(g, mb);
  RunReport rep;
  rep.command = "invert " + group_path + " " + matrix_path;
  rep.inputs_digest = content_digest(gb + mb);

  require(m.rows == m.cols, errc::not_square, "inverse of a non-square matrix");
  Int d = det(augmentation_matrix(m));
  rep.note("augmented determinant: " + int_str(d));
  bool wh = wh_membership(m);
  rep.note(std::string("class W^h (augmented det +-1): ") + (wh ? "yes" : "no"));
  rep.note(std::string("class W^s (augmented det +1): ") + (ws_membership(m) ? "yes" : "no"));
  if (!wh) {
    rep.note("NotInvertibleOverZ: the augmented matrix is not invertible over Z");
    rep.check("matrix localizes to a unit", false);
    return emit(rep);
  }

  auto ctx = build_context(g);
  auto inv = lambda_matrix_invert(lambda_matrix_of(ctx, m));
  for (long i = 0; i < inv.rows; ++i)
    for (long j = 0; j < inv.cols; ++j)
      rep.note("inverse[" + std::to_string(i) + "][" + std::to_string(j) +
               "] = " + serialize_lambda(inv.at(i, j)));
  auto prod = mul(lambda_matrix_of(ctx, m), inv);
  for (long i = 0; i < prod.rows; ++i)
    for (long j = 0; j < prod.cols; ++j)
      rep.note("product[" + std::to_string(i) + "][" + std::to_string(j) +
               "] = " + serialize_lambda(prod.at(i, j)));
  rep.check("product with the inverse is the identity over Lambda",
            prod == LambdaMat::identity(ctx, inv.rows));
  return emit(rep);
}

int cmd_localize(const std::string& group_path, const std::string& element_path) {
  std::string gb = read_file(group_path), eb = read_file(element_path);
  Group g = parse_group(gb);
  auto e = parse_element(g, eb);
  RunReport rep;
  rep.command = "localize-element " + group_path + " " + element_path;
  rep.inputs_digest = content_digest(gb + eb);
  auto ctx = build_context(g);
  rep.note("element: " + serialize_element(e));
  rep.note("image: " + serialize_lambda(canonical_map(ctx, e)));
  return emit(rep);
}

int cmd_homology(const std::string& group_path, long degree, long prime,
                 const HomologyOptions& opt) {
  std::string bytes = read_file(group_path);
  Group g = parse_group(bytes);
  RunReport rep;
  rep.command = "homology " + group_path + " " + std::to_string(degree) +
                (prime ? " " + std::to_string(prime) : "");
  rep.inputs_digest = content_digest(bytes);
  AbelianGroup h =
      prime ? group_homology_plocal(g, degree, prime, opt) : group_homology(g, degree, opt);
  std::string ring = prime ? "Z_(" + std::to_string(prime) + ")" : "Z";
  rep.note("H_" + std::to_string(degree) + " with coefficients " + ring + " = " + h.str());
  return emit(rep);
}

int cmd_verify(const std::string& suite, const HomologyOptions& opt, long bound) {
  return emit(run_suite(suite, opt, bound));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Cohn localization of integral group rings"};
  app.require_subcommand(1);

  long budget_mb = 2048, bound = 4, degree = 0, prime = 0;
  bool normalized = false;
  std::string group_path, matrix_path, element_path, suite;

  app.add_option("--budget-mb", budget_mb, "memory budget for resolution work")
      ->check(CLI::PositiveNumber);
  app.add_flag("--normalized-bar", normalized, "force the normalized bar resolution");
  app.add_option("--bound", bound, "scan bound for the quillen suite")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "group invariants and pullback descriptor");
  analyze->add_option("group", group_path, "group file")->required();
  auto* invert = app.add_subcommand("invert", "invert a matrix over the localization");
  invert->add_option("group", group_path, "group file")->required();
  invert->add_option("matrix", matrix_path, "matrix file")->required();
  auto* localize = app.add_subcommand("localize-element", "canonical image of an element");
  localize->add_option("group", group_path, "group file")->required();
  localize->add_option("element", element_path, "element file")->required();
  auto* homology = app.add_subcommand("homology", "group homology by bar resolution");
  homology->add_option("group", group_path, "group file")->required();
  homology->add_option("degree", degree, "homology degree")->required()
      ->check(CLI::NonNegativeNumber);
  homology->add_option("prime", prime, "localize coefficients at this prime");
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  for (auto* sub : {analyze, invert, localize, homology, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  HomologyOptions opt;
  opt.budget = Budget::from_mb(budget_mb);
  if (normalized) opt.normalized = 1;

  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (analyze->parsed()) code = cmd_analyze(group_path);
    else if (invert->parsed()) code = cmd_invert(group_path, matrix_path);
    else if (localize->parsed()) code = cmd_localize(group_path, element_path);
    else if (homology->parsed()) code = cmd_homology(group_path, degree, prime, opt);
    else if (verify->parsed()) code = cmd_verify(suite, opt, bound);
  } catch (const cohn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = e.code() == cohn::errc::budget_exceeded ? 3 : 2;
  } catch (const cohn::InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "wall time: " << ms << " ms\n";
  return code;
}

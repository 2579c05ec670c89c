#include "qmc/oracle.hpp"
#include "qmc/pauli.hpp"
#include "qmc/sdp.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace qmc;

namespace {

double max_eig(const WeightedGraph& g) { return extreme_eigenvalues(hamiltonian_matrix(g)).max; }

double solved(const SdpProblem& p, double tol = 1e-8) {
  SolveResult r = solve(p, SolveOptions{tol, 200});
  REQUIRE(r.status == SolveStatus::Converged);
  return r.value;
}

SwapPolynomial sym(const SwapPolynomial& p) { return (p + p.adjoint()) * Rational(1, 2); }

SwapPolynomial label_poly(const std::string& s, int n) { return parse_swap_polynomial(s, n); }

}  // namespace

TEST_CASE("three-qubit level one instance") {
  SdpProblem p = build_relaxation(parse_swap_polynomial("s(1,2) + s(1,3) + s(2,3)", 3), 1);
  CHECK(p.block_dim == 4);
  CHECK(p.n_vars() == 3);
  CHECK(p.variables == std::vector<std::string>{"s(1,2)", "s(1,3)", "s(2,3)"});
  CHECK(p.entry(0, 0).str(p.variables) == "1");
  CHECK(p.entry(0, 2).str(p.variables) == "L[s(1,3)]");
  CHECK(p.entry(1, 2).str(p.variables) == "-1/2 + 1/2*L[s(1,2)] + 1/2*L[s(1,3)] + 1/2*L[s(2,3)]");
  CHECK(std::abs(solved(p) - 3) < 1e-6);
}

TEST_CASE("small graphs") {
  CHECK(std::abs(solved(build_level1(complete_graph(2))) - 4) < 1e-6);
  CHECK(std::abs(solved(build_level2(complete_graph(3))) - 6) < 1e-6);
  CHECK(build_level2(complete_graph(3)).block_dim == 5);
  CHECK(std::abs(solved(build_level2(path_graph(4))) - max_eig(path_graph(4))) < 1e-6);
  CHECK_THROWS_AS(build_level1(complete_graph(3), 2), std::invalid_argument);
  CHECK_THROWS(build_relaxation(parse_swap_polynomial("s(1,2) s(1,3) s(2,3)", 3), 1));
  CHECK_THROWS(build_level2(complete_graph(9)));
}

TEST_CASE("irrep substitution removes the last generator") {
  SwapPolynomial h = hamiltonian_polynomial(complete_graph(4));
  for (int k = 0; k <= 2; ++k) {
    SwapPolynomial q = apply_irrep_constraint(h, {4, k});
    for (const auto& [m, c] : q.terms())
      for (Letter a : m.word()) CHECK(a != make_letter(2, 3));
  }
  // the clique acts as its constant in every irrep
  CHECK(apply_irrep_constraint(h, {4, 1}) == SwapPolynomial::constant(4, 8));
  CHECK(apply_irrep_constraint(h, {4, 2}) == SwapPolynomial::constant(4, 12));
  // a lone s34 becomes eta_hat minus the other five generators
  SwapPolynomial rest = SwapPolynomial::constant(4, 6);
  for (auto [i, j] : testing::all_pairs(4))
    if (!(i == 2 && j == 3)) rest -= SwapPolynomial::generator(4, i + 1, j + 1);
  CHECK(apply_irrep_constraint(SwapPolynomial::generator(4, 3, 4), {4, 0}) == rest);
}

TEST_CASE("clique relaxations inside irreps give the clique constants") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      double v = solved(build_level1(complete_graph(n), k));
      CHECK(std::abs(v - static_cast<double>(eta({n, k}))) < 1e-6);
    }
}

TEST_CASE("irrep level two values bound the irrep spectra") {
  WeightedGraph g = cycle_graph(5);
  for (int k = 0; k <= 2; ++k) {
    Eigen::VectorXd s = irrep_spectrum(g, k);
    CHECK(solved(build_level2(g, k)) >= s(s.size() - 1) - 1e-6);
  }
}

TEST_CASE("SDPA text") {
  SdpProblem p = build_relaxation(parse_swap_polynomial("s(1,2) + s(1,3) + s(2,3)", 3), 1);
  std::string text = export_sdpa(p);
  CHECK(text.rfind("3\n1\n4\n-1 -1 -1\n", 0) == 0);
  SdpaData d = parse_sdpa(text);
  CHECK(d.m == 3);
  CHECK(d.blocks == std::vector<int>{4});
  CHECK(write_sdpa(d) == text);
  SolveResult r = solve_sdpa(d);
  REQUIRE(r.status == SolveStatus::Converged);
  // minimum of -(x1 + x2 + x3)
  CHECK(std::abs(r.value + 3) < 1e-6);

  SdpaData c = parse_sdpa("\"comment\n* other\n1 =m\n1\n{2}\n{-1}\n0 1 1 1 -1\n0 1 2 2 -1\n1 1 1 2 1\n");
  CHECK(c.m == 1);
  CHECK(c.blocks == std::vector<int>{2});
  CHECK(c.entries.size() == 3);
  CHECK_THROWS_AS(parse_sdpa("2\n1\n3\n1"), InputError);
  CHECK_THROWS_AS(parse_sdpa("1\n1\n2\n1\n1 1 3 3 1\n"), InputError);
}

TEST_CASE("hand made problem") {
  // maximize x subject to [[1, x], [x, 1]] PSD
  SdpaData d;
  d.m = 1;
  d.blocks = {2};
  d.c = {-1};
  d.entries = {{0, 1, 1, 1, -1}, {0, 1, 2, 2, -1}, {1, 1, 1, 2, 1}};
  SolveResult r = solve_sdpa(d);
  REQUIRE(r.status == SolveStatus::Converged);
  CHECK(std::abs(r.value + 1) < 1e-7);
  CHECK(std::abs(r.x(0) - 1) < 1e-4);
}

TEST_CASE("pins") {
  SdpProblem p = build_level1(complete_graph(3));
  // the unpinned optimum has every L(s_ij) = 0, so pinning there keeps it
  AffineExpr e;
  e.terms = {{0, 1}};
  p.pins.push_back({e, 0});
  AffineExpr sum;
  sum.terms = {{1, 1}, {2, 1}};
  p.pins.push_back({sum, 0});
  SolveResult r = solve(p);
  REQUIRE(r.status == SolveStatus::Converged);
  CHECK(std::abs(r.value - 6) < 1e-6);
  REQUIRE(r.x.size() == 3);
  CHECK(std::abs(r.x(0)) < 1e-12);
  CHECK(std::abs(r.x(1) + r.x(2)) < 1e-12);
  CHECK(to_sdpa(p).blocks == std::vector<int>{4, 1, 1, 1, 1});

  SdpProblem bad = build_level1(complete_graph(3));
  bad.pins.push_back({e, 2});
  CHECK(solve(bad).status != SolveStatus::Converged);
  SdpProblem clash = build_level1(complete_graph(3));
  clash.pins.push_back({e, 0});
  clash.pins.push_back({e, Rational(1, 2)});
  CHECK(solve(clash).status == SolveStatus::Infeasible);
}

TEST_CASE("hierarchy is monotone") {
  for (int n : {3, 4}) {
    for (const auto& g : testing::connected_graphs(n)) {
      double l1 = solved(build_level1(g)), l2 = solved(build_level2(g)), o = max_eig(g);
      CHECK(l1 + 1e-6 >= l2);
      CHECK(l2 + 1e-6 >= o);
    }
  }
}

TEST_CASE("minimization through the negated problem") {
  WeightedGraph g = cycle_graph(4);
  double low = -solved(negated(build_level2(g)));
  CHECK(low <= extreme_eigenvalues(hamiltonian_matrix(g)).min + 1e-6);
}

TEST_CASE("moment matrices have unit diagonal on words and are symmetric") {
  for (int level : {1, 2}) {
    SdpProblem p = level == 1 ? build_level1(cycle_graph(5)) : build_level2(cycle_graph(5));
    for (int r = 0; r < p.block_dim; ++r) {
      CHECK(p.entry(r, r).is_constant());
      CHECK(p.entry(r, r).constant == 1);
      for (int c = 0; c < p.block_dim; ++c) CHECK(p.entry(r, c) == p.entry(c, r));
    }
  }
}

TEST_CASE("entry identifications are sound") {
  for (auto [n, level] : {std::pair{3, 1}, {4, 1}, {3, 2}, {4, 2}, {5, 2}}) {
    SdpProblem p = build_relaxation(SwapPolynomial::constant(n, 0), level);
    std::vector<SwapPolynomial> vars, rows;
    for (const auto& v : p.variables) vars.push_back(sym(label_poly(v, n)));
    for (const auto& v : p.veronese) rows.push_back(label_poly(v, n));
    for (int r = 0; r < p.block_dim; ++r)
      for (int c = r; c < p.block_dim; ++c) {
        const AffineExpr& e = p.entry(r, c);
        SwapPolynomial rhs = SwapPolynomial::constant(n, e.constant);
        for (const auto& [v, a] : e.terms) rhs += vars[v] * a;
        CHECK(equal_in_algebra(sym(rows[r].adjoint() * rows[c]), rhs));
      }
  }
}

TEST_CASE("level two identifications on three qubits") {
  SdpProblem p = build_level2(complete_graph(3));
  auto row = [&](const char* s) {
    auto it = std::find(p.veronese.begin(), p.veronese.end(), s);
    REQUIRE(it != p.veronese.end());
    return static_cast<int>(it - p.veronese.begin());
  };
  // s12 s23 and s12 s13 are adjoint to each other modulo the relations
  CHECK(p.entry(row("s(1,2)"), row("s(2,3)")) == p.entry(row("s(1,2)"), row("s(1,3)")));
  CHECK(p.entry(row("1"), row("s(1,2) s(1,3)")) == p.entry(row("s(1,2)"), row("s(1,3)")));
}

#pragma once

#include "qmc/graph.hpp"
#include "qmc/swap.hpp"
#include "qmc/symrep.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmc {

// c0 + sum c_i * var_i, terms sorted by variable id, no zero coefficients.
struct AffineExpr {
  Rational constant;
  std::vector<std::pair<int, Rational>> terms;

  bool is_constant() const { return terms.empty(); }
  Rational coefficient(int var) const;
  std::string str(const std::vector<std::string>& names) const;
  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

struct SdpPin {
  AffineExpr expr;
  Rational value;
};

// Real moment-matrix relaxation: maximize objective subject to
// (entry(r, c)) PSD and every pin holding. The monomial 1 is the constant
// term of the affine expressions rather than a variable.
struct SdpProblem {
  int n = 0;
  int level = 1;
  std::optional<int> irrep_k;
  int block_dim = 0;
  std::vector<std::string> veronese;      // row labels
  std::vector<std::string> variables;     // canonical monomial of each variable
  std::vector<std::uint32_t> entry_ids;   // row-major, indexes entries
  std::vector<AffineExpr> entries;        // distinct entry expressions
  AffineExpr objective;
  std::vector<SdpPin> pins;

  const AffineExpr& entry(int r, int c) const { return entries[entry_ids[static_cast<std::size_t>(r) * block_dim + c]]; }
  std::size_t n_vars() const { return variables.size(); }
};

// s_{n-1,n} replaced by eta_hat - (sum of the other generators), alternating
// with reduce_rewrite until no s_{n-1,n} is left.
SwapPolynomial apply_irrep_constraint(const SwapPolynomial& p, const TwoRowPartition& lambda);

// Objective L(p) for a real polynomial p of degree <= 2 * level. Level 1 uses
// the Veronese (1, s_ij), level 2 uses B2. With irrep_k the relaxation works
// inside the [n-k, k] irrep.
SdpProblem build_relaxation(const SwapPolynomial& objective, int level, std::optional<int> irrep_k = std::nullopt);
SdpProblem build_level1(const WeightedGraph& g, std::optional<int> irrep_k = std::nullopt);
SdpProblem build_level2(const WeightedGraph& g, std::optional<int> irrep_k = std::nullopt);

// Same constraints, objective negated: maximizing it gives minus a lower
// bound on the smallest eigenvalue.
SdpProblem negated(SdpProblem p);

// Numeric SDPA form: minimize c.x subject to sum_i F_i x_i - F_0 PSD.
struct SdpaData {
  struct Entry {
    int mat;  // 0 = constant matrix
    int block;  // 1-based
    int i;  // 1-based, i <= j
    int j;
    double value;
  };
  int m = 0;
  std::vector<int> blocks;
  std::vector<double> c;
  std::vector<Entry> entries;
};

SdpaData to_sdpa(const SdpProblem& p, bool maximize = true);
std::string write_sdpa(const SdpaData& d);
std::string export_sdpa(const SdpProblem& p, bool maximize = true);
SdpaData parse_sdpa(std::string_view text);  // throws InputError

enum class SolveStatus { Converged, IterationLimit, Infeasible, Failure };
const char* to_string(SolveStatus s);

struct SolveResult {
  double value = 0;  // optimum of the original problem (SDPA: c.x)
  SolveStatus status = SolveStatus::Failure;
  int iterations = 0;
  double primal_infeasibility = 0;
  double dual_infeasibility = 0;
  double gap = 0;
  Eigen::VectorXd x;
};

struct SolveOptions {
  double tol = 1e-8;
  int max_iter = 200;
};

// Primal-dual interior point (HKM direction, Mehrotra predictor-corrector)
// on the SDPA form; value is the minimum of c.x.
SolveResult solve_sdpa(const SdpaData& d, const SolveOptions& opts = {});

// Maximum of the objective of p; value includes the objective constant.
SolveResult solve(const SdpProblem& p, const SolveOptions& opts = {});

}  // namespace qmc

#pragma once

#include "qmc/graph.hpp"
#include "qmc/swap.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <stdexcept>

namespace qmc {

// Operators on (C^2)^{⊗n} in the computational basis, qubit 1 being the most
// significant bit of the basis index. Every operator in scope is real.
using OracleMatrix = Eigen::SparseMatrix<double>;

inline constexpr int kOracleMaxQubits = 14;
inline constexpr int kDenseMaxQubits = 10;  // dense solver and full spectra

class OracleLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OracleMatrix swap_matrix(int n, int i, int j);  // 1-based, i != j
OracleMatrix hamiltonian_matrix(const WeightedGraph& g);
OracleMatrix evaluate_polynomial(const SwapPolynomial& p);

struct Extremes {
  double min = 0;
  double max = 0;
};

// Dense symmetric solver up to 2^10, Lanczos with full reorthogonalization
// above (up to 2^14).
Extremes extreme_eigenvalues(const OracleMatrix& h, double tol = 1e-9);

// All eigenvalues, ascending; refuses dimensions above 2^10.
Eigen::VectorXd spectrum(const OracleMatrix& h);

// Eigenvalues of H_G inside the [n-k, k] irrep, ascending. Uses the copy of
// the irrep formed by the weight-k vectors annihilated by the total lowering
// operator. Refuses n > 14.
Eigen::VectorXd irrep_spectrum(const WeightedGraph& g, int k);

}  // namespace qmc

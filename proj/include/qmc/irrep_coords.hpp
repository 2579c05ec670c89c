#pragma once

#include "qmc/modspan.hpp"
#include "qmc/swap.hpp"
#include "qmc/symrep.hpp"

#include <vector>

namespace qmc {

// Exact matrices of swap polynomials in the [n-k, k] irrep. The irrep is
// realized as the kernel of the total lowering operator on weight-k basis
// states. Its basis Q comes from reduced row echelon form, so Q restricted to
// the free coordinates is the identity and the matrix of a permutation is a
// row selection of the permuted Q.
class IrrepCoordinates {
 public:
  IrrepCoordinates(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int dim() const { return d_; }

  // d x d matrix of p, keyed row * d + col.
  ExactVec matrix(const SwapPolynomial& p) const;
  // Matrix of (p + p*) / 2.
  ExactVec symmetric(const SwapPolynomial& p) const;
  ModVec symmetric_mod(const SwapPolynomial& p) const;
  ModVec matrix_mod(const SwapPolynomial& p) const;

  bool vanishes(const SwapPolynomial& p) const { return matrix(p).empty(); }

 private:
  // Row index (into Q) reached from free row a under the inverse action of w.
  int pulled_row(const Word& w, int a, bool adjoint) const;
  template <class Acc, class Add>
  void accumulate(const SwapPolynomial& p, bool adjoint, Acc& acc, Add add) const;

  int n_, k_, d_ = 0;
  std::vector<std::uint32_t> states_;  // weight-k bitstrings
  std::vector<int> index_;             // bitstring -> position in states_
  std::vector<int> free_;              // free coordinates, one per irrep basis vector
  std::vector<std::vector<std::pair<int, Rational>>> q_;  // sparse rows of Q
  std::vector<std::vector<std::pair<int, std::uint64_t>>> q_mod_;
};

}  // namespace qmc

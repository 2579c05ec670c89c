#pragma once

#include "qmc/modspan.hpp"
#include "qmc/swap.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qmc {

class NotInSpan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Real coordinates of a real swap polynomial in the Pauli basis: the real
// part of the coefficient for strings with an even number of Y factors and
// the imaginary part for odd ones (the other part is always zero). With
// symmetric_part only even strings are kept, which are the coordinates of
// (p + p*)/2.
ExactVec real_coordinates(const SwapPolynomial& p, bool symmetric_part = false);
ModVec mod_coordinates(const Word& w, bool symmetric_part = false);
ModVec mod_coordinates(const SwapPolynomial& p, bool symmetric_part = false);

// Exact expansion against a fixed linearly independent family. Solves mod p,
// reconstructs rationals and checks the result exactly; falls back to exact
// elimination when the check fails.
class LinearExpander {
 public:
  LinearExpander() = default;
  explicit LinearExpander(std::vector<ExactVec> family);

  std::size_t size() const { return family_.size(); }
  bool contains(const ModVec& v) const { return span_.contains(v); }
  std::optional<std::vector<Rational>> solve(const ExactVec& v) const;
  std::optional<std::vector<Rational>> solve(const ExactVec& v, const ModVec& vmod) const;

  // Test hook: skip the modular path entirely.
  void set_force_exact(bool on) { force_exact_ = on; }

 private:
  std::vector<ExactVec> family_;
  ModSpan span_;
  bool force_exact_ = false;
};

// {1} u {s_ij} u {s_ij s_ik : i<j<k} u {s_ij s_kl : i<j, i<k<l}, grlex sorted.
std::vector<SwapMonomial> basis_b2(int n);
BigInt basis_b2_size(int n);  // (3n^4 - 14n^3 + 33n^2 - 22n + 24) / 24
BigInt basis_b3_size(int n);
BigInt basis_b4_size(int n);

struct DeriveOptions {
  std::size_t max_candidates = 400000;
  bool stop_at_full = true;  // stop once Catalan(n) elements are found
};

// Grlex-greedy maximal set of words of degree <= d with independent
// fingerprints. Candidates of degree t extend a selected word of degree t-1
// by one letter and must have a selected suffix as well, since the selected
// words are closed under taking subwords.
std::vector<SwapMonomial> derive_basis(int n, int d, const DeriveOptions& opts = {});

class BasisExpander {
 public:
  explicit BasisExpander(std::vector<SwapMonomial> basis);

  const std::vector<SwapMonomial>& basis() const { return basis_; }
  std::vector<Rational> expand(const SwapPolynomial& p) const;  // throws NotInSpan
  std::optional<std::vector<Rational>> try_expand(const SwapPolynomial& p) const;
  bool in_span(const SwapPolynomial& p) const;
  void set_force_exact(bool on) { lin_.set_force_exact(on); }

 private:
  std::vector<SwapMonomial> basis_;
  LinearExpander lin_;
};

std::vector<Rational> expand_in_basis(const SwapPolynomial& p, const std::vector<SwapMonomial>& basis);

}  // namespace qmc

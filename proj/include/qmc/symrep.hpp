#pragma once

#include "qmc/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qmc {

// The two-row irrep [n-k, k] of S_n.
struct TwoRowPartition {
  int n = 1;
  int k = 0;

  TwoRowPartition() = default;
  TwoRowPartition(int n_, int k_);  // throws std::invalid_argument unless 0 <= k <= n/2

  int first_row() const { return n - k; }
  std::string str() const;  // "[n-k,k]"
  auto operator<=>(const TwoRowPartition&) const = default;
};

// All [n-k, k] with 0 <= k <= n/2, in increasing k.
std::vector<TwoRowPartition> two_row_partitions(int n);

BigInt irrep_dim(const TwoRowPartition& p);
BigInt transposition_character(const TwoRowPartition& p);
BigInt eta(const TwoRowPartition& p);
BigInt eta_hat(const TwoRowPartition& p);

// {[m-j, j] : max(0, m+k-n) <= j <= min(k, m/2)}; requires 1 <= m < n.
std::vector<TwoRowPartition> rstrct(int m, const TwoRowPartition& p);

BigInt catalan(int n);

}  // namespace qmc

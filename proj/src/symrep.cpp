#include "qmc/symrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmc {

TwoRowPartition::TwoRowPartition(int n_, int k_) : n(n_), k(k_) {
  if (n < 1 || k < 0 || 2 * k > n)
    throw std::invalid_argument("invalid two-row partition (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

std::string TwoRowPartition::str() const { return "[" + std::to_string(n - k) + "," + std::to_string(k) + "]"; }

std::vector<TwoRowPartition> two_row_partitions(int n) {
  std::vector<TwoRowPartition> out;
  for (int k = 0; 2 * k <= n; ++k) out.emplace_back(n, k);
  return out;
}

namespace {

// dim of the shape [a, b] (a >= b >= 0); zero for anything that is not a
// valid two-row diagram.
BigInt shape_dim(int a, int b) {
  if (b < 0 || a < b) return 0;
  int n = a + b;
  // (n - 2b + 1) / (n - b + 1) * C(n, b)
  return binomial(n, b) * (n - 2 * b + 1) / (n - b + 1);
}

}  // namespace

BigInt irrep_dim(const TwoRowPartition& p) { return shape_dim(p.n - p.k, p.k); }

BigInt transposition_character(const TwoRowPartition& p) {
  const int n = p.n, k = p.k;
  if (n < 2) throw std::invalid_argument("transposition character needs n >= 2");
  if (k == 0) return 1;
  if (n == 2) return -1;  // k == 1: sign representation
  if (n == 3) return 0;   // [2,1]: standard representation of S_3
  if (k == 1) return shape_dim(n - k - 2, k);
  if (2 * k == n) return shape_dim(n - k, k - 2) - shape_dim(n - k - 1, k - 1);
  if (2 * k == n - 1) return shape_dim(n - k, k - 2);
  return shape_dim(n - k - 2, k) + shape_dim(n - k, k - 2);
}

BigInt eta(const TwoRowPartition& p) {
  BigInt k = p.k;
  return 2 * k * (p.n + 1) - 2 * k * k;
}

BigInt eta_hat(const TwoRowPartition& p) {
  BigInt k = p.k;
  return binomial(p.n, 2) + k * k - k * (p.n + 1);
}

std::vector<TwoRowPartition> rstrct(int m, const TwoRowPartition& p) {
  if (m < 1 || m >= p.n)
    throw std::invalid_argument("rstrct needs 1 <= m < n (m=" + std::to_string(m) + ", n=" + std::to_string(p.n) + ")");
  std::vector<TwoRowPartition> out;
  int lo = std::max(0, m + p.k - p.n);
  int hi = std::min(p.k, m / 2);
  for (int j = lo; j <= hi; ++j) out.emplace_back(m, j);
  return out;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan needs n >= 0");
  return binomial(2L * n, n) / (n + 1);
}

}  // namespace qmc

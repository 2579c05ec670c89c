#include "qmc/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace qmc {

namespace {

void check_qubits(int n) {
  if (n < 1) throw std::invalid_argument("oracle needs at least one qubit");
  if (n > kOracleMaxQubits)
    throw OracleLimit("oracle refuses n = " + std::to_string(n) + " (limit " + std::to_string(kOracleMaxQubits) + ")");
}

// Bit position of 0-based qubit q.
inline int bit_of(int n, int q) { return n - 1 - q; }

inline std::uint32_t swap_bits(std::uint32_t x, int a, int b) {
  std::uint32_t d = ((x >> a) ^ (x >> b)) & 1u;
  return x ^ ((d << a) | (d << b));
}

}  // namespace

OracleMatrix swap_matrix(int n, int i, int j) {
  check_qubits(n);
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("swap_matrix: bad indices");
  int a = bit_of(n, i - 1), b = bit_of(n, j - 1);
  std::uint32_t dim = 1u << n;
  OracleMatrix m(dim, dim);
  m.reserve(Eigen::VectorXi::Constant(dim, 1));
  for (std::uint32_t x = 0; x < dim; ++x) m.insert(swap_bits(x, a, b), x) = 1.0;
  m.makeCompressed();
  return m;
}

OracleMatrix hamiltonian_matrix(const WeightedGraph& g) {
  check_qubits(g.n());
  int n = g.n();
  std::uint32_t dim = 1u << n;
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(dim) * (g.edge_count() + 1));
  for (const Edge& e : g.edges()) {
    double w = 2.0 * to_double(e.w);
    int a = bit_of(n, e.u), b = bit_of(n, e.v);
    for (std::uint32_t x = 0; x < dim; ++x) {
      std::uint32_t y = swap_bits(x, a, b);
      if (y == x) continue;  // the I - SW term vanishes on fixed basis states
      trips.emplace_back(x, x, w);
      trips.emplace_back(y, x, -w);
    }
  }
  OracleMatrix h(dim, dim);
  h.setFromTriplets(trips.begin(), trips.end());
  return h;
}

OracleMatrix evaluate_polynomial(const SwapPolynomial& p) {
  check_qubits(p.n());
  int n = p.n();
  std::uint32_t dim = 1u << n;
  std::vector<Eigen::Triplet<double>> trips;
  for (const auto& [m, c] : p.terms()) {
    double v = to_double(c);
    const Word& w = m.word();
    for (std::uint32_t x = 0; x < dim; ++x) {
      std::uint32_t y = x;
      for (auto it = w.rbegin(); it != w.rend(); ++it) y = swap_bits(y, bit_of(n, it->i), bit_of(n, it->j));
      trips.emplace_back(y, x, v);
    }
  }
  OracleMatrix r(dim, dim);
  r.setFromTriplets(trips.begin(), trips.end());
  r.prune(0.0);
  return r;
}

namespace {

// Extreme eigenvalue on one end of the spectrum by restarted Lanczos with full
// reorthogonalization.
double lanczos_extreme(const OracleMatrix& h, bool largest, double tol) {
  const Eigen::Index dim = h.rows();
  const int m = static_cast<int>(std::min<Eigen::Index>(dim, 160));
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> nd;
  Eigen::VectorXd start(dim);
  for (Eigen::Index i = 0; i < dim; ++i) start(i) = nd(rng);
  double scale = 1.0;
  for (int outer = 0; outer < 40; ++outer) {
    Eigen::MatrixXd V(dim, m + 1);
    Eigen::VectorXd alpha(m), beta(m);
    V.col(0) = start.normalized();
    int steps = 0;
    for (int j = 0; j < m; ++j) {
      Eigen::VectorXd w = h * V.col(j);
      alpha(j) = V.col(j).dot(w);
      // two passes of classical Gram-Schmidt against the whole basis
      for (int pass = 0; pass < 2; ++pass) w -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * w);
      beta(j) = w.norm();
      steps = j + 1;
      scale = std::max({scale, std::abs(alpha(j)), beta(j)});
      if (beta(j) < 1e-12 * scale) break;
      V.col(j + 1) = w / beta(j);
    }
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
    for (int j = 0; j < steps; ++j) {
      T(j, j) = alpha(j);
      if (j + 1 < steps) T(j, j + 1) = T(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    int idx = largest ? steps - 1 : 0;
    double theta = es.eigenvalues()(idx);
    double resid = std::abs(beta(steps - 1) * es.eigenvectors()(steps - 1, idx));
    if (resid <= 0.1 * tol * std::max(1.0, std::abs(theta)) || beta(steps - 1) < 1e-12 * scale) return theta;
    start = V.leftCols(steps) * es.eigenvectors().col(idx);
  }
  throw ConvergenceError("Lanczos did not converge");
}

}  // namespace

Extremes extreme_eigenvalues(const OracleMatrix& h, double tol) {
  if (h.rows() != h.cols()) throw std::invalid_argument("extreme_eigenvalues: matrix is not square");
  if (h.rows() == 0) throw std::invalid_argument("extreme_eigenvalues: empty matrix");
  if (h.rows() > (Eigen::Index{1} << kOracleMaxQubits)) throw OracleLimit("extreme_eigenvalues: dimension above 2^14");
  if (h.rows() <= (Eigen::Index{1} << kDenseMaxQubits)) {
    Eigen::VectorXd ev = spectrum(h);
    return {ev(0), ev(ev.size() - 1)};
  }
  return {lanczos_extreme(h, false, tol), lanczos_extreme(h, true, tol)};
}

Eigen::VectorXd spectrum(const OracleMatrix& h) {
  if (h.rows() > (Eigen::Index{1} << kDenseMaxQubits)) throw OracleLimit("full spectrum refused above 2^10");
  Eigen::MatrixXd d(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed");
  return es.eigenvalues();
}

Eigen::VectorXd irrep_spectrum(const WeightedGraph& g, int k) {
  int n = g.n();
  check_qubits(n);
  if (k < 0 || 2 * k > n) throw std::invalid_argument("irrep_spectrum: need 0 <= k <= n/2");
  std::vector<std::uint32_t> states, lower;
  std::vector<int> index(std::size_t{1} << n, -1), lower_index(std::size_t{1} << n, -1);
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (std::popcount(x) == k) {
      index[x] = static_cast<int>(states.size());
      states.push_back(x);
    } else if (k > 0 && std::popcount(x) == k - 1) {
      lower_index[x] = static_cast<int>(lower.size());
      lower.push_back(x);
    }
  }
  const Eigen::Index d = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd hs = Eigen::MatrixXd::Zero(d, d);
  for (const Edge& e : g.edges()) {
    double w = 2.0 * to_double(e.w);
    int a = n - 1 - e.u, b = n - 1 - e.v;
    for (Eigen::Index c = 0; c < d; ++c) {
      std::uint32_t y = swap_bits(states[c], a, b);
      if (y == states[c]) continue;
      hs(c, c) += w;
      hs(index[y], c) -= w;
    }
  }
  Eigen::MatrixXd q;
  if (k == 0) {
    q = Eigen::MatrixXd::Ones(d, 1);
  } else {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(lower.size()), d);
    for (Eigen::Index c = 0; c < d; ++c)
      for (int b = 0; b < n; ++b)
        if (states[c] >> b & 1u) l(lower_index[states[c] ^ (1u << b)], c) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l.transpose() * l);
    // L^T L has integer spectrum, so its kernel is separated from the rest by 1.
    Eigen::Index dim = 0;
    while (dim < d && es.eigenvalues()(dim) < 0.5) ++dim;
    q = es.eigenvectors().leftCols(dim);
  }
  Eigen::MatrixXd hi = q.transpose() * hs * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hi, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace qmc

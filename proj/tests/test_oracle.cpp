#include "qmc/gb.hpp"
#include "qmc/identities.hpp"
#include "qmc/oracle.hpp"
#include "qmc/pauli.hpp"
#include "qmc/symrep.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace qmc;

namespace {

using Mat = Eigen::MatrixXd;

Mat dense(const OracleMatrix& m) { return Mat(m); }

std::vector<double> distinct(const Eigen::VectorXd& v, double tol = 1e-9) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (out.empty() || v(i) - out.back() > tol) out.push_back(v(i));
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

TEST_CASE("two-qubit swap gate") {
  Mat s = dense(swap_matrix(2, 1, 2));
  Mat want(4, 4);
  want << 1, 0, 0, 0,
          0, 0, 1, 0,
          0, 1, 0, 0,
          0, 0, 0, 1;
  CHECK(s == want);
}

TEST_CASE("swap from Pauli matrices") {
  Eigen::Matrix2cd x, y, z;
  const std::complex<double> I(0, 1);
  x << 0, 1, 1, 0;
  y << 0, -I, I, 0;
  z << 1, 0, 0, -1;
  Eigen::Matrix4cd sum = Eigen::Matrix4cd::Identity();
  for (const Eigen::Matrix2cd* p : {&x, &y, &z}) {
    Eigen::Matrix4cd k;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) k.block<2, 2>(2 * a, 2 * b) = (*p)(a, b) * *p;
    sum += k;
  }
  sum *= 0.5;
  CHECK((sum.real() - dense(swap_matrix(2, 1, 2))).norm() < 1e-15);
  CHECK(sum.imag().norm() < 1e-15);
}

TEST_CASE("swap matrices are involutions and act on the right qubits") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Mat s = dense(swap_matrix(n, i, j));
        CHECK((s * s - Mat::Identity(1 << n, 1 << n)).norm() == 0);
      }
  // |100> (qubit 1 set) goes to |010> under the swap of qubits 1 and 2
  Mat s = dense(swap_matrix(3, 1, 2));
  CHECK(s(0b010, 0b100) == 1);
  CHECK(s(0b001, 0b001) == 1);
  // swap of qubits 1 and 3 equals 1 (x) swap of the outer pair built by hand
  Mat sw = dense(swap_matrix(2, 1, 2));
  CHECK((dense(swap_matrix(3, 2, 3)) - kron(Mat::Identity(2, 2), sw)).norm() == 0);
  CHECK_THROWS(swap_matrix(3, 2, 2));
  CHECK_THROWS_AS(swap_matrix(15, 1, 2), OracleLimit);
}

TEST_CASE("small Hamiltonians") {
  Eigen::VectorXd k2 = spectrum(hamiltonian_matrix(complete_graph(2)));
  CHECK((k2 - Eigen::Vector4d(0, 0, 0, 4)).norm() < 1e-12);
  CHECK(extreme_eigenvalues(hamiltonian_matrix(complete_graph(3))).max == doctest::Approx(6).epsilon(1e-12));
  CHECK(dense(hamiltonian_matrix(WeightedGraph(4))).norm() == 0);
}

TEST_CASE("extreme eigenvalues") {
  OracleMatrix id(8, 8);
  id.setIdentity();
  Extremes e = extreme_eigenvalues(id);
  CHECK(e.min == doctest::Approx(1));
  CHECK(e.max == doctest::Approx(1));
  Extremes k3 = extreme_eigenvalues(hamiltonian_matrix(complete_graph(3)));
  CHECK(std::abs(k3.min) < 1e-9);
  CHECK(std::abs(k3.max - 6) < 1e-9);
  CHECK(std::abs(extreme_eigenvalues(hamiltonian_matrix(star_graph(4))).max - 8) < 1e-9);
}

TEST_CASE("iterative solver above the dense limit") {
  // K_12: eta(12, 6) = 84; star on 12 vertices: 2n = 24
  Extremes k = extreme_eigenvalues(hamiltonian_matrix(complete_graph(12)));
  CHECK(std::abs(k.max - 84) < 1e-7);
  CHECK(std::abs(k.min) < 1e-7);
  Extremes s = extreme_eigenvalues(hamiltonian_matrix(star_graph(12)));
  CHECK(std::abs(s.max - 24) < 1e-7);
  CHECK_THROWS_AS(spectrum(hamiltonian_matrix(complete_graph(11))), OracleLimit);
  CHECK_THROWS_AS(hamiltonian_matrix(complete_graph(15)), OracleLimit);
}

TEST_CASE("weighted Hamiltonian") {
  WeightedGraph g = parse_graph("2\n1 2 1/2");
  CHECK(std::abs(extreme_eigenvalues(hamiltonian_matrix(g)).max - 2) < 1e-12);
}

TEST_CASE("polynomial evaluation") {
  CHECK((dense(evaluate_polynomial(SwapPolynomial::constant(3, 1))) - Mat::Identity(8, 8)).norm() == 0);
  SwapPolynomial tri = parse_swap_polynomial("s(1,2) s(2,3) + s(2,3) s(1,2) - s(1,2) - s(2,3) - s(1,3) + 1");
  CHECK(dense(evaluate_polynomial(tri)).norm() < 1e-12);
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    WeightedGraph g = testing::random_graph(2 + t % 5, 0.5, rng);
    CHECK((dense(evaluate_polynomial(hamiltonian_polynomial(g))) - dense(hamiltonian_matrix(g))).norm() < 1e-12);
  }
}

TEST_CASE("dense zero test agrees with the fingerprint") {
  std::mt19937 rng(37);
  std::bernoulli_distribution from_ideal(0.5);
  int zeros = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 5;
    SwapPolynomial p = testing::random_polynomial(n, 3, 3, rng);
    if (from_ideal(rng) && n >= 3) {
      auto rels = triangle_relations(n);
      SwapPolynomial a = testing::random_polynomial(n, 1, 2, rng);
      p = a * rels[t % rels.size()] * a;
    }
    bool dense_zero = dense(evaluate_polynomial(p)).cwiseAbs().maxCoeff() < 1e-12;
    zeros += dense_zero;
    CHECK(dense_zero == fingerprint(p).is_zero());
  }
  CHECK(zeros > 20);
}

TEST_CASE("Hamiltonians commute with the global spin flip") {
  std::mt19937 rng(41);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + t % 6;
    Mat h = dense(hamiltonian_matrix(testing::random_graph(n, 0.5, rng)));
    // X on every qubit reverses the bits of the basis index
    Mat flip = Mat::Zero(1 << n, 1 << n);
    for (int b = 0; b < (1 << n); ++b) flip((1 << n) - 1 - b, b) = 1;
    CHECK((h * flip - flip * h).norm() < 1e-12);
  }
}

TEST_CASE("clique spectra are the clique constants") {
  for (int n = 2; n <= 6; ++n) {
    auto got = distinct(spectrum(hamiltonian_matrix(complete_graph(n))));
    std::vector<double> want;
    for (int k = 0; 2 * k <= n; ++k) want.push_back(static_cast<double>(eta({n, k})));
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
  }
}

TEST_CASE("irrep spectra with multiplicities rebuild the full spectrum") {
  std::mt19937 rng(43);
  for (int t = 0; t < 15; ++t) {
    int n = 2 + t % 6;
    WeightedGraph g = testing::random_graph(n, 0.5, rng);
    std::vector<double> all;
    for (int k = 0; 2 * k <= n; ++k) {
      Eigen::VectorXd s = irrep_spectrum(g, k);
      CHECK(BigInt(s.size()) == irrep_dim({n, k}));
      // [n-k, k] occurs n - 2k + 1 times in the qubit space
      for (int copy = 0; copy < n - 2 * k + 1; ++copy) all.insert(all.end(), s.data(), s.data() + s.size());
    }
    std::sort(all.begin(), all.end());
    Eigen::VectorXd full = spectrum(hamiltonian_matrix(g));
    REQUIRE(static_cast<Eigen::Index>(all.size()) == full.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(std::abs(all[i] - full(i)) < 1e-9);
  }
}

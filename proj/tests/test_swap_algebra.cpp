#include "qmc/gb.hpp"
#include "qmc/identities.hpp"
#include "qmc/oracle.hpp"
#include "qmc/pauli.hpp"
#include "qmc/rewrite.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <complex>
#include <map>

using namespace qmc;

namespace {

SwapPolynomial P(const char* text, int n = 0) { return parse_swap_polynomial(text, n); }

std::map<std::string, std::string> readable(const PauliFingerprint& f) {
  std::map<std::string, std::string> out;
  for (const auto& [k, c] : f.terms()) {
    CHECK(c.im == 0);
    out[PauliString::from_key(k).str()] = to_string(c.re);
  }
  return out;
}

using CMat = Eigen::MatrixXcd;

// Dense matrix of a fingerprint built from Kronecker products of Pauli
// matrices, qubit 1 as the leftmost factor.
CMat fingerprint_matrix(const PauliFingerprint& f, int n) {
  const std::complex<double> I(0, 1);
  CMat id = CMat::Identity(2, 2), x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -I, I, 0;
  z << 1, 0, 0, -1;
  CMat out = CMat::Zero(1 << n, 1 << n);
  for (const auto& [k, c] : f.terms()) {
    PauliString p = PauliString::from_key(k);
    CMat m = CMat::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
      int code = ((p.x >> q) & 1) | (((p.z >> q) & 1) << 1);
      const CMat& f1 = code == 0 ? id : code == 1 ? x : code == 2 ? z : y;
      CMat next(m.rows() * 2, m.cols() * 2);
      for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b) next.block(2 * a, 2 * b, 2, 2) = m(a, b) * f1;
      m = std::move(next);
    }
    out += std::complex<double>(to_double(c.re), to_double(c.im)) * m;
  }
  return out;
}

}  // namespace

TEST_CASE("grlex order") {
  const int n = 4;
  auto m = [&](const char* t) { return P(t, n).leading_monomial(); };
  CHECK(grlex_compare(m("s(1,2)"), m("s(1,3) s(1,4)")) < 0);
  CHECK(grlex_compare(m("s(1,2) s(2,3)"), m("s(1,3) s(1,2)")) < 0);
  CHECK(grlex_compare(m("s(1,3) s(1,2)"), m("s(1,3) s(1,2)")) == 0);
  CHECK(grlex_compare(m("s(1,4)"), m("s(2,3)")) < 0);
  CHECK_THROWS_AS(grlex_compare(SwapMonomial(3, {}), SwapMonomial(4, {})), std::invalid_argument);
}

TEST_CASE("generators are stored with i < j") {
  CHECK(P("s(2,1)", 3) == P("s(1,2)", 3));
  CHECK_THROWS(make_letter(2, 2));
}

TEST_CASE("fingerprint of one swap") {
  auto f = readable(fingerprint(P("s(1,2)")));
  CHECK(f == std::map<std::string, std::string>{{"I", "1/2"}, {"X1 X2", "1/2"}, {"Y1 Y2", "1/2"}, {"Z1 Z2", "1/2"}});
}

TEST_CASE("fingerprints of relations vanish") {
  CHECK(fingerprint(P("s(1,2) s(1,2) - 1")).is_zero());
  CHECK(fingerprint(P("s(1,2) s(2,3) + s(2,3) s(1,2) - s(1,2) - s(2,3) - s(1,3) + 1")).is_zero());
  CHECK(fingerprint(SwapPolynomial(3)).is_zero());
}

TEST_CASE("equality in the algebra") {
  CHECK(equal_in_algebra(P("s(1,2) s(2,3)"), P("s(1,3) s(1,2)")));
  CHECK(equal_in_algebra(P("s(1,2) s(3,4)"), P("s(3,4) s(1,2)")));
  CHECK_FALSE(equal_in_algebra(P("s(1,2)", 3), P("s(1,3)")));
}

TEST_CASE("rewrite examples") {
  CHECK(reduce_rewrite(P("s(1,2) s(1,2)")) == SwapPolynomial::constant(2, 1));
  CHECK(reduce_rewrite(P("s(1,3) s(1,2)")) == P("s(1,2) s(2,3)"));
}

TEST_CASE("a generator on both sides of a word cancels down") {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    int n = 3 + t % 4;
    Word q = testing::random_word(n, 1 + t % 5, rng);
    Word w = q;
    Letter a = testing::random_word(n, 1, rng)[0];
    w.insert(w.begin(), a);
    w.push_back(a);
    SwapPolynomial p{SwapMonomial(n, w)};
    SwapPolynomial r = reduce_rewrite(p);
    CHECK(r.degree() <= q.size());
    CHECK(equal_in_algebra(p, r));
  }
}

TEST_CASE("fingerprint is linear and multiplicative") {
  std::mt19937 rng(5);
  for (int t = 0; t < 150; ++t) {
    int n = 2 + t % 5;
    SwapPolynomial p = testing::random_polynomial(n, 3, 4, rng), q = testing::random_polynomial(n, 3, 4, rng);
    CHECK(fingerprint(p * q) == fingerprint(p) * fingerprint(q));
    PauliFingerprint sum = fingerprint(p);
    sum += fingerprint(q);
    CHECK(fingerprint(p + q) == sum);
  }
}

TEST_CASE("fingerprints agree with the dense swap matrices") {
  std::mt19937 rng(9);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + t % 4;
    SwapPolynomial p = testing::random_polynomial(n, 3, 3, rng);
    CMat want = Eigen::MatrixXd(evaluate_polynomial(p)).cast<std::complex<double>>();
    CHECK((fingerprint_matrix(fingerprint(p), n) - want).norm() < 1e-9);
  }
}

TEST_CASE("relations vanish in every index form") {
  for (int n = 3; n <= 5; ++n) {
    for (auto family : {involution_relations(n), conjugation_relations(n), triangle_relations(n), braid_cubes(n)})
      for (const auto& r : family) CHECK(fingerprint(r).is_zero());
  }
  for (const auto& r : disjoint_commutators(5)) CHECK(fingerprint(r).is_zero());
  CHECK(conjugation_relations(3).size() == 6);
  CHECK(disjoint_commutators(4).size() == 24);
}

TEST_CASE("relations also vanish as dense matrices") {
  for (auto family : {conjugation_relations(4), triangle_relations(4), braid_cubes(4), disjoint_commutators(4)})
    for (const auto& r : family) CHECK(Eigen::MatrixXd(evaluate_polynomial(r)).norm() < 1e-12);
}

TEST_CASE("commutator certificate") {
  auto triples = parse_certificate(load_data_text("commutator_certificate"));
  CHECK(triples.size() == 19);
  SwapPolynomial a = SwapPolynomial::generator(4, 1, 2), b = SwapPolynomial::generator(4, 3, 4);
  SwapPolynomial comm = a * b - b * a;
  // equal as elements of the free algebra, not only modulo the relations
  CHECK(certificate_sum(triples) == comm);
  CHECK(fingerprint(certificate_sum(triples)) == fingerprint(comm));
  for (const auto& t : triples) CHECK(fingerprint(t.g).is_zero());
  CHECK(fingerprint(comm).is_zero());
  CHECK_THROWS_AS(parse_certificate("1 | s(1,2)"), InputError);
}

TEST_CASE("degree reducing identities vanish") {
  auto ids = parse_named_identities(load_data_text("identities"));
  CHECK(ids.size() == 7);
  for (const auto& [name, p] : ids) {
    INFO(name);
    CHECK(fingerprint(p).is_zero());
  }
}

TEST_CASE("degree reducing identities vanish as dense matrices") {
  for (const auto& [name, p] : parse_named_identities(load_data_text("identities"))) {
    INFO(name);
    CHECK(Eigen::MatrixXd(evaluate_polynomial(p)).norm() < 1e-9);
  }
}

TEST_CASE("the star identity lowers the degree of a three-edge star word") {
  for (const auto& [name, p] : parse_named_identities(load_data_text("identities"))) {
    if (name != "star") continue;
    CHECK(p.degree() == 3);
    CHECK(p.leading_monomial() == P("s(2,3) s(1,3) s(3,4)").leading_monomial());
    std::size_t cubic = 0;
    for (const auto& [m, c] : p.terms()) cubic += m.degree() == 3;
    CHECK(cubic == 1);
  }
}

TEST_CASE("rewriting preserves the algebra element") {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + t % 4;
    SwapPolynomial p = testing::random_polynomial(n, 5, 3, rng);
    SwapPolynomial r = reduce_rewrite(p);
    CHECK(equal_in_algebra(p, r));
    if (!p.is_zero() && !r.is_zero()) CHECK(grlex_compare(r.leading_monomial(), p.leading_monomial()) <= 0);
    CHECK(reduce_rewrite(r) == r);
  }
}

TEST_CASE("identity suite passes") {
  auto checks = verify_identities(VerifyOptions{false});
  CHECK(checks.size() >= 20);
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

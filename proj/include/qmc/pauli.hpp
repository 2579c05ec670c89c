#pragma once

#include "qmc/swap.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qmc {

// Pauli string over up to 32 qubits in (x, z) form: qubit q carries
// I, X, Z, Y for (x_q, z_q) = (0,0), (1,0), (0,1), (1,1). Y is the Hermitian
// Pauli, so every string is Hermitian.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  std::uint64_t key() const { return (std::uint64_t{x} << 32) | z; }
  static PauliString from_key(std::uint64_t k) {
    return {static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k & 0xffffffffu)};
  }
  int y_count() const;
  std::string str() const;  // "X1 X2", "I" for identity
};

// Product a*b = i^phase * PauliString{a.x ^ b.x, a.z ^ b.z}; returns phase mod 4.
int pauli_product_phase(PauliString a, PauliString b);

struct GaussRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

// Exact Pauli expansion of a swap polynomial.
class PauliFingerprint {
 public:
  using Terms = std::map<std::uint64_t, GaussRational>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRational coefficient(PauliString p) const;

  void add(PauliString p, const GaussRational& c);
  PauliFingerprint& operator+=(const PauliFingerprint& o);
  PauliFingerprint& operator-=(const PauliFingerprint& o);
  friend PauliFingerprint operator*(const PauliFingerprint& a, const PauliFingerprint& b);
  friend bool operator==(const PauliFingerprint&, const PauliFingerprint&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

// Integer form of a word's expansion: value = coeff / 2^shift, coefficients
// are Gaussian integers. Sorted by key, zeros dropped.
struct ScaledFingerprint {
  std::vector<std::pair<std::uint64_t, std::complex<std::int64_t>>> terms;
  int shift = 0;
};

ScaledFingerprint word_fingerprint(const Word& w);

PauliFingerprint fingerprint(const SwapMonomial& m);
PauliFingerprint fingerprint(const SwapPolynomial& p);

bool equal_in_algebra(const SwapPolynomial& p, const SwapPolynomial& q);

}  // namespace qmc

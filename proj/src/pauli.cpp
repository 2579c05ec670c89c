#include "qmc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace qmc {

namespace {

// Power of i in P_a P_b for single-qubit codes I=0, X=1, Z=2, Y=3.
constexpr int kPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 3, 1},
    {0, 1, 0, 3},
    {0, 3, 1, 0},
};

std::complex<std::int64_t> times_i_pow(std::complex<std::int64_t> c, int k) {
  switch (k & 3) {
    case 0: return c;
    case 1: return {-c.imag(), c.real()};
    case 2: return {-c.real(), -c.imag()};
    default: return {c.imag(), -c.real()};
  }
}

GaussRational times_i_pow(const GaussRational& c, int k) {
  switch (k & 3) {
    case 0: return c;
    case 1: return {-c.im, c.re};
    case 2: return {-c.re, -c.im};
    default: return {c.im, -c.re};
  }
}

}  // namespace

int PauliString::y_count() const { return std::popcount(x & z); }

std::string PauliString::str() const {
  std::string s;
  for (int q = 0; q < 32; ++q) {
    int code = ((x >> q) & 1) | (((z >> q) & 1) << 1);
    if (!code) continue;
    if (!s.empty()) s += ' ';
    s += "IXZY"[code];
    s += std::to_string(q + 1);
  }
  return s.empty() ? "I" : s;
}

int pauli_product_phase(PauliString a, PauliString b) {
  std::uint32_t overlap = (a.x | a.z) & (b.x | b.z);
  int phase = 0;
  while (overlap) {
    int q = std::countr_zero(overlap);
    overlap &= overlap - 1;
    int ca = ((a.x >> q) & 1) | (((a.z >> q) & 1) << 1);
    int cb = ((b.x >> q) & 1) | (((b.z >> q) & 1) << 1);
    phase += kPhase[ca][cb];
  }
  return phase & 3;
}

GaussRational PauliFingerprint::coefficient(PauliString p) const {
  auto it = terms_.find(p.key());
  return it == terms_.end() ? GaussRational{} : it->second;
}

void PauliFingerprint::add(PauliString p, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p.key(), c);
  if (!inserted) {
    it->second.re += c.re;
    it->second.im += c.im;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PauliFingerprint& PauliFingerprint::operator+=(const PauliFingerprint& o) {
  for (const auto& [k, c] : o.terms_) add(PauliString::from_key(k), c);
  return *this;
}

PauliFingerprint& PauliFingerprint::operator-=(const PauliFingerprint& o) {
  for (const auto& [k, c] : o.terms_) add(PauliString::from_key(k), {-c.re, -c.im});
  return *this;
}

PauliFingerprint operator*(const PauliFingerprint& a, const PauliFingerprint& b) {
  PauliFingerprint r;
  for (const auto& [ka, ca] : a.terms_) {
    PauliString pa = PauliString::from_key(ka);
    for (const auto& [kb, cb] : b.terms_) {
      PauliString pb = PauliString::from_key(kb);
      GaussRational c{ca.re * cb.re - ca.im * cb.im, ca.re * cb.im + ca.im * cb.re};
      r.add({pa.x ^ pb.x, pa.z ^ pb.z}, times_i_pow(c, pauli_product_phase(pa, pb)));
    }
  }
  return r;
}

std::string PauliFingerprint::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += ", ";
    s += PauliString::from_key(k).str() + ": ";
    if (c.im == 0)
      s += to_string(c.re);
    else if (c.re == 0)
      s += to_string(c.im) + "i";
    else
      s += "(" + to_string(c.re) + " + " + to_string(c.im) + "i)";
  }
  return s;
}

ScaledFingerprint word_fingerprint(const Word& w) {
  std::unordered_map<std::uint64_t, std::complex<std::int64_t>> cur{{0, {1, 0}}}, next;
  for (Letter l : w) {
    if (l.j >= 32) throw std::invalid_argument("fingerprints support at most 32 qubits");
    std::uint32_t bi = 1u << l.i, bj = 1u << l.j;
    const PauliString factors[4] = {{0, 0}, {bi | bj, 0}, {0, bi | bj}, {bi | bj, bi | bj}};
    next.clear();
    for (const auto& [k, c] : cur) {
      PauliString p = PauliString::from_key(k);
      for (const PauliString& f : factors) {
        PauliString q{p.x ^ f.x, p.z ^ f.z};
        next[q.key()] += times_i_pow(c, pauli_product_phase(p, f));
      }
    }
    cur.clear();
    for (const auto& [k, c] : next)
      if (c != std::complex<std::int64_t>{}) cur.emplace(k, c);
  }
  ScaledFingerprint out;
  out.shift = static_cast<int>(w.size());
  out.terms.assign(cur.begin(), cur.end());
  std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

PauliFingerprint fingerprint(const SwapMonomial& m) { return fingerprint(SwapPolynomial(m)); }

PauliFingerprint fingerprint(const SwapPolynomial& p) {
  PauliFingerprint r;
  for (const auto& [m, c] : p.terms()) {
    ScaledFingerprint f = word_fingerprint(m.word());
    Rational scale = c / Rational(BigInt(1) << f.shift);
    for (const auto& [k, v] : f.terms) r.add(PauliString::from_key(k), {scale * v.real(), scale * v.imag()});
  }
  return r;
}

bool equal_in_algebra(const SwapPolynomial& p, const SwapPolynomial& q) {
  if (p.n() != q.n()) throw std::invalid_argument("equal_in_algebra: different ambient n");
  return fingerprint(p - q).is_zero();
}

}  // namespace qmc

#include "qmc/irrep_coords.hpp"

#include <bit>
#include <stdexcept>

namespace qmc {

namespace {

inline std::uint32_t swap_bits(std::uint32_t x, int a, int b) {
  std::uint32_t d = ((x >> a) ^ (x >> b)) & 1u;
  return x ^ ((d << a) | (d << b));
}

}  // namespace

IrrepCoordinates::IrrepCoordinates(int n, int k) : n_(n), k_(k) {
  TwoRowPartition lam(n, k);
  if (n > 16) throw std::invalid_argument("IrrepCoordinates: n > 16");
  index_.assign(std::size_t{1} << n, -1);
  std::vector<std::uint32_t> lower;
  std::vector<int> lower_index(std::size_t{1} << n, -1);
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (std::popcount(x) == k) {
      index_[x] = static_cast<int>(states_.size());
      states_.push_back(x);
    } else if (k > 0 && std::popcount(x) == k - 1) {
      lower_index[x] = static_cast<int>(lower.size());
      lower.push_back(x);
    }
  }
  const int cols = static_cast<int>(states_.size());
  const int rows = static_cast<int>(lower.size());
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (int c = 0; c < cols; ++c)
    for (int b = 0; b < n; ++b)
      if (states_[c] >> b & 1u) m[lower_index[states_[c] ^ (1u << b)]][c] = 1;

  // reduced row echelon form of the lowering operator
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational inv = Rational(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_.push_back(c);
  d_ = static_cast<int>(free_.size());
  if (BigInt(d_) != irrep_dim(lam)) throw std::logic_error("IrrepCoordinates: kernel dimension mismatch");

  q_.assign(cols, {});
  for (int a = 0; a < d_; ++a) {
    int f = free_[a];
    q_[f].emplace_back(a, Rational(1));
    for (int i = 0; i < r; ++i)
      if (m[i][f] != 0) q_[pivot_col[i]].emplace_back(a, -m[i][f]);
  }
  q_mod_.resize(cols);
  for (int c = 0; c < cols; ++c)
    for (const auto& [a, v] : q_[c]) q_mod_[c].emplace_back(a, modp::from_rational(v));
}

int IrrepCoordinates::pulled_row(const Word& w, int a, bool adjoint) const {
  std::uint32_t y = states_[free_[a]];
  auto step = [&](Letter l) { y = swap_bits(y, n_ - 1 - l.i, n_ - 1 - l.j); };
  if (adjoint)
    for (auto it = w.rbegin(); it != w.rend(); ++it) step(*it);
  else
    for (Letter l : w) step(l);
  return index_[y];
}

template <class Acc, class Add>
void IrrepCoordinates::accumulate(const SwapPolynomial& p, bool adjoint, Acc& acc, Add add) const {
  if (p.n() != n_) throw std::invalid_argument("IrrepCoordinates: polynomial has a different ambient n");
  for (const auto& [mono, c] : p.terms())
    for (int a = 0; a < d_; ++a) add(acc, a, pulled_row(mono.word(), a, adjoint), c);
}

ExactVec IrrepCoordinates::matrix(const SwapPolynomial& p) const {
  std::vector<Rational> acc(static_cast<std::size_t>(d_) * d_);
  accumulate(p, false, acc, [&](auto& v, int a, int row, const Rational& c) {
    for (const auto& [b, q] : q_[row]) v[a * d_ + b] += c * q;
  });
  ExactVec out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.emplace_back(i, std::move(acc[i]));
  return out;
}

ExactVec IrrepCoordinates::symmetric(const SwapPolynomial& p) const {
  std::vector<Rational> acc(static_cast<std::size_t>(d_) * d_);
  auto add = [&](auto& v, int a, int row, const Rational& c) {
    for (const auto& [b, q] : q_[row]) v[a * d_ + b] += c * q;
  };
  accumulate(p, false, acc, add);
  accumulate(p, true, acc, add);
  ExactVec out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.emplace_back(i, acc[i] / 2);
  return out;
}

ModVec IrrepCoordinates::matrix_mod(const SwapPolynomial& p) const {
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(d_) * d_);
  accumulate(p, false, acc, [&](auto& v, int a, int row, const Rational& c) {
    std::uint64_t cm = modp::from_rational(c);
    for (const auto& [b, q] : q_mod_[row]) v[a * d_ + b] = modp::add(v[a * d_ + b], modp::mul(cm, q));
  });
  ModVec out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i]) out.emplace_back(i, acc[i]);
  return out;
}

ModVec IrrepCoordinates::symmetric_mod(const SwapPolynomial& p) const {
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(d_) * d_);
  auto add = [&](auto& v, int a, int row, const Rational& c) {
    std::uint64_t cm = modp::from_rational(c);
    for (const auto& [b, q] : q_mod_[row]) v[a * d_ + b] = modp::add(v[a * d_ + b], modp::mul(cm, q));
  };
  accumulate(p, false, acc, add);
  accumulate(p, true, acc, add);
  std::uint64_t half = modp::inv(2);
  ModVec out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i]) out.emplace_back(i, modp::mul(acc[i], half));
  return out;
}

}  // namespace qmc

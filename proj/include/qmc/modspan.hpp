#pragma once

#include "qmc/rational.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qmc {

namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t s = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  s = (s & kPrime) + (s >> 61);
  return s >= kPrime ? s - kPrime : s;
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }
std::uint64_t from_int(std::int64_t v);
std::uint64_t from_rational(const Rational& r);  // throws if the denominator is divisible by p

// r/s with |r|, |s| <= sqrt(p/2), when one exists.
std::optional<Rational> reconstruct(std::uint64_t a);

}  // namespace modp

// Sparse vector keyed by arbitrary 64-bit coordinates (Pauli keys, matrix
// positions, ...). Entries sorted by key, no zeros.
using ExactVec = std::vector<std::pair<std::uint64_t, Rational>>;
using ModVec = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

ModVec to_mod(const ExactVec& v);

// Incremental row echelon form over Z/p. Each stored row has its smallest
// column as pivot. Rows remember how they were formed, so solve() can return
// coefficients with respect to the accepted input vectors.
class ModSpan {
 public:
  std::size_t rank() const { return rows_.size(); }

  // Adds v when it is independent of the accepted vectors; returns whether it
  // was accepted. Accepted vectors are numbered 0, 1, ... in order.
  bool add(const ModVec& v);
  bool contains(const ModVec& v) const;

  // Coefficients of v over the accepted vectors, or nullopt when v is outside
  // the span.
  std::optional<std::vector<std::uint64_t>> solve(const ModVec& v) const;

 private:
  struct Row {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;  // pivot first, pivot value 1
    std::vector<std::pair<std::uint32_t, std::uint64_t>> deps;      // earlier rows subtracted
    std::uint64_t scale = 1;
  };

  // Reduces v into a dense accumulator. Returns the first column that could
  // not be eliminated (or -1), and the multiples of each row used.
  long reduce(std::vector<std::uint64_t>& acc,
              std::vector<std::pair<std::uint32_t, std::uint64_t>>* used, bool stop_at_free) const;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> columns_of(const ModVec& v, bool create);
  std::vector<std::pair<std::uint32_t, std::uint64_t>> columns_of(const ModVec& v) const;

  std::unordered_map<std::uint64_t, std::uint32_t> column_;
  std::vector<long> pivot_row_;  // column -> row index or -1
  std::vector<Row> rows_;
};

// Exact Gaussian elimination over Q: coefficients c with sum c_i basis_i = v,
// or nullopt. The basis must be linearly independent.
std::optional<std::vector<Rational>> exact_solve(const std::vector<ExactVec>& basis, const ExactVec& v);

}  // namespace qmc

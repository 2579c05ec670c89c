#pragma once

#include "qmc/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qmc {

// Generator s_{ij}, stored 0-based with i < j. Letters order lexicographically
// on (i, j): s12 < s13 < ... < s1n < s23 < ...
struct Letter {
  std::uint8_t i = 0;
  std::uint8_t j = 1;
  auto operator<=>(const Letter&) const = default;
};

// Builds s_{ij} from 0-based indices in either order; throws on i == j.
Letter make_letter(int i, int j);

bool disjoint(Letter a, Letter b);

using Word = std::vector<Letter>;

std::strong_ordering grlex_compare(const Word& a, const Word& b);

class SwapMonomial {
 public:
  SwapMonomial() = default;
  SwapMonomial(int n, Word word);

  int n() const { return n_; }
  const Word& word() const { return word_; }
  std::size_t degree() const { return word_.size(); }
  std::string str() const;  // "1" or "s(1,2) s(1,3)"

  SwapMonomial adjoint() const;  // reversed word

  friend SwapMonomial operator*(const SwapMonomial& a, const SwapMonomial& b);
  friend bool operator==(const SwapMonomial& a, const SwapMonomial& b) = default;

 private:
  int n_ = 2;
  Word word_;
};

// Throws std::invalid_argument when the ambient sizes differ.
std::strong_ordering grlex_compare(const SwapMonomial& a, const SwapMonomial& b);

struct GrlexLess {
  bool operator()(const SwapMonomial& a, const SwapMonomial& b) const {
    return grlex_compare(a.word(), b.word()) < 0;
  }
};

class SwapPolynomial {
 public:
  using Terms = std::map<SwapMonomial, Rational, GrlexLess>;

  SwapPolynomial() = default;
  explicit SwapPolynomial(int n) : n_(n) {}
  SwapPolynomial(const SwapMonomial& m, Rational c = 1);

  static SwapPolynomial constant(int n, Rational c);
  static SwapPolynomial generator(int n, int i, int j);  // 1-based s_{ij}

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;
  Rational coefficient(const SwapMonomial& m) const;

  // grlex-largest monomial; requires !is_zero().
  const SwapMonomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  void add_term(const SwapMonomial& m, const Rational& c);
  SwapPolynomial adjoint() const;
  SwapPolynomial with_ambient(int n) const;  // relabels nothing, only widens n
  std::string str() const;

  SwapPolynomial& operator+=(const SwapPolynomial& o);
  SwapPolynomial& operator-=(const SwapPolynomial& o);
  SwapPolynomial& operator*=(const Rational& c);

  friend SwapPolynomial operator+(SwapPolynomial a, const SwapPolynomial& b) { return a += b; }
  friend SwapPolynomial operator-(SwapPolynomial a, const SwapPolynomial& b) { return a -= b; }
  friend SwapPolynomial operator-(SwapPolynomial a) { return a *= Rational(-1); }
  friend SwapPolynomial operator*(SwapPolynomial a, const Rational& c) { return a *= c; }
  friend SwapPolynomial operator*(const Rational& c, SwapPolynomial a) { return a *= c; }
  friend SwapPolynomial operator*(const SwapPolynomial& a, const SwapPolynomial& b);
  friend bool operator==(const SwapPolynomial& a, const SwapPolynomial& b);

 private:
  void check_same_n(const SwapPolynomial& o) const;

  int n_ = 2;
  Terms terms_;
};

// Parses "c * s(i,j) s(k,l) + ..." with 1-based indices. Coefficients are
// integers or p/q and may follow the word as "/q"; "s12"-style shorthand is
// accepted for single-digit indices. n = 0 means "largest index used" (at
// least 2).
SwapPolynomial parse_swap_polynomial(std::string_view text, int n = 0);

// Polynomial of the QMC Hamiltonian: sum 2 w_ij (1 - s_ij).
class WeightedGraph;
SwapPolynomial hamiltonian_polynomial(const WeightedGraph& g);

}  // namespace qmc

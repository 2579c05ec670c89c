#include "qmc/swap.hpp"

#include "qmc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qmc {

Letter make_letter(int i, int j) {
  if (i == j) throw std::invalid_argument("s_ii is not a generator");
  if (i < 0 || j < 0 || i > 255 || j > 255) throw std::invalid_argument("generator index out of range");
  if (i > j) std::swap(i, j);
  return Letter{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

bool disjoint(Letter a, Letter b) { return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j; }

std::strong_ordering grlex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] != b[t]) return a[t] <=> b[t];
  return std::strong_ordering::equal;
}

SwapMonomial::SwapMonomial(int n, Word word) : n_(n), word_(std::move(word)) {
  if (n < 2) throw std::invalid_argument("swap algebra needs n >= 2");
  for (Letter l : word_)
    if (l.i >= l.j || l.j >= n) throw std::invalid_argument("generator outside ambient n");
}

std::string SwapMonomial::str() const {
  if (word_.empty()) return "1";
  std::string s;
  for (Letter l : word_) {
    if (!s.empty()) s += ' ';
    s += "s(" + std::to_string(l.i + 1) + "," + std::to_string(l.j + 1) + ")";
  }
  return s;
}

SwapMonomial SwapMonomial::adjoint() const {
  Word w(word_.rbegin(), word_.rend());
  return SwapMonomial(n_, std::move(w));
}

SwapMonomial operator*(const SwapMonomial& a, const SwapMonomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("monomials over different n");
  Word w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return SwapMonomial(a.n_, std::move(w));
}

std::strong_ordering grlex_compare(const SwapMonomial& a, const SwapMonomial& b) {
  if (a.n() != b.n()) throw std::invalid_argument("grlex_compare: monomials over different n");
  return grlex_compare(a.word(), b.word());
}

SwapPolynomial::SwapPolynomial(const SwapMonomial& m, Rational c) : n_(m.n()) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

SwapPolynomial SwapPolynomial::constant(int n, Rational c) { return SwapPolynomial(SwapMonomial(n, {}), std::move(c)); }

SwapPolynomial SwapPolynomial::generator(int n, int i, int j) {
  return SwapPolynomial(SwapMonomial(n, {make_letter(i - 1, j - 1)}));
}

std::size_t SwapPolynomial::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

Rational SwapPolynomial::coefficient(const SwapMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const SwapMonomial& SwapPolynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& SwapPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

void SwapPolynomial::add_term(const SwapMonomial& m, const Rational& c) {
  if (m.n() != n_) throw std::invalid_argument("term over different n");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SwapPolynomial SwapPolynomial::adjoint() const {
  SwapPolynomial r(n_);
  for (const auto& [m, c] : terms_) r.add_term(m.adjoint(), c);
  return r;
}

SwapPolynomial SwapPolynomial::with_ambient(int n) const {
  SwapPolynomial r(n);
  for (const auto& [m, c] : terms_) r.add_term(SwapMonomial(n, m.word()), c);
  return r;
}

std::string SwapPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (m.degree() == 0) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + " * ";
      s += m.str();
    }
  }
  return s;
}

void SwapPolynomial::check_same_n(const SwapPolynomial& o) const {
  if (o.n_ != n_) throw std::invalid_argument("polynomials over different n");
}

SwapPolynomial& SwapPolynomial::operator+=(const SwapPolynomial& o) {
  check_same_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SwapPolynomial& SwapPolynomial::operator-=(const SwapPolynomial& o) {
  check_same_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SwapPolynomial& SwapPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SwapPolynomial operator*(const SwapPolynomial& a, const SwapPolynomial& b) {
  a.check_same_n(b);
  SwapPolynomial r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const SwapPolynomial& a, const SwapPolynomial& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  std::vector<std::pair<Rational, std::vector<std::pair<int, int>>>> parse() {
    std::vector<std::pair<Rational, std::vector<std::pair<int, int>>>> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      terms.push_back(parse_term(sign));
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in '" +
                     std::string(s_) + "'");
  }

  long parse_uint() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ - start > 15) fail("number too long");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  std::pair<Rational, std::vector<std::pair<int, int>>> parse_term(Rational coef) {
    std::vector<std::pair<int, int>> word;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      coef *= parse_rational(s_.substr(start, pos_ - start));
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 's') fail("expected generator after '*'");
      }
    }
    while (true) {
      skip();
      if (peek() != 's') break;
      ++pos_;
      int i, j;
      if (peek() == '(' || peek() == '_') {
        bool brace = peek() == '_';
        ++pos_;
        if (brace) {
          if (peek() != '{') fail("expected '{'");
          ++pos_;
          // s_{ij} with single-digit indices
          std::size_t start = pos_;
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (pos_ - start != 2) fail("s_{ij} needs two single-digit indices");
          i = s_[start] - '0';
          j = s_[start + 1] - '0';
          if (peek() != '}') fail("expected '}'");
          ++pos_;
        } else {
          skip();
          i = static_cast<int>(parse_uint());
          skip();
          if (peek() != ',') fail("expected ','");
          ++pos_;
          skip();
          j = static_cast<int>(parse_uint());
          skip();
          if (peek() != ')') fail("expected ')'");
          ++pos_;
        }
      } else {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ - start != 2) fail("shorthand sNN needs two single-digit indices");
        i = s_[start] - '0';
        j = s_[start + 1] - '0';
      }
      if (i < 1 || j < 1 || i == j) fail("bad generator indices");
      int power = 1;
      if (peek() == '^') {
        ++pos_;
        power = static_cast<int>(parse_uint());
      }
      for (int t = 0; t < power; ++t) word.emplace_back(i, j);
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 's') fail("expected generator after '*'");
      }
    }
    if (peek() == '/') {
      ++pos_;
      skip();
      long q = parse_uint();
      if (q == 0) fail("division by zero");
      coef /= q;
    }
    if (!any) fail("empty term");
    return {coef, word};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SwapPolynomial parse_swap_polynomial(std::string_view text, int n) {
  auto terms = PolyParser(text).parse();
  int maxi = 2;
  for (auto& t : terms)
    for (auto [i, j] : t.second) maxi = std::max({maxi, i, j});
  if (n == 0) n = maxi;
  if (maxi > n) throw InputError("generator index exceeds ambient n in '" + std::string(text) + "'");
  SwapPolynomial p(n);
  for (auto& [c, w] : terms) {
    Word word;
    for (auto [i, j] : w) word.push_back(make_letter(i - 1, j - 1));
    p.add_term(SwapMonomial(n, std::move(word)), c);
  }
  return p;
}

SwapPolynomial hamiltonian_polynomial(const WeightedGraph& g) {
  int n = std::max(2, g.n());
  SwapPolynomial h(n);
  for (const Edge& e : g.edges()) {
    h.add_term(SwapMonomial(n, {}), 2 * e.w);
    h.add_term(SwapMonomial(n, {make_letter(e.u, e.v)}), -2 * e.w);
  }
  return h;
}

}  // namespace qmc

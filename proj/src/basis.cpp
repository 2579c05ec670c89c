#include "qmc/basis.hpp"

#include "qmc/parallel.hpp"
#include "qmc/pauli.hpp"
#include "qmc/symrep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace qmc {

namespace {

std::uint64_t inv_pow2(int k) {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t(64);
    std::uint64_t half = modp::inv(2);
    t[0] = 1;
    for (int i = 1; i < 64; ++i) t[i] = modp::mul(t[i - 1], half);
    return t;
  }();
  return table.at(k);
}

bool even_y(std::uint64_t key) { return PauliString::from_key(key).y_count() % 2 == 0; }

std::int64_t real_coordinate(std::uint64_t key, std::complex<std::int64_t> c) { return even_y(key) ? c.real() : c.imag(); }

}  // namespace

ModVec mod_coordinates(const Word& w, bool symmetric_part) {
  ScaledFingerprint f = word_fingerprint(w);
  std::uint64_t scale = inv_pow2(f.shift);
  ModVec out;
  out.reserve(f.terms.size());
  for (const auto& [k, c] : f.terms) {
    if (symmetric_part && !even_y(k)) continue;
    std::uint64_t v = modp::mul(modp::from_int(real_coordinate(k, c)), scale);
    if (v) out.emplace_back(k, v);
  }
  return out;
}

ModVec mod_coordinates(const SwapPolynomial& p, bool symmetric_part) {
  std::map<std::uint64_t, std::uint64_t> acc;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t cm = modp::from_rational(c);
    for (const auto& [k, v] : mod_coordinates(m.word(), symmetric_part)) {
      std::uint64_t& x = acc[k];
      x = modp::add(x, modp::mul(cm, v));
    }
  }
  ModVec out;
  for (const auto& [k, v] : acc)
    if (v) out.emplace_back(k, v);
  return out;
}

ExactVec real_coordinates(const SwapPolynomial& p, bool symmetric_part) {
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [m, c] : p.terms()) {
    ScaledFingerprint f = word_fingerprint(m.word());
    Rational scale = c / Rational(BigInt(1) << f.shift);
    for (const auto& [k, v] : f.terms) {
      if (symmetric_part && !even_y(k)) continue;
      acc[k] += scale * real_coordinate(k, v);
    }
  }
  ExactVec out;
  for (auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, std::move(v));
  return out;
}

LinearExpander::LinearExpander(std::vector<ExactVec> family) : family_(std::move(family)) {
  for (const auto& v : family_)
    if (!span_.add(to_mod(v))) throw std::invalid_argument("LinearExpander: family is linearly dependent");
}

std::optional<std::vector<Rational>> LinearExpander::solve(const ExactVec& v) const { return solve(v, to_mod(v)); }

std::optional<std::vector<Rational>> LinearExpander::solve(const ExactVec& v, const ModVec& vmod) const {
  if (force_exact_) return exact_solve(family_, v);
  auto sol = span_.solve(vmod);
  // The family is independent mod p, so a vector outside the modular span is
  // outside the rational span as well.
  if (!sol) return std::nullopt;
  std::vector<Rational> coeffs(sol->size());
  bool ok = true;
  for (std::size_t i = 0; i < sol->size() && ok; ++i) {
    if ((*sol)[i] == 0) continue;
    auto r = modp::reconstruct((*sol)[i]);
    if (!r) ok = false;
    else coeffs[i] = *r;
  }
  if (ok) {
    std::map<std::uint64_t, Rational> acc;
    for (const auto& [k, c] : v) acc[k] = c;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      for (const auto& [k, c] : family_[i]) acc[k] -= coeffs[i] * c;
    }
    ok = std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
    if (ok) return coeffs;
  }
  return exact_solve(family_, v);
}

BigInt basis_b2_size(int n) {
  BigInt N = n;
  return (3 * N * N * N * N - 14 * N * N * N + 33 * N * N - 22 * N + 24) / 24;
}

// Perfect matchings of three (four) disjoint pairs, and the extra words on
// five and seven indices.
BigInt basis_b3_size(int n) {
  return basis_b2_size(n) + binomial(n, 2) * binomial(n - 2, 2) * binomial(n - 4, 2) / 6 + 6 * binomial(n, 5);
}

BigInt basis_b4_size(int n) {
  BigInt quads = binomial(n, 2) * binomial(n - 2, 2) * binomial(n - 4, 2) * binomial(n - 6, 2) / 24;
  return basis_b3_size(n) + 36 * binomial(n, 7) + quads * 91 / 105;
}

std::vector<SwapMonomial> basis_b2(int n) {
  if (n < 2) throw std::invalid_argument("basis_b2 needs n >= 2");
  std::vector<SwapMonomial> out;
  out.emplace_back(n, Word{});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(n, Word{make_letter(i, j)});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.emplace_back(n, Word{make_letter(i, j), make_letter(i, k)});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = i + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (k == j || l == j) continue;
          out.emplace_back(n, Word{make_letter(i, j), make_letter(k, l)});
        }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

namespace {

std::vector<std::uint8_t> permutation_of(const Word& w, int n) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (Letter l : w) std::swap(p[l.i], p[l.j]);
  return p;
}

}  // namespace

std::vector<SwapMonomial> derive_basis(int n, int d, const DeriveOptions& opts) {
  if (n < 2) throw std::invalid_argument("derive_basis needs n >= 2");
  if (d < 0) throw std::invalid_argument("derive_basis needs d >= 0");
  if (n > 16) throw ResourceLimit("derive_basis: n > 16 exceeds the fingerprint support");
  std::size_t full = std::numeric_limits<std::size_t>::max();
  if (BigInt c = catalan(n); c < BigInt(std::numeric_limits<std::uint32_t>::max())) full = static_cast<std::size_t>(c);

  std::vector<Letter> letters;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) letters.push_back(make_letter(i, j));

  ModSpan span;
  std::vector<std::vector<Word>> levels(1, std::vector<Word>{Word{}});
  std::set<Word> selected{Word{}};
  std::set<std::vector<std::uint8_t>> seen{permutation_of({}, n)};
  span.add(mod_coordinates(Word{}));

  for (int t = 1; t <= d && !(opts.stop_at_full && span.rank() >= full); ++t) {
    std::vector<Word> cands;
    for (const Word& u : levels[t - 1])
      for (Letter x : letters) {
        if (!u.empty() && u.back() == x) continue;
        Word w = u;
        w.push_back(x);
        if (t >= 2 && !selected.count(Word(w.begin() + 1, w.end()))) continue;
        if (!seen.insert(permutation_of(w, n)).second) continue;
        cands.push_back(std::move(w));
        if (cands.size() > opts.max_candidates)
          throw ResourceLimit("derive_basis: more than " + std::to_string(opts.max_candidates) + " candidates");
      }
    std::vector<ModVec> coords(cands.size());
    parallel_for(cands.size(), [&](std::size_t i) { coords[i] = mod_coordinates(cands[i]); });
    levels.emplace_back();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (opts.stop_at_full && span.rank() >= full) break;
      if (span.add(coords[i])) {
        selected.insert(cands[i]);
        levels.back().push_back(std::move(cands[i]));
      }
    }
  }
  std::vector<SwapMonomial> out;
  for (auto& lvl : levels)
    for (auto& w : lvl) out.emplace_back(n, std::move(w));
  return out;
}

namespace {

std::vector<ExactVec> coordinate_family(const std::vector<SwapMonomial>& basis) {
  std::vector<ExactVec> fam(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) { fam[i] = real_coordinates(SwapPolynomial(basis[i])); });
  return fam;
}

}  // namespace

BasisExpander::BasisExpander(std::vector<SwapMonomial> basis) : basis_(std::move(basis)) {
  try {
    lin_ = LinearExpander(coordinate_family(basis_));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("BasisExpander: basis elements are linearly dependent");
  }
}

std::optional<std::vector<Rational>> BasisExpander::try_expand(const SwapPolynomial& p) const {
  for (const auto& b : basis_)
    if (b.n() != p.n()) throw std::invalid_argument("expand_in_basis: different ambient n");
  return lin_.solve(real_coordinates(p), mod_coordinates(p));
}

std::vector<Rational> BasisExpander::expand(const SwapPolynomial& p) const {
  auto r = try_expand(p);
  if (!r) throw NotInSpan("polynomial is not in the span of the basis: " + p.str());
  return *r;
}

bool BasisExpander::in_span(const SwapPolynomial& p) const { return lin_.contains(mod_coordinates(p)); }

std::vector<Rational> expand_in_basis(const SwapPolynomial& p, const std::vector<SwapMonomial>& basis) {
  return BasisExpander(basis).expand(p);
}

}  // namespace qmc

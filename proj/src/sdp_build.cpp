#include "qmc/sdp.hpp"

#include "qmc/basis.hpp"
#include "qmc/irrep_coords.hpp"
#include "qmc/parallel.hpp"
#include "qmc/rewrite.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace qmc {

Rational AffineExpr::coefficient(int var) const {
  for (const auto& [v, c] : terms)
    if (v == var) return c;
  return 0;
}

std::string AffineExpr::str(const std::vector<std::string>& names) const {
  std::ostringstream out;
  bool first = true;
  if (constant != 0 || terms.empty()) {
    out << to_string(constant);
    first = false;
  }
  for (const auto& [v, c] : terms) {
    Rational a = c;
    if (!first) out << (a < 0 ? " - " : " + ");
    else if (a < 0) out << "-";
    if (a < 0) a = -a;
    if (a != 1) out << to_string(a) << "*";
    out << "L[" << (v < static_cast<int>(names.size()) ? names[v] : "v" + std::to_string(v)) << "]";
    first = false;
  }
  return out.str();
}

namespace {

bool mentions(const SwapPolynomial& p, Letter last) {
  for (const auto& [m, c] : p.terms())
    for (Letter l : m.word())
      if (l == last) return true;
  return false;
}

SwapPolynomial substitute(const SwapPolynomial& p, Letter last, const SwapPolynomial& repl) {
  SwapPolynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    SwapPolynomial acc = SwapPolynomial::constant(p.n(), c);
    for (Letter l : m.word()) {
      if (l == last) acc = acc * repl;
      else acc = acc * SwapPolynomial(SwapMonomial(p.n(), {l}));
    }
    out += acc;
  }
  return out;
}

}  // namespace

SwapPolynomial apply_irrep_constraint(const SwapPolynomial& p, const TwoRowPartition& lambda) {
  const int n = p.n();
  if (lambda.n != n) throw std::invalid_argument("apply_irrep_constraint: partition size differs from ambient n");
  if (n < 2) return p;
  Letter last = make_letter(n - 2, n - 1);
  SwapPolynomial repl = SwapPolynomial::constant(n, Rational(eta_hat(lambda)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (make_letter(i, j) != last) repl.add_term(SwapMonomial(n, {make_letter(i, j)}), -1);
  SwapPolynomial cur = p;
  for (int round = 0; round < 64; ++round) {
    if (!mentions(cur, last)) return cur;
    SwapPolynomial sub = substitute(cur, last, repl);
    cur = reduce_rewrite(sub);
    if (!mentions(cur, last)) return cur;
  }
  return substitute(cur, last, repl);
}

namespace {

// Graph independent part of a relaxation.
struct Pattern {
  int n = 0;
  int level = 1;
  int k = -1;
  std::vector<std::string> veronese;
  std::vector<std::string> variables;
  std::vector<std::uint32_t> entry_ids;
  std::vector<AffineExpr> entries;
  LinearExpander expander;  // constant first, then one vector per variable
  std::shared_ptr<IrrepCoordinates> irrep;

  ExactVec coords(const SwapPolynomial& p) const { return irrep ? irrep->symmetric(p) : real_coordinates(p, true); }
  ModVec coords_mod(const SwapPolynomial& p) const { return irrep ? irrep->symmetric_mod(p) : mod_coordinates(p, true); }

  AffineExpr to_expr(const std::vector<Rational>& coeffs) const {
    AffineExpr e;
    e.constant = coeffs[0];
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) e.terms.emplace_back(static_cast<int>(i - 1), coeffs[i]);
    return e;
  }
};

std::uint64_t hash_modvec(const ModVec& v) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [k, x] : v) {
    h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::shared_ptr<Pattern> make_pattern(int n, int level, int k) {
  auto pat = std::make_shared<Pattern>();
  pat->n = n;
  pat->level = level;
  pat->k = k;
  if (k >= 0) pat->irrep = std::make_shared<IrrepCoordinates>(n, k);

  // pseudomoment variables: a maximal independent set of symmetrized words
  std::vector<SwapMonomial> words = level == 1 ? basis_b2(n) : derive_basis(n, 2 * level);
  std::vector<ModVec> wmod(words.size());
  parallel_for(words.size(), [&](std::size_t i) { wmod[i] = pat->coords_mod(SwapPolynomial(words[i])); });
  ModSpan span;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (span.add(wmod[i])) chosen.push_back(i);
  if (chosen.empty() || !words[chosen[0]].word().empty()) throw std::logic_error("relaxation: constant is not the first basis element");
  std::vector<ExactVec> family(chosen.size());
  parallel_for(chosen.size(), [&](std::size_t i) { family[i] = pat->coords(SwapPolynomial(words[chosen[i]])); });
  for (std::size_t i = 1; i < chosen.size(); ++i) pat->variables.push_back(words[chosen[i]].str());
  pat->expander = LinearExpander(std::move(family));

  // Veronese vector
  std::vector<SwapMonomial> mons;
  if (level == 1) {
    mons.emplace_back(n, Word{});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) mons.emplace_back(n, Word{make_letter(i, j)});
  } else {
    mons = basis_b2(n);
  }
  std::vector<SwapPolynomial> ver;
  if (pat->irrep) {
    TwoRowPartition lam(n, k);
    std::vector<SwapPolynomial> subbed(mons.size());
    parallel_for(mons.size(), [&](std::size_t i) { subbed[i] = apply_irrep_constraint(SwapPolynomial(mons[i]), lam); });
    ModSpan vspan;
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (vspan.add(pat->irrep->matrix_mod(subbed[i]))) {
        ver.push_back(std::move(subbed[i]));
        pat->veronese.push_back(mons[i].str());
      }
  } else {
    for (const auto& m : mons) {
      ver.emplace_back(m);
      pat->veronese.push_back(m.str());
    }
  }

  // entries L(sym(v_r^* v_c)), grouped by their coordinates mod p
  const std::size_t dim = ver.size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c) pairs.emplace_back(r, c);
  auto product = [&](std::size_t idx) { return ver[pairs[idx].first].adjoint() * ver[pairs[idx].second]; };
  std::vector<ModVec> pmod(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) { pmod[i] = pat->coords_mod(product(i)); });

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto& b = buckets[hash_modvec(pmod[i])];
    bool placed = false;
    for (std::size_t g : b)
      if (pmod[groups[g][0]] == pmod[i]) {
        groups[g].push_back(i);
        placed = true;
        break;
      }
    if (!placed) {
      b.push_back(groups.size());
      groups.push_back({i});
    }
  }
  pmod.clear();
  pmod.shrink_to_fit();

  // Each group is solved exactly once; members are checked against the
  // representative's exact coordinates and split off on a mismatch.
  std::vector<std::vector<std::pair<std::size_t, AffineExpr>>> solved(groups.size());
  parallel_for(groups.size(), [&](std::size_t g) {
    std::vector<std::pair<ExactVec, AffineExpr>> known;
    for (std::size_t idx : groups[g]) {
      ExactVec v = pat->coords(product(idx));
      auto it = std::find_if(known.begin(), known.end(), [&](const auto& kv) { return kv.first == v; });
      if (it == known.end()) {
        auto sol = pat->expander.solve(v);
        if (!sol) throw std::logic_error("relaxation: moment entry outside the pseudomoment span");
        known.emplace_back(std::move(v), pat->to_expr(*sol));
        it = known.end() - 1;
      }
      solved[g].emplace_back(idx, it->second);
    }
  });

  pat->entry_ids.assign(dim * dim, 0);
  std::map<std::pair<Rational, std::vector<std::pair<int, Rational>>>, std::uint32_t> seen;
  for (auto& grp : solved)
    for (auto& [idx, e] : grp) {
      auto key = std::make_pair(e.constant, e.terms);
      auto [it, fresh] = seen.emplace(std::move(key), static_cast<std::uint32_t>(pat->entries.size()));
      if (fresh) pat->entries.push_back(std::move(e));
      auto [r, c] = pairs[idx];
      pat->entry_ids[r * dim + c] = pat->entry_ids[c * dim + r] = it->second;
    }
  return pat;
}

std::shared_ptr<const Pattern> pattern(int n, int level, int k) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const Pattern>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, level, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto p = make_pattern(n, level, k);
  cache.emplace(key, p);
  return p;
}

}  // namespace

SdpProblem build_relaxation(const SwapPolynomial& objective, int level, std::optional<int> irrep_k) {
  const int n = objective.n();
  if (level != 1 && level != 2) throw std::invalid_argument("relaxation level must be 1 or 2");
  if (n < 2) throw std::invalid_argument("relaxation needs n >= 2");
  if (level == 2 && n > 8) throw ResourceLimit("level-2 relaxation is limited to n <= 8");
  if (level == 1 && n > 16) throw ResourceLimit("level-1 relaxation is limited to n <= 16");
  if (objective.degree() > static_cast<std::size_t>(2 * level))
    throw std::invalid_argument("objective degree exceeds twice the relaxation level");
  int k = -1;
  SwapPolynomial obj = objective;
  if (irrep_k) {
    TwoRowPartition lam(n, *irrep_k);
    k = *irrep_k;
    obj = apply_irrep_constraint(obj, lam);
  }
  auto pat = pattern(n, level, k);

  SdpProblem p;
  p.n = n;
  p.level = level;
  p.irrep_k = irrep_k;
  p.block_dim = static_cast<int>(pat->veronese.size());
  p.veronese = pat->veronese;
  p.variables = pat->variables;
  p.entry_ids = pat->entry_ids;
  p.entries = pat->entries;
  auto sol = pat->expander.solve(pat->coords(obj));
  if (!sol) throw std::logic_error("relaxation: objective outside the pseudomoment span");
  p.objective = pat->to_expr(*sol);
  return p;
}

SdpProblem build_level1(const WeightedGraph& g, std::optional<int> irrep_k) {
  return build_relaxation(hamiltonian_polynomial(g), 1, irrep_k);
}

SdpProblem build_level2(const WeightedGraph& g, std::optional<int> irrep_k) {
  return build_relaxation(hamiltonian_polynomial(g), 2, irrep_k);
}

SdpProblem negated(SdpProblem p) {
  p.objective.constant = -p.objective.constant;
  for (auto& [v, c] : p.objective.terms) c = -c;
  return p;
}

}  // namespace qmc

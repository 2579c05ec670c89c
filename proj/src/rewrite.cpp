#include "qmc/rewrite.hpp"

#include <utility>

namespace qmc {

namespace {

int apply_transposition(Letter a, int v) {
  if (v == a.i) return a.j;
  if (v == a.j) return a.i;
  return v;
}

Letter conjugate(Letter a, Letter b) { return make_letter(apply_transposition(a, b.i), apply_transposition(a, b.j)); }

// Smallest word equal (as a permutation) to the adjacent pair a b, when the
// two letters overlap in exactly one index.
std::pair<Letter, Letter> min_pair(Letter a, Letter b) {
  // a b = (a b a) a = b (b a b); all three spellings of the same 3-cycle.
  std::pair<Letter, Letter> best{a, b};
  std::pair<Letter, Letter> alt1{conjugate(a, b), a};
  std::pair<Letter, Letter> alt2{b, conjugate(b, a)};
  if (alt1 < best) best = alt1;
  if (alt2 < best) best = alt2;
  return best;
}

bool step(Word& w) {
  // Sandwich: nearest repeated letter.
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[j] == w[i]) {
        Word out(w.begin(), w.begin() + i);
        for (std::size_t t = i + 1; t < j; ++t) out.push_back(conjugate(w[i], w[t]));
        out.insert(out.end(), w.begin() + j + 1, w.end());
        w = std::move(out);
        return true;
      }
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    Letter a = w[t], b = w[t + 1];
    if (disjoint(a, b)) {
      if (b < a) {
        std::swap(w[t], w[t + 1]);
        return true;
      }
      continue;
    }
    auto best = min_pair(a, b);
    if (best != std::make_pair(a, b)) {
      w[t] = best.first;
      w[t + 1] = best.second;
      return true;
    }
  }
  return false;
}

}  // namespace

Word reduce_word(Word w) {
  while (step(w)) {
  }
  return w;
}

SwapPolynomial reduce_rewrite(const SwapPolynomial& p) {
  SwapPolynomial r(p.n());
  for (const auto& [m, c] : p.terms()) r.add_term(SwapMonomial(p.n(), reduce_word(m.word())), c);
  return r;
}

}  // namespace qmc

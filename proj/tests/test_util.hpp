#pragma once

#include "qmc/graph.hpp"
#include "qmc/swap.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace qmc::testing {

inline WeightedGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline WeightedGraph random_connected_graph(int n, double p, std::mt19937& rng) {
  for (;;) {
    WeightedGraph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

// Join of a and b: disjoint union plus every edge between them.
inline WeightedGraph graph_join(const WeightedGraph& a, const WeightedGraph& b) {
  WeightedGraph u = disjoint_union(a, b);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < b.n(); ++j) u.add_edge(i, a.n() + j);
  return u;
}

// Random cograph on n vertices built from unions and joins; connected when
// the last operation is a join.
inline WeightedGraph random_cograph(int n, std::mt19937& rng, bool join_on_top) {
  if (n == 1) return WeightedGraph(1);
  std::uniform_int_distribution<int> split(1, n - 1);
  int a = split(rng);
  std::bernoulli_distribution coin(0.5);
  WeightedGraph left = random_cograph(a, rng, coin(rng));
  WeightedGraph right = random_cograph(n - a, rng, coin(rng));
  return join_on_top ? graph_join(left, right) : disjoint_union(left, right);
}

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

// Edge mask of g with vertices relabeled by perm.
inline unsigned canonical_mask(int n, unsigned mask) {
  auto pairs = all_pairs(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  unsigned best = ~0u;
  do {
    unsigned m = 0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!(mask >> e & 1u)) continue;
      int a = perm[pairs[e].first], b = perm[pairs[e].second];
      if (a > b) std::swap(a, b);
      auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b));
      m |= 1u << (it - pairs.begin());
    }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline WeightedGraph graph_from_mask(int n, unsigned mask) {
  auto pairs = all_pairs(n);
  WeightedGraph g(n);
  for (std::size_t e = 0; e < pairs.size(); ++e)
    if (mask >> e & 1u) g.add_edge(pairs[e].first, pairs[e].second);
  return g;
}

// One representative per isomorphism class of connected graphs on n <= 6
// vertices, in increasing canonical mask order.
inline std::vector<WeightedGraph> connected_graphs(int n) {
  const unsigned edges = static_cast<unsigned>(n * (n - 1) / 2);
  std::set<unsigned> seen;
  std::vector<WeightedGraph> out;
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    WeightedGraph g = graph_from_mask(n, mask);
    if (!is_connected(g)) continue;
    unsigned c = canonical_mask(n, mask);
    if (seen.insert(c).second) out.push_back(graph_from_mask(n, c));
  }
  return out;
}

inline Word random_word(int n, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> v(0, n - 1);
  Word w;
  while (static_cast<int>(w.size()) < degree) {
    int a = v(rng), b = v(rng);
    if (a != b) w.push_back(make_letter(a, b));
  }
  return w;
}

inline SwapPolynomial random_polynomial(int n, int max_degree, int terms, std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-3, 3);
  SwapPolynomial p(n);
  for (int t = 0; t < terms; ++t) p.add_term(SwapMonomial(n, random_word(n, deg(rng), rng)), coef(rng));
  return p;
}

}  // namespace qmc::testing

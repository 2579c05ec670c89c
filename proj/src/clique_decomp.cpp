#include "qmc/clique_decomp.hpp"

#include "qmc/basis.hpp"
#include "qmc/oracle.hpp"
#include "qmc/parallel.hpp"
#include "qmc/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace qmc {

std::vector<int> TreeCliqueDecomposition::leaves() const {
  std::vector<int> out;
  for (const auto& n : nodes)
    if (n.leaf) out.push_back(n.id);
  return out;
}

int TreeCliqueDecomposition::depth() const {
  int d = 0;
  for (const auto& n : nodes) d = std::max(d, n.depth);
  return d;
}

TreeCliqueDecomposition tree_clique_decomposition(const WeightedGraph& g) {
  if (g.n() < 1) throw InputError("tree clique decomposition needs at least one vertex");
  if (!g.unit_weights()) throw InputError("tree clique decomposition requires unit weights");
  if (!is_connected(g)) throw InputError("tree clique decomposition requires a connected graph");
  TreeCliqueDecomposition t;
  std::deque<int> queue;
  t.nodes.push_back(TcdNode{0, g, {}, 0, -1, classify(g), false});
  queue.push_back(0);
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    const WeightedGraph h = t.nodes[id].graph;
    GraphClass cls = t.nodes[id].cls;
    WeightedGraph hc = complement(h);
    if (cls != GraphClass::Other || is_connected(hc)) {
      t.nodes[id].leaf = true;
      continue;
    }
    for (WeightedGraph& comp : connected_components(hc)) {
      int cid = static_cast<int>(t.nodes.size());
      GraphClass ccls = classify(comp);
      t.nodes.push_back(TcdNode{cid, std::move(comp), {}, t.nodes[id].depth + 1, id, ccls, false});
      t.nodes[id].children.push_back(cid);
      queue.push_back(cid);
    }
  }
  return t;
}

std::string SignedCliqueTerm::str() const {
  std::ostringstream out;
  out << (sign > 0 ? "+" : "-") << (residual ? "H" : "K") << size;
  return out.str();
}

std::vector<SignedCliqueTerm> signed_clique_terms(const TreeCliqueDecomposition& t) {
  std::vector<SignedCliqueTerm> out;
  for (const TcdNode& v : t.nodes) {
    int sign = v.depth % 2 == 0 ? 1 : -1;
    if (!v.leaf) {
      out.push_back({sign, v.id, false, v.graph.n()});
    } else if (v.cls == GraphClass::Clique) {
      out.push_back({sign, v.id, false, v.graph.n()});
    } else if (v.cls == GraphClass::Other) {
      out.push_back({sign, v.id, true, v.graph.n()});
    }
  }
  return out;
}

bool is_fully_decomposable(const TreeCliqueDecomposition& t) {
  return std::none_of(t.nodes.begin(), t.nodes.end(),
                      [](const TcdNode& v) { return v.leaf && v.cls == GraphClass::Other; });
}

namespace {

// r smallest (ascending) or r largest (descending) distinct values.
std::vector<Rational> extreme_distinct(std::vector<Rational> v, std::size_t r, bool smallest) {
  if (smallest) std::sort(v.begin(), v.end());
  else std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() > r) v.resize(r);
  return v;
}

std::vector<Rational> sums(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t r, bool smallest) {
  std::vector<Rational> s;
  s.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) s.push_back(x + y);
  return extreme_distinct(std::move(s), r, smallest);
}

std::vector<Rational> merged(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t r, bool smallest) {
  std::vector<Rational> s = a;
  s.insert(s.end(), b.begin(), b.end());
  return extreme_distinct(std::move(s), r, smallest);
}

}  // namespace

std::vector<IrrepSpectrumBounds> inductive_step(const WeightedGraph& gv,
                                                const std::vector<std::vector<IrrepSpectrumBounds>>& child_bounds,
                                                int r) {
  if (r < 1) throw std::invalid_argument("inductive_step: r must be positive");
  const int n = gv.n();
  int total = 0;
  bool exact = true;
  for (const auto& cb : child_bounds) {
    if (cb.empty()) throw std::invalid_argument("inductive_step: child without irrep bounds");
    int nu = cb.front().partition.n;
    total += nu;
    if (static_cast<int>(cb.size()) != nu / 2 + 1) throw std::invalid_argument("inductive_step: missing child irrep");
    for (int k = 0; k <= nu / 2; ++k) {
      const auto& b = cb[k];
      if (b.partition.n != nu || b.partition.k != k) throw std::invalid_argument("inductive_step: missing child irrep");
      if (b.max_eigs.empty() || b.min_eigs.empty()) throw std::invalid_argument("inductive_step: empty eigenvalue list");
      exact = exact && b.exact;
    }
  }
  if (total != n) throw std::invalid_argument("inductive_step: child vertex counts do not add up to the node");

  // The restriction of [n-k, k] to the product of the children's symmetric
  // groups contains (xi_1, ..., xi_t) exactly when spins (nu_j - 2 i_j)/2 of the
  // children couple to (n - 2k)/2, i.e. the polygon inequalities hold. States
  // track twice the spin sum and twice the largest spin.
  struct Lists {
    std::vector<Rational> lo;  // sums of child minima, ascending
    std::vector<Rational> hi;  // sums of child maxima, descending
  };
  const std::size_t rr = static_cast<std::size_t>(r);
  std::map<std::pair<int, int>, Lists> states{{{0, 0}, Lists{{Rational(0)}, {Rational(0)}}}};
  for (const auto& cb : child_bounds) {
    std::map<std::pair<int, int>, Lists> next;
    for (const auto& [key, lists] : states)
      for (const auto& b : cb) {
        int s2 = b.partition.n - 2 * b.partition.k;
        std::pair<int, int> nk{key.first + s2, std::max(key.second, s2)};
        Lists add{sums(lists.lo, b.min_eigs, rr, true), sums(lists.hi, b.max_eigs, rr, false)};
        auto it = next.find(nk);
        if (it == next.end()) {
          next.emplace(nk, std::move(add));
        } else {
          it->second.lo = merged(it->second.lo, add.lo, rr, true);
          it->second.hi = merged(it->second.hi, add.hi, rr, false);
        }
      }
    states = std::move(next);
  }

  std::vector<IrrepSpectrumBounds> out;
  for (int k = 0; 2 * k <= n; ++k) {
    TwoRowPartition lam(n, k);
    const int L = n - 2 * k;
    std::vector<Rational> lo, hi;
    for (const auto& [key, lists] : states) {
      auto [sum2, max2] = key;
      if (L > sum2 || 2 * max2 > sum2 + L) continue;
      lo = merged(lo, lists.lo, rr, true);
      hi = merged(hi, lists.hi, rr, false);
    }
    if (lo.empty()) throw std::logic_error("inductive_step: irrep does not occur in the restriction");
    Rational e(eta(lam));
    IrrepSpectrumBounds b;
    b.partition = lam;
    b.exact = exact;
    for (const auto& v : lo) b.max_eigs.push_back(e - v);
    for (const auto& v : hi) b.min_eigs.push_back(e - v);
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

// Numeric leaf values are widened by tol and rounded outward to a 1e-9 grid.
Rational outward(double v, double tol, bool up) {
  const double grid = 1e9;
  double scaled = up ? std::ceil((v + tol) * grid) : std::floor((v - tol) * grid);
  return Rational(BigInt(static_cast<long long>(scaled)), BigInt(1000000000));
}

std::vector<IrrepSpectrumBounds> leaf_bounds(const TcdNode& leaf, const EigOptions& opts) {
  const WeightedGraph& g = leaf.graph;
  const int n = g.n();
  std::vector<IrrepSpectrumBounds> out;
  auto constant = [&](auto value_of) {
    for (int k = 0; 2 * k <= n; ++k) {
      TwoRowPartition lam(n, k);
      Rational v = value_of(lam);
      out.push_back({lam, {v}, {v}, true});
    }
  };
  switch (leaf.cls) {
    case GraphClass::Singleton:
    case GraphClass::TotallyDisconnected:
      constant([](const TwoRowPartition&) { return Rational(0); });
      return out;
    case GraphClass::Clique:
      constant([](const TwoRowPartition& lam) { return Rational(eta(lam)); });
      return out;
    case GraphClass::Other:
      break;
  }
  auto labels = [&] {
    std::ostringstream s;
    for (int i = 0; i < n; ++i) s << (i ? "," : "") << g.label(i);
    return s.str();
  };
  if (opts.mode == EigMode::Exact)
    throw NotFullyDecomposable("leaf {" + labels() + "} is not a clique, singleton or edgeless graph");
  if (opts.provider == LeafProvider::Oracle) {
    if (n > opts.oracle_leaf_limit)
      throw ResourceLimit("leaf {" + labels() + "} has " + std::to_string(n) + " vertices, above the oracle leaf limit");
    for (int k = 0; 2 * k <= n; ++k) {
      Eigen::VectorXd ev = irrep_spectrum(g, k);
      std::vector<double> distinct;
      for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (distinct.empty() || ev(i) - distinct.back() > 1e-9 * std::max(1.0, std::abs(ev(i)))) distinct.push_back(ev(i));
      IrrepSpectrumBounds b;
      b.partition = TwoRowPartition(n, k);
      b.exact = false;
      for (std::size_t i = 0; i < distinct.size() && static_cast<int>(i) < opts.r; ++i) {
        b.max_eigs.push_back(outward(distinct[distinct.size() - 1 - i], opts.tol, true));
        b.min_eigs.push_back(outward(distinct[i], opts.tol, false));
      }
      out.push_back(std::move(b));
    }
    return out;
  }
  if (n > opts.sdp_leaf_limit)
    throw ResourceLimit("leaf {" + labels() + "} has " + std::to_string(n) + " vertices, above the SDP leaf limit");
  // Level-2 bounds inside each irrep; one value per list.
  WeightedGraph plain(n);
  for (const Edge& e : g.edges()) plain.add_edge(e.u, e.v, e.w);
  for (int k = 0; 2 * k <= n; ++k) {
    SdpProblem p = build_level2(plain, k);
    SolveResult hi = solve(p);
    SolveResult lo = solve(negated(p));
    if (hi.status != SolveStatus::Converged || lo.status != SolveStatus::Converged)
      throw std::runtime_error("SDP leaf bound did not converge for leaf {" + labels() + "}");
    IrrepSpectrumBounds b;
    b.partition = TwoRowPartition(n, k);
    b.exact = false;
    b.max_eigs.push_back(outward(hi.value, opts.tol, true));
    b.min_eigs.push_back(outward(-lo.value, opts.tol, false));
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

EigResult extreme_eigenvalues(const WeightedGraph& g, const EigOptions& opts) {
  if (opts.r < 1) throw std::invalid_argument("r must be positive");
  EigResult res;
  res.tree = tree_clique_decomposition(g);
  const auto& nodes = res.tree.nodes;
  std::vector<std::vector<IrrepSpectrumBounds>> bounds(nodes.size());
  std::vector<int> leaves = res.tree.leaves();
  parallel_for(leaves.size(), [&](std::size_t i) { bounds[leaves[i]] = leaf_bounds(nodes[leaves[i]], opts); });
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    if (it->leaf) continue;
    std::vector<std::vector<IrrepSpectrumBounds>> child;
    for (int c : it->children) child.push_back(bounds[c]);
    bounds[it->id] = inductive_step(it->graph, child, opts.r);
  }
  res.irreps = bounds[0];
  res.exact = true;
  for (std::size_t i = 0; i < res.irreps.size(); ++i) {
    const auto& b = res.irreps[i];
    if (i == 0 || b.max_eigs.front() > res.max) res.max = b.max_eigs.front();
    if (i == 0 || b.min_eigs.front() < res.min) res.min = b.min_eigs.front();
    res.exact = res.exact && b.exact;
  }
  return res;
}

}  // namespace qmc

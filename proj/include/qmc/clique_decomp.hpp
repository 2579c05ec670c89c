#pragma once

#include "qmc/graph.hpp"
#include "qmc/symrep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qmc {

class NotFullyDecomposable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TcdNode {
  int id = 0;
  WeightedGraph graph;  // induced subgraph, original labels
  std::vector<int> children;
  int depth = 0;
  int parent = -1;
  GraphClass cls = GraphClass::Other;
  bool leaf = false;
};

// Nodes in breadth-first order, root at index 0. Children of a node are the
// connected components of its complement, sorted by smallest label.
struct TreeCliqueDecomposition {
  std::vector<TcdNode> nodes;

  const TcdNode& root() const { return nodes.front(); }
  std::vector<int> leaves() const;
  int depth() const;
};

// Requires a connected graph with unit weights (InputError otherwise).
TreeCliqueDecomposition tree_clique_decomposition(const WeightedGraph& g);

struct SignedCliqueTerm {
  int sign = 1;
  int node = 0;
  bool residual = false;  // the node's own Hamiltonian rather than a clique
  int size = 0;           // vertex count
  std::string str() const;  // "+K6", "-H6"
};

std::vector<SignedCliqueTerm> signed_clique_terms(const TreeCliqueDecomposition& t);
bool is_fully_decomposable(const TreeCliqueDecomposition& t);

// r largest / r smallest distinct eigenvalues of H_G inside one irrep.
struct IrrepSpectrumBounds {
  TwoRowPartition partition;
  std::vector<Rational> max_eigs;  // descending
  std::vector<Rational> min_eigs;  // ascending
  bool exact = true;
};

// Bounds for every irrep of S_{|V(G_v)|}, from the bounds of the components
// of the complement of G_v. child_bounds[j] lists child j's irreps by k.
std::vector<IrrepSpectrumBounds> inductive_step(const WeightedGraph& gv,
                                                const std::vector<std::vector<IrrepSpectrumBounds>>& child_bounds,
                                                int r = 1);

enum class EigMode { Exact, Bound };
enum class LeafProvider { Oracle, Sdp };

struct EigOptions {
  int r = 1;
  EigMode mode = EigMode::Exact;
  LeafProvider provider = LeafProvider::Oracle;
  double tol = 1e-6;  // padding of numeric leaf values
  int oracle_leaf_limit = 12;
  int sdp_leaf_limit = 8;
};

struct EigResult {
  TreeCliqueDecomposition tree;
  std::vector<IrrepSpectrumBounds> irreps;  // root irreps by k
  Rational max;
  Rational min;
  bool exact = true;
};

EigResult extreme_eigenvalues(const WeightedGraph& g, const EigOptions& opts = {});

}  // namespace qmc

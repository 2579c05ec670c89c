#pragma once

#include "qmc/rational.hpp"

#include <string_view>
#include <vector>

namespace qmc {

struct Edge {
  int u;  // 0-based, u < v
  int v;
  Rational w;
};

// Simple undirected graph with rational edge weights. Vertices are 0-based
// internally; labels() holds the 1-based external label of each vertex so
// that induced subgraphs keep the numbering of the graph they came from.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);
  WeightedGraph(int n, std::vector<int> labels);

  int n() const { return n_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(int v) const { return labels_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Throws InputError on self-loops, out-of-range endpoints, duplicates and
  // negative weights.
  void add_edge(int u, int v, Rational w = 1);

  bool has_edge(int u, int v) const;
  bool unit_weights() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

 private:
  int n_ = 0;
  std::vector<int> labels_;
  std::vector<Edge> edges_;  // kept sorted by (u, v)
  std::vector<char> adj_;
};

WeightedGraph parse_graph(std::string_view text);
WeightedGraph read_graph_file(const std::string& path);

WeightedGraph complete_graph(int n);
WeightedGraph star_graph(int n);  // center is vertex n
WeightedGraph cycle_graph(int n);
WeightedGraph path_graph(int n);

WeightedGraph complement(const WeightedGraph& g);
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vertices);
std::vector<WeightedGraph> connected_components(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

// Disjoint union; vertices of b are shifted after those of a.
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);

enum class GraphClass { Clique, Singleton, TotallyDisconnected, Other };

GraphClass classify(const WeightedGraph& g);
const char* to_string(GraphClass c);

}  // namespace qmc

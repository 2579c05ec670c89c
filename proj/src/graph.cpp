#include "qmc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

namespace qmc {

WeightedGraph::WeightedGraph(int n) : WeightedGraph(n, {}) {}

WeightedGraph::WeightedGraph(int n, std::vector<int> labels) : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 1);
  }
  if (static_cast<int>(labels_.size()) != n) throw std::invalid_argument("label count does not match vertex count");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void WeightedGraph::add_edge(int u, int v, Rational w) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw InputError("vertex out of range in edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")");
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u + 1));
  if (w < 0) throw InputError("negative weight on edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")");
  if (u > v) std::swap(u, v);
  if (adj_[u * n_ + v]) throw InputError("duplicate edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")");
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  Edge e{u, v, std::move(w)};
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), e,
                              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  edges_.insert(pos, std::move(e));
}

bool WeightedGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return adj_[u * n_ + v] != 0;
}

bool WeightedGraph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1; });
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.n_ != b.n_ || a.labels_ != b.labels_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_vertex(const std::string& tok, int lineno) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
    throw InputError("line " + std::to_string(lineno) + ": malformed vertex '" + tok + "'");
  return std::stoi(tok);
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  WeightedGraph g;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 1) throw InputError("line " + std::to_string(lineno) + ": expected vertex count");
      int n = parse_vertex(toks[0], lineno);
      if (n < 1) throw InputError("line " + std::to_string(lineno) + ": vertex count must be positive");
      g = WeightedGraph(n);
      have_header = true;
      continue;
    }
    if (toks.size() < 2 || toks.size() > 3)
      throw InputError("line " + std::to_string(lineno) + ": expected 'i j [w]'");
    int i = parse_vertex(toks[0], lineno);
    int j = parse_vertex(toks[1], lineno);
    Rational w = 1;
    if (toks.size() == 3) {
      try {
        w = parse_rational(toks[2]);
      } catch (const InputError& e) {
        throw InputError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (i < 1 || i > g.n() || j < 1 || j > g.n())
      throw InputError("line " + std::to_string(lineno) + ": vertex out of range");
    try {
      g.add_edge(i - 1, j - 1, w);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw InputError("empty graph document");
  return g;
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

WeightedGraph complete_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

WeightedGraph star_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, n - 1);
  return g;
}

WeightedGraph cycle_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

WeightedGraph path_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

WeightedGraph complement(const WeightedGraph& g) {
  WeightedGraph c(g.n(), g.labels());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.has_edge(i, j)) c.add_edge(i, j);
  return c;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  std::vector<int> labels;
  std::vector<int> index(g.n(), -1);
  for (std::size_t t = 0; t < vs.size(); ++t) {
    labels.push_back(g.label(vs[t]));
    index[vs[t]] = static_cast<int>(t);
  }
  WeightedGraph h(static_cast<int>(vs.size()), labels);
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) h.add_edge(index[e.u], index[e.v], e.w);
  return h;
}

std::vector<WeightedGraph> connected_components(const WeightedGraph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> groups;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      groups[id].push_back(u);
      for (int v = 0; v < g.n(); ++v)
        if (comp[v] < 0 && g.has_edge(u, v)) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
  }
  // Vertices are scanned in ascending order, so groups already come sorted by
  // their smallest internal vertex; induced subgraphs keep label order.
  std::vector<WeightedGraph> out;
  out.reserve(groups.size());
  for (auto& grp : groups) out.push_back(induced_subgraph(g, grp));
  std::stable_sort(out.begin(), out.end(), [](const WeightedGraph& a, const WeightedGraph& b) {
    return *std::min_element(a.labels().begin(), a.labels().end()) <
           *std::min_element(b.labels().begin(), b.labels().end());
  });
  return out;
}

bool is_connected(const WeightedGraph& g) { return g.n() > 0 && connected_components(g).size() == 1; }

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
  WeightedGraph g(a.n() + b.n());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v, e.w);
  for (const Edge& e : b.edges()) g.add_edge(e.u + a.n(), e.v + a.n(), e.w);
  return g;
}

GraphClass classify(const WeightedGraph& g) {
  if (g.n() == 1) return GraphClass::Singleton;
  long full = static_cast<long>(g.n()) * (g.n() - 1) / 2;
  if (g.n() >= 2 && static_cast<long>(g.edge_count()) == full) return GraphClass::Clique;
  if (g.edge_count() == 0) return GraphClass::TotallyDisconnected;
  return GraphClass::Other;
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Clique: return "clique";
    case GraphClass::Singleton: return "singleton";
    case GraphClass::TotallyDisconnected: return "totally_disconnected";
    case GraphClass::Other: return "other";
  }
  return "other";
}

}  // namespace qmc

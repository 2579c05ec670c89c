#include "qmc/json_io.hpp"

#include <cmath>
#include <limits>

namespace qmc {

Json rational_json(const Rational& r) {
  if (denominator(r) == 1) {
    BigInt v = numerator(r);
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      return static_cast<long long>(v);
  }
  return to_string(r);
}

Json graph_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v), rational_json(e.w)});
  Json out;
  out["n"] = g.n();
  if (g.n() > 0 && (g.label(0) != 1 || g.label(g.n() - 1) != g.n())) out["vertices"] = g.labels();
  out["edges"] = std::move(edges);
  return out;
}

Json tree_json(const TreeCliqueDecomposition& t) {
  Json nodes = Json::array();
  for (const TcdNode& v : t.nodes) {
    Json j;
    j["id"] = v.id;
    j["vertices"] = v.graph.labels();
    j["class"] = to_string(v.cls);
    j["depth"] = v.depth;
    j["children"] = v.children;
    j["leaf"] = v.leaf;
    j["edges"] = v.graph.edge_count();
    nodes.push_back(std::move(j));
  }
  Json out;
  out["nodes"] = std::move(nodes);
  out["depth"] = t.depth();
  out["fully_decomposable"] = is_fully_decomposable(t);
  return out;
}

Json terms_json(const std::vector<SignedCliqueTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(t.str());
  return out;
}

Json bounds_json(const IrrepSpectrumBounds& b) {
  Json out;
  out["irrep"] = {b.partition.n, b.partition.k};
  out["partition"] = b.partition.str();
  Json mx = Json::array(), mn = Json::array();
  for (const auto& v : b.max_eigs) mx.push_back(rational_json(v));
  for (const auto& v : b.min_eigs) mn.push_back(rational_json(v));
  out["max"] = std::move(mx);
  out["min"] = std::move(mn);
  out["exact"] = b.exact;
  return out;
}

Json eig_json(const EigResult& r) {
  Json irreps = Json::array();
  for (const auto& b : r.irreps) irreps.push_back(bounds_json(b));
  Json out;
  out["irreps"] = std::move(irreps);
  out["max"] = rational_json(r.max);
  out["min"] = rational_json(r.min);
  out["exact"] = r.exact;
  out["terms"] = terms_json(signed_clique_terms(r.tree));
  return out;
}

Json sdp_result_json(const WeightedGraph& g, const SdpProblem& p, const SolveResult& r) {
  Json out;
  out["graph"] = graph_json(g);
  out["level"] = p.level;
  if (p.irrep_k) out["irrep"] = {p.n, *p.irrep_k};
  if (std::isfinite(r.value)) out["value"] = r.value;
  else out["value"] = nullptr;
  out["status"] = to_string(r.status);
  out["matrix_dim"] = p.block_dim;
  out["n_vars"] = p.n_vars();
  out["iterations"] = r.iterations;
  out["primal_infeasibility"] = r.primal_infeasibility;
  out["dual_infeasibility"] = r.dual_infeasibility;
  out["gap"] = r.gap;
  return out;
}

Json checks_json(const std::vector<IdentityCheck>& checks) {
  Json items = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  Json out;
  out["items"] = std::move(items);
  out["all_pass"] = all;
  return out;
}

}  // namespace qmc

#pragma once

#include "qmc/clique_decomp.hpp"
#include "qmc/graph.hpp"
#include "qmc/identities.hpp"
#include "qmc/sdp.hpp"

#include <json.hpp>

namespace qmc {

using Json = nlohmann::ordered_json;

// Integers become JSON numbers, other rationals strings "p/q".
Json rational_json(const Rational& r);

Json graph_json(const WeightedGraph& g);  // {n, edges: [[i, j, w]]}, 1-based labels
Json tree_json(const TreeCliqueDecomposition& t);
Json terms_json(const std::vector<SignedCliqueTerm>& terms);
Json bounds_json(const IrrepSpectrumBounds& b);
Json eig_json(const EigResult& r);
Json sdp_result_json(const WeightedGraph& g, const SdpProblem& p, const SolveResult& r);
Json checks_json(const std::vector<IdentityCheck>& checks);

}  // namespace qmc

#pragma once

#include <vector>

#include "bpeel/butterfly.hpp"
#include "bpeel/graph.hpp"
#include "bpeel/hierarchy.hpp"

namespace bpeel {

/// Core numbers (integer) or fractional core values (real) per vertex.
struct CoreResult {
  std::vector<double> core;
  std::vector<VertexId> peel_order;
};

struct NucleusEdgeResult {
  std::vector<Count> kappa;  ///< per projected edge id
  std::vector<Count> triangle_count_initial;
  std::vector<EdgeId> peel_order;
};

/// Degree peeling with bucket sort; O(|V| + |E|).
CoreResult core_decompose(const ProjectedGraph& gp);

/// Peels by smallest weighted degree (then smallest id). A vertex's value is
/// the largest weighted degree floor reached so far, so the sets
/// {x : value(x) >= k} are nested. Throws ArgumentError on an unweighted
/// graph or a negative weight.
CoreResult fractional_core_decompose(const ProjectedGraph& gwp);

/// Triangles per edge, then edge peeling by triangle count with clamped
/// decrements. Each triangle is discounted once, at its first peeled edge.
NucleusEdgeResult nucleus23_decompose(const ProjectedGraph& gp);

/// Per-edge triangle counts, each triangle enumerated once in id order.
std::vector<Count> count_edge_triangles(const ProjectedGraph& gp);

/// Triangle-connected classes of projected edges with κ ≥ k.
std::vector<std::vector<EdgeId>> extract_k_nuclei23(const ProjectedGraph& gp,
                                                    const NucleusEdgeResult& result, Count k);

/// Connected classes of vertices with value ≥ k.
std::vector<std::vector<VertexId>> extract_k_cores(const ProjectedGraph& gp,
                                                   const CoreResult& result, double k);

/// Hierarchies of the projection baselines. Profiles describe the bipartite
/// subgraph induced by the node's primary vertices (for (2,3)-nuclei, the
/// endpoints of member edges).
NucleusTree build_core_hierarchy(const BipartiteGraph& g, const ProjectedGraph& gp,
                                 const CoreResult& result, NucleusKind kind = NucleusKind::Core);
NucleusTree build_nucleus23_hierarchy(const BipartiteGraph& g, const ProjectedGraph& gp,
                                      const NucleusEdgeResult& result);

/// Profile of the bipartite subgraph induced by a vertex set found in a
/// projection. Empty set gives an all-zero profile.
SubgraphProfile induced_bipartite_from_projection_node(const BipartiteGraph& g,
                                                       std::span<const VertexId> u_set);

/// Endpoints of a set of projected edges, ascending and unique.
std::vector<VertexId> projected_edge_endpoints(const ProjectedGraph& gp,
                                               std::span<const EdgeId> edges);

}  // namespace bpeel

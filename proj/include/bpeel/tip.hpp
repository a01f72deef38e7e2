#pragma once

#include <vector>

#include "bpeel/butterfly.hpp"
#include "bpeel/graph.hpp"

namespace bpeel {

struct TipResult {
  std::vector<Count> theta;         ///< tip number per primary vertex
  std::vector<VertexId> peel_order; ///< removal order
  std::vector<Count> initial_beta;
};

struct TipStats {
  /// Partner updates plus one per peeled vertex; each update stands for at
  /// least one butterfly, so this never exceeds |butterflies| + |U|.
  std::uint64_t butterfly_touches = 0;
  std::uint64_t adjacency_reads = 0;
};

/// Tip numbers by vertex peeling. `beta` must be count_per_vertex(g); a
/// mismatch in kind, length or totals throws PreconditionError.
///
/// The vertex with the smallest current count (then smallest id) is peeled
/// and its count becomes its tip number. Every unpeeled partner x sharing m
/// butterflies with it loses min(m, β(x) − β(u)).
TipResult tip_decompose(const BipartiteGraph& g, const ButterflyCounts& beta,
                        TipStats* stats = nullptr);

}  // namespace bpeel

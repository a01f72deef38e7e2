#pragma once

#include <map>
#include <vector>

#include "bpeel/butterfly.hpp"
#include "bpeel/graph.hpp"

namespace bpeel {

struct WingResult {
  std::vector<Count> psi;         ///< wing number per edge id
  std::vector<EdgeId> peel_order;
  std::vector<Count> initial_beta;
};

struct WingStats {
  /// Butterflies discounted during peeling. Each butterfly is discounted at
  /// its first peeled edge only, so this ends equal to the butterfly total.
  std::uint64_t butterfly_events = 0;
  std::uint64_t companion_updates = 0;
};

/// Wing numbers by edge peeling. `beta` must be count_per_edge(g).
///
/// The edge with the smallest count (then smallest id) is peeled. For each
/// of its butterflies whose three companions are all still unpeeled, each
/// companion f loses one butterfly unless β(f) is already at the peel level.
WingResult wing_decompose(const BipartiteGraph& g, const ButterflyCounts& beta,
                          WingStats* stats = nullptr);

/// {e : ψ(e) ≥ k}, ascending.
std::vector<EdgeId> k_wing_edge_set(const WingResult& result, Count k);

/// The nested sets {e : ψ(e) ≥ k} for k = 0 and every distinct ψ value.
std::map<Count, std::vector<EdgeId>> k_wing_edge_sets(const WingResult& result);

}  // namespace bpeel

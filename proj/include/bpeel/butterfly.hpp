#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "bpeel/graph.hpp"

namespace bpeel {

using Count = std::uint64_t;

enum class CountKind { PerVertex, PerEdge };

/// Butterfly participation per primary vertex or per edge.
struct ButterflyCounts {
  CountKind kind = CountKind::PerVertex;
  std::vector<Count> values;
  Count total = 0;
};

/// Work counters filled by the counting routines.
struct CountStats {
  /// Entries of secondary adjacency lists read (per-vertex counting).
  std::uint64_t neighbor_accesses = 0;
  /// Sorted-list intersections performed (per-edge counting).
  std::uint64_t intersections = 0;
};

struct PartnerCount {
  VertexId partner;
  Count butterflies;
  bool operator==(const PartnerCount&) const = default;
};

/// The three edges that complete a butterfly around a given edge (u, v):
/// (w, v), (u, v') and (w, v').
using CompanionEdges = std::array<EdgeId, 3>;

using VertexPredicate = std::function<bool(VertexId)>;
using EdgePredicate = std::function<bool(EdgeId)>;

/// β(u) = Σ_{d ≠ u} C(|N(u) ∩ N(d)|, 2) for every primary vertex, by
/// aggregating the wedges u - v - d. Throws OverflowError if a counter
/// would exceed 64 bits.
ButterflyCounts count_per_vertex(const BipartiteGraph& g, CountStats* stats = nullptr);

/// β(e) for every edge. Each butterfly is found once, from its smallest
/// primary vertex, by intersecting N(v1) and N(v2) for all pairs v1 < v2 of
/// that vertex's neighbors.
ButterflyCounts count_per_edge(const BipartiteGraph& g, CountStats* stats = nullptr);

/// Butterflies shared between u and each active partner x ≠ u, counted over
/// the full secondary side. Sorted by partner id; partners with zero shared
/// butterflies are omitted. An empty predicate means every vertex is active.
std::vector<PartnerCount> butterflies_of_vertex(const BipartiteGraph& g, VertexId u,
                                                const VertexPredicate& active = {});

/// Every butterfly of G containing e whose three companion edges satisfy
/// `active`, ordered by (w, v'). An empty predicate keeps all of them.
std::vector<CompanionEdges> butterflies_of_edge(const BipartiteGraph& g, EdgeId e,
                                                const EdgePredicate& active = {});

/// C(n, 2) with overflow detection.
Count choose2(Count n);

/// a + b with overflow detection.
Count checked_add(Count a, Count b);

/// Reusable wedge aggregation around a primary vertex: for each partner x
/// reachable through a secondary vertex, the number of common neighbors.
/// Scratch space is O(|U|) and reset lazily between calls.
class WedgeCounter {
 public:
  explicit WedgeCounter(std::size_t u_count) : common_(u_count, 0) {}

  /// Calls on_partner(x, common) once per x ≠ u with active(x), in
  /// first-discovery order. Returns the number of adjacency entries read.
  template <class Active, class OnPartner>
  std::uint64_t for_each_partner(const BipartiteGraph& g, VertexId u, Active&& active,
                                 OnPartner&& on_partner) {
    std::uint64_t reads = 0;
    touched_.clear();
    for (VertexId v : g.neighbors_u(u)) {
      const auto nbrs = g.neighbors_v(v);
      reads += nbrs.size();
      for (VertexId x : nbrs) {
        if (x == u || !active(x)) continue;
        if (common_[x]++ == 0) touched_.push_back(x);
      }
    }
    for (VertexId x : touched_) {
      const Count c = common_[x];
      common_[x] = 0;
      on_partner(x, c);
    }
    return reads;
  }

 private:
  std::vector<Count> common_;
  std::vector<VertexId> touched_;
};

}  // namespace bpeel

#include "bpeel/butterfly.hpp"

#include <algorithm>

#include "bpeel/errors.hpp"
#include "bpeel/intersect.hpp"

namespace bpeel {

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("butterfly counter overflow");
  return out;
}

Count choose2(Count n) {
  if (n < 2) return 0;
  // n(n-1)/2 without overflowing the intermediate product
  const Count a = (n % 2 == 0) ? n / 2 : n;
  const Count b = (n % 2 == 0) ? n - 1 : (n - 1) / 2;
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("butterfly counter overflow");
  return out;
}

ButterflyCounts count_per_vertex(const BipartiteGraph& g, CountStats* stats) {
  ButterflyCounts out;
  out.kind = CountKind::PerVertex;
  out.values.assign(g.u_count(), 0);
  WedgeCounter wedges(g.u_count());
  std::uint64_t reads = 0;
  Count twice_total = 0;
  const auto all = [](VertexId) { return true; };
  for (VertexId u = 0; u < g.u_count(); ++u) {
    Count beta = 0;
    reads += wedges.for_each_partner(g, u, all, [&](VertexId, Count common) {
      beta = checked_add(beta, choose2(common));
    });
    out.values[u] = beta;
    twice_total = checked_add(twice_total, beta);
  }
  out.total = twice_total / 2;
  if (stats) stats->neighbor_accesses += reads;
  return out;
}

ButterflyCounts count_per_edge(const BipartiteGraph& g, CountStats* stats) {
  ButterflyCounts out;
  out.kind = CountKind::PerEdge;
  out.values.assign(g.edge_count(), 0);
  std::uint64_t intersections = 0;
  Count total = 0;

  for (VertexId u = 0; u < g.u_count(); ++u) {
    const auto nbrs = g.neighbors_u(u);
    const EdgeId base = g.edge_begin(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const VertexId v1 = nbrs[i];
      const auto n1 = g.neighbors_v(v1);
      const auto off1 = static_cast<std::size_t>(std::upper_bound(n1.begin(), n1.end(), u) - n1.begin());
      const auto later1 = n1.subspan(off1);
      const auto edges1 = g.edges_v(v1).subspan(off1);
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const VertexId v2 = nbrs[j];
        const auto n2 = g.neighbors_v(v2);
        const auto off2 = static_cast<std::size_t>(std::upper_bound(n2.begin(), n2.end(), u) - n2.begin());
        const auto edges2 = g.edges_v(v2).subspan(off2);
        ++intersections;
        intersect_sorted(later1, n2.subspan(off2), [&](std::size_t p1, std::size_t p2) {
          // butterfly (u, w, v1, v2) with w the common partner after u
          ++out.values[base + i];
          ++out.values[base + j];
          ++out.values[edges1[p1]];
          ++out.values[edges2[p2]];
          ++total;
        });
      }
    }
  }
  // four increments per butterfly: an edge value can only overflow if the total does
  if (total > (~Count{0}) / 4) throw OverflowError("butterfly counter overflow");
  out.total = total;
  if (stats) stats->intersections += intersections;
  return out;
}

std::vector<PartnerCount> butterflies_of_vertex(const BipartiteGraph& g, VertexId u,
                                                const VertexPredicate& active) {
  if (u >= g.u_count()) throw ArgumentError("primary vertex out of range");
  std::vector<PartnerCount> out;
  WedgeCounter wedges(g.u_count());
  wedges.for_each_partner(
      g, u, [&](VertexId x) { return !active || active(x); },
      [&](VertexId x, Count common) {
        if (common >= 2) out.push_back({x, choose2(common)});
      });
  std::sort(out.begin(), out.end(),
            [](const PartnerCount& a, const PartnerCount& b) { return a.partner < b.partner; });
  return out;
}

std::vector<CompanionEdges> butterflies_of_edge(const BipartiteGraph& g, EdgeId e,
                                                const EdgePredicate& active) {
  if (e >= g.edge_count()) throw ArgumentError("edge out of range");
  const auto is_active = [&](EdgeId f) { return !active || active(f); };
  const VertexId u = g.edge_u(e);
  const VertexId v = g.edge_v(e);
  const auto nu = g.neighbors_u(u);
  const auto vn = g.neighbors_v(v);
  const auto ve = g.edges_v(v);
  std::vector<CompanionEdges> out;
  for (std::size_t k = 0; k < vn.size(); ++k) {
    const VertexId w = vn[k];
    if (w == u || !is_active(ve[k])) continue;
    const auto nw = g.neighbors_u(w);
    intersect_sorted(nu, nw, [&](std::size_t i, std::size_t j) {
      if (nu[i] == v) return;
      const EdgeId uv2 = g.edge_begin(u) + static_cast<EdgeId>(i);
      const EdgeId wv2 = g.edge_begin(w) + static_cast<EdgeId>(j);
      if (is_active(uv2) && is_active(wv2)) out.push_back({ve[k], uv2, wv2});
    });
  }
  return out;
}

}  // namespace bpeel

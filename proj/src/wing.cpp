#include "bpeel/wing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bpeel/bucket_queue.hpp"
#include "bpeel/errors.hpp"
#include "bpeel/intersect.hpp"

namespace bpeel {

WingResult wing_decompose(const BipartiteGraph& g, const ButterflyCounts& beta, WingStats* stats) {
  if (beta.kind != CountKind::PerEdge || beta.values.size() != g.edge_count()) {
    throw PreconditionError("wing decomposition needs per-edge butterfly counts");
  }
  Count sum = 0;
  for (Count b : beta.values) sum = checked_add(sum, b);
  if (sum % 4 != 0 || sum / 4 != beta.total) {
    throw PreconditionError("per-edge counts do not sum to four times the butterfly total");
  }

  const std::size_t m = g.edge_count();
  WingResult out;
  out.initial_beta = beta.values;
  out.psi.assign(m, 0);
  out.peel_order.reserve(m);

  BucketQueue<Count> queue(m);
  for (EdgeId e = 0; e < m; ++e) queue.push(e, beta.values[e]);

  std::vector<Count> delta(m, 0);
  std::vector<EdgeId> touched;
  const auto hit = [&](EdgeId f) {
    if (delta[f]++ == 0) touched.push_back(f);
  };

  WingStats local;
  Count level = 0;
  while (!queue.empty()) {
    const auto [e, current] = queue.pop();
    if (current < level) throw std::logic_error("wing peeling went below the current level");
    level = current;
    out.psi[e] = current;
    out.peel_order.push_back(e);

    const VertexId u = g.edge_u(e);
    const VertexId v = g.edge_v(e);
    const auto nu = g.neighbors_u(u);
    const EdgeId base_u = g.edge_begin(u);
    const auto vn = g.neighbors_v(v);
    const auto ve = g.edges_v(v);
    touched.clear();
    for (std::size_t k = 0; k < vn.size(); ++k) {
      const VertexId w = vn[k];
      const EdgeId wv = ve[k];
      if (w == u || !queue.contains(wv)) continue;
      const EdgeId base_w = g.edge_begin(w);
      intersect_sorted(nu, g.neighbors_u(w), [&](std::size_t i, std::size_t j) {
        if (nu[i] == v) return;
        const EdgeId uv2 = base_u + static_cast<EdgeId>(i);
        const EdgeId wv2 = base_w + static_cast<EdgeId>(j);
        if (!queue.contains(uv2) || !queue.contains(wv2)) return;
        ++local.butterfly_events;
        hit(wv);
        hit(uv2);
        hit(wv2);
      });
    }
    for (EdgeId f : touched) {
      const Count bf = queue.key(f);
      if (bf > current) {
        queue.decrease(f, bf - std::min(delta[f], bf - current));
        ++local.companion_updates;
      }
      delta[f] = 0;
    }
  }
  if (stats) *stats = local;
  return out;
}

std::vector<EdgeId> k_wing_edge_set(const WingResult& result, Count k) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < result.psi.size(); ++e) {
    if (result.psi[e] >= k) out.push_back(e);
  }
  return out;
}

std::map<Count, std::vector<EdgeId>> k_wing_edge_sets(const WingResult& result) {
  std::set<Count> levels(result.psi.begin(), result.psi.end());
  levels.insert(0);
  std::map<Count, std::vector<EdgeId>> out;
  for (Count k : levels) out.emplace(k, k_wing_edge_set(result, k));
  return out;
}

}  // namespace bpeel

#include "bpeel/tip.hpp"

#include <stdexcept>

#include "bpeel/bucket_queue.hpp"
#include "bpeel/errors.hpp"

namespace bpeel {

namespace {

void check_counts(const BipartiteGraph& g, const ButterflyCounts& beta) {
  if (beta.kind != CountKind::PerVertex || beta.values.size() != g.u_count()) {
    throw PreconditionError("tip decomposition needs per-vertex butterfly counts");
  }
  Count sum = 0;
  for (Count b : beta.values) sum = checked_add(sum, b);
  if (sum % 2 != 0 || sum / 2 != beta.total) {
    throw PreconditionError("per-vertex counts do not sum to twice the butterfly total");
  }
}

}  // namespace

TipResult tip_decompose(const BipartiteGraph& g, const ButterflyCounts& beta, TipStats* stats) {
  check_counts(g, beta);
  const std::size_t n = g.u_count();

  TipResult out;
  out.initial_beta = beta.values;
  out.theta.assign(n, 0);
  out.peel_order.reserve(n);

  BucketQueue<Count> queue(n);
  for (VertexId u = 0; u < n; ++u) queue.push(u, beta.values[u]);

  WedgeCounter wedges(n);
  TipStats local;
  Count level = 0;
  while (!queue.empty()) {
    const auto [u, current] = queue.pop();
    if (current < level) throw std::logic_error("tip peeling went below the current level");
    level = current;
    out.theta[u] = current;
    out.peel_order.push_back(u);
    ++local.butterfly_touches;

    local.adjacency_reads += wedges.for_each_partner(
        g, u, [&](VertexId x) { return queue.contains(x); },
        [&](VertexId x, Count common) {
          if (common < 2) return;
          const Count shared = choose2(common);
          const Count bx = queue.key(x);
          if (bx <= current) return;
          ++local.butterfly_touches;
          queue.decrease(x, bx - std::min(shared, bx - current));
        });
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace bpeel

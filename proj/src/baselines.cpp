#include "bpeel/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "bpeel/bucket_queue.hpp"
#include "bpeel/errors.hpp"
#include "bpeel/hierarchy_sweep.hpp"
#include "bpeel/intersect.hpp"

namespace bpeel {

CoreResult core_decompose(const ProjectedGraph& gp) {
  const std::size_t n = gp.vertex_count();
  CoreResult out;
  out.core.assign(n, 0.0);
  if (n == 0) return out;

  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (VertexId x = 0; x < n; ++x) {
    degree[x] = gp.degree(x);
    max_degree = std::max(max_degree, degree[x]);
  }
  // bin sort by degree; position/bin arrays as in Batagelj-Zaversnik
  std::vector<std::size_t> bin(max_degree + 1, 0);
  for (VertexId x = 0; x < n; ++x) ++bin[degree[x]];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<VertexId> vert(n);
  std::vector<std::size_t> pos(n);
  for (VertexId x = 0; x < n; ++x) {
    pos[x] = bin[degree[x]]++;
    vert[pos[x]] = x;
  }
  for (std::size_t d = max_degree; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const VertexId x = vert[i];
    out.core[x] = static_cast<double>(degree[x]);
    for (VertexId y : gp.neighbors(x)) {
      if (degree[y] <= degree[x]) continue;
      const std::size_t dy = degree[y];
      const std::size_t py = pos[y];
      const std::size_t pw = bin[dy];
      const VertexId w = vert[pw];
      if (y != w) {
        pos[y] = pw;
        vert[py] = w;
        pos[w] = py;
        vert[pw] = y;
      }
      ++bin[dy];
      --degree[y];
    }
  }
  out.peel_order = std::move(vert);
  return out;
}

CoreResult fractional_core_decompose(const ProjectedGraph& gwp) {
  if (!gwp.weighted()) throw ArgumentError("fractional cores need a weighted projection");
  const std::size_t n = gwp.vertex_count();
  std::vector<double> strength(n, 0.0);
  for (VertexId x = 0; x < n; ++x) {
    for (double w : gwp.weights(x)) {
      if (w < 0) throw ArgumentError("negative edge weight");
      strength[x] += w;
    }
  }

  CoreResult out;
  out.core.assign(n, 0.0);
  out.peel_order.reserve(n);
  BucketQueue<double> queue(n);
  for (VertexId x = 0; x < n; ++x) queue.push(x, strength[x]);
  double level = 0.0;
  while (!queue.empty()) {
    const auto [x, key] = queue.pop();
    level = std::max(level, key);
    out.core[x] = level;
    out.peel_order.push_back(x);
    const auto nbrs = gwp.neighbors(x);
    const auto weights = gwp.weights(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const VertexId y = nbrs[i];
      if (!queue.contains(y) || weights[i] == 0.0) continue;
      queue.decrease(y, queue.key(y) - weights[i]);
    }
  }
  return out;
}

std::vector<Count> count_edge_triangles(const ProjectedGraph& gp) {
  std::vector<Count> tri(gp.edge_count(), 0);
  for (VertexId a = 0; a < gp.vertex_count(); ++a) {
    const auto na = gp.neighbors(a);
    const auto ea = gp.edge_ids(a);
    for (std::size_t p = 0; p < na.size(); ++p) {
      const VertexId b = na[p];
      if (b <= a) continue;
      const auto nb = gp.neighbors(b);
      const auto eb = gp.edge_ids(b);
      const auto oa = static_cast<std::size_t>(std::upper_bound(na.begin(), na.end(), b) - na.begin());
      const auto ob = static_cast<std::size_t>(std::upper_bound(nb.begin(), nb.end(), b) - nb.begin());
      intersect_sorted(na.subspan(oa), nb.subspan(ob), [&](std::size_t i, std::size_t j) {
        ++tri[ea[p]];
        ++tri[ea[oa + i]];
        ++tri[eb[ob + j]];
      });
    }
  }
  return tri;
}

NucleusEdgeResult nucleus23_decompose(const ProjectedGraph& gp) {
  const std::size_t m = gp.edge_count();
  NucleusEdgeResult out;
  out.triangle_count_initial = count_edge_triangles(gp);
  out.kappa.assign(m, 0);
  out.peel_order.reserve(m);

  BucketQueue<Count> queue(m);
  for (EdgeId e = 0; e < m; ++e) queue.push(e, out.triangle_count_initial[e]);
  Count level = 0;
  while (!queue.empty()) {
    const auto [e, current] = queue.pop();
    if (current < level) throw std::logic_error("triangle peeling went below the current level");
    level = current;
    out.kappa[e] = current;
    out.peel_order.push_back(e);
    const VertexId a = gp.edge_a(e);
    const VertexId b = gp.edge_b(e);
    const auto ea = gp.edge_ids(a);
    const auto eb = gp.edge_ids(b);
    intersect_sorted(gp.neighbors(a), gp.neighbors(b), [&](std::size_t i, std::size_t j) {
      const EdgeId ac = ea[i];
      const EdgeId bc = eb[j];
      if (!queue.contains(ac) || !queue.contains(bc)) return;
      for (EdgeId f : {ac, bc}) {
        const Count kf = queue.key(f);
        if (kf > current) queue.decrease(f, kf - 1);
      }
    });
  }
  return out;
}

namespace {

template <class Active, class Link>
void for_each_triangle_neighbor(const ProjectedGraph& gp, EdgeId e, const Active& active,
                                Link&& link) {
  const VertexId a = gp.edge_a(e);
  const VertexId b = gp.edge_b(e);
  const auto ea = gp.edge_ids(a);
  const auto eb = gp.edge_ids(b);
  intersect_sorted(gp.neighbors(a), gp.neighbors(b), [&](std::size_t i, std::size_t j) {
    if (active(ea[i]) && active(eb[j])) {
      link(ea[i]);
      link(eb[j]);
    }
  });
}

template <class Id, class Active, class Neighbors>
std::vector<std::vector<Id>> connected_classes(std::size_t n, const Active& active,
                                               Neighbors&& neighbors) {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Id>> classes;
  for (Id start = 0; start < n; ++start) {
    if (!active(start) || seen[start]) continue;
    std::vector<Id> cls{start};
    seen[start] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      neighbors(cls[head], [&](Id x) {
        if (!seen[x]) {
          seen[x] = true;
          cls.push_back(x);
        }
      });
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

std::vector<std::vector<EdgeId>> extract_k_nuclei23(const ProjectedGraph& gp,
                                                    const NucleusEdgeResult& result, Count k) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  const auto active = [&](EdgeId f) { return result.kappa[f] >= k; };
  return connected_classes<EdgeId>(gp.edge_count(), active, [&](EdgeId e, auto&& visit) {
    for_each_triangle_neighbor(gp, e, active, visit);
  });
}

std::vector<std::vector<VertexId>> extract_k_cores(const ProjectedGraph& gp,
                                                   const CoreResult& result, double k) {
  if (!(k > 0)) throw ArgumentError("k must be positive");
  const auto active = [&](VertexId x) { return result.core[x] >= k; };
  return connected_classes<VertexId>(gp.vertex_count(), active, [&](VertexId x, auto&& visit) {
    for (VertexId y : gp.neighbors(x)) {
      if (active(y)) visit(y);
    }
  });
}

std::vector<VertexId> projected_edge_endpoints(const ProjectedGraph& gp,
                                               std::span<const EdgeId> edges) {
  std::vector<VertexId> out;
  out.reserve(2 * edges.size());
  for (EdgeId e : edges) {
    out.push_back(gp.edge_a(e));
    out.push_back(gp.edge_b(e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NucleusTree build_core_hierarchy(const BipartiteGraph& g, const ProjectedGraph& gp,
                                 const CoreResult& result, NucleusKind kind) {
  if (result.core.size() != gp.vertex_count() || gp.vertex_count() != g.u_count()) {
    throw ArgumentError("core result does not match graph");
  }
  auto tree = detail::sweep_hierarchy<double>(
      kind, result.core, [&](std::uint32_t x, const auto& active, auto&& link) {
        for (VertexId y : gp.neighbors(x)) {
          if (active(y)) link(y);
        }
      });
  detail::ProfileScratch scratch(g);
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    tree.nodes[id].profile = scratch.vertices(tree.members(id));
  }
  return tree;
}

NucleusTree build_nucleus23_hierarchy(const BipartiteGraph& g, const ProjectedGraph& gp,
                                      const NucleusEdgeResult& result) {
  if (result.kappa.size() != gp.edge_count() || gp.vertex_count() != g.u_count()) {
    throw ArgumentError("nucleus result does not match graph");
  }
  auto tree = detail::sweep_hierarchy<Count>(
      NucleusKind::Nucleus23, result.kappa,
      [&](std::uint32_t e, const auto& active, auto&& link) {
        for_each_triangle_neighbor(gp, e, active, link);
      });
  detail::ProfileScratch scratch(g);
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    tree.nodes[id].profile = scratch.vertices(projected_edge_endpoints(gp, tree.members(id)));
  }
  return tree;
}

SubgraphProfile induced_bipartite_from_projection_node(const BipartiteGraph& g,
                                                       std::span<const VertexId> u_set) {
  const auto sub = induced_subgraph(g, u_set);
  SubgraphProfile p;
  p.u_size = sub.u_count();
  p.v_size = sub.v_count();
  p.edges = sub.edge_count();
  const double cells = static_cast<double>(p.u_size) * static_cast<double>(p.v_size);
  p.density = cells > 0 ? static_cast<double>(p.edges) / cells : 0.0;
  return p;
}

}  // namespace bpeel

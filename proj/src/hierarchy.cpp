#include "bpeel/hierarchy.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "bpeel/errors.hpp"
#include "bpeel/hierarchy_sweep.hpp"
#include "bpeel/intersect.hpp"

namespace bpeel {

std::string_view to_string(NucleusKind kind) {
  switch (kind) {
    case NucleusKind::Tip: return "tip";
    case NucleusKind::Wing: return "wing";
    case NucleusKind::Core: return "core";
    case NucleusKind::FracCore: return "frac-core";
    case NucleusKind::Nucleus23: return "nucleus23";
  }
  return "unknown";
}

std::vector<std::uint32_t> NucleusTree::members(std::size_t node) const {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> stack{node};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const auto& n = nodes.at(id);
    out.insert(out.end(), n.own.begin(), n.own.end());
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> NucleusTree::level_nodes(double k) const {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const auto& n = nodes[id];
    if (n.k < k) continue;
    if (n.parent == kNoNode || nodes[n.parent].k < k) out.push_back(id);
  }
  return out;
}

namespace {

template <class Id>
void order_classes(std::vector<std::vector<Id>>& classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

/// Calls link(o) for every edge o that shares a butterfly with e in which all
/// four edges are active.
template <class Active, class Link>
void for_each_butterfly_neighbor(const BipartiteGraph& g, EdgeId e, const Active& active,
                                 Link&& link) {
  const VertexId u = g.edge_u(e);
  const VertexId v = g.edge_v(e);
  const auto nu = g.neighbors_u(u);
  const EdgeId base_u = g.edge_begin(u);
  const auto vn = g.neighbors_v(v);
  const auto ve = g.edges_v(v);
  for (std::size_t k = 0; k < vn.size(); ++k) {
    const VertexId w = vn[k];
    if (w == u || !active(ve[k])) continue;
    const EdgeId base_w = g.edge_begin(w);
    intersect_sorted(nu, g.neighbors_u(w), [&](std::size_t i, std::size_t j) {
      if (nu[i] == v) return;
      const EdgeId uv2 = base_u + static_cast<EdgeId>(i);
      const EdgeId wv2 = base_w + static_cast<EdgeId>(j);
      if (!active(uv2) || !active(wv2)) return;
      link(ve[k]);
      link(uv2);
      link(wv2);
    });
  }
}

}  // namespace

std::vector<std::vector<VertexId>> extract_k_tips(const BipartiteGraph& g, const TipResult& tip,
                                                  Count k) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  const std::size_t n = g.u_count();
  const auto active = [&](VertexId x) { return tip.theta[x] >= k; };
  std::vector<bool> seen(n, false);
  WedgeCounter wedges(n);
  std::vector<std::vector<VertexId>> classes;
  for (VertexId start = 0; start < n; ++start) {
    if (!active(start) || seen[start]) continue;
    std::vector<VertexId> cls{start};
    seen[start] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      wedges.for_each_partner(g, cls[head], active, [&](VertexId x, Count common) {
        if (common >= 2 && !seen[x]) {
          seen[x] = true;
          cls.push_back(x);
        }
      });
    }
    classes.push_back(std::move(cls));
  }
  order_classes(classes);
  return classes;
}

std::vector<std::vector<EdgeId>> extract_k_wings(const BipartiteGraph& g, const WingResult& wing,
                                                 Count k) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  const std::size_t m = g.edge_count();
  const auto active = [&](EdgeId f) { return wing.psi[f] >= k; };
  std::vector<bool> seen(m, false);
  std::vector<std::vector<EdgeId>> classes;
  for (EdgeId start = 0; start < m; ++start) {
    if (!active(start) || seen[start]) continue;
    std::vector<EdgeId> cls{start};
    seen[start] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for_each_butterfly_neighbor(g, cls[head], active, [&](EdgeId f) {
        if (!seen[f]) {
          seen[f] = true;
          cls.push_back(f);
        }
      });
    }
    // an active edge always lies in a butterfly of active edges, so no
    // class is a lone edge
    classes.push_back(std::move(cls));
  }
  order_classes(classes);
  return classes;
}

SubgraphProfile vertex_set_profile(const BipartiteGraph& g, std::span<const VertexId> u_set) {
  detail::ProfileScratch scratch(g);
  return scratch.vertices(u_set);
}

SubgraphProfile edge_set_profile(const BipartiteGraph& g, std::span<const EdgeId> edges) {
  detail::ProfileScratch scratch(g);
  return scratch.edges(edges);
}

NucleusTree build_hierarchy(const BipartiteGraph& g, const TipResult& tip) {
  if (tip.theta.size() != g.u_count()) throw ArgumentError("tip result does not match graph");
  WedgeCounter wedges(g.u_count());
  auto tree = detail::sweep_hierarchy<Count>(
      NucleusKind::Tip, tip.theta, [&](std::uint32_t u, const auto& active, auto&& link) {
        wedges.for_each_partner(g, u, active, [&](VertexId x, Count common) {
          if (common >= 2) link(x);
        });
      });
  detail::ProfileScratch scratch(g);
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    tree.nodes[id].profile = scratch.vertices(tree.members(id));
  }
  return tree;
}

NucleusTree build_hierarchy(const BipartiteGraph& g, const WingResult& wing) {
  if (wing.psi.size() != g.edge_count()) throw ArgumentError("wing result does not match graph");
  auto tree = detail::sweep_hierarchy<Count>(
      NucleusKind::Wing, wing.psi, [&](std::uint32_t e, const auto& active, auto&& link) {
        for_each_butterfly_neighbor(g, e, active, link);
      });
  detail::ProfileScratch scratch(g);
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    tree.nodes[id].profile = scratch.edges(tree.members(id));
  }
  return tree;
}

std::vector<ProfileRecord> subgraph_profiles(const NucleusTree& tree) {
  std::vector<ProfileRecord> out;
  out.reserve(tree.nodes.size());
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    const auto& n = tree.nodes[id];
    out.push_back({id, n.parent, tree.kind, n.k, n.profile});
  }
  return out;
}

void write_profile_csv(std::ostream& out, std::span<const ProfileRecord> records,
                       const ProfileFilter& filter) {
  out << "node_id,parent_id,kind,k,u_size,v_size,edges,density\n";
  char buf[64];
  for (const auto& r : records) {
    if (!filter.accepts(r)) continue;
    out << r.node_id << ',';
    if (r.parent_id == kNoNode) {
      out << "-1";
    } else {
      out << r.parent_id;
    }
    out << ',' << to_string(r.kind) << ',';
    if (r.kind == NucleusKind::FracCore) {
      std::snprintf(buf, sizeof buf, "%.6f", r.k);
    } else {
      std::snprintf(buf, sizeof buf, "%.0f", r.k);
    }
    out << buf << ',' << r.profile.u_size << ',' << r.profile.v_size << ',' << r.profile.edges
        << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.profile.density);
    out << buf << '\n';
  }
}

}  // namespace bpeel

#include "bpeel/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <new>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "bpeel/errors.hpp"

namespace bpeel {

BipartiteGraph BipartiteGraph::from_edges(std::size_t u_count, std::size_t v_count,
                                          std::vector<std::pair<VertexId, VertexId>> edges,
                                          std::vector<std::string> labels_u,
                                          std::vector<std::string> labels_v) {
  for (const auto& [u, v] : edges) {
    if (u >= u_count || v >= v_count) throw ArgumentError("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  BipartiteGraph g;
  g.u_offsets_.assign(u_count + 1, 0);
  g.v_offsets_.assign(v_count + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.u_offsets_[u + 1];
    ++g.v_offsets_[v + 1];
  }
  std::partial_sum(g.u_offsets_.begin(), g.u_offsets_.end(), g.u_offsets_.begin());
  std::partial_sum(g.v_offsets_.begin(), g.v_offsets_.end(), g.v_offsets_.begin());

  // edges are sorted (u, v), so the U-major layout is the edge order itself
  g.u_adj_.resize(edges.size());
  g.edge_u_.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    g.edge_u_[e] = edges[e].first;
    g.u_adj_[e] = edges[e].second;
  }
  g.v_adj_.resize(edges.size());
  g.v_edge_.resize(edges.size());
  std::vector<std::size_t> cursor(g.v_offsets_.begin(), g.v_offsets_.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    g.v_adj_[cursor[v]] = u;
    g.v_edge_[cursor[v]] = static_cast<EdgeId>(e);
    ++cursor[v];
  }

  if (labels_u.empty()) {
    labels_u.resize(u_count);
    for (std::size_t i = 0; i < u_count; ++i) labels_u[i] = std::to_string(i);
  }
  if (labels_v.empty()) {
    labels_v.resize(v_count);
    for (std::size_t i = 0; i < v_count; ++i) labels_v[i] = std::to_string(i);
  }
  if (labels_u.size() != u_count || labels_v.size() != v_count) {
    throw ArgumentError("label count does not match vertex count");
  }
  g.labels_u_ = std::move(labels_u);
  g.labels_v_ = std::move(labels_v);
  return g;
}

EdgeId BipartiteGraph::find_edge(VertexId u, VertexId v) const {
  const auto nbrs = neighbors_u(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return kNoEdge;
  return edge_begin(u) + static_cast<EdgeId>(it - nbrs.begin());
}

namespace {

class LabelInterner {
 public:
  VertexId intern(const std::string& token) {
    auto [it, inserted] = ids_.try_emplace(token, static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.push_back(token);
    return it->second;
  }
  std::vector<std::string> take() { return std::move(labels_); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
};

}  // namespace

BipartiteGraph load_bipartite(std::istream& in, Side primary_side, LoadStats* stats) {
  LoadStats local;
  LabelInterner left, right;
  std::vector<std::pair<VertexId, VertexId>> edges;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      ++local.comment_lines;
      continue;
    }
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a >> b) || (tokens >> extra)) {
      throw ParseError(line_no, "expected exactly two tokens");
    }
    ++local.edge_lines;
    edges.emplace_back(left.intern(a), right.intern(b));
  }
  local.lines = line_no;
  if (in.bad()) throw Error("read failure after line " + std::to_string(line_no));
  if (edges.empty()) throw EmptyGraphError();

  const std::size_t raw = edges.size();
  if (primary_side == Side::Right) {
    for (auto& [a, b] : edges) std::swap(a, b);
    std::swap(left, right);
  }
  const std::size_t u_count = left.size();
  const std::size_t v_count = right.size();
  auto g = BipartiteGraph::from_edges(u_count, v_count, std::move(edges), left.take(),
                                      right.take());
  local.duplicate_edges = raw - g.edge_count();
  if (stats) *stats = local;
  return g;
}

BipartiteGraph load_bipartite_file(const std::string& path, Side primary_side,
                                   LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_bipartite(in, primary_side, stats);
}

void write_edge_list(std::ostream& out, const BipartiteGraph& g) {
  // Emit one introducing edge per vertex so that first appearances follow
  // internal id order on both sides, then everything else in U-major order.
  std::vector<bool> written(g.edge_count(), false);
  const auto emit = [&](EdgeId e) {
    written[e] = true;
    out << g.label_u(g.edge_u(e)) << ' ' << g.label_v(g.edge_v(e)) << '\n';
  };

  VertexId next_u = 0, next_v = 0;
  const auto skip_isolated = [&] {
    while (next_u < g.u_count() && g.degree_u(next_u) == 0) ++next_u;
    while (next_v < g.v_count() && g.degree_v(next_v) == 0) ++next_v;
  };
  skip_isolated();
  while (next_u < g.u_count() || next_v < g.v_count()) {
    if (next_u < g.u_count() && g.neighbors_u(next_u).front() < next_v) {
      emit(g.edge_begin(next_u));
      ++next_u;
    } else if (next_v < g.v_count() && g.neighbors_v(next_v).front() < next_u) {
      emit(g.edges_v(next_v).front());
      ++next_v;
    } else {
      // Both vertices are new; a valid first-appearance order guarantees the
      // edge between them exists.
      const EdgeId e = g.find_edge(next_u, next_v);
      if (e == kNoEdge) throw Error("graph ids are not in first-appearance order");
      emit(e);
      ++next_u;
      ++next_v;
    }
    skip_isolated();
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!written[e]) emit(e);
  }
}

void write_label_map(std::ostream& out, const BipartiteGraph& g, bool primary) {
  const auto& labels = primary ? g.labels_u() : g.labels_v();
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << '\t' << labels[i] << '\n';
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, std::span<const VertexId> u_set) {
  std::vector<VertexId> kept(u_set.begin(), u_set.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (VertexId u : kept) {
    if (u >= g.u_count()) throw ArgumentError("primary vertex out of range");
  }

  std::vector<VertexId> v_map(g.v_count(), kNoVertex);
  std::vector<VertexId> v_kept;
  for (VertexId u : kept) {
    for (VertexId v : g.neighbors_u(u)) {
      if (v_map[v] == kNoVertex) {
        v_map[v] = 0;
        v_kept.push_back(v);
      }
    }
  }
  std::sort(v_kept.begin(), v_kept.end());
  for (std::size_t i = 0; i < v_kept.size(); ++i) v_map[v_kept[i]] = static_cast<VertexId>(i);

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> labels_u, labels_v;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    labels_u.push_back(g.label_u(kept[i]));
    for (VertexId v : g.neighbors_u(kept[i])) edges.emplace_back(static_cast<VertexId>(i), v_map[v]);
  }
  for (VertexId v : v_kept) labels_v.push_back(g.label_v(v));
  return BipartiteGraph::from_edges(kept.size(), v_kept.size(), std::move(edges),
                                    std::move(labels_u), std::move(labels_v));
}

ProjectedGraph ProjectedGraph::from_edges(std::size_t vertex_count,
                                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                                          const std::vector<double>& weights) {
  if (!weights.empty() && weights.size() != edges.size()) {
    throw ArgumentError("weights must align with edges");
  }
  struct Half {
    VertexId from, to;
    EdgeId id;
  };
  std::vector<std::pair<VertexId, VertexId>> canon;
  canon.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw ArgumentError("self loop in projected graph");
    if (a >= vertex_count || b >= vertex_count) throw ArgumentError("vertex out of range");
    canon.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<std::size_t> order(canon.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return canon[x] < canon[y]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (canon[order[i]] == canon[order[i - 1]]) throw ArgumentError("duplicate projected edge");
  }

  ProjectedGraph gp;
  gp.edge_a_.resize(canon.size());
  gp.edge_b_.resize(canon.size());
  if (!weights.empty()) gp.edge_weight_.resize(canon.size());
  std::vector<Half> halves;
  halves.reserve(2 * canon.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [a, b] = canon[order[i]];
    const auto id = static_cast<EdgeId>(i);
    gp.edge_a_[id] = a;
    gp.edge_b_[id] = b;
    if (!weights.empty()) gp.edge_weight_[id] = weights[order[i]];
    halves.push_back({a, b, id});
    halves.push_back({b, a, id});
  }
  std::sort(halves.begin(), halves.end(),
            [](const Half& x, const Half& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
  gp.offsets_.assign(vertex_count + 1, 0);
  for (const auto& h : halves) ++gp.offsets_[h.from + 1];
  std::partial_sum(gp.offsets_.begin(), gp.offsets_.end(), gp.offsets_.begin());
  gp.adj_.reserve(halves.size());
  gp.adj_edge_.reserve(halves.size());
  for (const auto& h : halves) {
    gp.adj_.push_back(h.to);
    gp.adj_edge_.push_back(h.id);
    if (!weights.empty()) gp.weights_.push_back(gp.edge_weight_[h.id]);
  }
  return gp;
}

double ProjectedGraph::edge_weight(EdgeId e) const {
  return edge_weight_.empty() ? 1.0 : edge_weight_[e];
}

namespace detail {

ProjectedGraph build_projection(const BipartiteGraph& g, bool weighted) {
  const std::size_t n = g.u_count();
  ProjectedGraph gp;
  try {
    gp.offsets_.assign(n + 1, 0);
    std::vector<VertexId> seen(n, kNoVertex);
    std::vector<double> acc(weighted ? n : 0, 0.0);
    std::vector<VertexId> found;
    std::vector<std::size_t> perm;

    for (VertexId src = 0; src < n; ++src) {
      found.clear();
      for (VertexId v : g.neighbors_u(src)) {
        const double share = weighted ? 1.0 / static_cast<double>(g.degree_v(v)) : 0.0;
        for (VertexId dst : g.neighbors_v(v)) {
          if (dst == src) continue;
          if (seen[dst] != src) {
            seen[dst] = src;
            found.push_back(dst);
            if (weighted) acc[dst] = 0.0;
          }
          if (weighted) acc[dst] += share;
        }
      }
      std::sort(found.begin(), found.end());
      gp.offsets_[src + 1] = gp.offsets_[src] + found.size();
      for (VertexId dst : found) {
        gp.adj_.push_back(dst);
        if (weighted) gp.weights_.push_back(acc[dst]);
      }
    }

    // One id per undirected edge, numbered by (smaller, larger) endpoint.
    gp.adj_edge_.assign(gp.adj_.size(), kNoEdge);
    for (VertexId a = 0; a < n; ++a) {
      for (std::size_t i = gp.offsets_[a]; i < gp.offsets_[a + 1]; ++i) {
        const VertexId b = gp.adj_[i];
        if (b < a) continue;
        const auto id = static_cast<EdgeId>(gp.edge_a_.size());
        gp.edge_a_.push_back(a);
        gp.edge_b_.push_back(b);
        if (weighted) gp.edge_weight_.push_back(gp.weights_[i]);
        gp.adj_edge_[i] = id;
      }
    }
    for (VertexId b = 0; b < n; ++b) {
      for (std::size_t i = gp.offsets_[b]; i < gp.offsets_[b + 1]; ++i) {
        const VertexId a = gp.adj_[i];
        if (a >= b) continue;
        // locate b in a's list, which already carries the id
        const auto first = gp.adj_.begin() + static_cast<std::ptrdiff_t>(gp.offsets_[a]);
        const auto last = gp.adj_.begin() + static_cast<std::ptrdiff_t>(gp.offsets_[a + 1]);
        const auto it = std::lower_bound(first, last, b);
        gp.adj_edge_[i] = gp.adj_edge_[static_cast<std::size_t>(it - gp.adj_.begin())];
      }
    }
  } catch (const std::bad_alloc&) {
    throw ResourceError("out of memory while building the projection");
  }
  return gp;
}

}  // namespace detail

ProjectedGraph project_unweighted(const BipartiteGraph& g) {
  return detail::build_projection(g, false);
}

ProjectedGraph project_weighted(const BipartiteGraph& g) {
  return detail::build_projection(g, true);
}

std::uint64_t count_triangles(const ProjectedGraph& gp) {
  std::uint64_t total = 0;
  for (VertexId a = 0; a < gp.vertex_count(); ++a) {
    const auto na = gp.neighbors(a);
    for (VertexId b : na) {
      if (b <= a) continue;
      const auto nb = gp.neighbors(b);
      // count c > b in both lists
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          ++total;
          ++ia;
          ++ib;
        }
      }
    }
  }
  return total;
}

}  // namespace bpeel

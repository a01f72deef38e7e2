#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bpeel {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/// Which column of an edge list holds the primary (U) vertices.
enum class Side { Left, Right };

struct LoadStats {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t edge_lines = 0;
  std::size_t duplicate_edges = 0;
};

/// Immutable bipartite graph G = (U, V, E) in CSR form.
///
/// Both adjacency directions are kept sorted by internal id. Edge ids are
/// positions in the U-major adjacency, so the edge (u, neighbors_u(u)[i]) has
/// id `edge_begin(u) + i`. The V-major adjacency carries the matching edge id
/// for every slot.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds from (u, v) pairs; duplicates are collapsed. Vertices without
  /// edges are kept with empty adjacency. Label vectors may be empty, in
  /// which case labels default to the decimal internal id.
  static BipartiteGraph from_edges(std::size_t u_count, std::size_t v_count,
                                   std::vector<std::pair<VertexId, VertexId>> edges,
                                   std::vector<std::string> labels_u = {},
                                   std::vector<std::string> labels_v = {});

  std::size_t u_count() const noexcept { return u_offsets_.empty() ? 0 : u_offsets_.size() - 1; }
  std::size_t v_count() const noexcept { return v_offsets_.empty() ? 0 : v_offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return u_adj_.size(); }

  std::span<const VertexId> neighbors_u(VertexId u) const {
    return {u_adj_.data() + u_offsets_[u], u_adj_.data() + u_offsets_[u + 1]};
  }
  std::span<const VertexId> neighbors_v(VertexId v) const {
    return {v_adj_.data() + v_offsets_[v], v_adj_.data() + v_offsets_[v + 1]};
  }
  /// Edge ids aligned with neighbors_v(v).
  std::span<const EdgeId> edges_v(VertexId v) const {
    return {v_edge_.data() + v_offsets_[v], v_edge_.data() + v_offsets_[v + 1]};
  }

  std::size_t degree_u(VertexId u) const { return u_offsets_[u + 1] - u_offsets_[u]; }
  std::size_t degree_v(VertexId v) const { return v_offsets_[v + 1] - v_offsets_[v]; }

  EdgeId edge_begin(VertexId u) const { return static_cast<EdgeId>(u_offsets_[u]); }
  VertexId edge_u(EdgeId e) const { return edge_u_[e]; }
  VertexId edge_v(EdgeId e) const { return u_adj_[e]; }

  /// Id of edge (u, v), or -1 cast to EdgeId when absent. O(log d(u)).
  EdgeId find_edge(VertexId u, VertexId v) const;

  const std::string& label_u(VertexId u) const { return labels_u_[u]; }
  const std::string& label_v(VertexId v) const { return labels_v_[v]; }
  const std::vector<std::string>& labels_u() const noexcept { return labels_u_; }
  const std::vector<std::string>& labels_v() const noexcept { return labels_v_; }

  bool operator==(const BipartiteGraph&) const = default;

 private:
  std::vector<std::size_t> u_offsets_;
  std::vector<VertexId> u_adj_;
  std::vector<VertexId> edge_u_;
  std::vector<std::size_t> v_offsets_;
  std::vector<VertexId> v_adj_;
  std::vector<EdgeId> v_edge_;
  std::vector<std::string> labels_u_;
  std::vector<std::string> labels_v_;
};

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Reads a whitespace separated "tokenA tokenB" edge list. Lines starting
/// with '#' (after leading blanks) and blank lines are skipped. Internal ids
/// follow first appearance per side.
///
/// Throws ParseError on a line without exactly two tokens and
/// EmptyGraphError when no edge was read.
BipartiteGraph load_bipartite(std::istream& in, Side primary_side = Side::Left,
                              LoadStats* stats = nullptr);
BipartiteGraph load_bipartite_file(const std::string& path, Side primary_side = Side::Left,
                                   LoadStats* stats = nullptr);

/// Writes "labelU labelV" lines ordered so that reloading with Side::Left
/// assigns the same internal ids. Vertices without edges are not written.
void write_edge_list(std::ostream& out, const BipartiteGraph& g);

/// Sidecar "internal_id<TAB>label" map for one side.
void write_label_map(std::ostream& out, const BipartiteGraph& g, bool primary);

/// Induced subgraph on a set of primary vertices: V' is the union of their
/// neighborhoods and E' all of their edges. Kept vertices are renumbered in
/// ascending original id on both sides; labels are carried over.
BipartiteGraph induced_subgraph(const BipartiteGraph& g, std::span<const VertexId> u_set);

class ProjectedGraph;
namespace detail {
ProjectedGraph build_projection(const BipartiteGraph& g, bool weighted);
}

/// Unipartite simple graph on the primary vertices. Each undirected edge has
/// one id; `edge_ids(x)` is aligned with `neighbors(x)`.
class ProjectedGraph {
 public:
  ProjectedGraph() = default;

  /// Undirected edges given once each, in any order, without loops or
  /// duplicates. `weights` is empty or aligned with `edges`.
  static ProjectedGraph from_edges(std::size_t vertex_count,
                                   const std::vector<std::pair<VertexId, VertexId>>& edges,
                                   const std::vector<double>& weights = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edge_a_.size(); }
  bool weighted() const noexcept { return !weights_.empty(); }

  std::span<const VertexId> neighbors(VertexId x) const {
    return {adj_.data() + offsets_[x], adj_.data() + offsets_[x + 1]};
  }
  std::span<const EdgeId> edge_ids(VertexId x) const {
    return {adj_edge_.data() + offsets_[x], adj_edge_.data() + offsets_[x + 1]};
  }
  /// Weights aligned with neighbors(x); empty span when unweighted.
  std::span<const double> weights(VertexId x) const {
    if (weights_.empty()) return {};
    return {weights_.data() + offsets_[x], weights_.data() + offsets_[x + 1]};
  }
  std::size_t degree(VertexId x) const { return offsets_[x + 1] - offsets_[x]; }

  /// Endpoints of an edge, smaller id first.
  VertexId edge_a(EdgeId e) const { return edge_a_[e]; }
  VertexId edge_b(EdgeId e) const { return edge_b_[e]; }
  double edge_weight(EdgeId e) const;

 private:
  friend ProjectedGraph detail::build_projection(const BipartiteGraph&, bool);

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adj_;
  std::vector<EdgeId> adj_edge_;
  std::vector<double> weights_;
  std::vector<VertexId> edge_a_;
  std::vector<VertexId> edge_b_;
  std::vector<double> edge_weight_;
};

/// (u1, u2) adjacent iff N(u1) and N(u2) intersect.
ProjectedGraph project_unweighted(const BipartiteGraph& g);

/// Same edges as project_unweighted, weighted by the sum of 1/|N(v)| over
/// shared secondary vertices v.
ProjectedGraph project_weighted(const BipartiteGraph& g);

/// Number of triangles in a projected graph.
std::uint64_t count_triangles(const ProjectedGraph& gp);

}  // namespace bpeel

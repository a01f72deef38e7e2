#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "bpeel/graph.hpp"
#include "bpeel/tip.hpp"
#include "bpeel/wing.hpp"

namespace bpeel {

enum class NucleusKind { Tip, Wing, Core, FracCore, Nucleus23 };

std::string_view to_string(NucleusKind kind);

/// Size and density of a bipartite subgraph; density = |E| / (|U|·|V|).
struct SubgraphProfile {
  std::size_t u_size = 0;
  std::size_t v_size = 0;
  std::size_t edges = 0;
  double density = 0.0;
  bool operator==(const SubgraphProfile&) const = default;
};

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

/// One maximal subgraph of the hierarchy. Member entities are primary
/// vertices (tip, core, fractional core), bipartite edges (wing) or
/// projected edges ((2,3)-nucleus). `own` holds the entities whose deepest
/// containing node is this one; the full member set adds all descendants.
struct NucleusNode {
  double k = 0;
  std::size_t parent = kNoNode;
  std::vector<std::size_t> children;
  std::vector<std::uint32_t> own;
  SubgraphProfile profile;
};

/// Forest of nested maximal subgraphs. Children always have a larger k than
/// their parent and are created before it, so node ids grow toward roots.
class NucleusTree {
 public:
  NucleusKind kind = NucleusKind::Tip;
  std::vector<NucleusNode> nodes;
  std::vector<std::size_t> roots;

  /// Full member set of a node, ascending.
  std::vector<std::uint32_t> members(std::size_t node) const;

  /// Nodes that represent the maximal subgraphs at threshold k: k_node ≥ k
  /// and the parent, if any, below k.
  std::vector<std::size_t> level_nodes(double k) const;
};

/// Butterfly-connected classes of primary vertices with θ ≥ k. Two vertices
/// are adjacent when they share at least two secondary neighbors. Each class
/// is sorted; classes are ordered by their smallest member.
/// Throws ArgumentError for k < 1.
std::vector<std::vector<VertexId>> extract_k_tips(const BipartiteGraph& g, const TipResult& tip,
                                                  Count k);

/// Butterfly-connected classes of edges with ψ ≥ k, where two edges are
/// adjacent when some butterfly made only of such edges contains both.
std::vector<std::vector<EdgeId>> extract_k_wings(const BipartiteGraph& g, const WingResult& wing,
                                                 Count k);

/// Hierarchy of k-tips (k-wings) by a union-find sweep over decreasing
/// values. Entities with value 0 are left out. Profiles are filled in.
NucleusTree build_hierarchy(const BipartiteGraph& g, const TipResult& tip);
NucleusTree build_hierarchy(const BipartiteGraph& g, const WingResult& wing);

/// Profile of the subgraph induced by a set of primary vertices.
SubgraphProfile vertex_set_profile(const BipartiteGraph& g, std::span<const VertexId> u_set);

/// Profile of an edge set: its distinct endpoints on each side.
SubgraphProfile edge_set_profile(const BipartiteGraph& g, std::span<const EdgeId> edges);

struct ProfileRecord {
  std::size_t node_id = 0;
  std::size_t parent_id = kNoNode;
  NucleusKind kind = NucleusKind::Tip;
  double k = 0;
  SubgraphProfile profile;
};

std::vector<ProfileRecord> subgraph_profiles(const NucleusTree& tree);

struct ProfileFilter {
  double min_density = 0.0;
  std::size_t min_u = 0;
  std::size_t min_v = 0;
  bool accepts(const ProfileRecord& r) const {
    return r.profile.density >= min_density && r.profile.u_size >= min_u &&
           r.profile.v_size >= min_v;
  }
};

/// CSV with header node_id,parent_id,kind,k,u_size,v_size,edges,density.
/// A missing parent is written as -1, density with six decimals, and k as
/// an integer except for fractional cores.
void write_profile_csv(std::ostream& out, std::span<const ProfileRecord> records,
                       const ProfileFilter& filter = {});

}  // namespace bpeel

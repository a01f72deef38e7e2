#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "bpeel/hierarchy.hpp"

namespace bpeel::detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns {winner, loser} roots, or {root, root} when already joined.
  std::pair<std::uint32_t, std::uint32_t> unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return {a, a};
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return {a, b};
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

/// Builds the nesting forest from per-entity values.
///
/// Entities are activated level by level in decreasing value. After a level
/// is activated, `visit(e, active, link)` is called for each new entity e and
/// must call link(o) for every active o that shares a motif (butterfly,
/// triangle, edge) with e in which all members are active. Every component
/// that gained entities at a level becomes a node whose children are the
/// nodes it absorbed. Entities with value <= 0 are skipped.
template <class Value, class Visit>
NucleusTree sweep_hierarchy(NucleusKind kind, std::span<const Value> values, Visit&& visit) {
  const std::size_t n = values.size();
  std::vector<std::uint32_t> order;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (values[e] > Value{0}) order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return values[a] > values[b]; });

  NucleusTree tree;
  tree.kind = kind;
  DisjointSets sets(n);
  std::vector<bool> active(n, false);
  // nodes currently describing each component, indexed by root
  std::vector<std::vector<std::size_t>> pending(n);
  std::vector<std::size_t> level_node(n, kNoNode);

  const auto is_active = [&](std::uint32_t x) { return static_cast<bool>(active[x]); };

  std::size_t begin = 0;
  while (begin < order.size()) {
    const Value level = values[order[begin]];
    std::size_t end = begin;
    while (end < order.size() && values[order[end]] == level) ++end;
    const std::span<const std::uint32_t> fresh(order.data() + begin, end - begin);

    for (std::uint32_t e : fresh) active[e] = true;
    for (std::uint32_t e : fresh) {
      visit(e, is_active, [&](std::uint32_t other) {
        const auto [winner, loser] = sets.unite(e, other);
        if (winner == loser) return;
        auto& into = pending[winner];
        auto& from = pending[loser];
        if (into.size() < from.size()) std::swap(into, from);
        into.insert(into.end(), from.begin(), from.end());
        from.clear();
        from.shrink_to_fit();
      });
    }

    for (std::uint32_t e : fresh) {
      const std::uint32_t root = sets.find(e);
      if (level_node[root] == kNoNode) {
        const std::size_t id = tree.nodes.size();
        NucleusNode node;
        node.k = static_cast<double>(level);
        node.children = std::move(pending[root]);
        std::sort(node.children.begin(), node.children.end());
        for (std::size_t child : node.children) tree.nodes[child].parent = id;
        tree.nodes.push_back(std::move(node));
        pending[root] = {id};
        level_node[root] = id;
      }
      tree.nodes[level_node[root]].own.push_back(e);
    }
    for (std::uint32_t e : fresh) level_node[sets.find(e)] = kNoNode;
    begin = end;
  }

  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    std::sort(tree.nodes[id].own.begin(), tree.nodes[id].own.end());
    if (tree.nodes[id].parent == kNoNode) tree.roots.push_back(id);
  }
  return tree;
}

/// Reusable marker arrays for profile computations.
class ProfileScratch {
 public:
  explicit ProfileScratch(const BipartiteGraph& g)
      : g_(g), u_stamp_(g.u_count(), 0), v_stamp_(g.v_count(), 0) {}

  SubgraphProfile vertices(std::span<const VertexId> u_set) {
    ++stamp_;
    SubgraphProfile p;
    for (VertexId u : u_set) {
      if (u_stamp_[u] == stamp_) continue;
      u_stamp_[u] = stamp_;
      ++p.u_size;
      for (VertexId v : g_.neighbors_u(u)) {
        ++p.edges;
        if (v_stamp_[v] != stamp_) {
          v_stamp_[v] = stamp_;
          ++p.v_size;
        }
      }
    }
    finish(p);
    return p;
  }

  SubgraphProfile edges(std::span<const EdgeId> edge_set) {
    ++stamp_;
    SubgraphProfile p;
    p.edges = edge_set.size();
    for (EdgeId e : edge_set) {
      const VertexId u = g_.edge_u(e);
      const VertexId v = g_.edge_v(e);
      if (u_stamp_[u] != stamp_) {
        u_stamp_[u] = stamp_;
        ++p.u_size;
      }
      if (v_stamp_[v] != stamp_) {
        v_stamp_[v] = stamp_;
        ++p.v_size;
      }
    }
    finish(p);
    return p;
  }

 private:
  static void finish(SubgraphProfile& p) {
    const double cells = static_cast<double>(p.u_size) * static_cast<double>(p.v_size);
    p.density = cells > 0 ? static_cast<double>(p.edges) / cells : 0.0;
  }

  const BipartiteGraph& g_;
  std::vector<std::uint64_t> u_stamp_;
  std::vector<std::uint64_t> v_stamp_;
  std::uint64_t stamp_ = 0;
};

}  // namespace bpeel::detail

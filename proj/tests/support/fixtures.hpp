#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bpeel/graph.hpp"

namespace bpeel::testing {

inline BipartiteGraph from_text(const std::string& text, Side side = Side::Left) {
  std::istringstream in(text);
  return load_bipartite(in, side);
}

/// Two 2x3 bicliques (B,C x 1,2,3 and D,E x 4,5,6) joined by C4 and D3, with
/// fringe vertices A (on 1,2) and F (on 5,6).
inline BipartiteGraph t3() {
  return from_text(
      "A 1\nA 2\n"
      "B 1\nB 2\nB 3\n"
      "C 1\nC 2\nC 3\nC 4\n"
      "D 3\nD 4\nD 5\nD 6\n"
      "E 4\nE 5\nE 6\n"
      "F 5\nF 6\n");
}

inline BipartiteGraph biclique(std::size_t a, std::size_t b) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < a; ++u) {
    for (VertexId v = 0; v < b; ++v) edges.emplace_back(u, v);
  }
  return BipartiteGraph::from_edges(a, b, std::move(edges));
}

/// Erdos-Renyi style bipartite graph; vertices may end up isolated.
inline BipartiteGraph random_bipartite(std::size_t nu, std::size_t nv, double p,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < nu; ++u) {
    for (VertexId v = 0; v < nv; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return BipartiteGraph::from_edges(nu, nv, std::move(edges));
}

/// Same graph with both sides relabeled by random permutations.
inline BipartiteGraph permuted(const BipartiteGraph& g, std::uint64_t seed,
                               std::vector<VertexId>* u_perm_out = nullptr,
                               std::vector<VertexId>* v_perm_out = nullptr) {
  std::mt19937_64 rng(seed);
  std::vector<VertexId> pu(g.u_count()), pv(g.v_count());
  for (VertexId i = 0; i < pu.size(); ++i) pu[i] = i;
  for (VertexId i = 0; i < pv.size(); ++i) pv[i] = i;
  std::shuffle(pu.begin(), pu.end(), rng);
  std::shuffle(pv.begin(), pv.end(), rng);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < g.u_count(); ++u) {
    for (VertexId v : g.neighbors_u(u)) edges.emplace_back(pu[u], pv[v]);
  }
  if (u_perm_out) *u_perm_out = pu;
  if (v_perm_out) *v_perm_out = pv;
  return BipartiteGraph::from_edges(g.u_count(), g.v_count(), std::move(edges));
}

inline VertexId u_of(const BipartiteGraph& g, const std::string& label) {
  for (VertexId u = 0; u < g.u_count(); ++u) {
    if (g.label_u(u) == label) return u;
  }
  return kNoVertex;
}

inline VertexId v_of(const BipartiteGraph& g, const std::string& label) {
  for (VertexId v = 0; v < g.v_count(); ++v) {
    if (g.label_v(v) == label) return v;
  }
  return kNoVertex;
}

/// Edge id from a two-character name such as "C4".
inline EdgeId edge_of(const BipartiteGraph& g, const std::string& name) {
  return g.find_edge(u_of(g, name.substr(0, 1)), v_of(g, name.substr(1)));
}

inline std::string edge_name(const BipartiteGraph& g, EdgeId e) {
  return g.label_u(g.edge_u(e)) + g.label_v(g.edge_v(e));
}

}  // namespace bpeel::testing

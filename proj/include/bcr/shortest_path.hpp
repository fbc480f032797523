#pragma once

#include <vector>

#include "bcr/graph.hpp"

namespace bcr {

/// Single-source shortest-path tree. `dist` is kUnreachable and `pred` is
/// kNoNode for nodes the search never reached; `pred[source]` is kNoNode.
struct DistanceField {
  NodeId source = 0;
  std::vector<double> dist;
  std::vector<NodeId> pred;

  bool reachable(NodeId v) const { return dist[v] != kUnreachable; }
};

/// Hop counts from a single source; kNoHop for unreachable nodes.
struct HopField {
  NodeId source = 0;
  std::vector<int> hops;

  bool reachable(NodeId v) const { return hops[v] != kNoHop; }
};

/// Dijkstra over the whole graph or, when `within` is given, the subgraph it
/// induces (the source must belong to it). Ties between equal-distance
/// relaxations keep the lower predecessor id, so the tree is deterministic.
DistanceField dijkstra_sssp(const Graph& g, NodeId source, const NodeMask* within = nullptr);

/// Breadth-first hop counts, ignoring edge weights; same scoping rules as
/// dijkstra_sssp.
HopField bfs_hops(const Graph& g, NodeId source, const NodeMask* within = nullptr);

/// Hop eccentricity of every node in scope (the whole graph when `within` is
/// null). The scoped subgraph must be connected; throws Error otherwise.
/// Entries outside the scope are kNoHop.
std::vector<int> eccentricities(const Graph& g, const NodeMask* within = nullptr,
                                int threads = 1);

/// Floyd-Warshall all-pairs distances, intended as an independent test
/// oracle. Unreachable pairs are kUnreachable. Refuses graphs larger than
/// `node_cap`.
std::vector<std::vector<double>> apsp_oracle(const Graph& g, int node_cap = 512);

}  // namespace bcr

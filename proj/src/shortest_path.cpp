#include "bcr/shortest_path.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bcr/kernels.hpp"

namespace bcr {

namespace {

void check_source(const Graph& g, NodeId source, const NodeMask* within) {
  if (source < 0 || source >= g.node_count())
    throw Error("invalid source node " + std::to_string(source));
  if (within) {
    if (static_cast<NodeId>(within->size()) != g.node_count())
      throw Error("restriction mask size does not match node count");
    if (!(*within)[source]) throw Error("source node lies outside the restriction");
  }
}

}  // namespace

DistanceField dijkstra_sssp(const Graph& g, NodeId source, const NodeMask* within) {
  check_source(g, source, within);
  DistanceField f;
  f.source = source;
  f.dist.assign(g.node_count(), kUnreachable);
  f.pred.assign(g.node_count(), kNoNode);
  f.dist[source] = 0.0;

  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > f.dist[u]) continue;  // stale entry
    for (const Neighbor& nb : g.neighbors(u)) {
      if (within && !(*within)[nb.to]) continue;
      double nd = d + nb.w;
      if (nd < f.dist[nb.to]) {
        f.dist[nb.to] = nd;
        f.pred[nb.to] = u;
        heap.push({nd, nb.to});
      } else if (nd == f.dist[nb.to] && u < f.pred[nb.to]) {
        f.pred[nb.to] = u;
      }
    }
  }
  return f;
}

HopField bfs_hops(const Graph& g, NodeId source, const NodeMask* within) {
  check_source(g, source, within);
  HopField f;
  f.source = source;
  f.hops.assign(g.node_count(), kNoHop);
  f.hops[source] = 0;
  std::vector<NodeId> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (const Neighbor& nb : g.neighbors(u)) {
      if (f.hops[nb.to] != kNoHop) continue;
      if (within && !(*within)[nb.to]) continue;
      f.hops[nb.to] = f.hops[u] + 1;
      queue.push_back(nb.to);
    }
  }
  return f;
}

std::vector<int> eccentricities(const Graph& g, const NodeMask* within, int threads) {
  if (within && static_cast<NodeId>(within->size()) != g.node_count())
    throw Error("restriction mask size does not match node count");

  std::vector<NodeId> scope;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!within || (*within)[v]) scope.push_back(v);
  if (scope.empty()) throw Error("eccentricity undefined on empty scope");

  NodeMask mask;
  if (within) {
    mask = *within;
  } else {
    mask.assign(g.node_count(), 1);
  }
  HopField probe = bfs_hops(g, scope.front(), &mask);
  for (NodeId v : scope)
    if (!probe.reachable(v)) throw Error("eccentricity undefined on disconnected scope");

  return kernels::scope_eccentricities(g, scope, mask, threads);
}

std::vector<std::vector<double>> apsp_oracle(const Graph& g, int node_cap) {
  const NodeId n = g.node_count();
  if (n > node_cap)
    throw Error("graph exceeds the all-pairs oracle cap of " + std::to_string(node_cap) +
                " nodes");
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kUnreachable));
  for (NodeId v = 0; v < n; ++v) d[v][v] = 0.0;
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    d[e.v][e.u] = d[e.u][e.v];
  }
  for (NodeId k = 0; k < n; ++k)
    for (NodeId i = 0; i < n; ++i) {
      if (d[i][k] == kUnreachable) continue;
      for (NodeId j = 0; j < n; ++j) {
        if (d[k][j] == kUnreachable) continue;
        double via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  return d;
}

}  // namespace bcr

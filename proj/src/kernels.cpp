#include "bcr/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace bcr::kernels {

namespace {

// Per-thread BFS scratch. `stamp[v] == tag` marks v visited for the current
// source, so no per-source reset is needed.
struct BfsScratch {
  std::vector<int> stamp;
  std::vector<int> hop;
  std::vector<NodeId> queue;

  explicit BfsScratch(NodeId n) : stamp(n, -1), hop(n, 0) { queue.reserve(n); }
};

// Bounded BFS from `source`; visits only nodes within `max_hops` (negative
// means unbounded) and, when `in_scope` is non-null, only nodes inside it.
// Returns the discovery list; hop counts stay valid in `s.hop` until the next
// call.
const std::vector<NodeId>& bounded_bfs(const Graph& g, NodeId source, int max_hops,
                                       const NodeMask* in_scope, int tag, BfsScratch& s) {
  s.queue.clear();
  s.queue.push_back(source);
  s.stamp[source] = tag;
  s.hop[source] = 0;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    NodeId v = s.queue[head];
    int h = s.hop[v];
    if (max_hops >= 0 && h == max_hops) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (s.stamp[nb.to] == tag) continue;
      if (in_scope && !(*in_scope)[nb.to]) continue;
      s.stamp[nb.to] = tag;
      s.hop[nb.to] = h + 1;
      s.queue.push_back(nb.to);
    }
  }
  return s.queue;
}

}  // namespace

std::vector<std::vector<NodeId>> hop_balls_serial(const Graph& g, int radius) {
  const NodeId n = g.node_count();
  std::vector<std::vector<NodeId>> balls(n);
  BfsScratch scratch(n);
  for (NodeId s = 0; s < n; ++s) {
    const auto& reached = bounded_bfs(g, s, radius, nullptr, s, scratch);
    balls[s].assign(reached.begin(), reached.end());
  }
  return balls;
}

std::vector<std::vector<NodeId>> hop_balls(const Graph& g, int radius, int threads) {
  if (threads == 1 || g.node_count() == 0) return hop_balls_serial(g, radius);
  const NodeId n = g.node_count();
  std::vector<std::vector<NodeId>> balls(n);
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team)
  {
    BfsScratch scratch(n);
#pragma omp for schedule(dynamic, 64)
    for (NodeId s = 0; s < n; ++s) {
      const auto& reached = bounded_bfs(g, s, radius, nullptr, s, scratch);
      balls[s].assign(reached.begin(), reached.end());
    }
  }
  return balls;
}

std::vector<int> scope_eccentricities_serial(const Graph& g, std::span<const NodeId> scope,
                                             const NodeMask& in_scope) {
  std::vector<int> ecc(g.node_count(), kNoHop);
  BfsScratch scratch(g.node_count());
  int tag = 0;
  for (NodeId s : scope) {
    const auto& reached = bounded_bfs(g, s, -1, &in_scope, tag++, scratch);
    ecc[s] = scratch.hop[reached.back()];
  }
  return ecc;
}

std::vector<int> scope_eccentricities(const Graph& g, std::span<const NodeId> scope,
                                      const NodeMask& in_scope, int threads) {
  if (threads == 1 || scope.empty()) return scope_eccentricities_serial(g, scope, in_scope);
  std::vector<int> ecc(g.node_count(), kNoHop);
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(scope.size());
#pragma omp parallel num_threads(team)
  {
    BfsScratch scratch(g.node_count());
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      NodeId s = scope[i];
      const auto& reached = bounded_bfs(g, s, -1, &in_scope, static_cast<int>(i), scratch);
      ecc[s] = scratch.hop[reached.back()];
    }
  }
  return ecc;
}

}  // namespace bcr::kernels

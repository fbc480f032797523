#include "bcr/route.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bcr/shortest_path.hpp"

namespace bcr {

const char* to_string(RouteMethod m) {
  return m == RouteMethod::Dijkstra ? "dijkstra" : "bcr";
}

namespace {

void check_endpoint(const Graph& g, NodeId v, const char* what) {
  if (v < 0 || v >= g.node_count())
    throw Error(std::string("invalid ") + what + " node " + std::to_string(v));
}

using HeapItem = std::pair<double, NodeId>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>>;

// Early-exit Dijkstra path s..t with the lower-predecessor-id tie-break.
// Returns an empty vector when t is unreachable.
std::vector<NodeId> flat_path(const Graph& g, NodeId s, NodeId t) {
  if (s == t) return {s};
  std::vector<double> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> pred(g.node_count(), kNoNode);
  dist[s] = 0.0;
  MinHeap heap;
  heap.push({0.0, s});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    if (u == t) break;
    for (const Neighbor& nb : g.neighbors(u)) {
      double nd = d + nb.w;
      if (nd < dist[nb.to]) {
        dist[nb.to] = nd;
        pred[nb.to] = u;
        heap.push({nd, nb.to});
      } else if (nd == dist[nb.to] && u < pred[nb.to]) {
        pred[nb.to] = u;
      }
    }
  }
  if (dist[t] == kUnreachable) return {};
  std::vector<NodeId> path;
  for (NodeId v = t; v != kNoNode; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Dijkstra restricted to one box's induced subgraph. Buffers are sized for
// the whole graph once per query and reused across legs; box nodes map to
// local indices in ascending-id order, so local tie-breaks match global ones.
class BoxSearch {
 public:
  explicit BoxSearch(const Graph& g) : g_(g), local_(g.node_count(), -1) {}

  void run(std::span<const NodeId> box_nodes, NodeId source) {
    for (NodeId v : members_) local_[v] = -1;
    members_ = box_nodes;
    const auto k = static_cast<int>(box_nodes.size());
    for (int i = 0; i < k; ++i) local_[box_nodes[i]] = i;
    dist_.assign(k, kUnreachable);
    pred_.assign(k, -1);
    const int ls = local_[source];
    dist_[ls] = 0.0;
    MinHeap heap;
    heap.push({0.0, ls});
    while (!heap.empty()) {
      auto [d, lu] = heap.top();
      heap.pop();
      if (d > dist_[lu]) continue;
      for (const Neighbor& nb : g_.neighbors(members_[lu])) {
        int lv = local_[nb.to];
        if (lv < 0) continue;
        double nd = d + nb.w;
        if (nd < dist_[lv]) {
          dist_[lv] = nd;
          pred_[lv] = lu;
          heap.push({nd, lv});
        } else if (nd == dist_[lv] && members_[lu] < members_[pred_[lv]]) {
          pred_[lv] = lu;
        }
      }
    }
  }

  double dist_to(NodeId v) const {
    int lv = local_[v];
    return lv < 0 ? kUnreachable : dist_[lv];
  }

  // Appends the path source..target inclusive; target must be reachable.
  void append_path(NodeId target, std::vector<NodeId>& out) const {
    const std::size_t mark = out.size();
    for (int lv = local_[target]; lv != -1; lv = pred_[lv]) out.push_back(members_[lv]);
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(mark), out.end());
  }

 private:
  const Graph& g_;
  std::vector<int> local_;
  std::span<const NodeId> members_;
  std::vector<double> dist_;
  std::vector<int> pred_;
};

// Dijkstra over the quotient graph, early exit at `target`; empty when
// unreachable.
std::vector<int> super_path(const SuperGraph& sg, int source, int target) {
  if (source == target) return {source};
  const int boxes = sg.super_node_count();
  std::vector<double> dist(boxes, kUnreachable);
  std::vector<int> pred(boxes, -1);
  dist[source] = 0.0;
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                      std::greater<std::pair<double, int>>>
      heap;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, b] = heap.top();
    heap.pop();
    if (d > dist[b]) continue;
    if (b == target) break;
    for (auto [nb, edge_idx] : sg.super_neighbors(b)) {
      double nd = d + sg.super_edges[edge_idx].weight;
      if (nd < dist[nb]) {
        dist[nb] = nd;
        pred[nb] = b;
        heap.push({nd, nb});
      } else if (nd == dist[nb] && b < pred[nb]) {
        pred[nb] = b;
      }
    }
  }
  if (dist[target] == kUnreachable) return {};
  std::vector<int> path;
  for (int b = target; b != -1; b = pred[b]) path.push_back(b);
  std::reverse(path.begin(), path.end());
  return path;
}

// Excises every cycle: whenever a node repeats, the walk rolls back to its
// first occurrence. The result is a simple path over the same endpoints.
std::vector<NodeId> remove_loops(const std::vector<NodeId>& walk, NodeId n) {
  std::vector<int> position(n, -1);
  std::vector<NodeId> out;
  out.reserve(walk.size());
  for (NodeId v : walk) {
    if (position[v] >= 0) {
      while (static_cast<int>(out.size()) > position[v] + 1) {
        position[out.back()] = -1;
        out.pop_back();
      }
    } else {
      position[v] = static_cast<int>(out.size());
      out.push_back(v);
    }
  }
  return out;
}

double path_cost(const Graph& g, const std::vector<NodeId>& nodes) {
  double cost = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    cost += g.edge_weight(nodes[i], nodes[i + 1]);
  return cost;
}

}  // namespace

Route dijkstra_route(const Graph& g, NodeId s, NodeId t) {
  check_endpoint(g, s, "source");
  check_endpoint(g, t, "target");
  Route route;
  route.method = RouteMethod::Dijkstra;
  route.s = s;
  route.t = t;
  route.nodes = flat_path(g, s, t);
  if (route.nodes.empty())
    throw NoRouteError("no route from " + std::to_string(s) + " to " + std::to_string(t));
  route.cost = path_cost(g, route.nodes);
  return route;
}

Route bcr_route(const Graph& g, const SuperGraph& sg, NodeId s, NodeId t) {
  check_endpoint(g, s, "source");
  check_endpoint(g, t, "target");
  if (!sg.base || !sg.cover) throw Error("supergraph is not initialized");
  if (sg.base->node_count() != g.node_count())
    throw Error("supergraph was built for a different graph");
  const BoxCover& cover = *sg.cover;

  Route route;
  route.method = RouteMethod::Bcr;
  route.s = s;
  route.t = t;

  const int box_s = cover.assignment[s];
  const int box_t = cover.assignment[t];

  if (s == t) {
    route.nodes = {s};
    route.cost = 0.0;
    route.box_sequence = std::vector<int>{box_s};
    return route;
  }

  std::vector<NodeId> walk;
  if (box_s == box_t) {
    BoxSearch search(g);
    search.run(cover.boxes[box_s].nodes, s);
    if (search.dist_to(t) != kUnreachable) {
      search.append_path(t, walk);
    } else {
      walk = flat_path(g, s, t);
      if (walk.empty())
        throw NoRouteError("no route from " + std::to_string(s) + " to " + std::to_string(t));
      ++route.fallbacks;
    }
    route.box_sequence = std::vector<int>{box_s};
  } else {
    std::vector<int> boxes = super_path(sg, box_s, box_t);
    if (boxes.empty()) {
      // Disconnected quotient between the two boxes; serve the whole query
      // from the base graph if it is connected there.
      walk = flat_path(g, s, t);
      if (walk.empty())
        throw NoRouteError("no route from " + std::to_string(s) + " to " + std::to_string(t));
      ++route.fallbacks;
      route.box_sequence = std::vector<int>{};
    } else {
      BoxSearch search(g);
      walk.push_back(s);
      NodeId current = s;
      for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
        const int here = boxes[i];
        const int next = boxes[i + 1];
        int edge_idx = -1;
        for (auto [nb, idx] : sg.super_neighbors(here))
          if (nb == next) {
            edge_idx = idx;
            break;
          }
        const SuperEdge& se = sg.super_edges[edge_idx];
        const bool forward = se.box_a == here;

        search.run(cover.boxes[here].nodes, current);
        NodeId best_u = kNoNode;
        NodeId best_v = kNoNode;
        double best_score = kUnreachable;
        for (const Edge& e : se.connecting) {
          NodeId u = forward ? e.u : e.v;
          NodeId v = forward ? e.v : e.u;
          double score = search.dist_to(u) + e.w;
          bool better = best_u == kNoNode || score < best_score ||
                        (score == best_score && (u < best_u || (u == best_u && v < best_v)));
          if (better) {
            best_u = u;
            best_v = v;
            best_score = score;
          }
        }
        if (search.dist_to(best_u) != kUnreachable) {
          walk.pop_back();  // current re-enters with the leg
          search.append_path(best_u, walk);
        } else {
          std::vector<NodeId> repaired = flat_path(g, current, best_u);
          if (repaired.empty())
            throw NoRouteError("no route from " + std::to_string(s) + " to " +
                               std::to_string(t));
          ++route.fallbacks;
          walk.pop_back();
          walk.insert(walk.end(), repaired.begin(), repaired.end());
        }
        walk.push_back(best_v);
        current = best_v;
      }
      if (current != t) {
        search.run(cover.boxes[box_t].nodes, current);
        if (search.dist_to(t) != kUnreachable) {
          walk.pop_back();
          search.append_path(t, walk);
        } else {
          std::vector<NodeId> repaired = flat_path(g, current, t);
          if (repaired.empty())
            throw NoRouteError("no route from " + std::to_string(s) + " to " +
                               std::to_string(t));
          ++route.fallbacks;
          walk.pop_back();
          walk.insert(walk.end(), repaired.begin(), repaired.end());
        }
      }
      route.box_sequence = std::move(boxes);
    }
  }

  route.nodes = remove_loops(walk, g.node_count());
  route.cost = path_cost(g, route.nodes);
  return route;
}

Route compute_stretch(const Graph& g, Route route) {
  if (route.s == route.t) {
    route.stretch = 1.0;
    return route;
  }
  DistanceField field = dijkstra_sssp(g, route.s);
  if (!field.reachable(route.t)) throw Error("stretch undefined: target unreachable");
  route.stretch = route.cost / field.dist[route.t];
  return route;
}

}  // namespace bcr

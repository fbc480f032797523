#include "bcr/cover.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "bcr/kernels.hpp"
#include "bcr/shortest_path.hpp"

namespace bcr {

const char* to_string(CoverAlgorithm a) {
  switch (a) {
    case CoverAlgorithm::Gc: return "gc";
    case CoverAlgorithm::Memb: return "memb";
    case CoverAlgorithm::Ciea: return "ciea";
  }
  return "?";
}

const char* to_string(GcMode m) {
  return m == GcMode::Strict ? "strict" : "song";
}

namespace {

void check_cover_args(const Graph& g, int rb) {
  if (g.node_count() == 0) throw Error("cannot cover an empty graph");
  if (rb < 1) throw Error("rb must be >= 1");
}

// Residual BFS: explores only nodes where covered[v] == 0, up to `max_hops`
// (negative = unbounded). Uses the stamp trick so callers can reuse buffers
// without resets.
struct ResidualBfs {
  std::vector<int> stamp;
  std::vector<int> hop;
  std::vector<NodeId> queue;
  int tag = 0;

  explicit ResidualBfs(NodeId n) : stamp(n, -1), hop(n, 0) {}

  const std::vector<NodeId>& run(const Graph& g, NodeId source, int max_hops,
                                 const NodeMask& covered) {
    ++tag;
    queue.clear();
    queue.push_back(source);
    stamp[source] = tag;
    hop[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId v = queue[head];
      if (max_hops >= 0 && hop[v] == max_hops) continue;
      for (const Neighbor& nb : g.neighbors(v)) {
        if (stamp[nb.to] == tag || covered[nb.to]) continue;
        stamp[nb.to] = tag;
        hop[nb.to] = hop[v] + 1;
        queue.push_back(nb.to);
      }
    }
    return queue;
  }
};

BoxCover finish_cover(const Graph& g, BoxCover cover, std::vector<std::vector<NodeId>> box_nodes,
                      std::vector<std::optional<NodeId>> centers) {
  cover.box_size = 2 * cover.rb + 1;
  cover.assignment.assign(g.node_count(), -1);
  cover.boxes.clear();
  cover.boxes.reserve(box_nodes.size());
  for (std::size_t b = 0; b < box_nodes.size(); ++b) {
    Box box;
    box.id = static_cast<int>(b);
    box.nodes = std::move(box_nodes[b]);
    std::sort(box.nodes.begin(), box.nodes.end());
    box.center = centers[b];
    for (NodeId v : box.nodes) cover.assignment[v] = box.id;
    cover.boxes.push_back(std::move(box));
  }
  return cover;
}

}  // namespace

int excluded_mass(const Graph& g, NodeId node, int rb, const NodeMask& covered) {
  if (node < 0 || node >= g.node_count()) throw Error("invalid node id");
  if (!covered.empty() && static_cast<NodeId>(covered.size()) != g.node_count())
    throw Error("covered mask size does not match node count");
  auto is_covered = [&covered](NodeId v) { return !covered.empty() && covered[v]; };

  // Plain bounded BFS in the full graph, counting uncovered nodes reached.
  std::vector<int> hop(g.node_count(), kNoHop);
  std::vector<NodeId> queue{node};
  hop[node] = 0;
  int mass = is_covered(node) ? 0 : 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    if (hop[v] == rb) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (hop[nb.to] != kNoHop) continue;
      hop[nb.to] = hop[v] + 1;
      if (!is_covered(nb.to)) ++mass;
      queue.push_back(nb.to);
    }
  }
  return mass;
}

BoxCover gc_cover(const Graph& g, int rb, GcMode mode, std::optional<std::uint64_t> order_seed,
                  int threads) {
  check_cover_args(g, rb);
  const NodeId n = g.node_count();
  const int compat_radius = mode == GcMode::Strict ? rb : 2 * rb;
  // ball[u] holds every node close enough to share a box with u; everything
  // else (unreachable nodes included) is a dual neighbor.
  const auto balls = kernels::hop_balls(g, compat_radius, threads);

  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  if (order_seed) {
    std::mt19937_64 rng(*order_seed);
    for (NodeId i = n - 1; i > 0; --i) {
      auto j = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(order[i], order[j]);
    }
  }

  // A color is usable for u iff every node already wearing it lies inside
  // u's compatibility ball; counting per color avoids materializing the
  // (dense) dual graph.
  std::vector<int> color(n, -1);
  std::vector<int> total_with_color;
  std::vector<int> in_ball_with_color;
  for (NodeId u : order) {
    for (NodeId v : balls[u])
      if (color[v] >= 0) ++in_ball_with_color[color[v]];
    int chosen = -1;
    for (std::size_t c = 0; c < total_with_color.size(); ++c) {
      if (in_ball_with_color[c] == total_with_color[c]) {
        chosen = static_cast<int>(c);
        break;
      }
    }
    for (NodeId v : balls[u])
      if (color[v] >= 0) --in_ball_with_color[color[v]];
    if (chosen < 0) {
      chosen = static_cast<int>(total_with_color.size());
      total_with_color.push_back(0);
      in_ball_with_color.push_back(0);
    }
    color[u] = chosen;
    ++total_with_color[chosen];
  }

  const auto color_count = static_cast<int>(total_with_color.size());
  std::vector<std::vector<NodeId>> classes(color_count);
  for (NodeId v = 0; v < n; ++v) classes[color[v]].push_back(v);

  // Box ids ordered by smallest member node id.
  std::vector<int> class_order(color_count);
  for (int c = 0; c < color_count; ++c) class_order[c] = c;
  std::sort(class_order.begin(), class_order.end(),
            [&classes](int a, int b) { return classes[a].front() < classes[b].front(); });

  std::vector<std::vector<NodeId>> box_nodes;
  box_nodes.reserve(color_count);
  for (int c : class_order) box_nodes.push_back(std::move(classes[c]));
  std::vector<std::optional<NodeId>> centers(box_nodes.size(), std::nullopt);

  BoxCover cover;
  cover.algorithm = CoverAlgorithm::Gc;
  cover.rb = rb;
  cover.gc_mode = mode;
  return finish_cover(g, std::move(cover), std::move(box_nodes), std::move(centers));
}

BoxCover memb_cover(const Graph& g, int rb, int threads) {
  check_cover_args(g, rb);
  const NodeId n = g.node_count();
  const auto balls = kernels::hop_balls(g, rb, threads);

  // mass[v] = excluded mass of v = uncovered nodes in its radius-rb ball.
  // Covering node x decrements mass[u] exactly for the u with x in ball(u),
  // which by symmetry of hop distance is every u in ball(x).
  std::vector<int> mass(n);
  for (NodeId v = 0; v < n; ++v) mass[v] = static_cast<int>(balls[v].size());

  NodeMask covered(n, 0);
  NodeId remaining = n;
  ResidualBfs bfs(n);
  std::vector<std::vector<NodeId>> box_nodes;
  std::vector<std::optional<NodeId>> centers;

  while (remaining > 0) {
    NodeId center = kNoNode;
    for (NodeId v = 0; v < n; ++v) {
      if (covered[v]) continue;  // a covered center would make an empty box
      if (center == kNoNode || mass[v] > mass[center]) center = v;
    }
    const auto& grown = bfs.run(g, center, rb, covered);
    std::vector<NodeId> nodes(grown.begin(), grown.end());
    for (NodeId v : nodes) {
      covered[v] = 1;
      --remaining;
      for (NodeId u : balls[v]) --mass[u];
    }
    box_nodes.push_back(std::move(nodes));
    centers.emplace_back(center);
  }

  BoxCover cover;
  cover.algorithm = CoverAlgorithm::Memb;
  cover.rb = rb;
  return finish_cover(g, std::move(cover), std::move(box_nodes), std::move(centers));
}

namespace {

// Exact hop eccentricities of a connected component, specialized for trees:
// on a tree every node's eccentricity is its distance to the nearer of the
// two endpoints of any diameter path, found by a double sweep. Falls back to
// one BFS per component node otherwise.
std::vector<int> component_eccentricities(const Graph& g, const std::vector<NodeId>& comp,
                                          const NodeMask& covered, ResidualBfs& bfs,
                                          int threads) {
  std::size_t internal_edges = 0;
  NodeMask in_comp(g.node_count(), 0);
  for (NodeId v : comp) in_comp[v] = 1;
  for (NodeId v : comp)
    for (const Neighbor& nb : g.neighbors(v))
      if (in_comp[nb.to]) ++internal_edges;
  internal_edges /= 2;

  std::vector<int> ecc(g.node_count(), kNoHop);
  if (internal_edges == comp.size() - 1) {
    const auto& sweep0 = bfs.run(g, comp.front(), -1, covered);
    NodeId a = sweep0.back();  // farthest from an arbitrary start
    const auto& sweep_a = bfs.run(g, a, -1, covered);
    NodeId b = sweep_a.back();
    std::vector<int> dist_a(g.node_count());
    for (NodeId v : comp) dist_a[v] = bfs.hop[v];
    bfs.run(g, b, -1, covered);
    for (NodeId v : comp) ecc[v] = std::max(dist_a[v], bfs.hop[v]);
    return ecc;
  }
  return kernels::scope_eccentricities(g, comp, in_comp, threads);
}

}  // namespace

BoxCover ciea_cover(const Graph& g, int rb, int threads) {
  check_cover_args(g, rb);
  const NodeId n = g.node_count();
  NodeMask covered(n, 0);
  NodeId remaining = n;
  NodeId scan_from = 0;
  ResidualBfs bfs(n);
  std::vector<std::vector<NodeId>> box_nodes;
  std::vector<std::optional<NodeId>> centers;

  while (remaining > 0) {
    while (covered[scan_from]) ++scan_from;
    std::vector<NodeId> comp = bfs.run(g, scan_from, -1, covered);
    std::sort(comp.begin(), comp.end());

    const auto ecc = component_eccentricities(g, comp, covered, bfs, threads);
    NodeId far_node = comp.front();
    for (NodeId v : comp)
      if (ecc[v] > ecc[far_node]) far_node = v;

    const int candidate_hop = std::min(rb, ecc[far_node]);
    const auto& from_far = bfs.run(g, far_node, candidate_hop, covered);
    std::vector<NodeId> candidates;
    for (NodeId v : from_far)
      if (bfs.hop[v] == candidate_hop) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end());

    NodeId center = kNoNode;
    std::size_t best_coverage = 0;
    for (NodeId c : candidates) {
      std::size_t coverage = bfs.run(g, c, rb, covered).size();
      if (center == kNoNode || coverage > best_coverage) {
        center = c;
        best_coverage = coverage;
      }
    }

    const auto& grown = bfs.run(g, center, rb, covered);
    std::vector<NodeId> nodes(grown.begin(), grown.end());
    for (NodeId v : nodes) {
      covered[v] = 1;
      --remaining;
    }
    box_nodes.push_back(std::move(nodes));
    centers.emplace_back(center);
  }

  BoxCover cover;
  cover.algorithm = CoverAlgorithm::Ciea;
  cover.rb = rb;
  return finish_cover(g, std::move(cover), std::move(box_nodes), std::move(centers));
}

namespace {

void add_violation(CoverReport& report, ViolationKind kind, std::string message) {
  report.violations.push_back({kind, std::move(message)});
}

}  // namespace

CoverReport validate_cover(const Graph& g, const BoxCover& cover) {
  const NodeId n = g.node_count();
  if (static_cast<NodeId>(cover.assignment.size()) != n)
    throw Error("cover node count does not match graph");

  CoverReport report;
  const bool centered =
      cover.algorithm == CoverAlgorithm::Memb || cover.algorithm == CoverAlgorithm::Ciea;

  std::vector<int> seen(n, 0);
  for (const Box& box : cover.boxes) {
    if (box.nodes.empty()) {
      add_violation(report, ViolationKind::EmptyBox,
                    "empty box: " + std::to_string(box.id));
    }
    for (NodeId v : box.nodes) {
      if (v < 0 || v >= n) {
        add_violation(report, ViolationKind::AssignmentMismatch,
                      "box node out of range: " + std::to_string(v));
        continue;
      }
      ++seen[v];
    }
    if (centered) {
      if (!box.center) {
        add_violation(report, ViolationKind::CenterMissing,
                      "center missing: box " + std::to_string(box.id));
      } else if (!std::binary_search(box.nodes.begin(), box.nodes.end(), *box.center)) {
        add_violation(report, ViolationKind::CenterOutsideBox,
                      "center outside its box: " + std::to_string(box.id));
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (seen[v] == 0)
      add_violation(report, ViolationKind::UncoveredNode, "uncovered node: " + std::to_string(v));
    else if (seen[v] > 1)
      add_violation(report, ViolationKind::MultiplyAssigned,
                    "multiply assigned: " + std::to_string(v));
  }
  for (NodeId v = 0; v < n; ++v) {
    int b = cover.assignment[v];
    bool consistent = b >= 0 && b < static_cast<int>(cover.boxes.size()) &&
                      std::binary_search(cover.boxes[b].nodes.begin(),
                                         cover.boxes[b].nodes.end(), v);
    if (!consistent)
      add_violation(report, ViolationKind::AssignmentMismatch,
                    "assignment mismatch: " + std::to_string(v));
  }

  // Pairwise hop-distance bound within each box, measured in the full graph:
  // rb for strict GC, 2*rb otherwise.
  const int bound =
      cover.algorithm == CoverAlgorithm::Gc && cover.gc_mode == GcMode::Strict ? cover.rb
                                                                               : 2 * cover.rb;
  const ViolationKind bound_kind = cover.algorithm == CoverAlgorithm::Gc
                                       ? ViolationKind::DiameterViolation
                                       : ViolationKind::RadiusViolation;
  ResidualBfs bfs(n);
  NodeMask nothing_covered(n, 0);
  for (const Box& box : cover.boxes) {
    for (NodeId v : box.nodes) {
      if (v < 0 || v >= n) continue;
      bfs.run(g, v, bound, nothing_covered);
      for (NodeId u : box.nodes) {
        if (u <= v || u >= n) continue;
        if (bfs.stamp[u] != bfs.tag) {
          add_violation(report, bound_kind,
                        (cover.algorithm == CoverAlgorithm::Gc ? "diameter violation: box "
                                                               : "radius violation: box ") +
                            std::to_string(box.id) + " pair (" + std::to_string(v) + "," +
                            std::to_string(u) + ")");
        }
      }
    }
  }

  if (centered) {
    // Connectivity of each box's induced subgraph.
    for (const Box& box : cover.boxes) {
      if (box.nodes.empty()) continue;
      NodeMask outside(n, 1);
      for (NodeId v : box.nodes)
        if (v >= 0 && v < n) outside[v] = 0;
      const auto& reached = bfs.run(g, box.nodes.front(), -1, outside);
      if (reached.size() != box.nodes.size())
        add_violation(report, ViolationKind::DisconnectedBox,
                      "disconnected box: " + std::to_string(box.id));
    }

    // Replay the residual-ball growth in box-id (creation) order: each box
    // must be exactly the radius-rb residual ball around its center.
    NodeMask replay_covered(n, 0);
    for (const Box& box : cover.boxes) {
      if (!box.center || box.nodes.empty()) continue;
      bool center_ok = *box.center >= 0 && *box.center < n && !replay_covered[*box.center];
      if (center_ok) {
        auto ball = bfs.run(g, *box.center, cover.rb, replay_covered);
        std::sort(ball.begin(), ball.end());
        if (ball != box.nodes)
          add_violation(report, ViolationKind::CenterRadiusViolation,
                        "center radius violation: box " + std::to_string(box.id));
      } else {
        add_violation(report, ViolationKind::CenterRadiusViolation,
                      "center radius violation: box " + std::to_string(box.id));
      }
      for (NodeId v : box.nodes)
        if (v >= 0 && v < n) replay_covered[v] = 1;
    }
  }

  return report;
}

}  // namespace bcr

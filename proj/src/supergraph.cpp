#include "bcr/supergraph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bcr {

namespace {

void check_structure(const Graph& g, const BoxCover& cover) {
  const NodeId n = g.node_count();
  if (static_cast<NodeId>(cover.assignment.size()) != n)
    throw Error("cover node count does not match graph");
  const auto box_count = static_cast<int>(cover.boxes.size());
  std::vector<int> seen(n, 0);
  for (const Box& box : cover.boxes) {
    if (box.nodes.empty()) throw Error("invalid cover: empty box " + std::to_string(box.id));
    const bool centered =
        cover.algorithm == CoverAlgorithm::Memb || cover.algorithm == CoverAlgorithm::Ciea;
    if (centered &&
        (!box.center || !std::binary_search(box.nodes.begin(), box.nodes.end(), *box.center)))
      throw Error("invalid cover: bad center in box " + std::to_string(box.id));
    for (NodeId v : box.nodes) {
      if (v < 0 || v >= n) throw Error("invalid cover: node out of range");
      ++seen[v];
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (seen[v] != 1) throw Error("invalid cover: node " + std::to_string(v) + " covered " +
                                  std::to_string(seen[v]) + " times");
    int b = cover.assignment[v];
    if (b < 0 || b >= box_count ||
        !std::binary_search(cover.boxes[b].nodes.begin(), cover.boxes[b].nodes.end(), v))
      throw Error("invalid cover: assignment mismatch at node " + std::to_string(v));
  }
}

}  // namespace

SuperGraph build_supergraph(const Graph& g, const BoxCover& cover) {
  check_structure(g, cover);

  std::map<std::pair<int, int>, std::vector<Edge>> crossing;
  for (const Edge& e : g.edges()) {
    int a = cover.assignment[e.u];
    int b = cover.assignment[e.v];
    if (a == b) continue;
    Edge oriented = a < b ? e : Edge{e.v, e.u, e.w};
    crossing[{std::min(a, b), std::max(a, b)}].push_back(oriented);
  }

  SuperGraph sg;
  sg.base = &g;
  sg.cover = &cover;
  sg.super_edges.reserve(crossing.size());
  for (auto& [key, edges] : crossing) {
    SuperEdge se;
    se.box_a = key.first;
    se.box_b = key.second;
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
    se.weight = edges.front().w;
    for (const Edge& e : edges) se.weight = std::min(se.weight, e.w);
    se.connecting = std::move(edges);
    sg.super_edges.push_back(std::move(se));
  }

  const int boxes = static_cast<int>(cover.boxes.size());
  std::vector<std::size_t> deg(boxes, 0);
  for (const SuperEdge& se : sg.super_edges) {
    ++deg[se.box_a];
    ++deg[se.box_b];
  }
  sg.offsets.assign(boxes + 1, 0);
  for (int b = 0; b < boxes; ++b) sg.offsets[b + 1] = sg.offsets[b] + deg[b];
  sg.adjacency.resize(sg.offsets[boxes]);
  std::vector<std::size_t> cursor(sg.offsets.begin(), sg.offsets.end() - 1);
  for (std::size_t i = 0; i < sg.super_edges.size(); ++i) {
    const SuperEdge& se = sg.super_edges[i];
    sg.adjacency[cursor[se.box_a]++] = {se.box_b, static_cast<int>(i)};
    sg.adjacency[cursor[se.box_b]++] = {se.box_a, static_cast<int>(i)};
  }
  for (int b = 0; b < boxes; ++b)
    std::sort(sg.adjacency.begin() + static_cast<std::ptrdiff_t>(sg.offsets[b]),
              sg.adjacency.begin() + static_cast<std::ptrdiff_t>(sg.offsets[b + 1]));
  return sg;
}

}  // namespace bcr

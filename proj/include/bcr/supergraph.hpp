#pragma once

#include <vector>

#include "bcr/cover.hpp"
#include "bcr/graph.hpp"

namespace bcr {

/// All base edges crossing one pair of boxes, plus the super-edge weight
/// (the minimum crossing weight). Connecting edges are oriented u-in-box_a,
/// v-in-box_b with box_a < box_b, sorted ascending by (u, v).
struct SuperEdge {
  int box_a = 0;
  int box_b = 0;
  std::vector<Edge> connecting;
  double weight = 0.0;
};

/// Quotient graph of a cover: one super-node per box, one super-edge per
/// pair of boxes joined by at least one base edge. Holds non-owning pointers
/// to the graph and cover it was built from; both must outlive it.
struct SuperGraph {
  const Graph* base = nullptr;
  const BoxCover* cover = nullptr;
  std::vector<SuperEdge> super_edges;

  // CSR adjacency over boxes: (neighbor box, index into super_edges).
  std::vector<std::size_t> offsets;
  std::vector<std::pair<int, int>> adjacency;

  int super_node_count() const { return static_cast<int>(cover->boxes.size()); }
  std::span<const std::pair<int, int>> super_neighbors(int box) const {
    return {adjacency.data() + offsets[box], adjacency.data() + offsets[box + 1]};
  }
};

/// Builds the quotient graph. Runs the cheap structural cover checks
/// (partition, assignment, centers); the distance-bound and replay checks
/// belong to validate_cover. Throws Error on a structurally invalid cover.
SuperGraph build_supergraph(const Graph& g, const BoxCover& cover);

}  // namespace bcr

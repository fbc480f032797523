#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcr/graph.hpp"

namespace bcr {

enum class CoverAlgorithm { Gc, Memb, Ciea };

/// Dual-graph threshold used by the greedy-coloring cover.
///   Strict: nodes may share a box iff their hop distance is <= r_b
///           (box hop diameter <= r_b).
///   Song:   nodes may share a box iff their hop distance is <= 2*r_b
///           (the classical box-size-l rule, l = 2*r_b + 1).
enum class GcMode { Strict, Song };

const char* to_string(CoverAlgorithm a);
const char* to_string(GcMode m);

struct Box {
  int id = 0;
  std::vector<NodeId> nodes;     // sorted ascending
  std::optional<NodeId> center;  // present for MEMB/CIEA, absent for GC

  friend bool operator==(const Box& a, const Box& b) {
    return a.id == b.id && a.nodes == b.nodes && a.center == b.center;
  }
};

/// A partition of the node set into radius-bounded boxes.
struct BoxCover {
  CoverAlgorithm algorithm = CoverAlgorithm::Gc;
  int rb = 1;
  int box_size = 3;                // l = 2*rb + 1
  std::optional<GcMode> gc_mode;   // present iff algorithm == Gc
  std::vector<Box> boxes;
  std::vector<int> assignment;     // node -> box id

  friend bool operator==(const BoxCover& a, const BoxCover& b) {
    return a.algorithm == b.algorithm && a.rb == b.rb && a.box_size == b.box_size &&
           a.gc_mode == b.gc_mode && a.boxes == b.boxes && a.assignment == b.assignment;
  }
};

/// Number of nodes outside `covered` within hop distance rb of `node`,
/// counting the node itself when uncovered. Distances are measured in the
/// full graph. `covered` may be empty (nothing covered) or sized node_count.
int excluded_mass(const Graph& g, NodeId node, int rb, const NodeMask& covered);

/// Greedy-coloring cover: builds the dual graph (nodes adjacent when too far
/// apart to share a box, unreachable pairs included), colors nodes greedily
/// in ascending id order (or an order shuffled with `order_seed`), each node
/// taking the smallest color absent among its already-colored dual
/// neighbors. Color classes become boxes, ordered by smallest member id.
/// GC boxes carry no center and need not induce connected subgraphs.
BoxCover gc_cover(const Graph& g, int rb, GcMode mode = GcMode::Strict,
                  std::optional<std::uint64_t> order_seed = std::nullopt, int threads = 1);

/// Maximal-excluded-mass cover: repeatedly picks the uncovered node with the
/// largest excluded mass (ties toward the lowest id) as a center and grows
/// its box breadth-first through the residual (uncovered) subgraph up to
/// depth rb, so every box induces a connected subgraph.
BoxCover memb_cover(const Graph& g, int rb, int threads = 1);

/// Eccentricity-guided cover: per residual connected component, finds the
/// maximum-eccentricity node e (ties toward the lowest id), considers the
/// nodes at residual distance exactly min(rb, ecc(e)) from e as candidate
/// centers, picks the candidate covering the most uncovered nodes within
/// residual distance rb (ties toward the lowest id), and boxes that ball.
BoxCover ciea_cover(const Graph& g, int rb, int threads = 1);

enum class ViolationKind {
  UncoveredNode,
  MultiplyAssigned,
  AssignmentMismatch,
  EmptyBox,
  CenterMissing,
  CenterOutsideBox,
  DiameterViolation,      // GC: same-box pair farther apart than the mode allows
  RadiusViolation,        // MEMB/CIEA: same-box pair beyond 2*rb in the full graph
  DisconnectedBox,        // MEMB/CIEA: box does not induce a connected subgraph
  CenterRadiusViolation,  // MEMB/CIEA: box differs from the replayed residual ball
};

struct CoverViolation {
  ViolationKind kind;
  std::string message;
};

struct CoverReport {
  std::vector<CoverViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks a cover against the graph it claims to describe: partition and
/// assignment consistency, non-empty boxes, center membership, the
/// algorithm-specific distance bounds, connectivity for MEMB/CIEA, and (for
/// MEMB/CIEA) a replay of the residual-ball growth in box-id order.
/// Throws Error when the cover's node count does not match the graph.
CoverReport validate_cover(const Graph& g, const BoxCover& cover);

}  // namespace bcr

#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcr {

using NodeId = int;

/// Sentinel for "no predecessor" / "no node".
inline constexpr NodeId kNoNode = -1;
/// Sentinel for an unreachable hop count.
inline constexpr int kNoHop = -1;
/// Sentinel for an unreachable weighted distance.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input data (edge lists, CSV). Messages name the offending line.
struct ParseError : Error {
  using Error::Error;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double w = 1.0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
  }
};

struct Neighbor {
  NodeId to = 0;
  double w = 1.0;
};

/// Per-node membership mask, size node_count. Nonzero means "in the set".
using NodeMask = std::vector<char>;

/// Immutable undirected weighted graph over contiguous node ids 0..n-1.
///
/// Invariants enforced at construction: no self-loops, no parallel edges,
/// all weights strictly positive and finite. Edges are stored canonically
/// (u < v, sorted lexicographically); adjacency is CSR with neighbor lists
/// sorted by node id. Instances are safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Validates `edges` against the invariants above and builds adjacency.
  /// `external_ids`, when non-empty, maps each contiguous id back to the id
  /// it carried in the source data (strictly increasing, size node_count).
  static Graph from_edges(NodeId node_count, std::vector<Edge> edges,
                          std::vector<std::int64_t> external_ids = {});

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(NodeId v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  /// Canonical edge list: u < v, sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_external_ids() const { return !ext_ids_.empty(); }
  /// Id the node carried in the source data; identity when none was recorded.
  std::int64_t external_id(NodeId v) const {
    return ext_ids_.empty() ? static_cast<std::int64_t>(v) : ext_ids_[v];
  }

  bool adjacent(NodeId u, NodeId v) const;
  /// Weight of edge (u,v); throws Error if absent.
  double edge_weight(NodeId u, NodeId v) const;

  /// Structural equality: node count and canonical edge list.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adj_;
  std::vector<std::int64_t> ext_ids_;
};

/// Parses the plain-text edge-list format: one `u v [w]` edge per line,
/// whitespace-separated, `#` starting a comment line, blank lines ignored,
/// LF or CRLF. Node ids are arbitrary non-negative integers and get remapped
/// to a contiguous 0-based range preserving ascending order; the original
/// ids are recorded as the graph's external ids. A missing weight defaults
/// to 1. Throws ParseError naming the line on malformed input, non-positive
/// or non-finite weights, self-loops, and duplicate edges.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Emits edges as `u v w` lines with u < v, sorted, LF line endings, using
/// external ids when the graph carries them. Weights use the shortest
/// round-trippable decimal form.
void write_edge_list(const Graph& g, std::ostream& out);
std::string write_edge_list(const Graph& g);

/// Complete rooted 3-ary tree: node 0 is the root, node i's children are
/// 3i+1, 3i+2, 3i+3, unit weights. node_count = (3^(depth+1) - 1) / 2.
/// Throws Error when the node count overflows.
Graph gen_ternary_tree(int depth);

/// Erdos-Renyi G(n,p) with unit weights, deterministic for a fixed seed.
/// Only the largest connected component is returned (ties broken toward the
/// component containing the smallest node id), with ids remapped contiguously
/// and the pre-remap indices recorded as external ids.
Graph gen_random_graph(int n, double p, std::uint64_t seed);

}  // namespace bcr

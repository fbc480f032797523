#pragma once

#include <span>
#include <vector>

#include "bcr/graph.hpp"

namespace bcr::kernels {

/// Data-parallel batch kernels: one independent bounded BFS per source node.
/// Every kernel has a serial reference implementation and an OpenMP variant;
/// `threads <= 1` selects the serial path, `threads == 0` uses the OpenMP
/// default team size. Outputs are identical across the two paths (each source
/// writes only its own slot), so results never depend on the thread count.

/// For every node, the list of nodes within `radius` hops of it (itself
/// included), in BFS discovery order.
std::vector<std::vector<NodeId>> hop_balls(const Graph& g, int radius, int threads = 1);
std::vector<std::vector<NodeId>> hop_balls_serial(const Graph& g, int radius);

/// Hop eccentricity of every node of `scope` inside the subgraph induced by
/// `in_scope` (size node_count). Assumes that subgraph is connected; entries
/// outside the scope are kNoHop.
std::vector<int> scope_eccentricities(const Graph& g, std::span<const NodeId> scope,
                                      const NodeMask& in_scope, int threads = 1);
std::vector<int> scope_eccentricities_serial(const Graph& g, std::span<const NodeId> scope,
                                             const NodeMask& in_scope);

}  // namespace bcr::kernels

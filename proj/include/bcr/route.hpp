#pragma once

#include <optional>
#include <vector>

#include "bcr/graph.hpp"
#include "bcr/supergraph.hpp"

namespace bcr {

enum class RouteMethod { Dijkstra, Bcr };

const char* to_string(RouteMethod m);

/// A simple s-to-t path. `cost` is the sum of traversed edge weights;
/// `box_sequence` records the quotient-graph path a hierarchical route
/// followed (absent for flat Dijkstra routes); `fallbacks` counts intra-box
/// legs that had to be repaired with a full-graph search.
struct Route {
  RouteMethod method = RouteMethod::Dijkstra;
  NodeId s = 0;
  NodeId t = 0;
  std::vector<NodeId> nodes;
  double cost = 0.0;
  std::optional<std::vector<int>> box_sequence;
  int fallbacks = 0;
  std::optional<double> stretch;
};

/// Raised when t is unreachable from s.
struct NoRouteError : Error {
  using Error::Error;
};

/// Optimal flat route via Dijkstra with deterministic tie-breaking (equal
/// distance keeps the lower predecessor id). Throws NoRouteError when t is
/// unreachable.
Route dijkstra_route(const Graph& g, NodeId s, NodeId t);

/// Hierarchical route: Dijkstra over the quotient graph picks the box
/// sequence, Dijkstra inside each box picks the legs, greedy gateway choice
/// (minimum intra-box distance plus crossing weight, ties by ascending edge)
/// stitches them, and loop removal makes the result simple. Intra-box legs
/// that are unreachable inside their box fall back to a full-graph search
/// and increment `fallbacks`. Throws NoRouteError when t is unreachable in g.
Route bcr_route(const Graph& g, const SuperGraph& sg, NodeId s, NodeId t);

/// Fills route.stretch = route.cost / optimal cost (1 when s == t).
Route compute_stretch(const Graph& g, Route route);

}  // namespace bcr

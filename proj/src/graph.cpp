#include "bcr/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace bcr {

Graph Graph::from_edges(NodeId node_count, std::vector<Edge> edges,
                        std::vector<std::int64_t> external_ids) {
  if (node_count < 0) throw Error("node count must be non-negative");
  if (!external_ids.empty()) {
    if (static_cast<NodeId>(external_ids.size()) != node_count)
      throw Error("external id table size does not match node count");
    for (std::size_t i = 1; i < external_ids.size(); ++i)
      if (external_ids[i - 1] >= external_ids[i])
        throw Error("external ids must be strictly increasing");
  }

  for (auto& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count)
      throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop");
    if (!(e.w > 0.0) || !std::isfinite(e.w)) throw Error("edge weight must be positive and finite");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
      throw Error("duplicate edge");

  Graph g;
  g.n_ = node_count;
  g.edges_ = std::move(edges);
  g.ext_ids_ = std::move(external_ids);

  std::vector<std::size_t> deg(node_count, 0);
  for (const auto& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (NodeId v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.adj_[cursor[e.u]++] = {e.v, e.w};
    g.adj_[cursor[e.v]++] = {e.u, e.w};
  }
  for (NodeId v = 0; v < node_count; ++v) {
    auto* first = g.adj_.data() + g.offsets_[v];
    auto* last = g.adj_.data() + g.offsets_[v + 1];
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  }
  return g;
}

namespace {

const Neighbor* find_neighbor(std::span<const Neighbor> row, NodeId v) {
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Neighbor& nb, NodeId id) { return nb.to < id; });
  if (it == row.end() || it->to != v) return nullptr;
  return &*it;
}

}  // namespace

bool Graph::adjacent(NodeId u, NodeId v) const { return find_neighbor(neighbors(u), v) != nullptr; }

double Graph::edge_weight(NodeId u, NodeId v) const {
  const Neighbor* nb = find_neighbor(neighbors(u), v);
  if (!nb) throw Error("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  return nb->w;
}

namespace {

struct RawEdge {
  std::int64_t u;
  std::int64_t v;
  double w;
};

[[noreturn]] void parse_fail(const std::string& what, int line) {
  throw ParseError(what + " at line " + std::to_string(line));
}

bool parse_id(std::string_view tok, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size() && out >= 0;
}

bool parse_weight(std::string_view tok, double& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<RawEdge> raw;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string_view> tokens;
    std::string_view sv = line;
    std::size_t i = 0;
    while (i < sv.size()) {
      while (i < sv.size() && std::isspace(static_cast<unsigned char>(sv[i]))) ++i;
      if (i >= sv.size()) break;
      std::size_t j = i;
      while (j < sv.size() && !std::isspace(static_cast<unsigned char>(sv[j]))) ++j;
      tokens.push_back(sv.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#') continue;
    if (tokens.size() < 2 || tokens.size() > 3) parse_fail("malformed line", line_no);

    RawEdge e{0, 0, 1.0};
    if (!parse_id(tokens[0], e.u) || !parse_id(tokens[1], e.v))
      parse_fail("malformed line", line_no);
    if (tokens.size() == 3) {
      if (!parse_weight(tokens[2], e.w)) parse_fail("malformed line", line_no);
      if (!std::isfinite(e.w)) parse_fail("non-finite weight", line_no);
      if (!(e.w > 0.0)) parse_fail("non-positive weight", line_no);
    }
    if (e.u == e.v) parse_fail("self-loop", line_no);

    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
      parse_fail("duplicate edge", line_no);
    raw.push_back(e);
  }

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& e : raw) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto lookup = [&ids](std::int64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) edges.push_back({lookup(e.u), lookup(e.v), e.w});

  bool identity = true;
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (ids[k] != static_cast<std::int64_t>(k)) identity = false;

  return Graph::from_edges(static_cast<NodeId>(ids.size()), std::move(edges),
                           identity ? std::vector<std::int64_t>{} : std::move(ids));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

namespace {

std::string format_weight(double w) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& e : g.edges()) {
    out << g.external_id(e.u) << ' ' << g.external_id(e.v) << ' ' << format_weight(e.w) << '\n';
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

Graph gen_ternary_tree(int depth) {
  if (depth < 0) throw Error("depth must be non-negative");
  std::int64_t n = 1;
  std::int64_t level = 1;
  for (int d = 0; d < depth; ++d) {
    level *= 3;
    n += level;
    if (n > std::numeric_limits<NodeId>::max()) throw Error("node count overflows");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (NodeId i = 1; i < static_cast<NodeId>(n); ++i) edges.push_back({(i - 1) / 3, i, 1.0});
  return Graph::from_edges(static_cast<NodeId>(n), std::move(edges));
}

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error("n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("p must lie in [0,1]");
  if (n == 0) return Graph();

  std::mt19937_64 rng(seed);
  // Uniform double in [0,1) built directly from the top 53 bits so the edge
  // sample sequence is identical across standard library implementations.
  auto uniform01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (uniform01() < p) edges.push_back({i, j, 1.0});

  // Largest connected component, first such component in node-id order.
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> comp(n, -1);
  std::vector<NodeId> best;
  std::vector<NodeId> queue;
  int comp_id = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    queue.assign(1, s);
    comp[s] = comp_id;
    std::vector<NodeId> members{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId nb : adj[queue[head]]) {
        if (comp[nb] != -1) continue;
        comp[nb] = comp_id;
        queue.push_back(nb);
        members.push_back(nb);
      }
    }
    if (members.size() > best.size()) best = std::move(members);
    ++comp_id;
  }

  std::sort(best.begin(), best.end());
  std::vector<NodeId> remap(n, kNoNode);
  std::vector<std::int64_t> ext;
  ext.reserve(best.size());
  for (std::size_t k = 0; k < best.size(); ++k) {
    remap[best[k]] = static_cast<NodeId>(k);
    ext.push_back(best[k]);
  }
  std::vector<Edge> kept;
  for (const auto& e : edges)
    if (remap[e.u] != kNoNode && remap[e.v] != kNoNode)
      kept.push_back({remap[e.u], remap[e.v], e.w});

  bool identity = best.size() == static_cast<std::size_t>(n);
  return Graph::from_edges(static_cast<NodeId>(best.size()), std::move(kept),
                           identity ? std::vector<std::int64_t>{} : std::move(ext));
}

}  // namespace bcr

#include "gridstab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace gridstab {

GridSpec::GridSpec(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const std::size_t n = nodes_.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "grid: no nodes");

  std::vector<bool> seen(n, false);
  bool loads_started = false;
  for (const Node& node : nodes_) {
    if (node.id >= n)
      fail(ErrorCode::InvalidArgument,
           "grid: node id " + std::to_string(node.id) + " out of range");
    if (seen[node.id])
      fail(ErrorCode::InvalidArgument,
           "grid: duplicate node id " + std::to_string(node.id));
    seen[node.id] = true;
    if (!std::isfinite(node.shunt.real()) || !std::isfinite(node.shunt.imag()))
      fail(ErrorCode::InvalidArgument, "grid: non-finite shunt admittance");
    if (node.kind == NodeKind::Generator) {
      if (loads_started)
        fail(ErrorCode::InvalidArgument,
             "grid: generators must precede loads in node order");
      ++n_generators_;
    } else {
      loads_started = true;
    }
  }
  // ids must be listed in order so that position == id (keeps the matrix
  // row/column <-> node mapping trivial).
  for (std::size_t i = 0; i < n; ++i)
    if (nodes_[i].id != i)
      fail(ErrorCode::InvalidArgument,
           "grid: node ids must appear in increasing order 0..n-1");
  if (n_generators_ == 0)
    fail(ErrorCode::InvalidArgument, "grid: at least one generator required");

  adjacency_.assign(n, {});
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : edges_) {
    if (e.a >= n || e.b >= n)
      fail(ErrorCode::InvalidArgument, "grid: edge endpoint out of range");
    if (e.a == e.b)
      fail(ErrorCode::InvalidArgument,
           "grid: self loop at node " + std::to_string(e.a));
    const auto key = std::minmax(e.a, e.b);
    if (!pairs.insert(key).second)
      fail(ErrorCode::InvalidArgument,
           "grid: duplicate edge " + std::to_string(key.first) + "-" +
               std::to_string(key.second));
    if (!std::isfinite(e.admittance.real()) ||
        !std::isfinite(e.admittance.imag()))
      fail(ErrorCode::InvalidArgument, "grid: non-finite edge admittance");
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool GridSpec::has_edge(std::size_t a, std::size_t b) const {
  if (a >= node_count() || b >= node_count()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

NamedTopology named_topology_from_string(const std::string& name) {
  if (name == "star") return NamedTopology::Star;
  if (name == "path") return NamedTopology::Path;
  if (name == "ring") return NamedTopology::Ring;
  if (name == "complete") return NamedTopology::Complete;
  if (name == "circulant") return NamedTopology::Circulant;
  fail(ErrorCode::InvalidArgument, "unknown topology name: " + name);
}

static std::vector<Node> uniform_generators(std::size_t n, Cx shunt) {
  std::vector<Node> nodes(n);
  for (std::size_t i = 0; i < n; ++i)
    nodes[i] = Node{i, NodeKind::Generator, shunt};
  return nodes;
}

GridSpec generate_named(NamedTopology kind, std::size_t n, std::size_t k,
                        Cx edge_admittance, Cx shunt) {
  std::vector<Edge> edges;
  switch (kind) {
    case NamedTopology::Star:
      if (n < 3) fail(ErrorCode::InvalidArgument, "star: need n >= 3");
      for (std::size_t i = 1; i < n; ++i)
        edges.push_back({0, i, edge_admittance});
      break;
    case NamedTopology::Path:
      if (n < 2) fail(ErrorCode::InvalidArgument, "path: need n >= 2");
      for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1, edge_admittance});
      break;
    case NamedTopology::Ring:
      return generate_named(NamedTopology::Circulant, n, 1, edge_admittance,
                            shunt);
    case NamedTopology::Complete:
      if (n < 2) fail(ErrorCode::InvalidArgument, "complete: need n >= 2");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          edges.push_back({i, j, edge_admittance});
      break;
    case NamedTopology::Circulant: {
      if (n < 3) fail(ErrorCode::InvalidArgument, "circulant: need n >= 3");
      if (k < 1 || 2 * k > n - 1)
        fail(ErrorCode::HopOutOfRange,
             "circulant: hop count " + std::to_string(k) +
                 " outside 1..(n-1)/2 for n = " + std::to_string(n));
      // With k <= (n-1)/2 the pair {i, (i+h) % n} is reachable by hop <= k
      // from one side only, so this emits each undirected edge exactly once.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t h = 1; h <= k; ++h) {
          const std::size_t j = (i + h) % n;
          const auto [lo, hi] = std::minmax(i, j);
          edges.push_back({lo, hi, edge_admittance});
        }
      break;
    }
  }
  return GridSpec(uniform_generators(n, shunt), std::move(edges));
}

GridSpec tree_from_pruefer(const std::vector<std::size_t>& code,
                           Cx edge_admittance) {
  const std::size_t n = code.size() + 2;
  for (std::size_t v : code)
    if (v >= n)
      fail(ErrorCode::InvalidCode,
           "tree code entry " + std::to_string(v) + " out of range for n = " +
               std::to_string(n));

  std::vector<std::size_t> degree(n, 1);
  for (std::size_t v : code) ++degree[v];

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Standard decode: repeatedly join the smallest remaining leaf to the next
  // code entry.  A min-heap of current leaves keeps this O(n log n).
  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  for (std::size_t v : code) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, v), std::max(leaf, v), edge_admittance});
    if (--degree[v] == 1) leaves.push(v);
  }
  const std::size_t u = leaves.top();
  leaves.pop();
  const std::size_t w = leaves.top();
  edges.push_back({std::min(u, w), std::max(u, w), edge_admittance});

  return GridSpec(uniform_generators(n, Cx{}), std::move(edges));
}

static std::vector<std::size_t> bfs_distances(const GridSpec& g,
                                              std::size_t src) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.node_count(), kUnset);
  std::queue<std::size_t> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t w : g.adjacency()[v])
      if (dist[w] == kUnset) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

bool is_connected(const GridSpec& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) {
    return d == std::numeric_limits<std::size_t>::max();
  });
}

bool is_tree(const GridSpec& g) {
  return g.edge_count() + 1 == g.node_count() && is_connected(g);
}

std::size_t distance(const GridSpec& g, std::size_t a, std::size_t b) {
  if (a >= g.node_count() || b >= g.node_count())
    fail(ErrorCode::InvalidArgument, "distance: node id out of range");
  const auto dist = bfs_distances(g, a);
  if (dist[b] == std::numeric_limits<std::size_t>::max())
    fail(ErrorCode::Unreachable,
         "distance: no path between " + std::to_string(a) + " and " +
             std::to_string(b));
  return dist[b];
}

std::size_t diameter(const GridSpec& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto dist = bfs_distances(g, v);
    for (std::size_t d : dist) {
      if (d == std::numeric_limits<std::size_t>::max())
        fail(ErrorCode::Disconnected, "diameter: grid is not connected");
      best = std::max(best, d);
    }
  }
  return best;
}

std::size_t cycle_length_of_edge(const GridSpec& tree, std::size_t a,
                                 std::size_t b) {
  if (a >= tree.node_count() || b >= tree.node_count() || a == b)
    fail(ErrorCode::InvalidArgument, "cycle length: invalid node pair");
  if (!is_tree(tree))
    fail(ErrorCode::NotATree, "cycle length: grid is not a tree");
  if (tree.has_edge(a, b))
    fail(ErrorCode::AlreadyAdjacent,
         "cycle length: edge " + std::to_string(a) + "-" + std::to_string(b) +
             " already present");
  return distance(tree, a, b) + 1;
}

std::vector<std::size_t> center_nodes(const GridSpec& tree) {
  if (!is_tree(tree)) fail(ErrorCode::NotATree, "center: grid is not a tree");
  std::vector<std::size_t> ecc(tree.node_count(), 0);
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    const auto dist = bfs_distances(tree, v);
    ecc[v] = *std::max_element(dist.begin(), dist.end());
  }
  const std::size_t best = *std::min_element(ecc.begin(), ecc.end());
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < tree.node_count(); ++v)
    if (ecc[v] == best) out.push_back(v);
  return out;
}

GridSpec with_added_edge(const GridSpec& g, std::size_t a, std::size_t b,
                         Cx admittance) {
  std::vector<Edge> edges = g.edges();
  edges.push_back({a, b, admittance});
  return GridSpec(g.nodes(), std::move(edges));
}

} // namespace gridstab

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gridstab/numerics.hpp"

namespace gridstab {

enum class NodeKind { Generator, Load };

struct Node {
  std::size_t id = 0;
  NodeKind kind = NodeKind::Generator;
  Cx shunt{}; // admittance to ground
};

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  Cx admittance{}; // branch admittance between a and b
};

// Validated grid description.  Invariants enforced at construction:
//   - node ids are exactly 0..n-1, each appearing once, generators first;
//   - at least one generator;
//   - edges reference valid ids, no self loops, no duplicate pairs;
//   - all numeric fields finite.
// Connectivity is NOT required here; operations that need it check it.
class GridSpec {
public:
  GridSpec(std::vector<Node> nodes, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t generator_count() const noexcept { return n_generators_; }
  std::size_t load_count() const noexcept {
    return nodes_.size() - n_generators_;
  }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(std::size_t a, std::size_t b) const;
  const std::vector<std::vector<std::size_t>>& adjacency() const noexcept {
    return adjacency_;
  }

private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t n_generators_ = 0;
};

enum class NamedTopology { Star, Path, Ring, Complete, Circulant };

NamedTopology named_topology_from_string(const std::string& name);

// All-generator grid with uniform branch admittance and uniform shunt.
// Star: node 0 is the hub.  Circulant: each node i connects to i±1..i±k
// (mod n); requires 1 <= k <= (n-1)/2 (HopOutOfRange) so no pair doubles up.
// Ring == Circulant with k = 1.  Minimum sizes: star/path/ring/complete need
// n >= 3 except path (n >= 2); complete n >= 2.
GridSpec generate_named(NamedTopology kind, std::size_t n, std::size_t k,
                        Cx edge_admittance, Cx shunt = Cx{});

// Labeled tree on code.size()+2 nodes, all generators, uniform admittance.
// Entries must lie in 0..n-1 (InvalidCode).
GridSpec tree_from_pruefer(const std::vector<std::size_t>& code,
                           Cx edge_admittance);

bool is_connected(const GridSpec& g);
bool is_tree(const GridSpec& g);

// BFS hop distance; Unreachable when no path exists.
std::size_t distance(const GridSpec& g, std::size_t a, std::size_t b);

// Longest shortest path over all pairs; Disconnected when the grid is not
// connected.  A single node has diameter 0.
std::size_t diameter(const GridSpec& g);

// Length of the unique cycle created by adding edge (a, b) to a tree:
// tree-path distance + 1.  Errors: NotATree, AlreadyAdjacent, InvalidArgument
// for a == b or out-of-range ids.
std::size_t cycle_length_of_edge(const GridSpec& tree, std::size_t a,
                                 std::size_t b);

// Nodes with minimum eccentricity (the tree's center: one or two nodes).
std::vector<std::size_t> center_nodes(const GridSpec& tree);

// Copy of g with one extra edge (validated like the constructor does).
GridSpec with_added_edge(const GridSpec& g, std::size_t a, std::size_t b,
                         Cx admittance);

} // namespace gridstab

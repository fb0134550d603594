#include <doctest.h>

#include <vector>

#include "gridstab/grid.hpp"
#include "support.hpp"

using namespace gridstab;
using testsupport::thrown_code;

namespace {

const Cx kUnit{0.0, -1.0}; // unit negative susceptance

Node gen(std::size_t id) { return Node{id, NodeKind::Generator, Cx{}}; }
Node load(std::size_t id, Cx shunt = Cx{}) {
  return Node{id, NodeKind::Load, shunt};
}

} // namespace

TEST_CASE("grid constructor enforces its invariants") {
  // valid two-node grid
  GridSpec ok({gen(0), gen(1)}, {{0, 1, kUnit}});
  CHECK(ok.node_count() == 2);
  CHECK(ok.generator_count() == 2);

  // ids must be 0..n-1 in order
  CHECK(thrown_code([] {
          GridSpec({gen(1), gen(0)}, {});
        }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] {
          GridSpec({gen(0), gen(2)}, {});
        }) == ErrorCode::InvalidArgument);

  // generators must precede loads
  CHECK(thrown_code([] {
          GridSpec({load(0), gen(1)}, {});
        }) == ErrorCode::InvalidArgument);

  // at least one generator
  CHECK(thrown_code([] { GridSpec({load(0)}, {}); }) ==
        ErrorCode::InvalidArgument);

  // no self loops, no duplicates, valid endpoints
  CHECK(thrown_code([] {
          GridSpec({gen(0), gen(1)}, {{0, 0, kUnit}});
        }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] {
          GridSpec({gen(0), gen(1)}, {{0, 1, kUnit}, {1, 0, kUnit}});
        }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] {
          GridSpec({gen(0), gen(1)}, {{0, 5, kUnit}});
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("named topologies have the expected shape") {
  GridSpec star = generate_named(NamedTopology::Star, 7, 0, kUnit);
  CHECK(star.node_count() == 7);
  CHECK(star.edge_count() == 6);
  for (std::size_t leaf = 1; leaf < 7; ++leaf) CHECK(star.has_edge(0, leaf));
  CHECK_FALSE(star.has_edge(1, 2));

  GridSpec path = generate_named(NamedTopology::Path, 5, 0, kUnit);
  CHECK(path.edge_count() == 4);
  CHECK(path.has_edge(2, 3));
  CHECK_FALSE(path.has_edge(0, 4));
  CHECK(diameter(path) == 4);

  GridSpec ring = generate_named(NamedTopology::Ring, 6, 0, kUnit);
  CHECK(ring.edge_count() == 6);
  CHECK(ring.has_edge(5, 0));
  CHECK(diameter(ring) == 3);

  GridSpec full = generate_named(NamedTopology::Complete, 5, 0, kUnit);
  CHECK(full.edge_count() == 10);
  CHECK(diameter(full) == 1);

  GridSpec circ = generate_named(NamedTopology::Circulant, 7, 2, kUnit);
  CHECK(circ.edge_count() == 14); // n * k
  CHECK(circ.has_edge(0, 2));
  CHECK(circ.has_edge(6, 1));
  CHECK_FALSE(circ.has_edge(0, 3));
}

TEST_CASE("named topology size and hop validation") {
  CHECK(thrown_code([] {
          generate_named(NamedTopology::Star, 2, 0, kUnit);
        }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] {
          generate_named(NamedTopology::Circulant, 7, 0, kUnit);
        }) == ErrorCode::HopOutOfRange);
  CHECK(thrown_code([] {
          generate_named(NamedTopology::Circulant, 7, 4, kUnit);
        }) == ErrorCode::HopOutOfRange);
  CHECK_NOTHROW(generate_named(NamedTopology::Circulant, 7, 3, kUnit));
}

TEST_CASE("topology names parse") {
  CHECK(named_topology_from_string("star") == NamedTopology::Star);
  CHECK(named_topology_from_string("circulant") == NamedTopology::Circulant);
  CHECK(thrown_code([] { named_topology_from_string("torus"); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("tree decoding from the sequence encoding") {
  // all-zero code of length 5 -> star on 7 nodes with hub 0
  GridSpec star = tree_from_pruefer({0, 0, 0, 0, 0}, kUnit);
  CHECK(star.node_count() == 7);
  CHECK(is_tree(star));
  for (std::size_t leaf = 1; leaf < 7; ++leaf) CHECK(star.has_edge(0, leaf));

  // code (1,2,3,4,5) -> the path 0-1-2-3-4-5-6
  GridSpec path = tree_from_pruefer({1, 2, 3, 4, 5}, kUnit);
  CHECK(is_tree(path));
  CHECK(diameter(path) == 6);
  for (std::size_t i = 0; i + 1 < 7; ++i) CHECK(path.has_edge(i, i + 1));

  CHECK(thrown_code([] { tree_from_pruefer({7, 0, 0, 0, 0}, kUnit); }) ==
        ErrorCode::InvalidCode);
}

TEST_CASE("connectivity and metric helpers") {
  GridSpec split({gen(0), gen(1), gen(2), gen(3)},
                 {{0, 1, kUnit}, {2, 3, kUnit}});
  CHECK_FALSE(is_connected(split));
  CHECK_FALSE(is_tree(split));
  CHECK(thrown_code([&] { distance(split, 0, 3); }) == ErrorCode::Unreachable);
  CHECK(thrown_code([&] { diameter(split); }) == ErrorCode::Disconnected);

  GridSpec path = generate_named(NamedTopology::Path, 5, 0, kUnit);
  CHECK(distance(path, 0, 4) == 4);
  CHECK(distance(path, 2, 2) == 0);
  CHECK(is_tree(path));

  // ring is connected but not a tree
  GridSpec ring = generate_named(NamedTopology::Ring, 5, 0, kUnit);
  CHECK(is_connected(ring));
  CHECK_FALSE(is_tree(ring));
}

TEST_CASE("cycle length of a tree-closing edge") {
  GridSpec path = generate_named(NamedTopology::Path, 5, 0, kUnit);
  CHECK(cycle_length_of_edge(path, 0, 2) == 3);
  CHECK(cycle_length_of_edge(path, 0, 4) == 5);
  CHECK(thrown_code([&] { cycle_length_of_edge(path, 0, 1); }) ==
        ErrorCode::AlreadyAdjacent);
  CHECK(thrown_code([&] { cycle_length_of_edge(path, 3, 3); }) ==
        ErrorCode::InvalidArgument);

  GridSpec ring = generate_named(NamedTopology::Ring, 5, 0, kUnit);
  CHECK(thrown_code([&] { cycle_length_of_edge(ring, 0, 2); }) ==
        ErrorCode::NotATree);
}

TEST_CASE("tree centers") {
  GridSpec path5 = generate_named(NamedTopology::Path, 5, 0, kUnit);
  CHECK(center_nodes(path5) == std::vector<std::size_t>{2});

  GridSpec path4 = generate_named(NamedTopology::Path, 4, 0, kUnit);
  CHECK(center_nodes(path4) == std::vector<std::size_t>{1, 2});

  GridSpec star = generate_named(NamedTopology::Star, 7, 0, kUnit);
  CHECK(center_nodes(star) == std::vector<std::size_t>{0});
}

TEST_CASE("with_added_edge validates like the constructor") {
  GridSpec path = generate_named(NamedTopology::Path, 4, 0, kUnit);
  GridSpec closed = with_added_edge(path, 0, 3, kUnit);
  CHECK(closed.edge_count() == 4);
  CHECK(closed.has_edge(0, 3));
  CHECK_FALSE(is_tree(closed));
  CHECK(thrown_code([&] { with_added_edge(path, 0, 1, kUnit); }) ==
        ErrorCode::InvalidArgument);
}

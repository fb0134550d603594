#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gridstab/error.hpp"
#include "gridstab/grid.hpp"

namespace testsupport {

// Runs fn and returns the library error code it threw, or nullopt when it
// completed without throwing.  Lets tests assert on the exact code.
template <typename Fn>
std::optional<gridstab::ErrorCode> thrown_code(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const gridstab::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Random connected grid with one common branch admittance -j, between 2 and
// 11 generators plus 1..(12 - generators) loads, a random spanning tree plus
// extra chords, and a strictly positive shunt eps * (-j) on every load so the
// load block stays invertible after elimination.
inline gridstab::GridSpec random_uniform_grid(std::mt19937& rng) {
  using namespace gridstab;
  const Cx unit{0.0, -1.0};
  std::uniform_int_distribution<std::size_t> total_d(3, 12);
  const std::size_t v = total_d(rng);
  std::uniform_int_distribution<std::size_t> gen_d(2, v - 1);
  const std::size_t n_gen = gen_d(rng);
  std::uniform_real_distribution<double> eps_d(0.05, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<Node> nodes;
  nodes.reserve(v);
  for (std::size_t i = 0; i < v; ++i) {
    if (i < n_gen)
      nodes.push_back({i, NodeKind::Generator, Cx{}});
    else
      nodes.push_back({i, NodeKind::Load, Cx{0.0, -eps_d(rng)}});
  }

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < v; ++i) {
    std::uniform_int_distribution<std::size_t> parent_d(0, i - 1);
    edges.push_back({parent_d(rng), i, unit});
  }
  GridSpec tree(nodes, edges); // validates; also gives has_edge
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      if (!tree.has_edge(a, b) && coin(rng) < 0.25)
        edges.push_back({a, b, unit});
  return GridSpec(std::move(nodes), std::move(edges));
}

} // namespace testsupport

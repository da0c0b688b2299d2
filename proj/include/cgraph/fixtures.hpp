#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "cgraph/colored_graph.hpp"

// Reference graphs shipped with the library. Each has a twin file under
// fixtures/ holding its serialization.
namespace cgraph::fixtures {

/// Closed 2-vertex graph, one edge of each color 0..d.
ColoredGraph supermelon(int d = 3);
/// 2-vertex bubble, one edge of each color 1..d.
ColoredGraph melon_b2(int d = 3);
/// 4-vertex melonic bubble: two {2,3}-dipoles joined by color 1 edges.
ColoredGraph q1_b4();
/// 6-vertex melonic ring: three {2,3}-dipoles joined in a color 1 cycle.
ColoredGraph melon6a();
/// 6-vertex melonic nest: a {1,3}-dipole inserted on a color 2 edge of q1_b4.
ColoredGraph melon6b();
/// K_{3,3}; white i joins black j with color 1 + ((j - i) mod 3).
ColoredGraph k33();
/// The 3-cube; vertices are bit triples, an edge flipping bit k has color k+1.
ColoredGraph octa();

struct Fixture {
  std::string_view name;
  std::string_view file;
  ColoredGraph (*build)();
};

std::span<const Fixture> all();
std::optional<ColoredGraph> by_name(std::string_view name);

}  // namespace cgraph::fixtures

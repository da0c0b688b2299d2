#include "cgraph/fixtures.hpp"

#include <array>
#include <vector>

namespace cgraph::fixtures {

ColoredGraph supermelon(int d) {
  std::vector<Edge> edges;
  for (Color c = 0; c <= d; ++c) edges.push_back({0, 1, c});
  return ColoredGraph::from_edges(d, 2, edges, ColorSet::range(0, d));
}

ColoredGraph melon_b2(int d) {
  std::vector<Edge> edges;
  for (Color c = 1; c <= d; ++c) edges.push_back({0, 1, c});
  return ColoredGraph::from_edges(d, 2, edges, ColorSet::range(1, d));
}

ColoredGraph q1_b4() {
  return ColoredGraph::from_edges(3, 4,
                                  {{0, 3, 1}, {1, 2, 1},
                                   {0, 1, 2}, {2, 3, 2},
                                   {0, 1, 3}, {2, 3, 3}},
                                  ColorSet::range(1, 3));
}

ColoredGraph melon6a() {
  return ColoredGraph::from_edges(3, 6,
                                  {{0, 5, 1}, {1, 2, 1}, {3, 4, 1},
                                   {0, 1, 2}, {2, 3, 2}, {4, 5, 2},
                                   {0, 1, 3}, {2, 3, 3}, {4, 5, 3}},
                                  ColorSet::range(1, 3));
}

ColoredGraph melon6b() {
  return ColoredGraph::from_edges(3, 6,
                                  {{0, 3, 1}, {1, 2, 1}, {4, 5, 1},
                                   {0, 5, 2}, {1, 4, 2}, {2, 3, 2},
                                   {0, 1, 3}, {2, 3, 3}, {4, 5, 3}},
                                  ColorSet::range(1, 3));
}

ColoredGraph k33() {
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      edges.push_back({i, 3 + j, 1 + ((j - i + 3) % 3)});
    }
  }
  return ColoredGraph::from_edges(3, 6, edges, ColorSet::range(1, 3));
}

ColoredGraph octa() {
  std::vector<Edge> edges;
  for (int k = 0; k < 3; ++k) {
    for (int x = 0; x < 8; ++x) {
      if ((x >> k & 1) == 0) edges.push_back({x, x | (1 << k), k + 1});
    }
  }
  return ColoredGraph::from_edges(3, 8, edges, ColorSet::range(1, 3));
}

namespace {

ColoredGraph supermelon3() { return supermelon(3); }
ColoredGraph melon_b2_3() { return melon_b2(3); }

constexpr std::array<Fixture, 7> kFixtures{{
    {"SUPERMELON3", "supermelon3.cg", &supermelon3},
    {"MELON_B2", "melon_b2.cg", &melon_b2_3},
    {"Q1_B4", "q1b4.cg", &q1_b4},
    {"MELON6A", "melon6a.cg", &melon6a},
    {"MELON6B", "melon6b.cg", &melon6b},
    {"K33", "k33.cg", &k33},
    {"OCTA", "octa.cg", &octa},
}};

}  // namespace

std::span<const Fixture> all() { return kFixtures; }

std::optional<ColoredGraph> by_name(std::string_view name) {
  for (const Fixture& f : kFixtures) {
    if (f.name == name) return f.build();
  }
  return std::nullopt;
}

}  // namespace cgraph::fixtures

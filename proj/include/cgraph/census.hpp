#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cgraph/colored_graph.hpp"

namespace cgraph {

struct ColorPair {
  Color a = 0;  // a < b
  Color b = 0;

  friend auto operator<=>(const ColorPair&, const ColorPair&) = default;
};

struct PairCycles {
  int count = 0;
  // Each cycle starts at its smallest edge id, walked from that edge's white
  // endpoint.
  std::vector<std::vector<EdgeId>> cycles;
};

struct CycleCensus {
  ColorSet support;
  std::map<ColorPair, PairCycles> pairs;

  int count(Color a, Color b) const;
  /// Cycles of colors {0, c}, summed over c.
  int c0() const;
  /// All bicolored cycles.
  int total() const;
  /// `pair a b count=k` per pair, then one `cycle ...` line per cycle.
  std::string to_text() const;
};

/// Every bicolored cycle of every color pair in the support.
CycleCensus cycle_census(const ColoredGraph& g);

/// The {a,b}-cycles in census order and orientation.
std::vector<std::vector<EdgeId>> bicolored_cycles(const ColoredGraph& g,
                                                  Color a, Color b);
int count_bicolored_cycles(const ColoredGraph& g, Color a, Color b);
/// C_0 without materializing cycles; requires color 0 in the support.
int count_zero_cycles(const ColoredGraph& g);

/// Exact p/q with q > 0, kept reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  bool is_integer() const { return den == 1; }
  std::string to_string() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct GurauDegree {
  Rational value;
  int vertices = 0;        // number of d-simplices
  int bicolored_cycles = 0;  // number of (d-2)-simplices

  bool is_nonnegative_integer() const {
    return value.is_integer() && value.num >= 0;
  }
};

/// omega = d + d(d-1)/4 * n - C for a connected closed graph.
/// Throws GraphError for bubbles or disconnected input.
GurauDegree gurau_degree(const ColoredGraph& g);

struct PBubble {
  std::vector<Vertex> vertices;  // sorted
  std::vector<EdgeId> edges;     // sorted
};

struct PBubbleCensus {
  ColorSet colors;
  std::vector<PBubble> components;  // ordered by smallest vertex

  int count() const { return static_cast<int>(components.size()); }
};

/// Connected components of the restriction to the colors in P, all vertices
/// kept.
PBubbleCensus p_bubbles(const ColoredGraph& g, ColorSet colors);

/// A P-bubble as a standalone graph: vertices renumbered in increasing order,
/// colors of P relabeled order-preservingly to 1..|P|, dimension |P|.
ColoredGraph extract_p_bubble(const ColoredGraph& g, const PBubble& bubble,
                              ColorSet colors);

/// Vertices of H whose color 0 edge leaves H or is absent.
std::vector<Vertex> free_vertices(const ColoredGraph& g,
                                  std::span<const Vertex> region);

/// True when every non-zero color at every vertex of H stays inside H.
bool is_colored_subgraph(const ColoredGraph& g, std::span<const Vertex> region);

struct BoundaryBubble {
  ColoredGraph graph;
  // original_vertex[i] is the id in the host graph of boundary vertex i;
  // increasing.
  std::vector<Vertex> original_vertex;
};

/// Bubble on the free vertices of H with one edge of color c per open
/// {0,c}-path through H. Throws GraphError if H is not a colored subgraph or
/// has no free vertex.
BoundaryBubble boundary_bubble(const ColoredGraph& g,
                               std::span<const Vertex> region);

struct BoundaryReplacement {
  ColoredGraph graph;
  std::vector<Vertex> vertex_map;  // host vertex -> new vertex, or -1
  std::vector<EdgeId> edge_map;    // host edge -> new edge, or -1
  std::vector<Vertex> boundary;    // new ids of the free vertices of H
};

/// The host graph with H replaced by its boundary bubble. Vertices outside H
/// and free vertices survive (renumbered in increasing order); edges outside
/// H and the color 0 edges at free vertices survive.
BoundaryReplacement replace_with_boundary(const ColoredGraph& g,
                                          std::span<const Vertex> region);

struct ZeroCycleSplit {
  int inside = 0;    // all vertices in the region
  int outside = 0;   // no vertex in the region
  int crossing = 0;  // the rest

  int total() const { return inside + outside + crossing; }
};

/// Classifies the {0,c}-cycles of g against a vertex region.
ZeroCycleSplit split_zero_cycles(const ColoredGraph& g,
                                 std::span<const Vertex> region);

/// Colors c in 1..d whose {0,c}-cycle through e1 also runs along e2.
/// Throws GraphError unless e1 != e2 and both have color 0.
ColorSet interaction_colors(const ColoredGraph& g, EdgeId e1, EdgeId e2);

}  // namespace cgraph

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgraph/census.hpp"
#include "cgraph/colored_graph.hpp"

namespace cgraph {

struct FlipResult {
  // Same vertex ids and edge ids as the input; only the two color 0 edges
  // change endpoints. May be disconnected.
  ColoredGraph graph;
  // Connected components of `graph`, ordered by smallest vertex.
  std::vector<ColoredGraph> components;
  int c0_before = 0;
  int c0_after = 0;  // summed over components
  ColorSet interaction;  // I(e1, e2) in the input graph

  bool connected() const { return components.size() == 1; }
  /// c0_before - d + 2|I|; the exact outcome whenever the flip stays connected.
  int predicted_c0() const;
};

/// Swaps the black ends of two color 0 edges: white(e1)-black(e2) and
/// white(e2)-black(e1). Throws GraphError on bad edges.
FlipResult flip(const ColoredGraph& g, EdgeId e1, EdgeId e2);

enum class ContractionCase {
  // e is parallel to two non-zero colors.
  TwoParallel,
  // e is parallel to one non-zero color and the bubble stays connected.
  OneParallel,
  // e is parallel to one non-zero color and the bubble splits in two.
  OneParallelSplit,
  // No non-zero edge is parallel to e.
  NoParallel,
};

std::string to_string(ContractionCase c);

struct ContractionResult {
  ColoredGraph graph;  // possibly disconnected
  std::vector<ColoredGraph> components;
  ContractionCase kind = ContractionCase::NoParallel;
  ColorSet parallel;  // non-zero colors parallel to e
  int c0_before = 0;
  int c0_after = 0;
  // Equal to -|parallel|: -2, -1, -1, 0 by case.
  int expected_delta = 0;
};

/// Removes both ends of the color 0 edge e and joins the liberated ends of
/// each other color; edges parallel to e vanish. Throws GraphError on a
/// wrong color or when e joins a 2-vertex component.
ContractionResult contract(const ColoredGraph& g, EdgeId e);

struct Dipole {
  Vertex white = 0;
  Vertex black = 0;
  ColorSet colors;      // H: colors of the parallel edges
  ColorSet complement;  // P: support minus H
  bool distinct_bubbles = false;
  // Genus of the P-bubble at each end when |P| = 3, else empty.
  std::optional<int> genus_white;
  std::optional<int> genus_black;
  bool ball_white = false;
  bool ball_black = false;

  int h() const { return colors.size(); }
  bool removable() const { return distinct_bubbles && !complement.empty(); }
  bool topological() const {
    return removable() && (ball_white || ball_black);
  }
  std::string to_string() const;
};

/// Every adjacent vertex pair, annotated. A P-bubble counts as a ball when
/// |P| <= 2, or |P| = 3 and its canonical embedding is planar. Ordered by
/// (white, black).
std::vector<Dipole> find_dipoles(const ColoredGraph& g);

/// Annotates one adjacent pair.
Dipole describe_dipole(const ColoredGraph& g, Vertex white, Vertex black);

struct InsertionSite {
  ColorSet colors;  // H
  // One edge of the reduced graph per color of P, as (color, edge id).
  std::vector<std::pair<Color, EdgeId>> cuts;
  // Vertex ids the new pair takes; later vertices shift up.
  Vertex white_position = 0;
  Vertex black_position = 0;
};

struct DipoleRemoval {
  ColoredGraph graph;
  bool topological = false;
  InsertionSite site;
};

/// Deletes both vertices and rejoins the hanging edge ends of each color of
/// P. Throws GraphError unless the pair is a removable dipole of g.
DipoleRemoval remove_dipole(const ColoredGraph& g, const Dipole& dip);

/// Cuts each listed edge and reconnects through a new pair joined by the
/// colors of H: the new white vertex takes the black ends, the new black
/// vertex the white ends. Throws GraphError on an inconsistent site.
ColoredGraph insert_dipole(const ColoredGraph& g, const InsertionSite& site);

struct ConnectedSum {
  ColoredGraph graph;
  std::string caveat;
};

/// Deletes black v1 of g1 and white v2 of g2 and joins the hanging ends of
/// equal colors. Vertices of g1 come first.
ConnectedSum connected_sum(const ColoredGraph& g1, Vertex v1,
                           const ColoredGraph& g2, Vertex v2);

enum class ReductionVerdict { CanonicalSphere, Stuck };

std::string to_string(ReductionVerdict v);

struct AppliedMove {
  Dipole dipole;
  bool topological = false;
  int vertices_after = 0;
};

struct ReductionTrace {
  std::vector<AppliedMove> moves;
  ColoredGraph terminal;
  ReductionVerdict verdict = ReductionVerdict::Stuck;
  bool budget_exhausted = false;

  std::string to_text() const;
};

/// Greedy topological dipole removal on a connected closed d = 3 graph.
/// Priority h = 2, then h = 1, then h = 3; ties by smallest vertex pair.
/// `max_moves` <= 0 means 10 n.
ReductionTrace reduce_to_canonical(const ColoredGraph& g, int max_moves = 0);

}  // namespace cgraph

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgraph/canonical.hpp"
#include "cgraph/colored_graph.hpp"

namespace cgraph {

/// Map data of the canonical embedding of a cubic 3-colored graph: rotation
/// (123) at white vertices, (132) at black ones; faces are bicolored cycles.
struct EmbeddingStats {
  int V = 0;
  int E = 0;
  int F = 0;
  int genus = 0;
  std::map<int, int> face_profile;  // face degree -> count

  int faces_of_degree(int degree) const;
  /// `V E F genus` then `profile deg:count ...` in increasing degree.
  std::string to_text() const;
};

/// Requires a connected graph whose support has exactly three colors; they
/// are read as 1, 2, 3 in increasing order. Throws GraphError otherwise.
EmbeddingStats embedding_stats(const ColoredGraph& b);

bool is_planar(const ColoredGraph& b);

/// Restricts to three colors and relabels them order-preservingly to 1..3.
ColoredGraph relabel_three_colors(const ColoredGraph& g, ColorSet colors);

struct MelonicStep {
  // Vertex ids in the graph the step is applied to.
  Vertex white = 0;
  Vertex black = 0;
  // The one color not shared by the pair; its two outer edges are rejoined.
  Color color = 0;
};

struct MelonicWitness {
  std::vector<MelonicStep> steps;
  bool melonic = false;
};

/// Repeatedly removes a pair joined by all colors but one and rejoins the
/// remaining color. Melonic iff a 2-vertex graph is reached. With a seed the
/// candidate pairs are scanned in a shuffled order.
MelonicWitness is_melonic(const ColoredGraph& b,
                          std::optional<std::uint64_t> shuffle_seed = {});

/// Removes one melonic pair.
ColoredGraph melonic_remove(const ColoredGraph& g, const MelonicStep& step);

/// Applies the witness steps in order and returns the final graph.
ColoredGraph replay(const ColoredGraph& b, const MelonicWitness& witness);

/// Cuts edge e of color c and inserts a pair joined by every other color of
/// the support. New vertices are appended (white, then black).
ColoredGraph melonic_insert(const ColoredGraph& g, EdgeId e);

struct FaceBoundReport {
  int f2 = 0;
  int f4 = 0;
  int lhs = 0;  // 2*F2 + F4
  bool holds = false;
  std::map<int, int> face_profile;
};

/// Checks 2 F2 + F4 >= 6, and F4 >= 6 when F2 = 0. Throws GraphError on a
/// non-planar bubble.
FaceBoundReport check_face_bound(const ColoredGraph& b);

/// All connected bubbles at d = 3 with the given vertex count, one per
/// isomorphism class of the mode. Color 1 is fixed to join white i and black
/// i; colors 2 and 3 range over all permutations. Output is sorted by code.
std::vector<ColoredGraph> generate_bubbles(int vertices, CanonicalMode mode,
                                           int jobs = 1);

/// All melonic bubbles at d = 3 up to the vertex bound, colors fixed, sorted
/// by vertex count then code.
std::vector<ColoredGraph> generate_melonic_bubbles(int max_vertices);

}  // namespace cgraph

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgraph {

using Vertex = int;
using EdgeId = int;
using Color = int;

inline constexpr int kMaxDimension = 30;
inline constexpr EdgeId kNoEdge = -1;

enum class Parity : std::uint8_t { White, Black };

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Small set of colors stored as a bitmask; colors are 0..kMaxDimension.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  /// Inclusive range lo..hi; empty when hi < lo.
  static constexpr ColorSet range(Color lo, Color hi) {
    ColorSet s;
    for (Color c = lo; c <= hi; ++c) s.insert(c);
    return s;
  }

  constexpr bool contains(Color c) const {
    return c >= 0 && c <= kMaxDimension && ((bits_ >> c) & 1u) != 0;
  }
  constexpr void insert(Color c) { bits_ |= (1u << c); }
  constexpr void erase(Color c) { bits_ &= ~(1u << c); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool is_subset_of(ColorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Largest color present, or -1.
  constexpr Color max() const {
    return bits_ == 0 ? -1 : 31 - std::countl_zero(bits_);
  }

  std::vector<Color> to_vector() const;
  std::string to_string() const;

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) {
    return ColorSet(a.bits_ | b.bits_);
  }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) {
    return ColorSet(a.bits_ & b.bits_);
  }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) {
    return ColorSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet, ColorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

enum class ViolationKind {
  BadDimension,
  VertexCount,
  VertexOutOfRange,
  ColorOutOfRange,
  SelfLoop,
  NotBipartite,
  RepeatedColor,
  MissingColor,
  Unbalanced,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string to_string() const;
};

/// Unvalidated graph data, as read from a file or assembled by a rewrite.
struct RawGraph {
  int dimension = 0;
  int vertex_count = 0;
  std::vector<Edge> edges;
  // When absent: {0..d} if any edge has color 0, {1..d} otherwise.
  std::optional<ColorSet> support;
  // When absent: 2-colored per component, lowest vertex white.
  std::optional<std::vector<Parity>> parity;
};

ColorSet infer_support(const RawGraph& raw);

/// Checks every ColoredGraph invariant; an empty report certifies them.
ValidationReport validate(const RawGraph& raw);

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public GraphError {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A bipartite multigraph in which every vertex carries exactly one edge of
/// each color of the support. Immutable once built.
class ColoredGraph {
 public:
  /// Empty placeholder with no vertices; only useful as an assignment target.
  ColoredGraph() = default;

  /// Validates and builds; throws ValidationError.
  static ColoredGraph from_raw(RawGraph raw);
  static ColoredGraph from_edges(int dimension, int vertex_count,
                                 std::vector<Edge> edges, ColorSet support,
                                 std::optional<std::vector<Parity>> parity = {});

  int dimension() const { return dimension_; }
  int vertex_count() const { return static_cast<int>(parity_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  ColorSet support() const { return support_; }
  /// Support is {0..d}.
  bool is_closed() const { return support_ == ColorSet::range(0, dimension_); }
  /// Support is {1..d}.
  bool is_bubble_colored() const {
    return support_ == ColorSet::range(1, dimension_);
  }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  Parity parity(Vertex v) const { return parity_.at(v); }
  bool is_white(Vertex v) const { return parity_.at(v) == Parity::White; }
  std::span<const Parity> parities() const { return parity_; }

  /// The edge of color c at v, or kNoEdge when c is outside the support.
  EdgeId edge_at(Vertex v, Color c) const {
    return incidence_[static_cast<std::size_t>(v) * stride_ + c];
  }
  Vertex neighbor(Vertex v, Color c) const {
    return other_end(edge_at(v, c), v);
  }
  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }
  Vertex white_end(EdgeId e) const {
    const Edge& ed = edges_[e];
    return is_white(ed.u) ? ed.u : ed.v;
  }
  Vertex black_end(EdgeId e) const {
    const Edge& ed = edges_[e];
    return is_white(ed.u) ? ed.v : ed.u;
  }

  std::vector<Vertex> white_vertices() const;
  std::vector<Vertex> black_vertices() const;

  /// Colors of the edges joining a and b.
  ColorSet colors_between(Vertex a, Vertex b) const;

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  /// Component index per vertex, numbered as in components().
  std::vector<int> component_ids() const;
  bool is_connected() const;

  /// Edges normalized to u < v and sorted by (color, u, v, id).
  std::vector<Edge> sorted_edges() const;

  /// Same dimension, support, vertex count, parities and edge multiset.
  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b);

 private:
  int dimension_ = 0;
  int stride_ = 0;
  ColorSet support_;
  std::vector<Edge> edges_;
  std::vector<Parity> parity_;
  std::vector<EdgeId> incidence_;
};

/// Deletes the `removed` vertices (and their edges), adds `extra` edges given
/// in old vertex ids, and renumbers the survivors in increasing order.
/// Kept edges retain their relative order and precede the extra ones.
ColoredGraph rewire(const ColoredGraph& g, std::span<const Vertex> removed,
                    std::span<const Edge> extra);

/// Old-to-new vertex map used by rewire(); -1 for removed vertices.
std::vector<Vertex> survivor_map(int vertex_count,
                                 std::span<const Vertex> removed);

/// Subgraph on a vertex set closed under the graph's edges, renumbered in
/// increasing vertex order. Parities are inherited.
ColoredGraph induced_subgraph(const ColoredGraph& g,
                              std::span<const Vertex> vertices);

/// Vertex-disjoint union with vertices offset in list order.
ColoredGraph disjoint_union(std::span<const ColoredGraph> graphs);

}  // namespace cgraph

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgraph/canonical.hpp"
#include "cgraph/colored_graph.hpp"

namespace cgraph {

inline constexpr int kDefaultVertexBudget = 16;

class BudgetExceeded : public GraphError {
 public:
  using GraphError::GraphError;
};

/// The color 0 perfect matchings of a disjoint union of bubbles, with a fast
/// C_0 kernel. A matching is stored as a vector `m` over white indices:
/// white_vertices()[i] is joined to black_vertices()[m[i]].
class GluingSpace {
 public:
  /// Throws BudgetExceeded when the union has more than `budget` vertices.
  explicit GluingSpace(std::span<const ColoredGraph> bubbles,
                       int budget = kDefaultVertexBudget);

  const ColoredGraph& bubble_union() const { return union_; }
  int white_count() const { return static_cast<int>(whites_.size()); }
  std::span<const Vertex> white_vertices() const { return whites_; }
  std::span<const Vertex> black_vertices() const { return blacks_; }
  /// Occurrence index of each union vertex.
  std::span<const int> occurrence() const { return occurrence_; }
  int occurrence_count() const { return occurrences_; }
  /// Vertex range [first, first + size) of occurrence k in the union.
  std::pair<Vertex, int> occurrence_range(int k) const;

  /// Number of {0,c}-cycles summed over c, from permutation cycles.
  int c0(std::span<const int> matching) const;
  /// True when the closed graph is connected.
  bool connected(std::span<const int> matching) const;
  /// The closed graph: union edges first, then color 0 edges by white index.
  ColoredGraph close(std::span<const int> matching) const;

 private:
  ColoredGraph union_;
  std::vector<Vertex> whites_;
  std::vector<Vertex> blacks_;
  std::vector<int> white_index_;  // vertex -> index among whites, or -1
  std::vector<int> black_index_;
  // next_[c][j]: white index reached from black j along color c.
  std::vector<std::vector<int>> next_;
  std::vector<int> occurrence_;
  std::vector<std::pair<Vertex, int>> ranges_;
  int occurrences_ = 0;
};

struct SearchOptions {
  int budget = kDefaultVertexBudget;
  int jobs = 1;
  // Only explores one image of the first white vertex per orbit of its
  // stabilizer; the maximum is exact, the maximizer list is not complete.
  bool symmetry_pruning = false;
};

/// Receives a matching and the id of the worker thread visiting it.
using MatchingVisitor = std::function<void(std::span<const int>, int)>;

/// Worker ids passed to visitors are below this.
int worker_count(const SearchOptions& opts);

/// Calls `fn` for every matching in lexicographic order when jobs = 1. With
/// jobs > 1, the image of white 0 partitions the work and partitions run
/// concurrently; `fn` must be safe to call from several workers at once.
void for_each_matching(const GluingSpace& space, const SearchOptions& opts,
                       const MatchingVisitor& fn);

struct Pairing {
  // match[i]: black vertex (bubble id) paired with the i-th white vertex.
  std::vector<Vertex> match;
  bool connected = false;
  int c0 = 0;
};

/// All V! pairings of a bubble in lexicographic order of the white-to-black
/// assignment.
std::vector<Pairing> enumerate_pairings(const ColoredGraph& bubble);

/// The closed graph of a pairing: bubble edges then color 0 edges.
ColoredGraph close_pairing(const ColoredGraph& bubble,
                           std::span<const Vertex> match);

struct MaxReport {
  int maximum = -1;  // -1 when nothing connected was enumerated
  std::int64_t enumerated = 0;
  std::int64_t connected = 0;
  std::int64_t disconnected = 0;
  // Raw maximizing matchings (white index -> black index), sorted.
  std::vector<std::vector<int>> maximizer_matchings;
  // One graph per colors-fixed isomorphism class of maximizers, by code.
  std::vector<ColoredGraph> maximizers;
  bool pruned = false;

  std::int64_t maximizer_count() const {
    return static_cast<std::int64_t>(maximizer_matchings.size());
  }
  std::string to_text() const;
};

MaxReport max_over(const GluingSpace& space, const SearchOptions& opts = {});
MaxReport max_pairings(const ColoredGraph& bubble,
                       const SearchOptions& opts = {});
MaxReport max_gluings(std::span<const ColoredGraph> bubbles,
                      const SearchOptions& opts = {});

/// Closed graphs of every matching (connected ones only when asked), in
/// lexicographic order.
std::vector<ColoredGraph> enumerate_gluings(
    std::span<const ColoredGraph> bubbles, bool connected_only,
    int budget = kDefaultVertexBudget);

/// The {1..d}-bubbles of a closed graph as vertex sets, ordered by smallest
/// vertex.
std::vector<std::vector<Vertex>> bubble_occurrences(const ColoredGraph& g);

struct CutPartition {
  std::vector<Vertex> bubble;    // sorted vertices of the occurrence
  std::vector<EdgeId> internal;  // color 0 edges with both ends in it
  // Crossing color 0 edges grouped by the component of G minus the bubble
  // they reach; classes ordered by their smallest edge id.
  std::vector<std::vector<EdgeId>> classes;

  std::vector<int> class_sizes() const;
};

/// Throws GraphError unless `bubble` is a bubble occurrence of g.
CutPartition edge_cut_partition(const ColoredGraph& g,
                                std::span<const Vertex> bubble);

/// Memoized C_1 per colors-fixed bubble class. Thread-safe.
class C1Cache {
 public:
  int c1(const ColoredGraph& bubble);

 private:
  std::mutex mu_;
  std::map<CanonicalCode, int> values_;
};

struct MaxTwoCutVerdict {
  bool holds = false;
  // Pairing assembled from internal edges and 2-cuts, as (white, black)
  // host vertex pairs; empty when some class is not of size 2.
  std::vector<std::pair<Vertex, Vertex>> pairing;
  std::vector<int> bad_class_sizes;
  int pairing_c0 = -1;
  bool pairing_connected = false;
  int c1 = -1;
  std::string violation;
};

MaxTwoCutVerdict check_max_two_cut(const ColoredGraph& g,
                                   std::span<const Vertex> bubble,
                                   C1Cache& cache);

struct QEdgesReport {
  bool hypothesis = false;  // v, vbar joined by q > d/2 edges
  int q = 0;
  std::int64_t maximizers = 0;
  std::int64_t counterexamples = 0;
  bool holds() const { return hypothesis && counterexamples == 0; }
};

/// Checks that every maximizing pairing matches white v with black vbar.
QEdgesReport lemma_qedges_check(const ColoredGraph& bubble, Vertex v,
                                Vertex vbar);

struct OnlyPlanarReport {
  int marked = 0;
  std::vector<int> c1;  // per input bubble
  int formula = 0;
  int brute_force = -1;
  std::int64_t connected_gluings = 0;
  std::int64_t maximizers = 0;
  std::int64_t all_max_two_cut = 0;   // connected gluings passing every bubble
  std::int64_t mismatches = 0;        // maximizer xor all-pass
  std::int64_t four_cut_maximizers = 0;
  std::vector<std::string> failures;

  bool ok() const {
    return formula == brute_force && mismatches == 0 && failures.empty();
  }
  std::string to_text() const;
};

/// Brute force against C_1(B) + sum (C_1(B_i) - 3), and maximizer iff every
/// bubble has the maximal 2-cut property, over every connected gluing.
/// Throws GraphError when an unmarked bubble is not planar.
OnlyPlanarReport verify_only_planar(std::span<const ColoredGraph> bubbles,
                                    int marked = 0,
                                    const SearchOptions& opts = {});

}  // namespace cgraph

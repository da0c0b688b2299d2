#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cgraph/colored_graph.hpp"

namespace cgraph {

enum class CanonicalMode : std::uint8_t {
  ColorsFixed,
  // Colors 1..d may be permuted; color 0 never is.
  ColorsPermutable,
};

/// Byte string identifying an isomorphism class under the mode's relabelings.
struct CanonicalCode {
  CanonicalMode mode = CanonicalMode::ColorsFixed;
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    if (auto c = a.mode <=> b.mode; c != 0) return c;
    return a.bytes <=> b.bytes;
  }

  std::string hex() const;
};

/// Exact canonical code of a connected graph. Vertex classes are refined by
/// bicolored cycle lengths and iterated color-labelled neighborhoods; every
/// vertex of the smallest class is then tried as a traversal root and the
/// least traversal code wins. Throws GraphError on disconnected input.
CanonicalCode canonical_form(const ColoredGraph& g, CanonicalMode mode);

/// Code of a possibly disconnected graph: sorted multiset of component codes.
CanonicalCode canonical_form_components(const ColoredGraph& g,
                                        CanonicalMode mode);

/// Color-preserving isomorphisms between two connected graphs, as vertex maps
/// from `a` to `b`. Empty when not isomorphic.
std::vector<std::vector<Vertex>> isomorphisms(const ColoredGraph& a,
                                              const ColoredGraph& b);

}  // namespace cgraph

#include "cgraph/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace cgraph {

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (Color c = 0; c <= kMaxDimension; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

std::string ColorSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Color c : to_vector()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::BadDimension: return "bad-dimension";
    case ViolationKind::VertexCount: return "vertex-count";
    case ViolationKind::VertexOutOfRange: return "vertex-out-of-range";
    case ViolationKind::ColorOutOfRange: return "color-out-of-range";
    case ViolationKind::SelfLoop: return "self-loop";
    case ViolationKind::NotBipartite: return "not-bipartite";
    case ViolationKind::RepeatedColor: return "repeated-color";
    case ViolationKind::MissingColor: return "missing-color";
    case ViolationKind::Unbalanced: return "unbalanced";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << cgraph::to_string(v.kind) << ": " << v.message << '\n';
  }
  return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : GraphError("invalid colored graph:\n" + report.to_string()),
      report_(std::move(report)) {}

ColorSet infer_support(const RawGraph& raw) {
  bool has_zero = std::any_of(raw.edges.begin(), raw.edges.end(),
                              [](const Edge& e) { return e.color == 0; });
  return ColorSet::range(has_zero ? 0 : 1, raw.dimension);
}

namespace {

void add(ValidationReport& report, ViolationKind kind, std::string message,
         std::vector<Vertex> vertices = {}, std::vector<EdgeId> edges = {}) {
  report.violations.push_back(
      {kind, std::move(vertices), std::move(edges), std::move(message)});
}

// Derives a 2-coloring, lowest vertex of each component white. Returns the
// first edge breaking bipartiteness, if any.
std::optional<EdgeId> two_color(int n, std::span<const Edge> edges,
                                std::vector<Parity>& parity) {
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(n);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    adj[edges[e].u].push_back({edges[e].v, e});
    adj[edges[e].v].push_back({edges[e].u, e});
  }
  parity.assign(n, Parity::White);
  std::vector<bool> seen(n, false);
  std::optional<EdgeId> conflict;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto [y, e] : adj[x]) {
        Parity want = parity[x] == Parity::White ? Parity::Black : Parity::White;
        if (!seen[y]) {
          seen[y] = true;
          parity[y] = want;
          stack.push_back(y);
        } else if (parity[y] != want && !conflict) {
          conflict = e;
        }
      }
    }
  }
  return conflict;
}

}  // namespace

ValidationReport validate(const RawGraph& raw) {
  ValidationReport report;
  const int d = raw.dimension;
  const int n = raw.vertex_count;
  if (d < 1 || d > kMaxDimension) {
    add(report, ViolationKind::BadDimension,
        "dimension " + std::to_string(d) + " outside 1.." +
            std::to_string(kMaxDimension));
    return report;
  }
  if (n < 2 || n % 2 != 0) {
    add(report, ViolationKind::VertexCount,
        "vertex count " + std::to_string(n) + " must be even and at least 2");
  }
  if (n < 0) return report;
  ColorSet support = raw.support.value_or(infer_support(raw));
  if (!support.is_subset_of(ColorSet::range(0, d)) || support.empty()) {
    add(report, ViolationKind::ColorOutOfRange,
        "support " + support.to_string() + " not a nonempty subset of 0.." +
            std::to_string(d));
    return report;
  }

  bool endpoints_ok = true;
  for (EdgeId e = 0; e < static_cast<EdgeId>(raw.edges.size()); ++e) {
    const Edge& ed = raw.edges[e];
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n) {
      add(report, ViolationKind::VertexOutOfRange,
          "edge " + std::to_string(e) + " has an endpoint outside 0.." +
              std::to_string(n - 1),
          {ed.u, ed.v}, {e});
      endpoints_ok = false;
      continue;
    }
    if (ed.u == ed.v) {
      add(report, ViolationKind::SelfLoop,
          "edge " + std::to_string(e) + " is a self-loop at vertex " +
              std::to_string(ed.u),
          {ed.u}, {e});
    }
    if (!support.contains(ed.color)) {
      add(report, ViolationKind::ColorOutOfRange,
          "edge " + std::to_string(e) + " has color " +
              std::to_string(ed.color) + " outside support " +
              support.to_string(),
          {ed.u, ed.v}, {e});
    }
  }
  if (!endpoints_ok) return report;

  // Properness: one edge per (vertex, color).
  std::vector<std::vector<EdgeId>> slots(
      static_cast<std::size_t>(n) * (d + 1));
  for (EdgeId e = 0; e < static_cast<EdgeId>(raw.edges.size()); ++e) {
    const Edge& ed = raw.edges[e];
    if (ed.color < 0 || ed.color > d) continue;
    slots[static_cast<std::size_t>(ed.u) * (d + 1) + ed.color].push_back(e);
    if (ed.v != ed.u) {
      slots[static_cast<std::size_t>(ed.v) * (d + 1) + ed.color].push_back(e);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Color c : support.to_vector()) {
      const auto& s = slots[static_cast<std::size_t>(v) * (d + 1) + c];
      if (s.size() > 1) {
        add(report, ViolationKind::RepeatedColor,
            "vertex " + std::to_string(v) + " has " + std::to_string(s.size()) +
                " edges of color " + std::to_string(c),
            {v}, s);
      } else if (s.empty()) {
        add(report, ViolationKind::MissingColor,
            "vertex " + std::to_string(v) + " has no edge of color " +
                std::to_string(c),
            {v});
      }
    }
  }

  // Bipartiteness, against the given parity or a derived one.
  std::vector<Parity> parity;
  if (raw.parity) {
    parity = *raw.parity;
    if (static_cast<int>(parity.size()) != n) {
      add(report, ViolationKind::NotBipartite,
          "parity vector has wrong length");
      return report;
    }
    for (EdgeId e = 0; e < static_cast<EdgeId>(raw.edges.size()); ++e) {
      const Edge& ed = raw.edges[e];
      if (parity[ed.u] == parity[ed.v]) {
        add(report, ViolationKind::NotBipartite,
            "edge " + std::to_string(e) + " joins two vertices of equal parity",
            {ed.u, ed.v}, {e});
      }
    }
  } else if (auto bad = two_color(n, raw.edges, parity)) {
    const Edge& ed = raw.edges[*bad];
    add(report, ViolationKind::NotBipartite,
        "edge " + std::to_string(*bad) + " closes an odd cycle", {ed.u, ed.v},
        {*bad});
  }
  if (!report.has(ViolationKind::NotBipartite)) {
    long whites = std::count(parity.begin(), parity.end(), Parity::White);
    if (2 * whites != n) {
      add(report, ViolationKind::Unbalanced,
          std::to_string(whites) + " white vertices out of " +
              std::to_string(n));
    }
  }
  return report;
}

ColoredGraph ColoredGraph::from_raw(RawGraph raw) {
  ValidationReport report = validate(raw);
  if (!report.ok()) throw ValidationError(std::move(report));

  ColoredGraph g;
  g.dimension_ = raw.dimension;
  g.stride_ = raw.dimension + 1;
  g.support_ = raw.support.value_or(infer_support(raw));
  g.edges_ = std::move(raw.edges);
  const int n = raw.vertex_count;
  if (raw.parity) {
    g.parity_ = std::move(*raw.parity);
  } else {
    two_color(n, g.edges_, g.parity_);
  }
  g.incidence_.assign(static_cast<std::size_t>(n) * g.stride_, kNoEdge);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges_[e];
    g.incidence_[static_cast<std::size_t>(ed.u) * g.stride_ + ed.color] = e;
    g.incidence_[static_cast<std::size_t>(ed.v) * g.stride_ + ed.color] = e;
  }
  return g;
}

ColoredGraph ColoredGraph::from_edges(int dimension, int vertex_count,
                                      std::vector<Edge> edges,
                                      ColorSet support,
                                      std::optional<std::vector<Parity>> parity) {
  return from_raw(RawGraph{dimension, vertex_count, std::move(edges), support,
                           std::move(parity)});
}

std::vector<Vertex> ColoredGraph::white_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (is_white(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> ColoredGraph::black_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (!is_white(v)) out.push_back(v);
  }
  return out;
}

ColorSet ColoredGraph::colors_between(Vertex a, Vertex b) const {
  ColorSet out;
  for (Color c : support_.to_vector()) {
    if (neighbor(a, c) == b) out.insert(c);
  }
  return out;
}

std::vector<int> ColoredGraph::component_ids() const {
  const int n = vertex_count();
  std::vector<int> comp(n, -1);
  const std::vector<Color> colors = support_.to_vector();
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Color c : colors) {
        Vertex y = neighbor(x, c);
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<Vertex>> ColoredGraph::components() const {
  std::vector<int> comp = component_ids();
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < vertex_count(); ++v) out[comp[v]].push_back(v);
  return out;
}

bool ColoredGraph::is_connected() const {
  std::vector<int> comp = component_ids();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<Edge> ColoredGraph::sorted_edges() const {
  std::vector<std::pair<Edge, EdgeId>> keyed;
  keyed.reserve(edges_.size());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    Edge ed = edges_[e];
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    keyed.push_back({ed, e});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.color, a.first.u, a.first.v, a.second) <
           std::tie(b.first.color, b.first.u, b.first.v, b.second);
  });
  std::vector<Edge> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.push_back(k.first);
  return out;
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
  return a.dimension_ == b.dimension_ && a.support_ == b.support_ &&
         a.parity_ == b.parity_ && a.sorted_edges() == b.sorted_edges();
}

std::vector<Vertex> survivor_map(int vertex_count,
                                 std::span<const Vertex> removed) {
  std::vector<Vertex> map(vertex_count, 0);
  for (Vertex v : removed) map.at(v) = -1;
  Vertex next = 0;
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (map[v] == 0) map[v] = next++;
  }
  return map;
}

ColoredGraph rewire(const ColoredGraph& g, std::span<const Vertex> removed,
                    std::span<const Edge> extra) {
  std::vector<Vertex> map = survivor_map(g.vertex_count(), removed);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (map[e.u] >= 0 && map[e.v] >= 0) {
      edges.push_back({map[e.u], map[e.v], e.color});
    }
  }
  for (const Edge& e : extra) {
    if (map.at(e.u) < 0 || map.at(e.v) < 0) {
      throw GraphError("rewire: extra edge touches a removed vertex");
    }
    edges.push_back({map[e.u], map[e.v], e.color});
  }
  std::vector<Parity> parity;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (map[v] >= 0) parity.push_back(g.parity(v));
  }
  const int n = static_cast<int>(parity.size());
  return ColoredGraph::from_edges(g.dimension(), n, std::move(edges),
                                  g.support(), std::move(parity));
}

ColoredGraph induced_subgraph(const ColoredGraph& g,
                              std::span<const Vertex> vertices) {
  std::vector<bool> keep(g.vertex_count(), false);
  for (Vertex v : vertices) keep.at(v) = true;
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!keep[v]) removed.push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (keep[e.u] != keep[e.v]) {
      throw GraphError("induced_subgraph: vertex set is not closed");
    }
  }
  return rewire(g, removed, {});
}

ColoredGraph disjoint_union(std::span<const ColoredGraph> graphs) {
  if (graphs.empty()) throw GraphError("disjoint_union: no graphs");
  const int d = graphs.front().dimension();
  const ColorSet support = graphs.front().support();
  std::vector<Edge> edges;
  std::vector<Parity> parity;
  int offset = 0;
  for (const ColoredGraph& g : graphs) {
    if (g.dimension() != d || g.support() != support) {
      throw GraphError("disjoint_union: mismatched colors");
    }
    for (const Edge& e : g.edges()) {
      edges.push_back({e.u + offset, e.v + offset, e.color});
    }
    parity.insert(parity.end(), g.parities().begin(), g.parities().end());
    offset += g.vertex_count();
  }
  return ColoredGraph::from_edges(d, offset, std::move(edges), support,
                                  std::move(parity));
}

}  // namespace cgraph

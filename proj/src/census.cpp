#include "cgraph/census.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cgraph {

int CycleCensus::count(Color a, Color b) const {
  if (a > b) std::swap(a, b);
  auto it = pairs.find({a, b});
  return it == pairs.end() ? 0 : it->second.count;
}

int CycleCensus::c0() const {
  int sum = 0;
  for (const auto& [pair, cycles] : pairs) {
    if (pair.a == 0) sum += cycles.count;
  }
  return sum;
}

int CycleCensus::total() const {
  int sum = 0;
  for (const auto& [pair, cycles] : pairs) sum += cycles.count;
  return sum;
}

std::string CycleCensus::to_text() const {
  std::ostringstream os;
  for (const auto& [pair, cycles] : pairs) {
    os << "pair " << pair.a << ' ' << pair.b << " count=" << cycles.count
       << '\n';
    for (const auto& cycle : cycles.cycles) {
      os << "cycle";
      for (EdgeId e : cycle) os << ' ' << e;
      os << '\n';
    }
  }
  return os.str();
}

std::vector<std::vector<EdgeId>> bicolored_cycles(const ColoredGraph& g,
                                                  Color a, Color b) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<bool> seen(g.edge_count(), false);
  for (EdgeId start = 0; start < g.edge_count(); ++start) {
    Color c = g.edge(start).color;
    if ((c != a && c != b) || seen[start]) continue;
    std::vector<EdgeId> cycle;
    EdgeId e = start;
    Vertex at = g.black_end(start);
    do {
      seen[e] = true;
      cycle.push_back(e);
      Color next = g.edge(e).color == a ? b : a;
      e = g.edge_at(at, next);
      at = g.other_end(e, at);
    } while (e != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

int count_bicolored_cycles(const ColoredGraph& g, Color a, Color b) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    Vertex x = s;
    do {
      seen[x] = true;
      Vertex y = g.neighbor(x, a);
      seen[y] = true;
      x = g.neighbor(y, b);
    } while (x != s);
  }
  return count;
}

int count_zero_cycles(const ColoredGraph& g) {
  if (!g.support().contains(0)) {
    throw GraphError("count_zero_cycles: color 0 absent");
  }
  int sum = 0;
  for (Color c : g.support().to_vector()) {
    if (c != 0) sum += count_bicolored_cycles(g, 0, c);
  }
  return sum;
}

CycleCensus cycle_census(const ColoredGraph& g) {
  CycleCensus census;
  census.support = g.support();
  const std::vector<Color> colors = g.support().to_vector();
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (std::size_t j = i + 1; j < colors.size(); ++j) {
      PairCycles pc;
      pc.cycles = bicolored_cycles(g, colors[i], colors[j]);
      pc.count = static_cast<int>(pc.cycles.size());
      census.pairs[{colors[i], colors[j]}] = std::move(pc);
    }
  }
  return census;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational a, Rational b) {
  return Rational::make(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(Rational a, Rational b) {
  return Rational::make(a.num * b.den - b.num * a.den, a.den * b.den);
}

GurauDegree gurau_degree(const ColoredGraph& g) {
  if (!g.is_closed()) {
    throw GraphError("gurau_degree: needs a closed graph with colors 0..d");
  }
  if (!g.is_connected()) {
    throw GraphError("gurau_degree: graph is disconnected");
  }
  const std::int64_t d = g.dimension();
  GurauDegree out;
  out.vertices = g.vertex_count();
  const std::vector<Color> colors = g.support().to_vector();
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (std::size_t j = i + 1; j < colors.size(); ++j) {
      out.bicolored_cycles += count_bicolored_cycles(g, colors[i], colors[j]);
    }
  }
  out.value = Rational::make(d, 1) +
              Rational::make(d * (d - 1) * out.vertices, 4) -
              Rational::make(out.bicolored_cycles, 1);
  return out;
}

PBubbleCensus p_bubbles(const ColoredGraph& g, ColorSet colors) {
  if (colors.empty() || !colors.is_subset_of(g.support())) {
    throw GraphError("p_bubbles: color set " + colors.to_string() +
                     " not a nonempty subset of the support");
  }
  const int n = g.vertex_count();
  const std::vector<Color> list = colors.to_vector();
  std::vector<int> comp(n, -1);
  PBubbleCensus out;
  out.colors = colors;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.components.size());
    PBubble bubble;
    comp[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      bubble.vertices.push_back(x);
      for (Color c : list) {
        EdgeId e = g.edge_at(x, c);
        Vertex y = g.other_end(e, x);
        if (g.is_white(x)) bubble.edges.push_back(e);
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(bubble.vertices.begin(), bubble.vertices.end());
    std::sort(bubble.edges.begin(), bubble.edges.end());
    out.components.push_back(std::move(bubble));
  }
  return out;
}

ColoredGraph extract_p_bubble(const ColoredGraph& g, const PBubble& bubble,
                              ColorSet colors) {
  const std::vector<Color> list = colors.to_vector();
  std::vector<Color> relabel(g.dimension() + 1, -1);
  for (std::size_t k = 0; k < list.size(); ++k) {
    relabel[list[k]] = static_cast<Color>(k + 1);
  }
  std::vector<Vertex> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < bubble.vertices.size(); ++i) {
    index[bubble.vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (EdgeId e : bubble.edges) {
    const Edge& ed = g.edge(e);
    if (index[ed.u] < 0 || index[ed.v] < 0 || relabel[ed.color] < 0) {
      throw GraphError("extract_p_bubble: edge outside the bubble");
    }
    edges.push_back({index[ed.u], index[ed.v], relabel[ed.color]});
  }
  std::vector<Parity> parity;
  for (Vertex v : bubble.vertices) parity.push_back(g.parity(v));
  const int p = static_cast<int>(list.size());
  return ColoredGraph::from_edges(p, static_cast<int>(bubble.vertices.size()),
                                  std::move(edges), ColorSet::range(1, p),
                                  std::move(parity));
}

namespace {

std::vector<bool> region_mask(const ColoredGraph& g,
                              std::span<const Vertex> region) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : region) in.at(v) = true;
  return in;
}

bool is_free(const ColoredGraph& g, const std::vector<bool>& in, Vertex v) {
  EdgeId e = g.edge_at(v, 0);
  return e == kNoEdge || !in[g.other_end(e, v)];
}

}  // namespace

std::vector<Vertex> free_vertices(const ColoredGraph& g,
                                  std::span<const Vertex> region) {
  std::vector<bool> in = region_mask(g, region);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in[v] && is_free(g, in, v)) out.push_back(v);
  }
  return out;
}

bool is_colored_subgraph(const ColoredGraph& g, std::span<const Vertex> region) {
  std::vector<bool> in = region_mask(g, region);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) continue;
    for (Color c : g.support().to_vector()) {
      if (c != 0 && !in[g.neighbor(v, c)]) return false;
    }
  }
  return true;
}

BoundaryBubble boundary_bubble(const ColoredGraph& g,
                               std::span<const Vertex> region) {
  if (!is_colored_subgraph(g, region)) {
    throw GraphError("boundary_bubble: region is not a colored subgraph");
  }
  std::vector<bool> in = region_mask(g, region);
  BoundaryBubble out;
  out.original_vertex = free_vertices(g, region);
  if (out.original_vertex.empty()) {
    throw GraphError("boundary_bubble: region has no free vertex");
  }
  std::vector<Vertex> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.original_vertex.size(); ++i) {
    index[out.original_vertex[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  const ColorSet colors = g.support() - ColorSet{0};
  for (Vertex f : out.original_vertex) {
    for (Color c : colors.to_vector()) {
      Vertex x = f;
      Vertex y = g.neighbor(x, c);
      while (index[y] < 0) {
        x = g.neighbor(y, 0);
        y = g.neighbor(x, c);
      }
      if (f < y) edges.push_back({index[f], index[y], c});
    }
  }
  std::vector<Parity> parity;
  for (Vertex v : out.original_vertex) parity.push_back(g.parity(v));
  out.graph = ColoredGraph::from_edges(
      g.dimension(), static_cast<int>(out.original_vertex.size()),
      std::move(edges), colors, std::move(parity));
  return out;
}

BoundaryReplacement replace_with_boundary(const ColoredGraph& g,
                                          std::span<const Vertex> region) {
  BoundaryBubble boundary = boundary_bubble(g, region);
  std::vector<bool> in = region_mask(g, region);
  std::vector<bool> is_free_vertex(g.vertex_count(), false);
  for (Vertex v : boundary.original_vertex) is_free_vertex[v] = true;

  BoundaryReplacement out;
  out.vertex_map.assign(g.vertex_count(), -1);
  std::vector<Parity> parity;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v] || is_free_vertex[v]) {
      out.vertex_map[v] = static_cast<Vertex>(parity.size());
      parity.push_back(g.parity(v));
    }
  }
  std::vector<Edge> edges;
  out.edge_map.assign(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[ed.u] && in[ed.v]) continue;
    out.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({out.vertex_map[ed.u], out.vertex_map[ed.v], ed.color});
  }
  for (const Edge& ed : boundary.graph.edges()) {
    Vertex u = boundary.original_vertex[ed.u];
    Vertex v = boundary.original_vertex[ed.v];
    edges.push_back({out.vertex_map[u], out.vertex_map[v], ed.color});
  }
  for (Vertex v : boundary.original_vertex) {
    out.boundary.push_back(out.vertex_map[v]);
  }
  const int n = static_cast<int>(parity.size());
  out.graph = ColoredGraph::from_edges(g.dimension(), n, std::move(edges),
                                       g.support(), std::move(parity));
  return out;
}

ZeroCycleSplit split_zero_cycles(const ColoredGraph& g,
                                 std::span<const Vertex> region) {
  std::vector<bool> in = region_mask(g, region);
  ZeroCycleSplit out;
  for (Color c : g.support().to_vector()) {
    if (c == 0) continue;
    for (const auto& cycle : bicolored_cycles(g, 0, c)) {
      // Each vertex of a cycle is an endpoint of two of its edges.
      int hits = 0;
      const int ends = 2 * static_cast<int>(cycle.size());
      for (EdgeId e : cycle) {
        hits += in[g.edge(e).u] ? 1 : 0;
        hits += in[g.edge(e).v] ? 1 : 0;
      }
      if (hits == ends) {
        ++out.inside;
      } else if (hits == 0) {
        ++out.outside;
      } else {
        ++out.crossing;
      }
    }
  }
  return out;
}

ColorSet interaction_colors(const ColoredGraph& g, EdgeId e1, EdgeId e2) {
  if (e1 == e2) throw GraphError("interaction_colors: identical edges");
  if (e1 < 0 || e2 < 0 || e1 >= g.edge_count() || e2 >= g.edge_count()) {
    throw GraphError("interaction_colors: no such edge");
  }
  if (g.edge(e1).color != 0 || g.edge(e2).color != 0) {
    throw GraphError("interaction_colors: edges must have color 0");
  }
  ColorSet out;
  for (Color c : g.support().to_vector()) {
    if (c == 0) continue;
    EdgeId e = e1;
    Vertex at = g.black_end(e1);
    do {
      Color next = g.edge(e).color == 0 ? c : 0;
      e = g.edge_at(at, next);
      at = g.other_end(e, at);
      if (e == e2) {
        out.insert(c);
        break;
      }
    } while (e != e1);
  }
  return out;
}

}  // namespace cgraph

#include "cgraph/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "cgraph/embedding.hpp"

namespace cgraph {

namespace {

std::vector<ColoredGraph> split_components(const ColoredGraph& g) {
  std::vector<ColoredGraph> out;
  for (const auto& comp : g.components()) {
    out.push_back(induced_subgraph(g, comp));
  }
  return out;
}

std::vector<Parity> copy_parities(const ColoredGraph& g) {
  return {g.parities().begin(), g.parities().end()};
}

void require_zero_edge(const ColoredGraph& g, EdgeId e, const char* who) {
  if (e < 0 || e >= g.edge_count()) {
    throw GraphError(std::string(who) + ": edge " + std::to_string(e) +
                     " out of range");
  }
  if (g.edge(e).color != 0) {
    throw GraphError(std::string(who) + ": edge " + std::to_string(e) +
                     " has color " + std::to_string(g.edge(e).color) +
                     ", expected 0");
  }
}

}  // namespace

int FlipResult::predicted_c0() const {
  return c0_before - graph.dimension() + 2 * interaction.size();
}

FlipResult flip(const ColoredGraph& g, EdgeId e1, EdgeId e2) {
  require_zero_edge(g, e1, "flip");
  require_zero_edge(g, e2, "flip");
  if (e1 == e2) throw GraphError("flip: the two edges are the same");
  FlipResult r;
  r.interaction = interaction_colors(g, e1, e2);
  r.c0_before = count_zero_cycles(g);

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const Vertex w1 = g.white_end(e1), b1 = g.black_end(e1);
  const Vertex w2 = g.white_end(e2), b2 = g.black_end(e2);
  edges[e1] = {w1, b2, 0};
  edges[e2] = {w2, b1, 0};
  r.graph = ColoredGraph::from_edges(g.dimension(), g.vertex_count(),
                                     std::move(edges), g.support(),
                                     copy_parities(g));
  r.components = split_components(r.graph);
  r.c0_after = count_zero_cycles(r.graph);
  return r;
}

std::string to_string(ContractionCase c) {
  switch (c) {
    case ContractionCase::TwoParallel: return "two-parallel";
    case ContractionCase::OneParallel: return "one-parallel";
    case ContractionCase::OneParallelSplit: return "one-parallel-split";
    case ContractionCase::NoParallel: return "no-parallel";
  }
  return "?";
}

ContractionResult contract(const ColoredGraph& g, EdgeId e) {
  require_zero_edge(g, e, "contract");
  const Vertex w = g.white_end(e);
  const Vertex b = g.black_end(e);
  const ColorSet shared = g.colors_between(w, b);
  if (shared == g.support()) {
    throw GraphError(
        "contract: edge lies in a 2-vertex component, nothing would remain");
  }
  ContractionResult r;
  r.parallel = shared - ColorSet{0};
  std::vector<Edge> extra;
  for (Color c : g.support().to_vector()) {
    if (c == 0 || shared.contains(c)) continue;
    extra.push_back({g.neighbor(b, c), g.neighbor(w, c), c});
  }
  const Vertex removed[2] = {w, b};
  r.graph = rewire(g, removed, extra);
  r.components = split_components(r.graph);
  r.c0_before = count_zero_cycles(g);
  r.c0_after = count_zero_cycles(r.graph);
  r.expected_delta = -r.parallel.size();

  const ColorSet bubble_colors = g.support() - ColorSet{0};
  switch (r.parallel.size()) {
    case 0:
      r.kind = ContractionCase::NoParallel;
      break;
    case 1: {
      const int before = p_bubbles(g, bubble_colors).count();
      const int after = p_bubbles(r.graph, bubble_colors).count();
      r.kind = after > before ? ContractionCase::OneParallelSplit
                              : ContractionCase::OneParallel;
      break;
    }
    default:
      r.kind = ContractionCase::TwoParallel;
      break;
  }
  return r;
}

std::string Dipole::to_string() const {
  std::ostringstream os;
  os << "dipole " << white << ' ' << black << " h=" << h()
     << " H=" << colors.to_string() << " P=" << complement.to_string()
     << " distinct=" << (distinct_bubbles ? 1 : 0);
  auto side = [&](const char* name, const std::optional<int>& genus,
                  bool ball) {
    os << ' ' << name << '=' << (ball ? "ball" : "nonball");
    if (genus) os << "(g" << *genus << ')';
  };
  side("white", genus_white, ball_white);
  side("black", genus_black, ball_black);
  return os.str();
}

namespace {

struct BubbleIndex {
  PBubbleCensus census;
  std::vector<int> owner;  // vertex -> component
};

const BubbleIndex& bubbles_for(const ColoredGraph& g, ColorSet colors,
                               std::map<ColorSet, BubbleIndex>& cache) {
  auto it = cache.find(colors);
  if (it != cache.end()) return it->second;
  BubbleIndex idx;
  idx.census = p_bubbles(g, colors);
  idx.owner.assign(g.vertex_count(), -1);
  for (int i = 0; i < idx.census.count(); ++i) {
    for (Vertex v : idx.census.components[i].vertices) idx.owner[v] = i;
  }
  return cache.emplace(colors, std::move(idx)).first->second;
}

Dipole annotate(const ColoredGraph& g, Vertex white, Vertex black,
                std::map<ColorSet, BubbleIndex>& cache) {
  Dipole d;
  d.white = white;
  d.black = black;
  d.colors = g.colors_between(white, black);
  d.complement = g.support() - d.colors;
  if (d.complement.empty()) return d;
  const BubbleIndex& idx = bubbles_for(g, d.complement, cache);
  const int cw = idx.owner[white];
  const int cb = idx.owner[black];
  d.distinct_bubbles = cw != cb;
  const int p = d.complement.size();
  if (p <= 2) {
    d.ball_white = d.ball_black = true;
  } else if (p == 3) {
    auto genus_of = [&](int comp) {
      ColoredGraph sub =
          extract_p_bubble(g, idx.census.components[comp], d.complement);
      return embedding_stats(sub).genus;
    };
    d.genus_white = genus_of(cw);
    d.genus_black = cw == cb ? *d.genus_white : genus_of(cb);
    d.ball_white = *d.genus_white == 0;
    d.ball_black = *d.genus_black == 0;
  }
  return d;
}

}  // namespace

Dipole describe_dipole(const ColoredGraph& g, Vertex white, Vertex black) {
  if (!g.is_white(white) || g.is_white(black)) {
    throw GraphError("describe_dipole: expected a white and a black vertex");
  }
  if (g.colors_between(white, black).empty()) {
    throw GraphError("describe_dipole: vertices are not adjacent");
  }
  std::map<ColorSet, BubbleIndex> cache;
  return annotate(g, white, black, cache);
}

std::vector<Dipole> find_dipoles(const ColoredGraph& g) {
  std::map<ColorSet, BubbleIndex> cache;
  std::vector<Dipole> out;
  for (Vertex w : g.white_vertices()) {
    std::vector<Vertex> seen;
    for (Color c : g.support().to_vector()) {
      Vertex b = g.neighbor(w, c);
      if (std::find(seen.begin(), seen.end(), b) != seen.end()) continue;
      seen.push_back(b);
    }
    std::sort(seen.begin(), seen.end());
    for (Vertex b : seen) out.push_back(annotate(g, w, b, cache));
  }
  return out;
}

DipoleRemoval remove_dipole(const ColoredGraph& g, const Dipole& dip) {
  if (dip.white < 0 || dip.white >= g.vertex_count() || dip.black < 0 ||
      dip.black >= g.vertex_count()) {
    throw GraphError("remove_dipole: vertex out of range");
  }
  const Dipole now = describe_dipole(g, dip.white, dip.black);
  if (now.colors != dip.colors) {
    throw GraphError("remove_dipole: edges " + dip.colors.to_string() +
                     " are not all present between the pair");
  }
  if (!now.removable()) {
    throw GraphError("remove_dipole: not a dipole (" + now.to_string() + ")");
  }
  DipoleRemoval r;
  r.topological = now.topological();
  std::vector<Edge> extra;
  for (Color c : now.complement.to_vector()) {
    extra.push_back({g.neighbor(dip.black, c), g.neighbor(dip.white, c), c});
  }
  const Vertex removed[2] = {dip.white, dip.black};
  r.graph = rewire(g, removed, extra);
  const EdgeId first_extra = r.graph.edge_count() - static_cast<int>(extra.size());
  r.site.colors = now.colors;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    r.site.cuts.emplace_back(extra[i].color,
                             first_extra + static_cast<EdgeId>(i));
  }
  r.site.white_position = dip.white;
  r.site.black_position = dip.black;
  return r;
}

ColoredGraph insert_dipole(const ColoredGraph& g, const InsertionSite& site) {
  const int n = g.vertex_count();
  const Vertex wp = site.white_position;
  const Vertex bp = site.black_position;
  if (wp < 0 || bp < 0 || wp > n + 1 || bp > n + 1 || wp == bp) {
    throw GraphError("insert_dipole: bad vertex positions");
  }
  ColorSet cut_colors;
  std::vector<bool> cut(g.edge_count(), false);
  for (const auto& [c, e] : site.cuts) {
    if (e < 0 || e >= g.edge_count() || g.edge(e).color != c) {
      throw GraphError("insert_dipole: edge " + std::to_string(e) +
                       " does not have color " + std::to_string(c));
    }
    if (cut_colors.contains(c)) {
      throw GraphError("insert_dipole: color " + std::to_string(c) +
                       " cut twice");
    }
    cut_colors.insert(c);
    cut[e] = true;
  }
  if (site.colors.empty() || !(cut_colors & site.colors).empty() ||
      (cut_colors | site.colors) != g.support()) {
    throw GraphError("insert_dipole: cut colors and dipole colors must split "
                     "the support");
  }

  std::vector<Vertex> map(n);
  std::vector<Parity> parity(n + 2);
  for (Vertex v = 0, slot = 0; v < n; ++v, ++slot) {
    while (slot == wp || slot == bp) ++slot;
    map[v] = slot;
    parity[slot] = g.parity(v);
  }
  parity[wp] = Parity::White;
  parity[bp] = Parity::Black;

  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (cut[e]) continue;
    const Edge& ed = g.edge(e);
    edges.push_back({map[ed.u], map[ed.v], ed.color});
  }
  for (const auto& [c, e] : site.cuts) {
    edges.push_back({wp, map[g.black_end(e)], c});
    edges.push_back({map[g.white_end(e)], bp, c});
  }
  for (Color c : site.colors.to_vector()) edges.push_back({wp, bp, c});
  return ColoredGraph::from_edges(g.dimension(), n + 2, std::move(edges),
                                  g.support(), std::move(parity));
}

ConnectedSum connected_sum(const ColoredGraph& g1, Vertex v1,
                           const ColoredGraph& g2, Vertex v2) {
  if (g1.dimension() != g2.dimension() || g1.support() != g2.support()) {
    throw GraphError("connected_sum: graphs have different color sets");
  }
  if (g1.is_white(v1) || !g2.is_white(v2)) {
    throw GraphError(
        "connected_sum: needs a black vertex in the first graph and a white "
        "vertex in the second");
  }
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  auto m1 = [&](Vertex v) { return v < v1 ? v : v - 1; };
  auto m2 = [&](Vertex v) { return (n1 - 1) + (v < v2 ? v : v - 1); };

  std::vector<Parity> parity;
  for (Vertex v = 0; v < n1; ++v) {
    if (v != v1) parity.push_back(g1.parity(v));
  }
  for (Vertex v = 0; v < n2; ++v) {
    if (v != v2) parity.push_back(g2.parity(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges()) {
    if (e.u != v1 && e.v != v1) edges.push_back({m1(e.u), m1(e.v), e.color});
  }
  for (const Edge& e : g2.edges()) {
    if (e.u != v2 && e.v != v2) edges.push_back({m2(e.u), m2(e.v), e.color});
  }
  for (Color c : g1.support().to_vector()) {
    edges.push_back({m1(g1.neighbor(v1, c)), m2(g2.neighbor(v2, c)), c});
  }
  ConnectedSum out;
  out.graph = ColoredGraph::from_edges(g1.dimension(), n1 + n2 - 2,
                                       std::move(edges), g1.support(),
                                       std::move(parity));
  out.caveat =
      "represents the connected sum of the two manifolds only when that sum "
      "is unique";
  return out;
}

std::string to_string(ReductionVerdict v) {
  return v == ReductionVerdict::CanonicalSphere ? "canonical-sphere" : "stuck";
}

std::string ReductionTrace::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    os << "move " << i << ' ' << moves[i].dipole.to_string()
       << " topological=" << (moves[i].topological ? 1 : 0)
       << " vertices=" << moves[i].vertices_after << '\n';
  }
  os << "terminal vertices=" << terminal.vertex_count() << '\n';
  os << "verdict " << to_string(verdict);
  if (budget_exhausted) os << " (move budget exhausted)";
  os << '\n';
  return os.str();
}

ReductionTrace reduce_to_canonical(const ColoredGraph& g, int max_moves) {
  if (g.dimension() != 3 || !g.is_closed()) {
    throw GraphError("reduce_to_canonical: needs a closed graph at d = 3");
  }
  if (!g.is_connected()) {
    throw GraphError("reduce_to_canonical: graph is disconnected");
  }
  const int budget = max_moves > 0 ? max_moves : 10 * g.vertex_count();
  auto rank = [](const Dipole& d) {
    switch (d.h()) {
      case 2: return 0;
      case 1: return 1;
      default: return 2;
    }
  };

  ReductionTrace trace;
  ColoredGraph cur = g;
  while (cur.vertex_count() > 2) {
    if (static_cast<int>(trace.moves.size()) >= budget) {
      trace.budget_exhausted = true;
      break;
    }
    std::optional<Dipole> best;
    for (const Dipole& d : find_dipoles(cur)) {
      if (!d.topological()) continue;
      auto key = [&](const Dipole& x) {
        return std::tuple(rank(x), std::min(x.white, x.black),
                          std::max(x.white, x.black));
      };
      if (!best || key(d) < key(*best)) best = d;
    }
    if (!best) break;
    DipoleRemoval rem = remove_dipole(cur, *best);
    cur = std::move(rem.graph);
    trace.moves.push_back({*best, rem.topological, cur.vertex_count()});
  }
  // A connected closed 2-vertex graph is the supermelon.
  if (cur.vertex_count() == 2 && cur.is_connected()) {
    trace.verdict = ReductionVerdict::CanonicalSphere;
  }
  trace.terminal = std::move(cur);
  return trace;
}

}  // namespace cgraph

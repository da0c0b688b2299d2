#include "cgraph/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "cgraph/census.hpp"
#include "cgraph/fixtures.hpp"

namespace cgraph {

int EmbeddingStats::faces_of_degree(int degree) const {
  auto it = face_profile.find(degree);
  return it == face_profile.end() ? 0 : it->second;
}

std::string EmbeddingStats::to_text() const {
  std::ostringstream os;
  os << V << ' ' << E << ' ' << F << ' ' << genus << '\n' << "profile";
  for (const auto& [degree, count] : face_profile) {
    os << ' ' << degree << ':' << count;
  }
  os << '\n';
  return os.str();
}

ColoredGraph relabel_three_colors(const ColoredGraph& g, ColorSet colors) {
  if (colors.size() != 3 || !colors.is_subset_of(g.support())) {
    throw GraphError("relabel_three_colors: need three colors of the support");
  }
  const std::vector<Color> keep = colors.to_vector();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    auto it = std::find(keep.begin(), keep.end(), e.color);
    if (it == keep.end()) continue;
    edges.push_back({e.u, e.v, static_cast<Color>(it - keep.begin()) + 1});
  }
  std::vector<Parity> parity(g.parities().begin(), g.parities().end());
  return ColoredGraph::from_edges(3, g.vertex_count(), std::move(edges),
                                  ColorSet::range(1, 3), std::move(parity));
}

EmbeddingStats embedding_stats(const ColoredGraph& b) {
  if (b.support().size() != 3) {
    throw GraphError("embedding_stats: graph is not cubic (support " +
                     b.support().to_string() + ")");
  }
  if (!b.is_connected()) {
    throw GraphError("embedding_stats: graph is disconnected");
  }
  const std::vector<Color> cs = b.support().to_vector();
  EmbeddingStats s;
  s.V = b.vertex_count();
  s.E = b.edge_count();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (const auto& cycle : bicolored_cycles(b, cs[i], cs[j])) {
        ++s.face_profile[static_cast<int>(cycle.size())];
        ++s.F;
      }
    }
  }
  const int chi = s.F - s.E + s.V;
  if (chi > 2 || (chi % 2) != 0) {
    throw GraphError("embedding_stats: odd or oversized Euler characteristic");
  }
  s.genus = (2 - chi) / 2;
  return s;
}

bool is_planar(const ColoredGraph& b) { return embedding_stats(b).genus == 0; }

namespace {

std::vector<MelonicStep> melonic_candidates(const ColoredGraph& g) {
  std::vector<MelonicStep> out;
  const ColorSet support = g.support();
  for (Vertex w : g.white_vertices()) {
    ColorSet tried;
    for (Color c : support.to_vector()) {
      Vertex y = g.neighbor(w, c);
      if (tried.contains(c)) continue;
      ColorSet shared = g.colors_between(w, y);
      tried = tried | shared;
      if (shared.size() == support.size() - 1) {
        out.push_back({w, y, (support - shared).max()});
      }
    }
  }
  return out;
}

}  // namespace

ColoredGraph melonic_remove(const ColoredGraph& g, const MelonicStep& step) {
  const ColorSet shared = g.colors_between(step.white, step.black);
  if (!g.is_white(step.white) ||
      shared != g.support() - ColorSet{step.color}) {
    throw GraphError("melonic_remove: not a melonic pair");
  }
  Vertex outer_black = g.neighbor(step.white, step.color);
  Vertex outer_white = g.neighbor(step.black, step.color);
  const Vertex removed[2] = {step.white, step.black};
  const Edge extra[1] = {{outer_white, outer_black, step.color}};
  return rewire(g, removed, extra);
}

MelonicWitness is_melonic(const ColoredGraph& b,
                          std::optional<std::uint64_t> shuffle_seed) {
  MelonicWitness w;
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);
  ColoredGraph g = b;
  while (g.vertex_count() > 2) {
    std::vector<MelonicStep> cand = melonic_candidates(g);
    if (cand.empty()) return w;
    if (rng) std::shuffle(cand.begin(), cand.end(), *rng);
    w.steps.push_back(cand.front());
    g = melonic_remove(g, cand.front());
  }
  w.melonic = g.is_connected();
  return w;
}

ColoredGraph replay(const ColoredGraph& b, const MelonicWitness& witness) {
  ColoredGraph g = b;
  for (const MelonicStep& s : witness.steps) g = melonic_remove(g, s);
  return g;
}

ColoredGraph melonic_insert(const ColoredGraph& g, EdgeId e) {
  const Edge& cut = g.edge(e);
  const Vertex w = g.white_end(e);
  const Vertex b = g.black_end(e);
  const int n = g.vertex_count();
  const Vertex nw = n;
  const Vertex nb = n + 1;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + g.support().size() + 1);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i != e) edges.push_back(g.edge(i));
  }
  edges.push_back({w, nb, cut.color});
  edges.push_back({nw, b, cut.color});
  for (Color c : g.support().to_vector()) {
    if (c != cut.color) edges.push_back({nw, nb, c});
  }
  std::vector<Parity> parity(g.parities().begin(), g.parities().end());
  parity.push_back(Parity::White);
  parity.push_back(Parity::Black);
  return ColoredGraph::from_edges(g.dimension(), n + 2, std::move(edges),
                                  g.support(), std::move(parity));
}

FaceBoundReport check_face_bound(const ColoredGraph& b) {
  const EmbeddingStats s = embedding_stats(b);
  if (s.genus != 0) {
    throw GraphError("check_face_bound: bubble is not planar (genus " +
                     std::to_string(s.genus) + ")");
  }
  FaceBoundReport r;
  r.f2 = s.faces_of_degree(2);
  r.f4 = s.faces_of_degree(4);
  r.lhs = 2 * r.f2 + r.f4;
  r.holds = r.lhs >= 6 && (r.f2 != 0 || r.f4 >= 6);
  r.face_profile = s.face_profile;
  return r;
}

namespace {

bool permutations_connected(int m, const std::vector<int>& s,
                            const std::vector<int>& t) {
  // White i and black i share a node (color 1 joins them).
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = m;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  for (int i = 0; i < m; ++i) {
    unite(i, s[i]);
    unite(i, t[i]);
  }
  return components == 1;
}

ColoredGraph bubble_from_permutations(int m, const std::vector<int>& s,
                                      const std::vector<int>& t) {
  std::vector<Edge> edges;
  edges.reserve(3 * m);
  for (int i = 0; i < m; ++i) edges.push_back({i, m + i, 1});
  for (int i = 0; i < m; ++i) edges.push_back({i, m + s[i], 2});
  for (int i = 0; i < m; ++i) edges.push_back({i, m + t[i], 3});
  return ColoredGraph::from_edges(3, 2 * m, std::move(edges),
                                  ColorSet::range(1, 3));
}

}  // namespace

std::vector<ColoredGraph> generate_bubbles(int vertices, CanonicalMode mode,
                                           int jobs) {
  if (vertices < 2 || vertices % 2 != 0) {
    throw GraphError("generate_bubbles: vertex count must be even and >= 2");
  }
  const int m = vertices / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // Each class keeps the graph of its smallest (sigma2, sigma3) index, so
  // the output does not depend on the thread count.
  using Entry = std::pair<std::size_t, ColoredGraph>;
  std::map<CanonicalCode, Entry> found;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto keep = [](std::map<CanonicalCode, Entry>& into, CanonicalCode code,
                 Entry entry) {
    auto [it, fresh] = into.try_emplace(std::move(code), entry);
    if (!fresh && entry.first < it->second.first) it->second = std::move(entry);
  };
  auto worker = [&] {
    std::map<CanonicalCode, Entry> local;
    for (std::size_t k = next++; k < perms.size(); k = next++) {
      for (std::size_t j = 0; j < perms.size(); ++j) {
        if (!permutations_connected(m, perms[k], perms[j])) continue;
        ColoredGraph g = bubble_from_permutations(m, perms[k], perms[j]);
        CanonicalCode code = canonical_form(g, mode);
        keep(local, std::move(code), {k * perms.size() + j, std::move(g)});
      }
    }
    std::lock_guard lock(mu);
    for (auto& [code, entry] : local) keep(found, code, std::move(entry));
  };
  const int width = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < width; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<ColoredGraph> out;
  out.reserve(found.size());
  for (auto& [code, entry] : found) out.push_back(std::move(entry.second));
  return out;
}

std::vector<ColoredGraph> generate_melonic_bubbles(int max_vertices) {
  std::vector<ColoredGraph> out;
  std::vector<ColoredGraph> level{fixtures::melon_b2(3)};
  while (!level.empty() && level.front().vertex_count() <= max_vertices) {
    out.insert(out.end(), level.begin(), level.end());
    std::map<CanonicalCode, ColoredGraph> next;
    for (const ColoredGraph& g : level) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        ColoredGraph h = melonic_insert(g, e);
        next.try_emplace(canonical_form(h, CanonicalMode::ColorsFixed),
                         std::move(h));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return out;
}

}  // namespace cgraph

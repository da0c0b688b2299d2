#include "cgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "cgraph/census.hpp"
#include "cgraph/embedding.hpp"

namespace cgraph {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

GluingSpace::GluingSpace(std::span<const ColoredGraph> bubbles, int budget) {
  if (bubbles.empty()) throw GraphError("GluingSpace: no bubbles");
  int total = 0;
  for (const ColoredGraph& b : bubbles) {
    if (b.support().contains(0)) {
      throw GraphError("GluingSpace: input already has color 0 edges");
    }
    total += b.vertex_count();
  }
  if (total > budget) {
    throw BudgetExceeded("vertex budget exceeded: " + std::to_string(total) +
                         " > " + std::to_string(budget));
  }
  if (total / 2 > 64) {
    throw BudgetExceeded("more than 64 white vertices");
  }
  union_ = disjoint_union(bubbles);
  whites_ = union_.white_vertices();
  blacks_ = union_.black_vertices();
  const int n = union_.vertex_count();
  white_index_.assign(n, -1);
  black_index_.assign(n, -1);
  for (std::size_t i = 0; i < whites_.size(); ++i) white_index_[whites_[i]] = i;
  for (std::size_t j = 0; j < blacks_.size(); ++j) black_index_[blacks_[j]] = j;
  for (Color c : union_.support().to_vector()) {
    std::vector<int> row(blacks_.size());
    for (std::size_t j = 0; j < blacks_.size(); ++j) {
      row[j] = white_index_[union_.neighbor(blacks_[j], c)];
    }
    next_.push_back(std::move(row));
  }
  occurrences_ = static_cast<int>(bubbles.size());
  Vertex first = 0;
  for (int k = 0; k < occurrences_; ++k) {
    const int size = bubbles[k].vertex_count();
    ranges_.emplace_back(first, size);
    for (int i = 0; i < size; ++i) occurrence_.push_back(k);
    first += size;
  }
}

std::pair<Vertex, int> GluingSpace::occurrence_range(int k) const {
  return ranges_.at(k);
}

int GluingSpace::c0(std::span<const int> m) const {
  const int count = white_count();
  int cycles = 0;
  for (const auto& row : next_) {
    std::uint64_t seen = 0;
    for (int s = 0; s < count; ++s) {
      if ((seen >> s) & 1u) continue;
      ++cycles;
      int i = s;
      do {
        seen |= std::uint64_t{1} << i;
        i = row[m[i]];
      } while (i != s);
    }
  }
  return cycles;
}

bool GluingSpace::connected(std::span<const int> m) const {
  std::vector<int> parent(occurrences_);
  std::iota(parent.begin(), parent.end(), 0);
  int parts = occurrences_;
  for (int i = 0; i < white_count() && parts > 1; ++i) {
    int a = find_root(parent, occurrence_[whites_[i]]);
    int b = find_root(parent, occurrence_[blacks_[m[i]]]);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

ColoredGraph GluingSpace::close(std::span<const int> m) const {
  std::vector<Edge> edges(union_.edges().begin(), union_.edges().end());
  for (int i = 0; i < white_count(); ++i) {
    edges.push_back({whites_[i], blacks_[m[i]], 0});
  }
  std::vector<Parity> parity(union_.parities().begin(),
                             union_.parities().end());
  return ColoredGraph::from_edges(
      union_.dimension(), union_.vertex_count(), std::move(edges),
      union_.support() | ColorSet{0}, std::move(parity));
}

namespace {

// Images of white 0 worth exploring: all blacks, or one per orbit under the
// automorphisms of white 0's bubble that fix it.
std::vector<int> first_images(const GluingSpace& space, bool prune) {
  const int m = space.white_count();
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  if (!prune) return all;

  const ColoredGraph& u = space.bubble_union();
  const Vertex w0 = space.white_vertices()[0];
  const auto [first, size] = space.occurrence_range(space.occurrence()[w0]);
  std::vector<Vertex> local(size);
  std::iota(local.begin(), local.end(), first);
  const ColoredGraph bubble = induced_subgraph(u, local);
  const Vertex w0_local = w0 - first;

  std::vector<std::vector<Vertex>> stabilizer;
  for (auto& iso : isomorphisms(bubble, bubble)) {
    if (iso[w0_local] == w0_local) stabilizer.push_back(std::move(iso));
  }
  // Orbit representative = smallest vertex reachable under the stabilizer.
  std::vector<Vertex> rep(u.vertex_count());
  std::iota(rep.begin(), rep.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& iso : stabilizer) {
      for (Vertex v = 0; v < size; ++v) {
        Vertex a = first + v;
        Vertex b = first + iso[v];
        Vertex r = std::min(rep[a], rep[b]);
        if (rep[a] != r || rep[b] != r) {
          rep[a] = rep[b] = r;
          changed = true;
        }
      }
    }
  }
  std::vector<int> out;
  const auto blacks = space.black_vertices();
  for (int j = 0; j < m; ++j) {
    if (rep[blacks[j]] == blacks[j]) out.push_back(j);
  }
  return out;
}

void run_partition(int m, int k, int worker, const MatchingVisitor& fn) {
  std::vector<int> perm(m);
  perm[0] = k;
  for (int i = 1, v = 0; i < m; ++i, ++v) {
    if (v == k) ++v;
    perm[i] = v;
  }
  do {
    fn(perm, worker);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

}  // namespace

int worker_count(const SearchOptions& opts) { return std::max(1, opts.jobs); }

void for_each_matching(const GluingSpace& space, const SearchOptions& opts,
                       const MatchingVisitor& fn) {
  const int m = space.white_count();
  const std::vector<int> images = first_images(space, opts.symmetry_pruning);
  const int width = std::min<int>(worker_count(opts), images.size());
  if (width <= 1) {
    for (int k : images) run_partition(m, k, 0, fn);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&](int id) {
    for (std::size_t i = next++; i < images.size(); i = next++) {
      run_partition(m, images[i], id, fn);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < width; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();
}

ColoredGraph close_pairing(const ColoredGraph& bubble,
                           std::span<const Vertex> match) {
  const std::vector<Vertex> whites = bubble.white_vertices();
  if (match.size() != whites.size()) {
    throw GraphError("close_pairing: pairing size does not match the bubble");
  }
  std::vector<Edge> edges(bubble.edges().begin(), bubble.edges().end());
  for (std::size_t i = 0; i < whites.size(); ++i) {
    edges.push_back({whites[i], match[i], 0});
  }
  std::vector<Parity> parity(bubble.parities().begin(),
                             bubble.parities().end());
  return ColoredGraph::from_edges(bubble.dimension(), bubble.vertex_count(),
                                  std::move(edges),
                                  bubble.support() | ColorSet{0},
                                  std::move(parity));
}

std::vector<Pairing> enumerate_pairings(const ColoredGraph& bubble) {
  const ColoredGraph one[1] = {bubble};
  const GluingSpace space(one, std::max(bubble.vertex_count(),
                                        kDefaultVertexBudget));
  std::vector<Pairing> out;
  const auto blacks = space.black_vertices();
  for_each_matching(space, {}, [&](std::span<const int> m, int) {
    Pairing p;
    for (int j : m) p.match.push_back(blacks[j]);
    p.connected = space.connected(m);
    p.c0 = space.c0(m);
    out.push_back(std::move(p));
  });
  return out;
}

std::string MaxReport::to_text() const {
  std::ostringstream os;
  os << "maximum " << maximum << '\n'
     << "enumerated " << enumerated << " connected " << connected
     << " disconnected " << disconnected << '\n'
     << "maximizers " << maximizer_count() << " classes " << maximizers.size()
     << (pruned ? " (pruned search)" : "") << '\n';
  return os.str();
}

MaxReport max_over(const GluingSpace& space, const SearchOptions& opts) {
  struct Local {
    int best = -1;
    std::int64_t enumerated = 0;
    std::int64_t connected = 0;
    std::vector<std::vector<int>> arg;
  };
  std::vector<Local> locals(worker_count(opts));
  for_each_matching(space, opts, [&](std::span<const int> m, int worker) {
    Local& l = locals[worker];
    ++l.enumerated;
    if (!space.connected(m)) return;
    ++l.connected;
    const int c = space.c0(m);
    if (c < l.best) return;
    if (c > l.best) {
      l.best = c;
      l.arg.clear();
    }
    l.arg.emplace_back(m.begin(), m.end());
  });

  MaxReport r;
  r.pruned = opts.symmetry_pruning;
  for (const Local& l : locals) {
    r.enumerated += l.enumerated;
    r.connected += l.connected;
    r.maximum = std::max(r.maximum, l.best);
  }
  r.disconnected = r.enumerated - r.connected;
  for (Local& l : locals) {
    if (l.best != r.maximum || l.best < 0) continue;
    for (auto& m : l.arg) r.maximizer_matchings.push_back(std::move(m));
  }
  std::sort(r.maximizer_matchings.begin(), r.maximizer_matchings.end());
  std::map<CanonicalCode, ColoredGraph> classes;
  for (const auto& m : r.maximizer_matchings) {
    ColoredGraph g = space.close(m);
    classes.try_emplace(canonical_form(g, CanonicalMode::ColorsFixed),
                        std::move(g));
  }
  for (auto& [code, g] : classes) r.maximizers.push_back(std::move(g));
  return r;
}

MaxReport max_pairings(const ColoredGraph& bubble, const SearchOptions& opts) {
  const ColoredGraph one[1] = {bubble};
  return max_over(GluingSpace(one, opts.budget), opts);
}

MaxReport max_gluings(std::span<const ColoredGraph> bubbles,
                      const SearchOptions& opts) {
  return max_over(GluingSpace(bubbles, opts.budget), opts);
}

std::vector<ColoredGraph> enumerate_gluings(
    std::span<const ColoredGraph> bubbles, bool connected_only, int budget) {
  const GluingSpace space(bubbles, budget);
  std::vector<ColoredGraph> out;
  for_each_matching(space, {}, [&](std::span<const int> m, int) {
    if (connected_only && !space.connected(m)) return;
    out.push_back(space.close(m));
  });
  return out;
}

std::vector<std::vector<Vertex>> bubble_occurrences(const ColoredGraph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const PBubble& b : p_bubbles(g, g.support() - ColorSet{0}).components) {
    out.push_back(b.vertices);
  }
  return out;
}

std::vector<int> CutPartition::class_sizes() const {
  std::vector<int> out;
  for (const auto& c : classes) out.push_back(static_cast<int>(c.size()));
  return out;
}

namespace {

// The p_bubbles component equal to `bubble`, or throws.
PBubble find_occurrence(const ColoredGraph& g, std::span<const Vertex> bubble) {
  std::vector<Vertex> sorted(bubble.begin(), bubble.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || sorted.front() < 0 ||
      sorted.back() >= g.vertex_count()) {
    throw GraphError("not a bubble of the graph: bad vertex set");
  }
  for (PBubble& b : p_bubbles(g, g.support() - ColorSet{0}).components) {
    if (b.vertices.front() == sorted.front()) {
      if (b.vertices != sorted) break;
      return std::move(b);
    }
  }
  throw GraphError("not a bubble of the graph: vertex set is not a component");
}

}  // namespace

CutPartition edge_cut_partition(const ColoredGraph& g,
                                std::span<const Vertex> bubble) {
  if (!g.support().contains(0)) {
    throw GraphError("edge_cut_partition: graph has no color 0");
  }
  CutPartition part;
  part.bubble = find_occurrence(g, bubble).vertices;
  const int n = g.vertex_count();
  std::vector<bool> in(n, false);
  for (Vertex v : part.bubble) in[v] = true;

  // Components of g with the bubble's vertices deleted.
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (in[s] || comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Color c : g.support().to_vector()) {
        Vertex y = g.neighbor(x, c);
        if (in[y] || comp[y] >= 0) continue;
        comp[y] = comps;
        stack.push_back(y);
      }
    }
    ++comps;
  }

  std::vector<std::vector<EdgeId>> by_comp(comps);
  for (Vertex v : part.bubble) {
    EdgeId e = g.edge_at(v, 0);
    Vertex o = g.other_end(e, v);
    if (in[o]) {
      if (v < o) part.internal.push_back(e);
    } else {
      by_comp[comp[o]].push_back(e);
    }
  }
  std::sort(part.internal.begin(), part.internal.end());
  for (auto& cls : by_comp) {
    if (cls.empty()) continue;
    std::sort(cls.begin(), cls.end());
    part.classes.push_back(std::move(cls));
  }
  std::sort(part.classes.begin(), part.classes.end());
  return part;
}

int C1Cache::c1(const ColoredGraph& bubble) {
  CanonicalCode code = canonical_form(bubble, CanonicalMode::ColorsFixed);
  {
    std::lock_guard lock(mu_);
    auto it = values_.find(code);
    if (it != values_.end()) return it->second;
  }
  SearchOptions opts;
  opts.budget = std::max(kDefaultVertexBudget, bubble.vertex_count());
  const int value = max_pairings(bubble, opts).maximum;
  std::lock_guard lock(mu_);
  values_.emplace(std::move(code), value);
  return value;
}

namespace {

MaxTwoCutVerdict check_with_c1(const ColoredGraph& g, const PBubble& occ,
                               const CutPartition& part,
                               const std::function<int(const ColoredGraph&)>&
                                   c1_of) {
  MaxTwoCutVerdict v;
  for (const auto& cls : part.classes) {
    if (cls.size() != 2) v.bad_class_sizes.push_back(static_cast<int>(cls.size()));
  }
  if (!v.bad_class_sizes.empty()) {
    std::ostringstream os;
    os << "cut class of size " << v.bad_class_sizes.front();
    v.violation = os.str();
    return v;
  }
  auto inner = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return std::binary_search(occ.vertices.begin(), occ.vertices.end(), ed.u)
               ? ed.u
               : ed.v;
  };
  for (EdgeId e : part.internal) {
    v.pairing.emplace_back(g.white_end(e), g.black_end(e));
  }
  for (const auto& cls : part.classes) {
    Vertex a = inner(cls[0]);
    Vertex b = inner(cls[1]);
    if (g.is_white(a) == g.is_white(b)) {
      v.violation = "2-cut joins two vertices of the same parity";
      v.pairing.clear();
      return v;
    }
    if (!g.is_white(a)) std::swap(a, b);
    v.pairing.emplace_back(a, b);
  }
  std::sort(v.pairing.begin(), v.pairing.end());

  const ColoredGraph local =
      extract_p_bubble(g, occ, g.support() - ColorSet{0});
  auto local_id = [&](Vertex host) {
    return static_cast<Vertex>(
        std::lower_bound(occ.vertices.begin(), occ.vertices.end(), host) -
        occ.vertices.begin());
  };
  std::vector<Vertex> match;
  for (const auto& [w, b] : v.pairing) match.push_back(local_id(b));
  // v.pairing is sorted by white host id, matching local white order.
  const ColoredGraph closed = close_pairing(local, match);
  v.pairing_c0 = count_zero_cycles(closed);
  v.pairing_connected = closed.is_connected();
  v.c1 = c1_of(local);
  v.holds = v.pairing_connected && v.pairing_c0 == v.c1;
  if (!v.holds) {
    std::ostringstream os;
    os << "induced pairing is not maximal: C0=" << v.pairing_c0
       << " C1=" << v.c1 << (v.pairing_connected ? "" : " (disconnected)");
    v.violation = os.str();
  }
  return v;
}

}  // namespace

MaxTwoCutVerdict check_max_two_cut(const ColoredGraph& g,
                                   std::span<const Vertex> bubble,
                                   C1Cache& cache) {
  const CutPartition part = edge_cut_partition(g, bubble);
  const PBubble occ = find_occurrence(g, bubble);
  return check_with_c1(g, occ, part, [&](const ColoredGraph& b) {
    return cache.c1(b);
  });
}

QEdgesReport lemma_qedges_check(const ColoredGraph& bubble, Vertex v,
                                Vertex vbar) {
  if (v < 0 || vbar < 0 || v >= bubble.vertex_count() ||
      vbar >= bubble.vertex_count()) {
    throw GraphError("lemma_qedges_check: vertex out of range");
  }
  if (!bubble.is_white(v)) std::swap(v, vbar);
  QEdgesReport r;
  r.q = bubble.colors_between(v, vbar).size();
  r.hypothesis = bubble.is_white(v) && !bubble.is_white(vbar) &&
                 2 * r.q > bubble.dimension();
  if (!r.hypothesis) return r;
  SearchOptions opts;
  opts.budget = std::max(kDefaultVertexBudget, bubble.vertex_count());
  const ColoredGraph one[1] = {bubble};
  const GluingSpace space(one, opts.budget);
  const MaxReport rep = max_over(space, opts);
  const auto whites = space.white_vertices();
  const auto blacks = space.black_vertices();
  const int vi = static_cast<int>(
      std::find(whites.begin(), whites.end(), v) - whites.begin());
  r.maximizers = rep.maximizer_count();
  for (const auto& m : rep.maximizer_matchings) {
    if (blacks[m[vi]] != vbar) ++r.counterexamples;
  }
  return r;
}

std::string OnlyPlanarReport::to_text() const {
  std::ostringstream os;
  os << "marked " << marked << '\n' << "c1";
  for (int c : c1) os << ' ' << c;
  os << '\n'
     << "formula " << formula << '\n'
     << "brute-force " << brute_force << '\n'
     << "connected-gluings " << connected_gluings << '\n'
     << "maximizers " << maximizers << '\n'
     << "all-max-2-cut " << all_max_two_cut << '\n'
     << "mismatches " << mismatches << '\n'
     << "four-cut-maximizers " << four_cut_maximizers << '\n';
  for (const std::string& f : failures) os << "failure " << f << '\n';
  return os.str();
}

OnlyPlanarReport verify_only_planar(std::span<const ColoredGraph> bubbles,
                                    int marked, const SearchOptions& opts) {
  const int count = static_cast<int>(bubbles.size());
  if (marked < 0 || marked >= count) {
    throw GraphError("verify_only_planar: marked index out of range");
  }
  for (int i = 0; i < count; ++i) {
    if (i != marked && !is_planar(bubbles[i])) {
      throw GraphError("verify_only_planar: bubble " + std::to_string(i) +
                       " is not planar and not marked");
    }
  }
  OnlyPlanarReport r;
  r.marked = marked;
  C1Cache cache;
  for (const ColoredGraph& b : bubbles) r.c1.push_back(cache.c1(b));
  r.formula = r.c1[marked];
  for (int i = 0; i < count; ++i) {
    if (i != marked) r.formula += r.c1[i] - 3;
  }

  const GluingSpace space(bubbles, opts.budget);
  SearchOptions full = opts;
  full.symmetry_pruning = false;
  const MaxReport best = max_over(space, full);
  r.brute_force = best.maximum;

  std::atomic<std::int64_t> connected{0}, maxers{0}, passing{0}, mismatched{0},
      four{0};
  std::mutex mu;
  std::vector<std::string> failures;
  for_each_matching(space, full, [&](std::span<const int> m, int) {
    if (!space.connected(m)) return;
    ++connected;
    const bool is_max = space.c0(m) == best.maximum;
    const ColoredGraph g = space.close(m);
    bool all_pass = true;
    bool has_four = false;
    for (int k = 0; k < count; ++k) {
      const auto [first, size] = space.occurrence_range(k);
      std::vector<Vertex> verts(size);
      std::iota(verts.begin(), verts.end(), first);
      const CutPartition part = edge_cut_partition(g, verts);
      for (int s : part.class_sizes()) has_four = has_four || s == 4;
      if (!all_pass) continue;
      const PBubble occ = find_occurrence(g, verts);
      const int c1 = r.c1[k];
      all_pass = check_with_c1(g, occ, part, [c1](const ColoredGraph&) {
                   return c1;
                 }).holds;
    }
    if (is_max) ++maxers;
    if (all_pass) ++passing;
    if (is_max && has_four) ++four;
    if (is_max != all_pass) {
      ++mismatched;
      std::lock_guard lock(mu);
      if (failures.size() < 5) {
        std::ostringstream os;
        os << (is_max ? "maximizer without" : "non-maximizer with")
           << " the maximal 2-cut property:";
        for (int j : m) os << ' ' << j;
        failures.push_back(os.str());
      }
    }
  });
  r.connected_gluings = connected;
  r.maximizers = maxers;
  r.all_max_two_cut = passing;
  r.mismatches = mismatched;
  r.four_cut_maximizers = four;
  if (r.four_cut_maximizers > 0) {
    failures.push_back("maximizer with a cut class of size 4");
  }
  if (r.formula != r.brute_force) {
    failures.push_back("formula " + std::to_string(r.formula) +
                       " differs from brute force " +
                       std::to_string(r.brute_force));
  }
  std::sort(failures.begin(), failures.end());
  r.failures = std::move(failures);
  return r;
}

}  // namespace cgraph

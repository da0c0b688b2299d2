// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// limit. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "cgraph/census.hpp"
#include "cgraph/embedding.hpp"
#include "cgraph/harness.hpp"
#include "cgraph/moves.hpp"
#include "cgraph/search.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cgraph;
using namespace testing_util;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<ColoredGraph> build(const std::vector<std::string_view>& names) {
  std::vector<ColoredGraph> out;
  for (auto n : names) out.push_back(fx(n));
  return out;
}

std::vector<Vertex> occurrence_vertices(const GluingSpace& space, int k) {
  const auto [first, size] = space.occurrence_range(k);
  std::vector<Vertex> v(size);
  std::iota(v.begin(), v.end(), first);
  return v;
}

std::vector<EdgeId> zero_edges(const ColoredGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).color == 0) out.push_back(e);
  }
  return out;
}

const std::vector<std::vector<std::string_view>> kMaximizerSets = {
    {"OCTA", "MELON_B2"}, {"OCTA", "OCTA"}, {"Q1_B4", "Q1_B4", "MELON_B2"}};

// 1. C0 after a connected flip is C0 - 3 + 2|I|; both sides recounted.
Outcome flip_law() {
  std::mt19937_64 rng(20261018);
  int connected = 0;
  int violations = 0;
  int max_n = 0;
  while (connected < 10000) {
    const int whites = std::uniform_int_distribution<int>(2, 6)(rng);
    const ColoredGraph g = random_closed_graph(rng, whites);
    max_n = std::max(max_n, g.vertex_count());
    auto z = zero_edges(g);
    std::shuffle(z.begin(), z.end(), rng);
    const FlipResult f = flip(g, z[0], z[1]);
    if (!f.connected()) continue;
    ++connected;
    const oracle::Plain before = oracle::plain(g);
    const int lhs = oracle::c0(oracle::plain(f.graph));
    const int rhs = oracle::c0(before) - 3 +
                    2 * static_cast<int>(oracle::interaction(before, z[0], z[1]).size());
    if (lhs != rhs) ++violations;
  }
  std::ostringstream os;
  os << connected << " connected flips, n <= " << max_n << ", " << violations
     << " violations";
  return {violations == 0 && max_n <= 12, os.str()};
}

// 2. Every connected gluing of fixture multisets up to 12 vertices has a
// nonnegative integer degree.
Outcome gurau() {
  const std::vector<std::string_view> names = {"MELON_B2", "Q1_B4", "MELON6A",
                                               "MELON6B",  "K33",   "OCTA"};
  std::vector<ColoredGraph> pool;
  for (auto n : names) pool.push_back(fx(n));
  std::int64_t graphs = 0;
  std::int64_t bad = 0;
  std::int64_t library_mismatch = 0;
  int multisets = 0;
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int from, int total) {
    if (!pick.empty()) {
      ++multisets;
      std::vector<ColoredGraph> bubbles;
      for (int i : pick) bubbles.push_back(pool[i]);
      for (const ColoredGraph& g : enumerate_gluings(bubbles, true, 12)) {
        ++graphs;
        const oracle::Plain p = oracle::plain(g);
        const int twice = 6 + 3 * g.vertex_count() -
                          2 * oracle::all_cycles(p, {0, 1, 2, 3});
        if (twice < 0 || twice % 2 != 0) ++bad;
        const GurauDegree w = gurau_degree(g);
        if (!w.is_nonnegative_integer() || 2 * w.value.num != twice) {
          ++library_mismatch;
        }
      }
    }
    for (int i = from; i < static_cast<int>(pool.size()); ++i) {
      if (total + pool[i].vertex_count() > 12) continue;
      pick.push_back(i);
      rec(i, total + pool[i].vertex_count());
      pick.pop_back();
    }
  };
  rec(0, 0);
  std::ostringstream os;
  os << multisets << " multisets, " << graphs << " connected gluings, " << bad
     << " bad, " << library_mismatch << " library mismatches";
  return {bad == 0 && library_mismatch == 0 && graphs > 0, os.str()};
}

// 3. C1 = V + 1 with a single maximizer on the melonic fixtures.
Outcome melonic_c1() {
  bool ok = true;
  std::ostringstream os;
  for (auto [name, want] : {std::pair{"MELON_B2", 3}, std::pair{"Q1_B4", 5},
                            std::pair{"MELON6A", 7}, std::pair{"MELON6B", 7}}) {
    const MaxReport r = max_pairings(fx(name));
    const oracle::MaxPairings o = oracle::max_pairings(fx(name));
    ok &= r.maximum == want && r.maximizer_count() == 1 && o.maximum == want &&
          o.maximizers == 1;
    os << name << "=" << r.maximum << "/" << r.maximizer_count() << ' ';
  }
  return {ok, os.str() + "(C1/maximizers)"};
}

// 4. Embedding goldens.
Outcome embedding_goldens() {
  const EmbeddingStats k = embedding_stats(fx("K33"));
  const EmbeddingStats o = embedding_stats(fx("OCTA"));
  bool ok = k.genus == 1 && k.face_profile == std::map<int, int>{{6, 3}} &&
            o.genus == 0 && o.face_profile == std::map<int, int>{{4, 6}};
  const auto melonic = generate_melonic_bubbles(8);
  int nonzero = 0;
  for (const ColoredGraph& b : melonic) {
    if (embedding_stats(b).genus != 0 || oracle::genus(oracle::plain(b)) != 0) {
      ++nonzero;
    }
  }
  ok &= nonzero == 0 && !melonic.empty();
  std::ostringstream os;
  os << "K33 genus " << k.genus << ", OCTA genus " << o.genus << ", "
     << melonic.size() << " melonic bubbles <= 8 vertices, " << nonzero
     << " with genus > 0";
  return {ok, os.str()};
}

// 5. Face bound on every planar bubble up to 10 vertices.
Outcome face_bound() {
  int planar = 0;
  int bad = 0;
  int total = 0;
  for (int n = 2; n <= 10; n += 2) {
    for (const ColoredGraph& b : generate_bubbles(n, CanonicalMode::ColorsPermutable)) {
      ++total;
      const oracle::Plain p = oracle::plain(b);
      if (oracle::genus(p) != 0) continue;
      ++planar;
      const FaceBoundReport r = check_face_bound(b);
      const bool holds = 2 * r.f2 + r.f4 >= 6 && (r.f2 > 0 || r.f4 >= 6);
      if (!holds || !r.holds) ++bad;
    }
  }
  std::ostringstream os;
  os << planar << " planar of " << total << " bubbles, " << bad << " violations";
  return {bad == 0 && planar > 0, os.str()};
}

// 6. No maximizer has a cut class of size 4.
Outcome no_four_cuts() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& names : kMaximizerSets) {
    const std::vector<ColoredGraph> bubbles = build(names);
    const GluingSpace space(bubbles);
    const MaxReport m = max_over(space);
    int bad = 0;
    for (const auto& match : m.maximizer_matchings) {
      const ColoredGraph g = space.close(match);
      for (int k = 0; k < space.occurrence_count(); ++k) {
        const auto sizes = edge_cut_partition(g, occurrence_vertices(space, k)).class_sizes();
        if (std::find(sizes.begin(), sizes.end(), 4) != sizes.end()) ++bad;
      }
    }
    ok &= bad == 0 && m.maximizer_count() > 0;
    os << m.maximizer_count() << " maximizers/" << bad << " bad; ";
  }
  return {ok, os.str()};
}

// 7. Maximizers are exactly the gluings where every bubble passes, and the
// maximum matches the formula.
Outcome max_two_cut() {
  bool ok = true;
  std::ostringstream os;
  auto sets = kMaximizerSets;
  sets.push_back({"K33", "MELON_B2"});
  for (const auto& names : sets) {
    const std::vector<ColoredGraph> bubbles = build(names);
    const OnlyPlanarReport r = verify_only_planar(bubbles, 0);
    int formula = 0;
    for (std::size_t i = 0; i < bubbles.size(); ++i) {
      const int c1 = oracle::max_pairings(bubbles[i]).maximum;
      ok &= c1 == r.c1[i];
      formula += i == 0 ? c1 : c1 - 3;
    }
    ok &= r.ok() && r.brute_force == formula && r.maximizers > 0 &&
          r.maximizers == r.all_max_two_cut;
    os << "C=" << r.brute_force << "/" << formula << " mism=" << r.mismatches
       << "; ";
  }
  return {ok, os.str()};
}

// 8. Boundary replacement keeps interactions and the C0 decomposition.
Outcome boundary() {
  std::mt19937_64 rng(777);
  int instances = 0;
  int pairs = 0;
  int bad = 0;
  while (instances < 1000) {
    const ColoredGraph g =
        random_closed_graph(rng, std::uniform_int_distribution<int>(2, 7)(rng));
    auto occ = bubble_occurrences(g);
    if (occ.size() < 2) continue;
    std::shuffle(occ.begin(), occ.end(), rng);
    const int take = std::uniform_int_distribution<int>(
        1, static_cast<int>(occ.size()) - 1)(rng);
    std::vector<Vertex> h;
    for (int i = 0; i < take; ++i) h.insert(h.end(), occ[i].begin(), occ[i].end());
    std::sort(h.begin(), h.end());
    ++instances;
    const BoundaryReplacement rep = replace_with_boundary(g, h);
    const oracle::Plain before = oracle::plain(g);
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : h) in[v] = true;
    std::vector<EdgeId> crossing;
    for (EdgeId e : zero_edges(g)) {
      if (in[g.edge(e).u] != in[g.edge(e).v]) crossing.push_back(e);
    }
    for (std::size_t i = 0; i < crossing.size(); ++i) {
      for (std::size_t j = i + 1; j < crossing.size(); ++j) {
        ++pairs;
        ColorSet want;
        for (int c : oracle::interaction(before, crossing[i], crossing[j])) want.insert(c);
        if (interaction_colors(rep.graph, rep.edge_map[crossing[i]],
                               rep.edge_map[crossing[j]]) != want) {
          ++bad;
        }
      }
    }
    const ZeroCycleSplit s = split_zero_cycles(g, h);
    const ZeroCycleSplit t = split_zero_cycles(rep.graph, rep.boundary);
    if (s.total() != oracle::c0(before) || s.crossing != t.crossing ||
        s.outside != t.outside || t.inside != 0) {
      ++bad;
    }
  }
  std::ostringstream os;
  os << instances << " instances, " << pairs << " crossing pairs, " << bad
     << " failures";
  return {bad == 0 && pairs > 0, os.str()};
}

// 9. Maximizers reduce to the sphere by topological moves; gluings with a
// torus bubble never do.
Outcome sphere() {
  bool ok = true;
  int spheres = 0;
  int total = 0;
  for (const auto& names : kMaximizerSets) {
    const std::vector<ColoredGraph> bubbles = build(names);
    const GluingSpace space(bubbles);
    for (const auto& match : max_over(space).maximizer_matchings) {
      const ColoredGraph g = space.close(match);
      ++total;
      const ReductionTrace t = reduce_to_canonical(g);
      bool good = t.verdict == ReductionVerdict::CanonicalSphere &&
                  t.terminal.vertex_count() == 2;
      for (const AppliedMove& m : t.moves) good &= m.topological;
      const oracle::Plain p = oracle::plain(g);
      for (int skip = 0; skip <= 3; ++skip) {
        std::vector<int> cols;
        for (int c = 0; c <= 3; ++c) {
          if (c != skip) cols.push_back(c);
        }
        // Each component of the three-colored subgraph must be a sphere:
        // sum of (2 - 2 genus) equals 2 * components.
        oracle::Plain sub{p.n, 3, {}};
        for (const Edge& e : p.edges) {
          if (e.color != skip) sub.edges.push_back(e);
        }
        const int faces = oracle::cycles(sub, cols[0], cols[1]) +
                          oracle::cycles(sub, cols[0], cols[2]) +
                          oracle::cycles(sub, cols[1], cols[2]);
        const int chi = sub.n - static_cast<int>(sub.edges.size()) + faces;
        const int comps = static_cast<int>(
            p_bubbles(g, ColorSet::range(0, 3) - ColorSet{skip}).components.size());
        good &= chi == 2 * comps;
      }
      spheres += good;
    }
  }
  ok &= total > 0 && spheres == total;
  int reported = 0;
  int checked = 0;
  for (const auto& names : std::vector<std::vector<std::string_view>>{
           {"K33", "MELON_B2"}, {"K33", "K33"}}) {
    for (const ColoredGraph& g : enumerate_gluings(build(names), true)) {
      ++checked;
      reported += reduce_to_canonical(g).verdict == ReductionVerdict::CanonicalSphere;
    }
  }
  ok &= reported == 0 && checked > 0;
  std::ostringstream os;
  os << spheres << "/" << total << " maximizers reduce with planar 3-bubbles, "
     << reported << "/" << checked << " torus-bubble gluings reported sphere";
  return {ok, os.str()};
}

// 10. A pair joined by two edges is matched by every maximal pairing.
Outcome qedges() {
  int bubbles = 0;
  int pairs = 0;
  int bad = 0;
  for (int n = 4; n <= 8; n += 2) {
    for (const ColoredGraph& b : generate_bubbles(n, CanonicalMode::ColorsFixed)) {
      bool any = false;
      for (Vertex w : b.white_vertices()) {
        for (Vertex x : b.black_vertices()) {
          if (b.colors_between(w, x).size() != 2) continue;
          any = true;
          ++pairs;
          const QEdgesReport r = lemma_qedges_check(b, w, x);
          if (!r.holds() || r.maximizers == 0) ++bad;
        }
      }
      bubbles += any;
    }
  }
  std::ostringstream os;
  os << bubbles << " bubbles, " << pairs << " q=2 pairs, " << bad
     << " counterexamples";
  return {bad == 0 && pairs > 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "flip delta law", 10, flip_law},
      {2, "gurau degree nonnegative", 60, gurau},
      {3, "melonic C1", 1, melonic_c1},
      {4, "embedding goldens", 1, embedding_goldens},
      {5, "face bound", 120, face_bound},
      {6, "no 4-cuts in maximizers", 300, no_four_cuts},
      {7, "maximal 2-cut iff maximizer", 300, max_two_cut},
      {8, "boundary bubble invariance", 30, boundary},
      {9, "sphere recognition", 120, sphere},
      {10, "qEdges", 60, qedges},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.ok && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " "
              << c.name << " | exact | " << std::fixed << std::setprecision(3)
              << secs << " s < " << std::setprecision(0) << c.limit_seconds
              << " s" << (in_time ? "" : " EXCEEDED") << " | " << out.detail
              << std::endl;
  }
  std::cout << "acceptance " << (criteria.size() - failed) << "/"
            << criteria.size() << " passed" << std::endl;
  return failed;
}

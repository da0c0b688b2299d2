#include "cgraph/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cgraph/census.hpp"
#include "cgraph/embedding.hpp"
#include "cgraph/fixtures.hpp"
#include "cgraph/graph_io.hpp"
#include "cgraph/moves.hpp"
#include "cgraph/search.hpp"

namespace cgraph {

namespace {

constexpr std::array<std::string_view, 9> kSuites = {
    "flip-law",   "gurau-nonneg",        "melonic-c1",
    "four-cut",   "max-two-cut",         "only-planar-formula",
    "face-bound", "boundary-invariance", "topology-sphere",
};

const std::vector<Multiset> kMaximizerSets = {
    {{"OCTA", "MELON_B2"}, 0},
    {{"OCTA", "OCTA"}, 0},
    {{"Q1_B4", "Q1_B4", "MELON_B2"}, 0},
};

const std::vector<Multiset> kTwoCutSets = {
    {{"OCTA", "MELON_B2"}, 0},
    {{"OCTA", "OCTA"}, 0},
    {{"Q1_B4", "Q1_B4", "MELON_B2"}, 0},
    {{"K33", "MELON_B2"}, 0},
};

const std::vector<Multiset> kFormulaSets = {
    {{"Q1_B4", "MELON_B2"}, 0},
    {{"Q1_B4", "Q1_B4"}, 0},
    {{"OCTA", "MELON_B2"}, 0},
    {{"OCTA", "OCTA"}, 0},
    {{"OCTA", "MELON_B2", "MELON_B2"}, 0},
    {{"MELON6A", "MELON6B"}, 0},
    {{"Q1_B4", "Q1_B4", "MELON_B2"}, 0},
    {{"K33", "MELON_B2"}, 0},
    {{"K33", "Q1_B4"}, 0},
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

SearchOptions search_options(const HarnessConfig& cfg) {
  SearchOptions o;
  o.budget = cfg.vertex_budget;
  o.jobs = cfg.jobs;
  return o;
}

void emit(const HarnessConfig& cfg, const std::string& stem,
          const ColoredGraph& g) {
  if (!cfg.output_dir) return;
  std::filesystem::create_directories(*cfg.output_dir);
  write_graph_file(*cfg.output_dir / (stem + ".cg"), g);
}

void add(SuiteResult& r, std::string id, std::string expected,
         std::string observed, bool ok) {
  r.cases.push_back({std::move(id), std::move(expected), std::move(observed),
                     ok});
}

// --- flip-law -------------------------------------------------------------

void suite_flip_law(const HarnessConfig& cfg, SuiteResult& r) {
  std::mt19937_64 rng(cfg.seed);
  constexpr int kTarget = 10000;
  std::map<int, std::array<int, 2>> by_n;  // n -> {instances, violations}
  int cut_flips = 0;
  int cut_violations = 0;
  int connected = 0;
  while (connected < kTarget) {
    const int whites = std::uniform_int_distribution<int>(2, 6)(rng);
    const ColoredGraph g = random_closed_graph(rng, whites);
    std::vector<EdgeId> zero;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).color == 0) zero.push_back(e);
    }
    std::shuffle(zero.begin(), zero.end(), rng);
    const FlipResult f = flip(g, zero[0], zero[1]);
    const int before = cycle_census(g).c0();
    int after = 0;
    for (const ColoredGraph& c : f.components) after += cycle_census(c).c0();
    if (f.connected()) {
      ++connected;
      auto& row = by_n[g.vertex_count()];
      ++row[0];
      if (after != before - 3 + 2 * f.interaction.size()) ++row[1];
    } else {
      ++cut_flips;
      if (before != after - 3 || f.interaction.size() != 3) ++cut_violations;
    }
  }
  for (const auto& [n, row] : by_n) {
    add(r, "connected flips n=" + std::to_string(n),
        "0 violations of C0' = C0 - 3 + 2|I|",
        std::to_string(row[1]) + " violations in " + std::to_string(row[0]),
        row[1] == 0);
  }
  add(r, "disconnecting flips", "0 violations of C0 = C0(G1) + C0(G2) - 3",
      std::to_string(cut_violations) + " violations in " +
          std::to_string(cut_flips),
      cut_violations == 0);
}

// --- gurau-nonneg -----------------------------------------------------------

void suite_gurau(const HarnessConfig& cfg, SuiteResult& r) {
  const std::vector<std::string_view> names = {"MELON_B2", "Q1_B4", "MELON6A",
                                               "MELON6B",  "K33",   "OCTA"};
  std::vector<ColoredGraph> pool;
  for (auto n : names) pool.push_back(*fixtures::by_name(n));
  const int limit = std::min(12, cfg.vertex_budget);
  // n -> {multisets, gluings, bad, min omega, max omega}
  std::map<int, std::array<std::int64_t, 5>> by_n;
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int from, int total) {
    if (!pick.empty()) {
      std::vector<ColoredGraph> bubbles;
      for (int i : pick) bubbles.push_back(pool[i]);
      auto& row = by_n.try_emplace(total, std::array<std::int64_t, 5>{
                                              0, 0, 0, 1 << 30, -1})
                      .first->second;
      ++row[0];
      for (const ColoredGraph& g : enumerate_gluings(bubbles, true, limit)) {
        const GurauDegree w = gurau_degree(g);
        ++row[1];
        if (!w.is_nonnegative_integer()) ++row[2];
        row[3] = std::min(row[3], w.value.num);
        row[4] = std::max(row[4], w.value.num);
      }
    }
    for (int i = from; i < static_cast<int>(pool.size()); ++i) {
      if (total + pool[i].vertex_count() > limit) continue;
      pick.push_back(i);
      rec(i, total + pool[i].vertex_count());
      pick.pop_back();
    }
  };
  rec(0, 0);
  for (const auto& [n, row] : by_n) {
    std::ostringstream os;
    os << row[2] << " bad in " << row[1] << " gluings of " << row[0]
       << " multisets, omega in [" << row[3] << ',' << row[4] << ']';
    add(r, "gluings n=" + std::to_string(n), "omega nonnegative integer",
        os.str(), row[2] == 0);
  }
}

// --- melonic-c1 -------------------------------------------------------------

void suite_melonic(const HarnessConfig& cfg, SuiteResult& r) {
  for (auto name : {"MELON_B2", "Q1_B4", "MELON6A", "MELON6B"}) {
    const ColoredGraph b = *fixtures::by_name(name);
    const MaxReport m = max_pairings(b, search_options(cfg));
    const int want = b.vertex_count() + 1;
    std::ostringstream exp, obs;
    exp << "C1=" << want << " maximizers=1";
    obs << "C1=" << m.maximum << " maximizers=" << m.maximizer_count();
    add(r, name, exp.str(), obs.str(),
        m.maximum == want && m.maximizer_count() == 1);
  }
}

// --- four-cut ---------------------------------------------------------------

void suite_four_cut(const HarnessConfig& cfg, SuiteResult& r) {
  for (const Multiset& ms : kMaximizerSets) {
    const std::vector<ColoredGraph> bubbles = ms.build();
    const GluingSpace space(bubbles, cfg.vertex_budget);
    const MaxReport m = max_over(space, search_options(cfg));
    std::int64_t bad = 0;
    for (const auto& match : m.maximizer_matchings) {
      const ColoredGraph g = space.close(match);
      for (int k = 0; k < space.occurrence_count(); ++k) {
        const auto [first, size] = space.occurrence_range(k);
        std::vector<Vertex> verts(size);
        std::iota(verts.begin(), verts.end(), first);
        const auto sizes = edge_cut_partition(g, verts).class_sizes();
        if (std::count(sizes.begin(), sizes.end(), 4) > 0) ++bad;
      }
    }
    add(r, ms.label(), "no cut class of size 4",
        std::to_string(bad) + " occurrences with a 4-cut in " +
            std::to_string(m.maximizer_count()) + " maximizers",
        bad == 0 && m.maximizer_count() > 0);
    for (std::size_t i = 0; i < m.maximizers.size(); ++i) {
      emit(cfg, "four-cut-" + ms.label() + "-" + std::to_string(i),
           m.maximizers[i]);
    }
  }
}

// --- max-two-cut / only-planar-formula --------------------------------------

void suite_max_two_cut(const HarnessConfig& cfg, SuiteResult& r) {
  for (const Multiset& ms : kTwoCutSets) {
    const std::vector<ColoredGraph> bubbles = ms.build();
    const OnlyPlanarReport rep =
        verify_only_planar(bubbles, ms.marked, search_options(cfg));
    std::ostringstream obs;
    obs << rep.maximizers << " maximizers, " << rep.all_max_two_cut
        << " with the property, " << rep.mismatches << " mismatches";
    add(r, ms.label() + " iff", "maximizers = gluings with the property",
        obs.str(), rep.mismatches == 0 && rep.maximizers > 0);
    add(r, ms.label() + " count", "C=" + std::to_string(rep.formula),
        "C=" + std::to_string(rep.brute_force),
        rep.formula == rep.brute_force);
  }
}

void suite_only_planar(const HarnessConfig& cfg, SuiteResult& r) {
  for (const Multiset& ms : kFormulaSets) {
    const std::vector<ColoredGraph> bubbles = ms.build();
    const OnlyPlanarReport rep =
        verify_only_planar(bubbles, ms.marked, search_options(cfg));
    std::ostringstream exp, obs;
    exp << "C=" << rep.formula << " (C1:";
    for (int c : rep.c1) exp << ' ' << c;
    exp << ')';
    obs << "C=" << rep.brute_force << " mismatches=" << rep.mismatches;
    add(r, ms.label(), exp.str(), obs.str(), rep.ok());
  }
}

// --- face-bound -------------------------------------------------------------

void suite_face_bound(const HarnessConfig& cfg, SuiteResult& r) {
  for (int n = 2; n <= 10; n += 2) {
    const auto all =
        generate_bubbles(n, CanonicalMode::ColorsPermutable, cfg.jobs);
    int planar = 0;
    int bad = 0;
    int melonic_nonplanar = 0;
    for (const ColoredGraph& b : all) {
      const bool p = is_planar(b);
      if (is_melonic(b).melonic && !p) ++melonic_nonplanar;
      if (!p) continue;
      ++planar;
      if (!check_face_bound(b).holds) ++bad;
    }
    add(r, "planar bubbles n=" + std::to_string(n),
        "2F2 + F4 >= 6 and F4 >= 6 when F2 = 0",
        std::to_string(bad) + " violations in " + std::to_string(planar) +
            " planar of " + std::to_string(all.size()),
        bad == 0 && planar > 0);
    add(r, "melonic bubbles n=" + std::to_string(n), "all planar",
        std::to_string(melonic_nonplanar) + " non-planar",
        melonic_nonplanar == 0);
  }
}

// --- boundary-invariance ----------------------------------------------------

void suite_boundary(const HarnessConfig& cfg, SuiteResult& r) {
  std::mt19937_64 rng(cfg.seed + 7);
  constexpr int kTarget = 1000;
  int instances = 0;
  int pair_checks = 0;
  int interaction_bad = 0;
  int decomposition_bad = 0;
  while (instances < kTarget) {
    const int whites = std::uniform_int_distribution<int>(2, 7)(rng);
    const ColoredGraph g = random_closed_graph(rng, whites);
    const auto occ = bubble_occurrences(g);
    if (occ.size() < 2) continue;
    std::vector<Vertex> region;
    std::vector<int> order(occ.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const int take =
        std::uniform_int_distribution<int>(1, static_cast<int>(occ.size()) - 1)(
            rng);
    for (int i = 0; i < take; ++i) {
      region.insert(region.end(), occ[order[i]].begin(), occ[order[i]].end());
    }
    std::sort(region.begin(), region.end());
    ++instances;

    const BoundaryReplacement rep = replace_with_boundary(g, region);
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : region) in[v] = true;
    std::vector<EdgeId> crossing;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.color == 0 && in[ed.u] != in[ed.v]) crossing.push_back(e);
    }
    for (std::size_t i = 0; i < crossing.size(); ++i) {
      for (std::size_t j = i + 1; j < crossing.size(); ++j) {
        ++pair_checks;
        const ColorSet before = interaction_colors(g, crossing[i], crossing[j]);
        const ColorSet after = interaction_colors(
            rep.graph, rep.edge_map[crossing[i]], rep.edge_map[crossing[j]]);
        if (before != after) ++interaction_bad;
      }
    }
    const ZeroCycleSplit s = split_zero_cycles(g, region);
    const ZeroCycleSplit t = split_zero_cycles(rep.graph, rep.boundary);
    const bool ok = s.total() == count_zero_cycles(g) &&
                    s.crossing == t.crossing && s.outside == t.outside &&
                    t.inside == 0;
    if (!ok) ++decomposition_bad;
  }
  add(r, "interaction colors", "equal before and after replacement",
      std::to_string(interaction_bad) + " differences in " +
          std::to_string(pair_checks) + " edge pairs over " +
          std::to_string(instances) + " instances",
      interaction_bad == 0 && pair_checks > 0);
  add(r, "C0 decomposition", "C0 = C0(H) + C0(G-H) + C0(G,H), C0(G,H) kept",
      std::to_string(decomposition_bad) + " failures in " +
          std::to_string(instances),
      decomposition_bad == 0);
}

// --- topology-sphere --------------------------------------------------------

bool all_three_bubbles_planar(const ColoredGraph& g) {
  for (Color skip = 0; skip <= 3; ++skip) {
    const ColorSet p = ColorSet::range(0, 3) - ColorSet{skip};
    const PBubbleCensus census = p_bubbles(g, p);
    for (const PBubble& b : census.components) {
      if (!is_planar(extract_p_bubble(g, b, p))) return false;
    }
  }
  return true;
}

void suite_topology(const HarnessConfig& cfg, SuiteResult& r) {
  for (const Multiset& ms : kMaximizerSets) {
    const std::vector<ColoredGraph> bubbles = ms.build();
    const GluingSpace space(bubbles, cfg.vertex_budget);
    const MaxReport m = max_over(space, search_options(cfg));
    int spheres = 0;
    int nontopological = 0;
    int nonplanar = 0;
    for (const auto& match : m.maximizer_matchings) {
      const ColoredGraph g = space.close(match);
      const ReductionTrace t = reduce_to_canonical(g, cfg.move_budget);
      if (t.verdict == ReductionVerdict::CanonicalSphere) ++spheres;
      for (const AppliedMove& mv : t.moves) {
        if (!mv.topological) ++nontopological;
      }
      if (!all_three_bubbles_planar(g)) ++nonplanar;
    }
    const int total = static_cast<int>(m.maximizer_count());
    std::ostringstream obs;
    obs << spheres << '/' << total << " spheres, " << nontopological
        << " non-topological moves, " << nonplanar
        << " with a non-planar 3-bubble";
    add(r, ms.label(), "all reduce to the supermelon, all 3-bubbles planar",
        obs.str(),
        total > 0 && spheres == total && nontopological == 0 && nonplanar == 0);
  }
  // Graphs with a torus bubble must never be reported as spheres.
  for (const Multiset& ms : {Multiset{{"K33", "MELON_B2"}, 0},
                             Multiset{{"K33", "K33"}, 0}}) {
    const std::vector<ColoredGraph> bubbles = ms.build();
    int reported = 0;
    int checked = 0;
    for (const ColoredGraph& g :
         enumerate_gluings(bubbles, true, cfg.vertex_budget)) {
      ++checked;
      if (reduce_to_canonical(g, cfg.move_budget).verdict ==
          ReductionVerdict::CanonicalSphere) {
        ++reported;
      }
    }
    add(r, ms.label() + " all gluings", "never canonical-sphere",
        std::to_string(reported) + " of " + std::to_string(checked) +
            " reported sphere",
        reported == 0 && checked > 0);
  }
}

}  // namespace

void HarnessConfig::validate() const {
  if (vertex_budget <= 0) {
    throw std::invalid_argument("vertex budget must be positive");
  }
  if (move_budget < 0) {
    throw std::invalid_argument("move budget must be positive");
  }
  if (jobs <= 0) throw std::invalid_argument("jobs must be positive");
  for (const std::string& s : suites) {
    if (!is_suite(s)) throw std::invalid_argument("unknown suite: " + s);
  }
}

int SuiteResult::failures() const {
  return static_cast<int>(
      std::count_if(cases.begin(), cases.end(),
                    [](const CaseRow& c) { return !c.ok; }));
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  os << "suite " << name << '\n';
  for (const CaseRow& c : cases) {
    os << (c.ok ? "ok   " : "FAIL ") << c.id << " | expected: " << c.expected
       << " | observed: " << c.observed << '\n';
  }
  if (truncated) os << "TRUNCATED\n";
  os << "# time " << std::fixed << std::setprecision(3) << seconds << " s\n";
  os << "RESULT " << name << ' ' << (passed ? "pass" : "fail") << ' '
     << cases.size() << ' ' << failures() << '\n';
  return os.str();
}

std::span<const std::string_view> suite_names() { return kSuites; }

bool is_suite(std::string_view name) {
  return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

SuiteResult run_suite(std::string_view name, const HarnessConfig& cfg) {
  if (!is_suite(name)) {
    throw std::invalid_argument("unknown suite: " + std::string(name));
  }
  cfg.validate();
  SuiteResult r;
  r.name = std::string(name);
  Timer timer;
  try {
    if (name == "flip-law") suite_flip_law(cfg, r);
    else if (name == "gurau-nonneg") suite_gurau(cfg, r);
    else if (name == "melonic-c1") suite_melonic(cfg, r);
    else if (name == "four-cut") suite_four_cut(cfg, r);
    else if (name == "max-two-cut") suite_max_two_cut(cfg, r);
    else if (name == "only-planar-formula") suite_only_planar(cfg, r);
    else if (name == "face-bound") suite_face_bound(cfg, r);
    else if (name == "boundary-invariance") suite_boundary(cfg, r);
    else suite_topology(cfg, r);
  } catch (const BudgetExceeded& e) {
    r.truncated = true;
    add(r, "truncated", "complete sweep", e.what(), false);
  }
  r.seconds = timer.seconds();
  r.passed = !r.truncated && !r.cases.empty() && r.failures() == 0;
  return r;
}

ColoredGraph random_closed_graph(std::mt19937_64& rng, int whites, int d) {
  if (whites < 1) throw GraphError("random_closed_graph: need a vertex pair");
  std::vector<int> perm(whites);
  for (;;) {
    std::vector<Edge> edges;
    for (Color c = 0; c <= d; ++c) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int i = 0; i < whites; ++i) {
        edges.push_back({i, whites + perm[i], c});
      }
    }
    std::vector<Parity> parity(2 * whites, Parity::White);
    std::fill(parity.begin() + whites, parity.end(), Parity::Black);
    ColoredGraph g = ColoredGraph::from_edges(
        d, 2 * whites, std::move(edges), ColorSet::range(0, d),
        std::move(parity));
    if (g.is_connected()) return g;
  }
}

std::string Multiset::label() const {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
    if (static_cast<int>(i) == marked && names.size() > 1 &&
        names[i] == "K33") {
      out += "*";
    }
  }
  return out + "]";
}

std::vector<ColoredGraph> Multiset::build() const {
  std::vector<ColoredGraph> out;
  for (auto n : names) {
    auto g = fixtures::by_name(n);
    if (!g) throw GraphError("unknown fixture " + std::string(n));
    out.push_back(std::move(*g));
  }
  return out;
}

std::span<const Multiset> maximizer_multisets() { return kMaximizerSets; }
std::span<const Multiset> two_cut_multisets() { return kTwoCutSets; }

}  // namespace cgraph

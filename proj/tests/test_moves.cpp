#include <gtest/gtest.h>

#include <set>

#include "cgraph/canonical.hpp"
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

std::vector<EdgeId> zero_edges(const ColoredGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).color == 0) out.push_back(e);
  }
  return out;
}

int oracle_c0_sum(const std::vector<ColoredGraph>& parts) {
  int total = 0;
  for (const auto& p : parts) total += oracle::c0(oracle::plain(p));
  return total;
}

ColoredGraph random_melonic_closed(std::mt19937_64& rng, int steps) {
  ColoredGraph g = fx("SUPERMELON3");
  for (int s = 0; s < steps; ++s) {
    g = melonic_insert(
        g, std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng));
  }
  return g;
}

}  // namespace

TEST(Flip, IsAnInvolution) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const ColoredGraph g = random_closed_graph(rng, 2 + t % 5);
    const auto z = zero_edges(g);
    const FlipResult once = flip(g, z[0], z[1]);
    const FlipResult twice = flip(once.graph, z[0], z[1]);
    EXPECT_EQ(twice.graph, g);
  }
}

TEST(Flip, DeltaLawAgainstRecount) {
  std::mt19937_64 rng(2);
  int connected = 0;
  for (int t = 0; t < 500; ++t) {
    const ColoredGraph g = random_closed_graph(rng, 2 + t % 5);
    const auto z = zero_edges(g);
    const FlipResult f = flip(g, z[0], z[z.size() - 1]);
    EXPECT_EQ(f.c0_before, oracle::c0(oracle::plain(g)));
    EXPECT_EQ(f.c0_after, oracle_c0_sum(f.components));
    if (f.connected()) {
      ++connected;
      EXPECT_EQ(f.c0_after, f.predicted_c0());
    }
  }
  EXPECT_GT(connected, 100);
}

TEST(Flip, TwoEdgeCutDisconnects) {
  const std::vector<ColoredGraph> two = {fx("Q1_B4"), fx("Q1_B4")};
  int cuts = 0;
  for (const ColoredGraph& g : enumerate_gluings(two, true)) {
    const std::vector<Vertex> first = {0, 1, 2, 3};
    for (const auto& cls : edge_cut_partition(g, first).classes) {
      if (cls.size() != 2) continue;
      ++cuts;
      const FlipResult f = flip(g, cls[0], cls[1]);
      EXPECT_EQ(f.components.size(), 2u);
      EXPECT_EQ(f.c0_before, f.c0_after - 3);
      EXPECT_EQ(f.interaction, ColorSet::range(1, 3));
    }
  }
  EXPECT_GT(cuts, 0);
}

TEST(Flip, InteractionTwoGainsOne) {
  std::mt19937_64 rng(3);
  int found = 0;
  for (int t = 0; t < 2000 && found < 20; ++t) {
    const ColoredGraph g = random_closed_graph(rng, 4);
    const auto z = zero_edges(g);
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = i + 1; j < z.size(); ++j) {
        if (interaction_colors(g, z[i], z[j]).size() != 2) continue;
        const FlipResult f = flip(g, z[i], z[j]);
        if (!f.connected()) continue;
        ++found;
        EXPECT_EQ(oracle_c0_sum(f.components), f.c0_before + 1);
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Flip, RejectsBadEdges) {
  const ColoredGraph s = fx("SUPERMELON3");
  EXPECT_THROW(flip(s, 0, 0), GraphError);
  EXPECT_THROW(flip(s, 0, 1), GraphError);
}

TEST(Contract, DeltaMatchesParallelColorsOnSweep) {
  std::set<ContractionCase> seen;
  const std::vector<std::vector<std::string_view>> sets = {
      {"Q1_B4", "Q1_B4"}, {"OCTA", "MELON_B2"}, {"MELON6A", "MELON_B2"}};
  auto check = [&](const ColoredGraph& g) {
    for (EdgeId e : zero_edges(g)) {
      const ContractionResult r = contract(g, e);
      seen.insert(r.kind);
      ASSERT_EQ(r.c0_after - r.c0_before, r.expected_delta);
      ASSERT_EQ(r.expected_delta, -r.parallel.size());
      ASSERT_EQ(r.c0_after, oracle_c0_sum(r.components));
      ASSERT_EQ(r.graph.vertex_count(), g.vertex_count() - 2);
      const int grow = static_cast<int>(bubble_occurrences(r.graph).size()) -
                       static_cast<int>(bubble_occurrences(g).size());
      // An edge between two bubbles merges them.
      const auto ids = p_bubbles(g, ColorSet::range(1, 3));
      bool same = false;
      for (const auto& b : ids.components) {
        const Edge& ed = g.edge(e);
        same |= std::binary_search(b.vertices.begin(), b.vertices.end(), ed.u) &&
                std::binary_search(b.vertices.begin(), b.vertices.end(), ed.v);
      }
      if (same && r.kind == ContractionCase::NoParallel) {
        // A bubble that is not 3-connected may fall apart here too.
        ASSERT_TRUE(grow >= 0 && grow <= 2) << grow;
      } else if (same) {
        ASSERT_EQ(grow, r.kind == ContractionCase::OneParallelSplit ? 1 : 0);
      } else {
        ASSERT_EQ(grow, -1);
        ASSERT_EQ(r.kind, ContractionCase::NoParallel);
      }
    }
  };
  for (const auto& names : sets) {
    std::vector<ColoredGraph> bubbles;
    for (auto n : names) bubbles.push_back(fx(n));
    for (const ColoredGraph& g : enumerate_gluings(bubbles, true)) check(g);
  }
  // Every pairing of every bubble on 8 vertices.
  for (const ColoredGraph& b : generate_bubbles(8, CanonicalMode::ColorsPermutable)) {
    for (const Pairing& p : enumerate_pairings(b)) {
      if (p.connected) check(close_pairing(b, p.match));
    }
  }
  EXPECT_TRUE(seen.count(ContractionCase::TwoParallel));
  EXPECT_TRUE(seen.count(ContractionCase::OneParallel));
  EXPECT_TRUE(seen.count(ContractionCase::OneParallelSplit));
  EXPECT_TRUE(seen.count(ContractionCase::NoParallel));
}

TEST(Contract, TwoVertexComponentThrows) {
  EXPECT_THROW(contract(fx("SUPERMELON3"), 0), GraphError);
}

TEST(Dipoles, SupermelonHasOneDegeneratePair) {
  const auto d = find_dipoles(fx("SUPERMELON3"));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].h(), 4);
  EXPECT_FALSE(d[0].removable());
}

TEST(Dipoles, MelonicGraphsHaveAThreeDipole) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const ColoredGraph g = random_melonic_closed(rng, 1 + t % 5);
    bool any = false;
    for (const Dipole& d : find_dipoles(g)) any |= d.h() == 3 && d.removable();
    EXPECT_TRUE(any);
  }
}

TEST(Dipoles, OctaMaximizerHasZeroColoredTwoDipole) {
  const MaxReport m = max_pairings(fx("OCTA"));
  ASSERT_FALSE(m.maximizers.empty());
  for (const ColoredGraph& g : m.maximizers) {
    bool any = false;
    for (const Dipole& d : find_dipoles(g)) {
      any |= d.h() == 2 && d.colors.contains(0) && d.removable();
    }
    EXPECT_TRUE(any);
  }
}

TEST(Dipoles, RemoveThenInsertRestores) {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const ColoredGraph g = random_closed_graph(rng, 3 + t % 4);
    for (const Dipole& d : find_dipoles(g)) {
      if (!d.removable()) continue;
      const DipoleRemoval r = remove_dipole(g, d);
      EXPECT_EQ(r.topological, d.topological());
      EXPECT_EQ(insert_dipole(r.graph, r.site), g);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Dipoles, OneDipoleWithPlanarSideIsTopological) {
  std::mt19937_64 rng(7);
  int found = 0;
  for (int t = 0; t < 300; ++t) {
    const ColoredGraph g = random_closed_graph(rng, 4);
    for (const Dipole& d : find_dipoles(g)) {
      if (d.h() != 1 || !d.removable()) continue;
      if (d.genus_white == 0 || d.genus_black == 0) {
        ++found;
        EXPECT_TRUE(d.topological());
        EXPECT_TRUE(remove_dipole(g, d).topological);
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Dipoles, NotRemovableThrows) {
  const auto d = find_dipoles(fx("SUPERMELON3"));
  EXPECT_THROW(remove_dipole(fx("SUPERMELON3"), d[0]), GraphError);
}

TEST(ConnectedSum, SupermelonIsNeutral) {
  std::mt19937_64 rng(8);
  const ColoredGraph s = fx("SUPERMELON3");
  for (int t = 0; t < 20; ++t) {
    const ColoredGraph g = random_closed_graph(rng, 2 + t % 4);
    const Vertex black = g.black_vertices().front();
    const ConnectedSum sum = connected_sum(g, black, s, 0);
    EXPECT_EQ(canonical_form(sum.graph, CanonicalMode::ColorsFixed),
              canonical_form(g, CanonicalMode::ColorsFixed));
  }
}

TEST(ConnectedSum, TwoSupermelons) {
  const ColoredGraph s = fx("SUPERMELON3");
  const ConnectedSum sum = connected_sum(s, 1, s, 0);
  EXPECT_EQ(sum.graph.vertex_count(), 2);
  EXPECT_EQ(reduce_to_canonical(sum.graph).verdict,
            ReductionVerdict::CanonicalSphere);
}

TEST(Reduce, SupermelonInZeroMoves) {
  const ReductionTrace t = reduce_to_canonical(fx("SUPERMELON3"));
  EXPECT_TRUE(t.moves.empty());
  EXPECT_EQ(t.verdict, ReductionVerdict::CanonicalSphere);
}

TEST(Reduce, MelonicGraphsAreSpheres) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const ColoredGraph g = random_melonic_closed(rng, 1 + t % 7);
    const ReductionTrace r = reduce_to_canonical(g);
    EXPECT_EQ(r.verdict, ReductionVerdict::CanonicalSphere);
    for (const AppliedMove& m : r.moves) EXPECT_TRUE(m.topological);
  }
}

TEST(Reduce, OctaMaximizersAreSpheres) {
  const GluingSpace space(std::vector<ColoredGraph>{fx("OCTA")});
  const MaxReport m = max_over(space);
  ASSERT_GT(m.maximizer_count(), 0);
  for (const auto& match : m.maximizer_matchings) {
    EXPECT_EQ(reduce_to_canonical(space.close(match)).verdict,
              ReductionVerdict::CanonicalSphere);
  }
}

TEST(Reduce, NonPlanarBubbleIsNeverASphere) {
  const std::vector<ColoredGraph> two = {fx("K33"), fx("K33")};
  for (const ColoredGraph& g : enumerate_gluings(two, true)) {
    const ReductionTrace t = reduce_to_canonical(g);
    ASSERT_NE(t.verdict, ReductionVerdict::CanonicalSphere);
  }
}

TEST(Reduce, RejectsOpenGraphs) {
  EXPECT_THROW(reduce_to_canonical(fx("OCTA")), GraphError);
}

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cgraph/canonical.hpp"
#include "cgraph/embedding.hpp"
#include "cgraph/graph_io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cgraph;
using namespace testing_util;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Parse, Supermelon) {
  const ColoredGraph g = read_graph_file(fixture_dir() / "supermelon3.cg");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_TRUE(g.is_closed());
  std::set<Color> colors;
  for (const Edge& e : g.edges()) colors.insert(e.color);
  EXPECT_EQ(colors, (std::set<Color>{0, 1, 2, 3}));
}

TEST(Parse, Octa) {
  const ColoredGraph g = read_graph_file(fixture_dir() / "octa.cg");
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 12);
  EXPECT_EQ(g.support(), ColorSet::range(1, 3));
  EXPECT_TRUE(g.is_bubble_colored());
}

TEST(Parse, RepeatedColorIsRejected) {
  const std::string text = "cg 3 2\ne 0 1 1\ne 0 1 2\ne 0 1 2\n";
  try {
    parse_graph(text);
    FAIL() << "accepted";
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.report().has(ViolationKind::RepeatedColor));
  }
}

TEST(Parse, SyntaxErrorCarriesPosition) {
  try {
    parse_graph("cg 3 2\ne 0 1 1\nx 0 1 2\n");
    FAIL() << "accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_graph("graph 3 2\n"), ParseError);
  EXPECT_THROW(parse_graph("cg 3 2\ne 0 1\n"), ParseError);
}

TEST(Parse, CommentsAndBlankLines) {
  const ColoredGraph g =
      parse_graph("cg 3 2\n# melon\n\ne 0 1 1\n# x\ne 0 1 2\ne 0 1 3\n");
  EXPECT_EQ(g, fx("MELON_B2"));
  EXPECT_THROW(parse_graph("# melon\ncg 3 2\ne 0 1 1\ne 0 1 2\ne 0 1 3\n"),
               ParseError);
}

TEST(Validate, OctaIsClean) {
  const ColoredGraph o = fx("OCTA");
  RawGraph raw{3, 8, {o.edges().begin(), o.edges().end()}, {}, {}};
  EXPECT_TRUE(validate(raw).ok());
}

TEST(Validate, WhiteWhiteEdge) {
  RawGraph raw;
  raw.dimension = 1;
  raw.vertex_count = 2;
  raw.edges = {{0, 1, 1}};
  raw.parity = std::vector<Parity>{Parity::White, Parity::White};
  EXPECT_TRUE(validate(raw).has(ViolationKind::NotBipartite));
}

TEST(Validate, OddCycleIsNotBipartite) {
  EXPECT_THROW(parse_graph("cg 2 3\ne 0 1 1\ne 1 2 2\ne 2 0 1\n"),
               ValidationError);
}

TEST(Validate, MissingColorZero) {
  RawGraph raw;
  raw.dimension = 3;
  raw.vertex_count = 4;
  raw.support = ColorSet::range(0, 3);
  // Vertices 2 and 3 have colors 1..3 only.
  raw.edges = {{0, 1, 0}, {0, 1, 1}, {0, 3, 2}, {2, 1, 2},
               {0, 3, 3}, {2, 1, 3}, {2, 3, 1}};
  const ValidationReport r = validate(raw);
  EXPECT_TRUE(r.has(ViolationKind::MissingColor)) << r.to_string();
}

TEST(Serialize, SupermelonExactText) {
  EXPECT_EQ(serialize_graph(fx("SUPERMELON3")),
            "cg 3 2\ne 0 1 0\ne 0 1 1\ne 0 1 2\ne 0 1 3\n");
}

TEST(Serialize, RoundTripOcta) {
  const ColoredGraph o = fx("OCTA");
  EXPECT_EQ(parse_graph(serialize_graph(o)), o);
}

TEST(Serialize, FixtureFilesAreByteIdentical) {
  for (const auto& f : fixtures::all()) {
    const auto path = fixture_dir() / f.file;
    const std::string text = slurp(path);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text) << f.name;
    EXPECT_EQ(serialize_graph(f.build()), text) << f.name;
  }
}

TEST(Canonical, RelabelingInvariance) {
  std::mt19937_64 rng(5);
  for (const auto& f : fixtures::all()) {
    const ColoredGraph g = f.build();
    for (int t = 0; t < 5; ++t) {
      const ColoredGraph h =
          relabel_vertices(g, random_perm(rng, g.vertex_count()));
      EXPECT_EQ(canonical_form(g, CanonicalMode::ColorsFixed),
                canonical_form(h, CanonicalMode::ColorsFixed))
          << f.name;
    }
  }
}

TEST(Canonical, FourVertexColorings) {
  const ColoredGraph q = fx("Q1_B4");
  // Parallel colors {2,3}, {1,3} and {1,2}.
  const std::vector<ColoredGraph> three = {
      q, permute_colors(q, {0, 2, 1, 3}), permute_colors(q, {0, 3, 2, 1})};
  std::set<CanonicalCode> fixed;
  std::set<CanonicalCode> free;
  for (const auto& g : three) {
    fixed.insert(canonical_form(g, CanonicalMode::ColorsFixed));
    free.insert(canonical_form(g, CanonicalMode::ColorsPermutable));
  }
  EXPECT_EQ(fixed.size(), 3u);
  EXPECT_EQ(free.size(), 1u);
}

TEST(Canonical, Melon6aDiffersFromK33) {
  for (auto mode : {CanonicalMode::ColorsFixed, CanonicalMode::ColorsPermutable}) {
    EXPECT_NE(canonical_form(fx("MELON6A"), mode),
              canonical_form(fx("K33"), mode));
  }
  EXPECT_FALSE(oracle::isomorphic(fx("MELON6A"), fx("K33"), true));
}

TEST(Canonical, AgreesWithBruteForceOnSmallBubbles) {
  // Every bubble on 6 vertices with color 1 fixed, compared pairwise.
  std::vector<ColoredGraph> all;
  std::vector<int> p2 = {0, 1, 2};
  do {
    std::vector<int> p3 = {0, 1, 2};
    do {
      std::vector<Edge> edges;
      for (int i = 0; i < 3; ++i) {
        edges.push_back({i, 3 + i, 1});
        edges.push_back({i, 3 + p2[i], 2});
        edges.push_back({i, 3 + p3[i], 3});
      }
      ColoredGraph g = ColoredGraph::from_edges(3, 6, edges, ColorSet::range(1, 3));
      if (g.is_connected()) all.push_back(std::move(g));
    } while (std::next_permutation(p3.begin(), p3.end()));
  } while (std::next_permutation(p2.begin(), p2.end()));
  for (auto mode : {CanonicalMode::ColorsFixed, CanonicalMode::ColorsPermutable}) {
    const bool permute = mode == CanonicalMode::ColorsPermutable;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        EXPECT_EQ(canonical_form(all[i], mode) == canonical_form(all[j], mode),
                  oracle::isomorphic(all[i], all[j], permute))
            << i << ' ' << j;
      }
    }
  }
}

TEST(Canonical, DisconnectedInputThrows) {
  const std::vector<ColoredGraph> two = {fx("MELON_B2"), fx("MELON_B2")};
  const ColoredGraph u = disjoint_union(two);
  EXPECT_THROW(canonical_form(u, CanonicalMode::ColorsFixed), GraphError);
  const std::vector<ColoredGraph> two_b = {fx("MELON_B2"), fx("Q1_B4")};
  EXPECT_NE(canonical_form_components(u, CanonicalMode::ColorsFixed),
            canonical_form_components(disjoint_union(two_b),
                                      CanonicalMode::ColorsFixed));
}

TEST(Isomorphisms, K33AutomorphismsMatchBruteForce) {
  const ColoredGraph k = fx("K33");
  const oracle::Plain p = oracle::plain(k);
  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> cid = {0, 1, 2, 3};
  const auto target = oracle::edge_multiset(p, id, cid);
  int brute = 0;
  std::vector<int> vmap = id;
  do {
    if (oracle::edge_multiset(p, vmap, cid) == target) ++brute;
  } while (std::next_permutation(vmap.begin(), vmap.end()));
  EXPECT_EQ(static_cast<int>(isomorphisms(k, k).size()), brute);
}

TEST(Graph, AccessorsAndComponents) {
  const ColoredGraph o = fx("OCTA");
  EXPECT_EQ(o.white_vertices().size(), 4u);
  for (Vertex v = 0; v < 8; ++v) {
    for (Color c = 1; c <= 3; ++c) {
      const Vertex w = o.neighbor(v, c);
      EXPECT_EQ(o.neighbor(w, c), v);
      EXPECT_NE(o.is_white(v), o.is_white(w));
    }
    EXPECT_EQ(o.edge_at(v, 0), kNoEdge);
  }
  const std::vector<ColoredGraph> parts = {fx("OCTA"), fx("MELON_B2")};
  const ColoredGraph u = disjoint_union(parts);
  EXPECT_EQ(u.components().size(), 2u);
  EXPECT_EQ(induced_subgraph(u, u.components()[1]), fx("MELON_B2"));
}

TEST(Graph, RewireKeepsOrderAndAppendsExtras) {
  const ColoredGraph q = fx("Q1_B4");
  // Remove the dipole {0,1}; join its outer color 1 neighbours.
  const std::vector<Vertex> removed = {0, 1};
  const std::vector<Edge> extra = {{3, 2, 1}};
  const ColoredGraph r = rewire(q, removed, extra);
  EXPECT_EQ(r.vertex_count(), 2);
  EXPECT_EQ(r, fx("MELON_B2"));
  EXPECT_EQ(r.edge(r.edge_count() - 1).color, 1);
  const auto m = survivor_map(4, removed);
  EXPECT_EQ(m, (std::vector<Vertex>{-1, -1, 0, 1}));
}

TEST(ColorSetOps, Basics) {
  ColorSet s{1, 3};
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ((s | ColorSet{2}), ColorSet::range(1, 3));
  EXPECT_EQ((ColorSet::range(0, 3) - s), (ColorSet{0, 2}));
  EXPECT_EQ(s.max(), 3);
  EXPECT_EQ(s.to_vector(), (std::vector<Color>{1, 3}));
}

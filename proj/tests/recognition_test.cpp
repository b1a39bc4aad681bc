#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "support.hpp"
#include "timcolor/generators.hpp"
#include "timcolor/recognition.hpp"

using namespace timcolor;

namespace {

bool is_chordless_cycle(const Graph& g, const std::vector<VertexId>& cyc) {
  const std::size_t k = cyc.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      bool consecutive = b == a + 1 || (a == 0 && b == k - 1);
      if (g.adjacent(cyc[a], cyc[b]) != consecutive) return false;
    }
  }
  return true;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(V(a), V(b));
    }
  }
  return g;
}

}  // namespace

TEST(FindHole, Cycles) {
  auto h = find_hole(cycle_graph(5));
  ASSERT_TRUE(h);
  EXPECT_EQ(h->size(), 5u);
  EXPECT_FALSE(find_hole(cycle_graph(4)));
  EXPECT_FALSE(find_hole(complete_graph(6)));
}

TEST(FindHole, SixCycleWithChordLeavesFiveHole) {
  // C_7 with chord (0,3) splits into a C_4 and a C_5.
  auto g = insert_edge(cycle_graph(7), V(0), V(3));
  auto h = find_hole(g);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->size(), 5u);
  EXPECT_TRUE(is_chordless_cycle(g, *h));
}

TEST(WeaklyChordal, Basics) {
  EXPECT_FALSE(is_weakly_chordal(cycle_graph(5)));
  EXPECT_TRUE(is_weakly_chordal(cycle_graph(4)));
  EXPECT_FALSE(is_weakly_chordal(complement(cycle_graph(6))));
  EXPECT_TRUE(is_weakly_chordal(load_fixture_graph("fig6.json")));
  EXPECT_TRUE(is_weakly_chordal(load_fixture_graph("fig7.json")));
  EXPECT_TRUE(is_weakly_chordal(load_fixture_graph("fig8.json")));
  EXPECT_TRUE(is_weakly_chordal(load_fixture_graph("fig9.json")));
}

class RandomRecognition : public ::testing::TestWithParam<int> {};

TEST_P(RandomRecognition, AgreesWithBruteForce) {
  std::mt19937_64 rng(1000 + GetParam());
  const std::size_t n = 4 + GetParam() % 7;  // up to 10 vertices
  const double p = 0.2 + 0.06 * (GetParam() % 10);
  auto g = random_graph(rng, n, p);
  EXPECT_EQ(is_weakly_chordal(g), brute::weakly_chordal(g));
  auto hole = find_hole(g);
  EXPECT_EQ(hole.has_value(), brute::has_induced_cycle(g, 5));
  if (hole) {
    EXPECT_GE(hole->size(), 5u);
    EXPECT_TRUE(is_chordless_cycle(g, *hole));
  }
}

TEST_P(RandomRecognition, IncrementalChecksMatchFullRecheck) {
  std::mt19937_64 rng(5000 + GetParam());
  auto g = random_weakly_chordal(8 + GetParam() % 4, 0.6, rng);
  ASSERT_TRUE(is_weakly_chordal(g));
  auto vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (g.adjacent(vs[a], vs[b])) {
        EXPECT_EQ(deletion_keeps_weakly_chordal(g, vs[a], vs[b]),
                  is_weakly_chordal(delete_edge(g, vs[a], vs[b])));
      } else {
        EXPECT_EQ(insertion_keeps_weakly_chordal(g, vs[a], vs[b]),
                  is_weakly_chordal(insert_edge(g, vs[a], vs[b])));
      }
    }
  }
}

TEST_P(RandomRecognition, TwoPairsAgreeWithInducedPathEnumeration) {
  std::mt19937_64 rng(9000 + GetParam());
  auto g = random_graph(rng, 4 + GetParam() % 5, 0.45);
  auto vs = g.vertices();
  std::vector<TwoPair> expected;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      bool bf = brute::two_pair(g, vs[a], vs[b]);
      EXPECT_EQ(is_two_pair(g, vs[a], vs[b]), bf);
      if (bf) expected.push_back({vs[a], vs[b]});
    }
  }
  EXPECT_EQ(enumerate_two_pairs(g), expected);
  auto first = find_two_pair(g);
  if (expected.empty()) {
    EXPECT_FALSE(first);
  } else {
    ASSERT_TRUE(first);
    EXPECT_EQ(*first, expected.front());
  }
}

TEST_P(RandomRecognition, HaywardProperty) {
  std::mt19937_64 rng(13000 + GetParam());
  auto g = random_weakly_chordal(5 + GetParam() % 8, 0.3 + 0.05 * (GetParam() % 10), rng);
  if (!g.is_complete()) EXPECT_TRUE(find_two_pair(g)) << "non-clique without a two-pair";
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomRecognition, ::testing::Range(0, 60));

TEST(ChordalBipartite, Cycles) {
  auto parts_even = [](std::size_t n) {
    Bipartition p;
    for (std::uint32_t i = 0; i < n; ++i) (i % 2 ? p.right : p.left).push_back(V(i));
    return p;
  };
  EXPECT_TRUE(is_chordal_bipartite(cycle_graph(4), parts_even(4)));
  EXPECT_FALSE(is_chordal_bipartite(cycle_graph(6), parts_even(6)));
  // The chord (0,3) splits C_6 into two 4-cycles.
  EXPECT_TRUE(is_chordal_bipartite(insert_edge(cycle_graph(6), V(0), V(3)), parts_even(6)));
}

TEST(ChordalBipartite, RejectsInvalidBipartition) {
  Bipartition bad{{V(0), V(1)}, {V(2), V(3)}};
  EXPECT_THROW(is_chordal_bipartite(cycle_graph(4), bad), GraphError);
  Bipartition partial{{V(0)}, {V(1)}};
  EXPECT_THROW(is_chordal_bipartite(cycle_graph(4), partial), GraphError);
}

TEST(TwoPair, Examples) {
  auto c4 = cycle_graph(4);
  EXPECT_EQ(find_two_pair(c4), (TwoPair{V(0), V(2)}));
  EXPECT_EQ(enumerate_two_pairs(c4), (std::vector<TwoPair>{{V(0), V(2)}, {V(1), V(3)}}));

  EXPECT_FALSE(find_two_pair(complete_graph(4)));
  EXPECT_TRUE(enumerate_two_pairs(complete_graph(5)).empty());

  auto p4 = path_graph(4);
  EXPECT_EQ(find_two_pair(p4), (TwoPair{V(0), V(2)}));
  EXPECT_FALSE(is_two_pair(p4, V(0), V(3)));
  EXPECT_TRUE(is_two_pair(p4, V(1), V(3)));
}

TEST(TwoPair, FigSixContainsTheOrderPairs) {
  auto g = load_fixture_graph("fig6.json");
  auto all = enumerate_two_pairs(g);
  auto has = [&](TwoPair p) { return std::find(all.begin(), all.end(), p) != all.end(); };
  EXPECT_TRUE(has({P(2), P(5)}));
  EXPECT_TRUE(has({P(1), P(4)}));
  EXPECT_TRUE(has({P(3), P(6)}));
}

TEST(TwoPair, OracleCap) {
  EXPECT_THROW(enumerate_two_pairs(Graph(15)), OracleCapExceeded);
  EXPECT_NO_THROW(enumerate_two_pairs(Graph(15), 20));
}

TEST(ChordlessPaths, Lengths) {
  EXPECT_EQ(chordless_path_lengths(cycle_graph(6), V(0), V(3)), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(chordless_path_lengths(path_graph(4), V(0), V(3)), (std::vector<std::size_t>{3}));
}

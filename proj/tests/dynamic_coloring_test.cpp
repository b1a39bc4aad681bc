#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "support.hpp"
#include "timcolor/dynamic_coloring.hpp"
#include "timcolor/generators.hpp"
#include "timcolor/recognition.hpp"

using namespace timcolor;

namespace {

using ClassPair = std::set<std::vector<VertexId>>;

std::set<ClassPair> classes(const std::vector<ContractionRecord>& rs) {
  std::set<ClassPair> out;
  for (const auto& r : rs) out.insert({r.x_members, r.y_members});
  return out;
}

ClassPair cp(std::vector<VertexId> a, std::vector<VertexId> b) { return {a, b}; }

bool proper(const ColoringState& s) {
  for (auto [a, b] : s.graph.edges()) {
    if (s.coloring.at(a) == s.coloring.at(b)) return false;
  }
  return true;
}

SolutionOrder order_of(std::initializer_list<std::array<std::uint32_t, 3>> triples) {
  SolutionOrder o;
  for (auto t : triples) o.records.push_back({V(t[0]), V(t[1]), V(t[2]), {}, {}});
  return o;
}

}  // namespace

TEST(CliqueGrows, Examples) {
  auto p3 = static_color(path_graph(3));
  EXPECT_TRUE(clique_grows(p3, V(0), V(2)));

  auto c4 = static_color(cycle_graph(4));
  EXPECT_TRUE(clique_grows(c4, V(0), V(2)));
  EXPECT_EQ(brute::clique_number(insert_edge(cycle_graph(4), V(0), V(2))), 3);

  auto fig6 = static_color(load_fixture_graph("fig6.json"));
  EXPECT_FALSE(clique_grows(fig6, P(2), P(5)));
}

TEST(OrderMembership, MatchesSingletonAgainstClass) {
  auto s = static_color(load_fixture_graph("fig6.json"));
  EXPECT_TRUE(order_record_for(s.order, P(2), P(5)));
  EXPECT_TRUE(order_record_for(s.order, P(5), P(2)));
  EXPECT_FALSE(order_record_for(s.order, P(1), P(2)));
}

TEST(InsertUpdate, FigSixCaseThreeOne) {
  auto s = static_color(load_fixture_graph("fig6.json"));
  auto [h, rep] = insert_update(s, P(2), P(5), {.verify = true});
  EXPECT_EQ(rep.case_label, UpdateCase::I31);
  EXPECT_EQ(classes(rep.pairs_removed),
            (std::set<ClassPair>{cp({P(2)}, {P(5)}), cp({P(1)}, {P(4)})}));
  EXPECT_EQ(classes(rep.pairs_added),
            (std::set<ClassPair>{cp({P(2)}, {P(4)}), cp({P(1)}, {P(5)})}));
  EXPECT_EQ(rep.colors_before, 3);
  EXPECT_EQ(rep.colors_after, 3);
  EXPECT_FALSE(rep.fallback_used);
  EXPECT_EQ(h.graph, load_fixture_graph("fig7.json"));
  EXPECT_TRUE(verify_state(h));
}

TEST(InsertUpdate, FigEightCaseThreeTwo) {
  auto s = static_color(load_fixture_graph("fig8.json"));
  auto [h, rep] = insert_update(s, P(1), P(4), {.verify = true});
  EXPECT_EQ(rep.case_label, UpdateCase::I32);
  EXPECT_EQ(rep.colors_after, rep.colors_before + 1);
  EXPECT_EQ(rep.omega_after, rep.omega_before + 1);
  EXPECT_EQ(h.order.size(), s.order.size() - 1);
  EXPECT_EQ(rep.recolored.size(), 1u);
  EXPECT_TRUE(verify_state(h));
}

TEST(InsertUpdate, FigTwoCaseOneLeavesColoring) {
  auto s = static_color(load_fixture_graph("fig2.json"));
  ASSERT_NE(s.coloring.at(P(3)), s.coloring.at(P(4)));
  auto [h, rep] = insert_update(s, P(3), P(4), {.verify = true});
  EXPECT_EQ(rep.case_label, UpdateCase::I1);
  EXPECT_TRUE(rep.recolored.empty());
  EXPECT_EQ(h.coloring, s.coloring);
  EXPECT_EQ(h.color_count, s.color_count);
  EXPECT_TRUE(verify_state(h));
}

TEST(InsertUpdate, CaseTwoExamples) {
  auto s = static_color(load_fixture_graph("case2.json"));
  auto [h1, r1] = insert_update(s, V(1), V(4), {.verify = true});
  EXPECT_EQ(r1.case_label, UpdateCase::I21);
  EXPECT_EQ(r1.colors_after, r1.colors_before);
  EXPECT_EQ(r1.recolored.size(), 1u);
  EXPECT_TRUE(proper(h1));

  auto [h2, r2] = insert_update(s, V(1), V(5), {.verify = true});
  EXPECT_EQ(r2.case_label, UpdateCase::I22);
  EXPECT_EQ(r2.colors_after, r2.colors_before + 1);
  EXPECT_EQ(h2.order.size(), s.order.size() - 1);
  EXPECT_TRUE(proper(h2));
}

// With a-b, c-d the first contraction is (a,c) itself, so inserting (a,c)
// lands in case 3-1. The result b-a-c-d is a path whose 2-colorings differ
// from {1,2,1,2} in at least two vertices.
TEST(InsertUpdate, DisjointEdgesInsertSameColoredPair) {
  auto s = static_color(make_graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(s.coloring.at(V(0)), s.coloring.at(V(2)));
  EXPECT_NE(s.coloring.at(V(0)), s.coloring.at(V(1)));
  auto [h, rep] = insert_update(s, V(0), V(2), {.verify = true});
  EXPECT_EQ(rep.case_label, UpdateCase::I31);
  EXPECT_EQ(rep.colors_after, 2);
  EXPECT_EQ(brute::chromatic_number(h.graph), 2);
  EXPECT_EQ(rep.recolored.size(), 2u);
  EXPECT_TRUE(proper(h));
}

TEST(InsertUpdate, RejectsPresentEdgeAndHoles) {
  auto s = static_color(path_graph(5));
  EXPECT_THROW(insert_update(s, V(0), V(1)), UpdateRejected);
  EXPECT_THROW(insert_update(s, V(0), V(9)), UpdateRejected);
  EXPECT_THROW(insert_update(s, V(0), V(4), {.verify = true}), UpdateRejected);
}

TEST(DeleteUpdate, FigNineCaseTwo) {
  auto h = load_fixture_graph("fig9.json");
  // (v2,v3), (v5,v6), (v23,v56), (v4,v7)
  auto s = state_from_order(h, order_of({{1, 2, 7}, {4, 5, 8}, {7, 8, 9}, {3, 6, 10}}));
  ASSERT_EQ(s.color_count, 3);
  auto [g, rep] = delete_update(s, P(1), P(4), {.verify = true});
  EXPECT_EQ(rep.case_label, UpdateCase::D2);
  EXPECT_EQ(rep.colors_before, 3);
  EXPECT_EQ(rep.colors_after, 2);
  EXPECT_TRUE(rep.pairs_removed.empty());
  EXPECT_EQ(classes(rep.pairs_added), (std::set<ClassPair>{cp({P(1)}, {P(4), P(7)})}));
  EXPECT_EQ(g.order.size(), s.order.size() + 1);
  EXPECT_EQ(g.graph, load_fixture_graph("fig8.json"));
  EXPECT_TRUE(verify_state(g));
}

TEST(DeleteUpdate, FigSevenCaseOne) {
  auto h = load_fixture_graph("fig7.json");
  // (v3,v6), (v2,v4), (v1,v5)
  auto s = state_from_order(h, order_of({{2, 5, 6}, {1, 3, 7}, {0, 4, 8}}));
  auto [g, rep] = delete_update(s, P(2), P(5), {.verify = true});
  EXPECT_EQ(rep.case_label, UpdateCase::D1);
  EXPECT_EQ(rep.colors_after, 3);
  EXPECT_TRUE(rep.pairs_removed.empty());
  EXPECT_TRUE(rep.pairs_added.empty());
  EXPECT_EQ(g.coloring, s.coloring);
  auto replay = replay_order(g.graph, g.order);
  std::set<std::vector<VertexId>> final_classes;
  for (auto v : replay.final_graph.vertices()) {
    final_classes.insert(replay.final_graph.provenance(v));
  }
  EXPECT_EQ(final_classes, (std::set<std::vector<VertexId>>{{P(1), P(5)}, {P(2), P(4)}, {P(3), P(6)}}));
}

TEST(DeleteUpdate, TriangleEdge) {
  auto s = static_color(complete_graph(3));
  auto [g, rep] = delete_update(s, V(0), V(1), {.verify = true});
  EXPECT_EQ(rep.case_label, UpdateCase::D2);
  EXPECT_EQ(rep.colors_after, 2);
  EXPECT_TRUE(verify_state(g));
  EXPECT_THROW(delete_update(g, V(0), V(1)), UpdateRejected);
}

TEST(RepairAffected, ValidOrderIsKept) {
  auto s = static_color(load_fixture_graph("fig6.json"));
  std::array<VertexId, 1> none{P(1)};
  auto r = repair_affected(s.graph, s.order, none);
  EXPECT_EQ(r.order, s.order);
  EXPECT_TRUE(r.removed.empty());
  EXPECT_TRUE(r.added.empty());
}

TEST(RepairAffected, FigSixToSeven) {
  auto s = static_color(load_fixture_graph("fig6.json"));
  std::array<VertexId, 2> ends{P(2), P(5)};
  auto r = repair_affected(load_fixture_graph("fig7.json"), s.order, ends);
  EXPECT_EQ(classes(r.removed), (std::set<ClassPair>{cp({P(2)}, {P(5)}), cp({P(1)}, {P(4)})}));
  EXPECT_EQ(classes(r.added), (std::set<ClassPair>{cp({P(2)}, {P(4)}), cp({P(1)}, {P(5)})}));
  EXPECT_FALSE(r.widened);
}


class RandomSequences : public ::testing::TestWithParam<int> {};

TEST_P(RandomSequences, MatchesStaticAfterEveryEvent) {
  Rng rng(GetParam());
  const std::size_t n = 5 + GetParam() % 8;
  auto s = static_color(random_weakly_chordal(n, 0.45, rng));
  std::bernoulli_distribution coin(0.5);
  for (int step = 0; step < 40; ++step) {
    auto vs = s.graph.vertices();
    std::vector<Edge> cands;
    bool insert = coin(rng);
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        bool adj = s.graph.adjacent(vs[a], vs[b]);
        if (insert ? (!adj && insertion_keeps_weakly_chordal(s.graph, vs[a], vs[b]))
                   : (adj && deletion_keeps_weakly_chordal(s.graph, vs[a], vs[b]))) {
          cands.emplace_back(vs[a], vs[b]);
        }
      }
    }
    if (cands.empty()) continue;
    auto [u, v] = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    auto [next, rep] = insert ? insert_update(s, u, v) : delete_update(s, u, v);
    ASSERT_TRUE(brute::weakly_chordal(next.graph));
    EXPECT_FALSE(rep.fallback_used) << rep.fallback_reason;
    EXPECT_EQ(next.color_count, brute::chromatic_number(next.graph));
    EXPECT_TRUE(proper(next));
    EXPECT_TRUE(verify_state(next));
    int delta = rep.colors_after - rep.colors_before;
    if (insert) {
      EXPECT_TRUE(delta == 0 || delta == 1);
      bool grows = rep.case_label == UpdateCase::I22 || rep.case_label == UpdateCase::I32;
      EXPECT_EQ(delta == 1, grows);
      if (rep.case_label == UpdateCase::I1) EXPECT_TRUE(rep.recolored.empty());
    } else {
      EXPECT_TRUE(delta == 0 || delta == -1);
      EXPECT_EQ(delta == -1, rep.case_label == UpdateCase::D2);
    }
    s = std::move(next);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSequences, ::testing::Range(0, 60));

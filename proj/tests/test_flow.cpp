#include <gtest/gtest.h>

#include <random>

#include "flowlab/dimacs.hpp"
#include "flowlab/max_flow.hpp"
#include "oracles.hpp"

using namespace flowlab;

TEST(FlowNetwork, RejectsBadEdges) {
  EXPECT_THROW(FlowNetwork(2, {{0, 2, 1}}), NetworkError);
  EXPECT_THROW(FlowNetwork(2, {{1, 1, 1}}), NetworkError);
  EXPECT_THROW(FlowNetwork(2, {{0, 1, 0}}), NetworkError);
  EXPECT_THROW(FlowNetwork(2, {{0, 1, kCapacitySumLimit}, {1, 0, 1}}), NetworkError);
}

TEST(FlowNetwork, AdjacencyKeepsInsertionOrder) {
  FlowNetwork net(3, {{0, 2, 1}, {0, 1, 2}, {1, 2, 3}});
  ASSERT_EQ(net.out_edges(0).size(), 2u);
  EXPECT_EQ(net.out_edges(0)[0], 0u);
  EXPECT_EQ(net.out_edges(0)[1], 1u);
  EXPECT_EQ(net.in_edges(2).size(), 2u);
  EXPECT_EQ(net.out_capacity(0), 3);
  EXPECT_EQ(net.total_capacity(), 6);
}

TEST(MaxFlow, SmallCases) {
  EXPECT_EQ(max_flow(FlowNetwork(2, {{0, 1, 1}, {0, 1, 1}}), 0, 1).value, 2);
  EXPECT_EQ(max_flow(FlowNetwork(3, {{0, 1, 1}, {1, 2, 1}}), 0, 2).value, 1);
  EXPECT_EQ(max_flow(FlowNetwork(2, {{0, 1, 7}}), 0, 1).value, 7);
  EXPECT_EQ(max_flow(FlowNetwork(3, {{0, 1, 5}}), 0, 2).value, 0);
  EXPECT_EQ(max_flow(FlowNetwork(2, {{1, 0, 5}}), 0, 1).value, 0);
}

TEST(MaxFlow, ClassicDiamondNeedsCancellation) {
  // s=0, t=3; the cross edge tempts a bad first path.
  FlowNetwork net(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  FlowResult r = max_flow(net, 0, 3);
  EXPECT_EQ(r.value, 2);
  EXPECT_FALSE(flow_violation(net, 0, 3, r).has_value());
}

TEST(MaxFlow, RejectsBadQueries) {
  FlowNetwork net(2, {{0, 1, 1}});
  EXPECT_THROW(max_flow(net, 0, 0), NetworkError);
  EXPECT_THROW(max_flow(net, 0, 5), NetworkError);
  EXPECT_THROW(max_flow_bounded(net, 0, 1, -1), NetworkError);
}

TEST(MaxFlow, BoundedStopsAboveK) {
  FlowNetwork net(2, {{0, 1, 3}, {0, 1, 4}});
  EXPECT_EQ(max_flow_bounded(net, 0, 1, 10), BoundedValue::exact(7));
  EXPECT_EQ(max_flow_bounded(net, 0, 1, 7), BoundedValue::exact(7));
  EXPECT_TRUE(max_flow_bounded(net, 0, 1, 6).exceeds());
  EXPECT_TRUE(max_flow_bounded(net, 0, 1, 0).exceeds());
  EXPECT_EQ(to_string(BoundedValue::exceeds_k()), "exceeds");
  EXPECT_EQ(to_string(BoundedValue::exact(4)), "4");
}

TEST(MaxFlow, AgreesWithOraclesOnRandomNetworks) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    FlowNetwork net = oracle::random_network(rng, n, 0.4, 5);
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = 0; t < n; ++t) {
        if (s == t) continue;
        FlowResult r = max_flow(net, s, t);
        ASSERT_EQ(r.value, oracle::bfs_max_flow(net, s, t));
        ASSERT_EQ(r.value, brute_force_min_cut(net, s, t));
        CutResult cut = min_cut(net, s, t);
        ASSERT_EQ(cut.capacity, r.value);
        ASSERT_TRUE(cut.contains(s));
        ASSERT_FALSE(cut.contains(t));
        ASSERT_EQ(cut_capacity(net, cut.source_side), r.value);
        ASSERT_FALSE(flow_violation(net, s, t, r).has_value());
        for (Capacity k : {Capacity{0}, r.value - 1, r.value, r.value + 3}) {
          if (k < 0) continue;
          BoundedValue b = max_flow_bounded(net, s, t, k);
          ASSERT_EQ(b.is_exact(), r.value <= k);
          if (b.is_exact()) {
            ASSERT_EQ(b.value(), r.value);
          }
        }
      }
    }
  }
}

TEST(MaxFlow, FlowViolationCatchesBadWitnesses) {
  FlowNetwork net(3, {{0, 1, 2}, {1, 2, 1}});
  FlowResult over{2, {2, 2}};
  EXPECT_TRUE(flow_violation(net, 0, 2, over).has_value());
  FlowResult leak{1, {2, 1}};
  EXPECT_TRUE(flow_violation(net, 0, 2, leak).has_value());
  FlowResult wrong_value{2, {1, 1}};
  EXPECT_TRUE(flow_violation(net, 0, 2, wrong_value).has_value());
  FlowResult good{1, {1, 1}};
  EXPECT_FALSE(flow_violation(net, 0, 2, good).has_value());
}

TEST(MaxFlow, CutCapacityBySpan) {
  FlowNetwork net(3, {{0, 1, 2}, {1, 2, 1}, {0, 2, 4}});
  std::vector<NodeId> side{0, 1};
  EXPECT_EQ(cut_capacity(net, side), 5);
}

TEST(MaxFlow, Acyclicity) {
  EXPECT_TRUE(is_acyclic(FlowNetwork(3, {{0, 1, 1}, {1, 2, 1}})));
  EXPECT_FALSE(is_acyclic(FlowNetwork(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}})));
}

TEST(Dimacs, ReadsDesignatorsAndComments) {
  const std::string text =
      "c hello\n"
      "p max 3 2\n"
      "n 1 s\n"
      "n 3 t\n"
      "a 1 2 5\n"
      "a 2 3 4\n"
      "c tail\n";
  DimacsFlowFile file = read_dimacs_flow_string(text);
  EXPECT_EQ(file.net.node_count(), 3u);
  EXPECT_EQ(file.net.edge_count(), 2u);
  EXPECT_EQ(file.source, NodeId{0});
  EXPECT_EQ(file.sink, NodeId{2});
  ASSERT_EQ(file.comments.size(), 1u);
  EXPECT_EQ(file.comments[0], "hello");
  ASSERT_EQ(file.trailing_comments.size(), 1u);
  EXPECT_EQ(file.trailing_comments[0], "tail");
  EXPECT_EQ(write_dimacs_flow_string(file), text);
}

TEST(Dimacs, RoundTripIsByteExact) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    DimacsFlowFile file = as_dimacs(oracle::random_network(rng, 6, 0.3, 9));
    const std::string once = write_dimacs_flow_string(file);
    DimacsFlowFile back = read_dimacs_flow_string(once);
    EXPECT_EQ(back.net, file.net);
    EXPECT_EQ(write_dimacs_flow_string(back), once);
  }
}

TEST(Dimacs, RejectsMalformedInput) {
  EXPECT_THROW(read_dimacs_flow_string("a 1 2 3\n"), ParseError);
  EXPECT_THROW(read_dimacs_flow_string("p max 2 1\na 1 2\n"), ParseError);
  EXPECT_THROW(read_dimacs_flow_string("p max 2 2\na 1 2 3\n"), ParseError);
  EXPECT_THROW(read_dimacs_flow_string("p max 2 1\na 1 3 3\n"), std::exception);
  EXPECT_THROW(read_dimacs_flow_string("p max 2 1\nx 1 2 3\n"), ParseError);
  EXPECT_THROW(read_dimacs_flow_string(""), ParseError);
}

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "flowlab/max_flow.hpp"
#include "flowlab/multipair.hpp"
#include "oracles.hpp"

using namespace flowlab;

TEST(MultiPair, MatrixMatchesPerPairFlows) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    FlowNetwork net = oracle::random_network(rng, 2 + trial % 9, 0.35, 4);
    const std::size_t n = net.node_count();
    FlowMatrix all = all_pairs_max_flow(net);
    FlowMatrix threaded = all_pairs_max_flow(net, {4});
    EXPECT_EQ(all, threaded);
    for (NodeId u = 0; u < n; ++u) {
      auto row = single_source_max_flow(net, u);
      for (NodeId v = 0; v < n; ++v) {
        if (u == v) {
          EXPECT_FALSE(all.at(u, v).has_value());
          EXPECT_FALSE(row[v].has_value());
          continue;
        }
        const Capacity want = oracle::bfs_max_flow(net, u, v);
        EXPECT_EQ(all.at(u, v), want);
        EXPECT_EQ(row[v], want);
      }
    }
  }
}

TEST(MultiPair, StSubmatrix) {
  FlowNetwork net(4, {{0, 2, 3}, {1, 2, 1}, {2, 3, 2}, {0, 3, 1}});
  FlowMatrix m = st_max_flow(net, {0, 1}, {2, 3});
  EXPECT_EQ(m.at(0, 0), 3);
  EXPECT_EQ(m.at(0, 1), 3);
  EXPECT_EQ(m.at(1, 0), 1);
  EXPECT_EQ(m.at(1, 1), 1);
  EXPECT_EQ(m.to_csv(), ",3,4\n1,3,3\n2,1,1\n");
  EXPECT_THROW(st_max_flow(net, {}, {1}), NetworkError);
  EXPECT_THROW(st_max_flow(net, {9}, {1}), NetworkError);
}

TEST(MultiPair, UndefinedDiagonalPrintsDash) {
  FlowNetwork net(2, {{0, 1, 7}});
  EXPECT_EQ(all_pairs_max_flow(net).to_csv(), ",1,2\n1,-,7\n2,0,-\n");
}

TEST(MultiPair, GlobalTieBreaksLexicographically) {
  FlowNetwork net(3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}});
  PairValue best = global_max_flow(net);
  EXPECT_EQ(best, (PairValue{0, 1, 2}));
  EXPECT_THROW(global_max_flow(FlowNetwork(1, {})), NetworkError);
  // All zeros: first ordered pair.
  EXPECT_EQ(global_max_flow(FlowNetwork(3, {})), (PairValue{0, 1, 0}));
}

TEST(MultiPair, LocalEdgeConnectivityNeedsUnitCapacities) {
  EXPECT_THROW(max_local_edge_connectivity(FlowNetwork(2, {{0, 1, 2}})), NetworkError);
  FlowNetwork net(3, {{0, 1, 1}, {0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(max_local_edge_connectivity(net), (PairValue{0, 1, 2}));
}

TEST(MultiPair, KpmfIsFilteredAllPairs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    FlowNetwork net = oracle::random_network(rng, 3 + trial % 7, 0.3, 3);
    FlowMatrix all = all_pairs_max_flow(net);
    for (Capacity k : {Capacity{0}, Capacity{1}, Capacity{2}, std::numeric_limits<Capacity>::max()}) {
      std::vector<PairValue> want;
      for (NodeId u = 0; u < net.node_count(); ++u) {
        for (NodeId v = 0; v < net.node_count(); ++v) {
          if (auto x = all.at(u, v); x && *x <= k) want.push_back({u, v, *x});
        }
      }
      EXPECT_EQ(kpmf(net, k), want);
      EXPECT_EQ(kpmf(net, k, {3}), want);
    }
  }
  EXPECT_THROW(kpmf(FlowNetwork(2, {}), -1), NetworkError);
}

TEST(MultiPair, PairsCsv) {
  std::ostringstream out;
  write_pairs_csv(out, {{0, 1, 3}, {2, 0, 0}});
  EXPECT_EQ(out.str(), "u,v,value\n1,2,3\n3,1,0\n");
}

TEST(GomoryHu, MatchesDirectFlowsOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 12;
    std::vector<UndirectedGraph::Link> links;
    std::uniform_int_distribution<Capacity> w(1, 9);
    std::bernoulli_distribution coin(0.3);
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        if (coin(rng)) links.push_back({a, b, w(rng)});
      }
    }
    UndirectedGraph g(n, links);
    GomoryHuTree tree = gomory_hu_tree(g);
    EXPECT_EQ(tree.flow_computations, n - 1);
    for (NodeId v = 1; v < n; ++v) EXPECT_LT(tree.parent[v], v);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        const Capacity direct = oracle::bfs_max_flow(g.as_network(), u, v);
        EXPECT_EQ(gh_query(tree, u, v), direct);
        EXPECT_EQ(gh_query(tree, v, u), direct);
      }
    }
  }
}

TEST(GomoryHu, SymmetricNetworks) {
  FlowNetwork sym(3, {{0, 1, 2}, {1, 0, 2}, {1, 2, 5}, {2, 1, 5}});
  UndirectedGraph g = UndirectedGraph::from_symmetric(sym);
  EXPECT_EQ(g.links().size(), 2u);
  EXPECT_THROW(UndirectedGraph::from_symmetric(FlowNetwork(2, {{0, 1, 1}})), NetworkError);
  EXPECT_THROW(UndirectedGraph::from_symmetric(FlowNetwork(2, {{0, 1, 1}, {1, 0, 2}})),
               NetworkError);
  GomoryHuTree tree = gomory_hu_tree(g);
  EXPECT_EQ(gh_query(tree, 0, 2), 2);
  EXPECT_THROW(gh_query(tree, 1, 1), NetworkError);
}

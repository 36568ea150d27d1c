#include "flowlab/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace flowlab {

namespace {

constexpr Capacity kUnbounded = std::numeric_limits<Capacity>::max();

void check_endpoints(const FlowNetwork& net, NodeId s, NodeId t) {
  if (!net.is_valid_node(s) || !net.is_valid_node(t)) {
    throw NetworkError("flow endpoint outside the network");
  }
  if (s == t) throw NetworkError("source and sink must differ");
}

// Per-query residual state over a shared immutable network.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net), residual_(2 * net.edge_count(), 0), level_(net.node_count()),
        cursor_(net.node_count()) {
    for (std::size_t e = 0; e < net.edge_count(); ++e) residual_[2 * e] = net.edges()[e].capacity;
  }

  // Augments until the flow is maximum or strictly exceeds `limit`.
  Capacity run(NodeId s, NodeId t, Capacity limit) {
    Capacity flow = 0;
    while (flow <= limit && build_levels(s, t)) {
      flow += blocking_flow(s, t, limit == kUnbounded ? kUnbounded : limit + 1 - flow);
    }
    return flow;
  }

  std::vector<Capacity> edge_flows() const {
    std::vector<Capacity> flows(net_.edge_count());
    for (std::size_t e = 0; e < flows.size(); ++e) {
      flows[e] = net_.edges()[e].capacity - residual_[2 * e];
    }
    return flows;
  }

  std::vector<bool> reachable_from(NodeId s) const {
    std::vector<bool> seen(net_.node_count(), false);
    std::vector<NodeId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (std::size_t arc : net_.residual_arcs(v)) {
        NodeId w = head(arc);
        if (residual_[arc] > 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  NodeId head(std::size_t arc) const {
    const Edge& e = net_.edges()[arc / 2];
    return (arc % 2 == 0) ? e.dst : e.src;
  }
  NodeId tail(std::size_t arc) const {
    const Edge& e = net_.edges()[arc / 2];
    return (arc % 2 == 0) ? e.src : e.dst;
  }

  bool build_levels(NodeId s, NodeId t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<NodeId> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop();
      for (std::size_t arc : net_.residual_arcs(v)) {
        NodeId w = head(arc);
        if (residual_[arc] > 0 && level_[w] < 0) {
          level_[w] = level_[v] + 1;
          queue.push(w);
        }
      }
    }
    return level_[t] >= 0;
  }

  // Pushes at most `budget` units along shortest residual paths.
  Capacity blocking_flow(NodeId s, NodeId t, Capacity budget) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    Capacity pushed = 0;
    std::vector<std::size_t> path;
    NodeId v = s;
    while (pushed < budget) {
      if (v == t) {
        Capacity bottleneck = budget - pushed;
        for (std::size_t arc : path) bottleneck = std::min(bottleneck, residual_[arc]);
        std::size_t first_saturated = path.size();
        for (std::size_t i = 0; i < path.size(); ++i) {
          residual_[path[i]] -= bottleneck;
          residual_[path[i] ^ 1] += bottleneck;
          if (residual_[path[i]] == 0 && first_saturated == path.size()) first_saturated = i;
        }
        pushed += bottleneck;
        path.resize(first_saturated);
        v = path.empty() ? s : head(path.back());
        continue;
      }
      auto arcs = net_.residual_arcs(v);
      std::size_t& cur = cursor_[v];
      while (cur < arcs.size()) {
        std::size_t arc = arcs[cur];
        if (residual_[arc] > 0 && level_[head(arc)] == level_[v] + 1) break;
        ++cur;
      }
      if (cur < arcs.size()) {
        path.push_back(arcs[cur]);
        v = head(arcs[cur]);
        continue;
      }
      level_[v] = -1;
      if (path.empty()) break;
      v = tail(path.back());
      path.pop_back();
      ++cursor_[v];
    }
    return pushed;
  }

  const FlowNetwork& net_;
  std::vector<Capacity> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net, NodeId s, NodeId t) {
  check_endpoints(net, s, t);
  Dinic solver(net);
  FlowResult result;
  result.value = solver.run(s, t, kUnbounded);
  result.edge_flows = solver.edge_flows();
  return result;
}

BoundedValue max_flow_bounded(const FlowNetwork& net, NodeId s, NodeId t, Capacity k) {
  check_endpoints(net, s, t);
  if (k < 0) throw NetworkError("flow bound must be non-negative");
  Dinic solver(net);
  Capacity value = solver.run(s, t, k);
  return value > k ? BoundedValue::exceeds_k() : BoundedValue::exact(value);
}

CutResult min_cut(const FlowNetwork& net, NodeId s, NodeId t) {
  check_endpoints(net, s, t);
  Dinic solver(net);
  CutResult cut;
  cut.capacity = solver.run(s, t, kUnbounded);
  cut.source_side = solver.reachable_from(s);
  return cut;
}

Capacity brute_force_min_cut(const FlowNetwork& net, NodeId s, NodeId t) {
  check_endpoints(net, s, t);
  const std::size_t n = net.node_count();
  if (n > kBruteForceNodeLimit) {
    throw NetworkError("brute-force min cut limited to " + std::to_string(kBruteForceNodeLimit) +
                       " nodes");
  }
  Capacity best = std::numeric_limits<Capacity>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!((mask >> s) & 1U) || ((mask >> t) & 1U)) continue;
    Capacity total = 0;
    for (const Edge& e : net.edges()) {
      if (((mask >> e.src) & 1U) && !((mask >> e.dst) & 1U)) total += e.capacity;
    }
    best = std::min(best, total);
  }
  return best;
}

Capacity cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side) {
  auto inside = [&](NodeId v) { return v < source_side.size() && source_side[v]; };
  Capacity total = 0;
  for (const Edge& e : net.edges()) {
    if (inside(e.src) && !inside(e.dst)) total += e.capacity;
  }
  return total;
}

Capacity cut_capacity(const FlowNetwork& net, std::span<const NodeId> source_side) {
  std::vector<bool> side(net.node_count(), false);
  for (NodeId v : source_side) {
    if (v < side.size()) side[v] = true;
  }
  return cut_capacity(net, side);
}

bool is_acyclic(const FlowNetwork& net) {
  std::vector<std::size_t> indegree(net.node_count(), 0);
  for (const Edge& e : net.edges()) ++indegree[e.dst];
  std::vector<NodeId> ready;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    NodeId v = ready.back();
    ready.pop_back();
    ++visited;
    for (EdgeId e : net.out_edges(v)) {
      if (--indegree[net.edges()[e].dst] == 0) ready.push_back(net.edges()[e].dst);
    }
  }
  return visited == net.node_count();
}

std::optional<std::string> flow_violation(const FlowNetwork& net, NodeId s, NodeId t,
                                          const FlowResult& flow) {
  if (flow.edge_flows.size() != net.edge_count()) {
    return "edge flow vector has " + std::to_string(flow.edge_flows.size()) + " entries, expected " +
           std::to_string(net.edge_count());
  }
  std::vector<Capacity> balance(net.node_count(), 0);  // inflow - outflow
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edges()[e];
    Capacity f = flow.edge_flows[e];
    if (f < 0 || f > edge.capacity) {
      return "edge " + std::to_string(e) + " carries " + std::to_string(f) + " outside [0, " +
             std::to_string(edge.capacity) + "]";
    }
    balance[edge.src] -= f;
    balance[edge.dst] += f;
  }
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (v != s && v != t && balance[v] != 0) {
      return "conservation violated at node " + std::to_string(v);
    }
  }
  if (-balance[s] != flow.value) {
    return "source net outflow " + std::to_string(-balance[s]) + " != value " +
           std::to_string(flow.value);
  }
  if (balance[t] != flow.value) {
    return "sink net inflow " + std::to_string(balance[t]) + " != value " + std::to_string(flow.value);
  }
  return std::nullopt;
}

}  // namespace flowlab

#include "flowlab/multipair.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "flowlab/max_flow.hpp"

namespace flowlab {

namespace {

// Runs fn(i) for i in [0, count); workers take disjoint strided slices.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1U), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

void check_nodes(const FlowNetwork& net, const std::vector<NodeId>& nodes, const char* what) {
  if (nodes.empty()) throw NetworkError(std::string(what) + " set is empty");
  for (NodeId v : nodes) {
    if (!net.is_valid_node(v)) throw NetworkError(std::string(what) + " id out of range");
  }
}

std::vector<NodeId> all_nodes(const FlowNetwork& net) {
  std::vector<NodeId> nodes(net.node_count());
  for (NodeId v = 0; v < nodes.size(); ++v) nodes[v] = v;
  return nodes;
}

}  // namespace

FlowMatrix::FlowMatrix(std::vector<NodeId> sources, std::vector<NodeId> sinks)
    : sources_(std::move(sources)), sinks_(std::move(sinks)),
      values_(sources_.size() * sinks_.size()) {}

std::optional<Capacity> FlowMatrix::at(std::size_t row, std::size_t col) const {
  return values_.at(row * sinks_.size() + col);
}

void FlowMatrix::set(std::size_t row, std::size_t col, Capacity value) {
  values_.at(row * sinks_.size() + col) = value;
}

void FlowMatrix::write_csv(std::ostream& out) const {
  for (NodeId t : sinks_) out << ',' << t + 1;
  out << '\n';
  for (std::size_t r = 0; r < rows(); ++r) {
    out << sources_[r] + 1;
    for (std::size_t c = 0; c < cols(); ++c) {
      auto v = at(r, c);
      out << ',';
      if (v) {
        out << *v;
      } else {
        out << '-';
      }
    }
    out << '\n';
  }
}

std::string FlowMatrix::to_csv() const {
  std::ostringstream out;
  write_csv(out);
  return out.str();
}

FlowMatrix st_max_flow(const FlowNetwork& net, const std::vector<NodeId>& sources,
                       const std::vector<NodeId>& sinks, const QueryOptions& options) {
  check_nodes(net, sources, "source");
  check_nodes(net, sinks, "sink");
  FlowMatrix matrix(sources, sinks);
  // Each worker owns whole rows, so no two writers touch the same cell.
  parallel_for(sources.size(), options.threads, [&](std::size_t r) {
    for (std::size_t c = 0; c < sinks.size(); ++c) {
      if (sources[r] == sinks[c]) continue;
      matrix.set(r, c, max_flow(net, sources[r], sinks[c]).value);
    }
  });
  return matrix;
}

FlowMatrix all_pairs_max_flow(const FlowNetwork& net, const QueryOptions& options) {
  auto nodes = all_nodes(net);
  return st_max_flow(net, nodes, nodes, options);
}

std::vector<std::optional<Capacity>> single_source_max_flow(const FlowNetwork& net, NodeId s,
                                                            const QueryOptions& options) {
  FlowMatrix row = st_max_flow(net, {s}, all_nodes(net), options);
  std::vector<std::optional<Capacity>> values(net.node_count());
  for (NodeId t = 0; t < values.size(); ++t) values[t] = row.at(0, t);
  return values;
}

PairValue global_max_flow(const FlowNetwork& net, const QueryOptions& options) {
  if (net.node_count() < 2) throw NetworkError("global max-flow needs at least two nodes");
  FlowMatrix matrix = all_pairs_max_flow(net, options);
  PairValue best{0, 1, -1};
  for (NodeId u = 0; u < net.node_count(); ++u) {
    for (NodeId v = 0; v < net.node_count(); ++v) {
      auto value = matrix.at(u, v);
      if (value && *value > best.value) best = {u, v, *value};
    }
  }
  return best;
}

PairValue max_local_edge_connectivity(const FlowNetwork& net, const QueryOptions& options) {
  for (const Edge& e : net.edges()) {
    if (e.capacity != 1) throw NetworkError("local edge connectivity needs unit capacities");
  }
  return global_max_flow(net, options);
}

std::vector<PairValue> kpmf(const FlowNetwork& net, Capacity k, const QueryOptions& options) {
  if (k < 0) throw NetworkError("kPMF threshold must be non-negative");
  const std::size_t n = net.node_count();
  std::vector<std::vector<PairValue>> rows(n);
  parallel_for(n, options.threads, [&](std::size_t u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      BoundedValue value = max_flow_bounded(net, u, v, k);
      if (value.is_exact()) rows[u].push_back({u, v, value.value()});
    }
  });
  std::vector<PairValue> pairs;
  for (auto& row : rows) pairs.insert(pairs.end(), row.begin(), row.end());
  return pairs;
}

void write_pairs_csv(std::ostream& out, const std::vector<PairValue>& pairs) {
  out << "u,v,value\n";
  for (const PairValue& p : pairs) out << p.u + 1 << ',' << p.v + 1 << ',' << p.value << '\n';
}

UndirectedGraph::UndirectedGraph(std::size_t node_count, std::vector<Link> links)
    : links_(std::move(links)) {
  std::vector<Edge> arcs;
  arcs.reserve(2 * links_.size());
  for (const Link& l : links_) {
    arcs.push_back({l.a, l.b, l.weight});
    arcs.push_back({l.b, l.a, l.weight});
  }
  net_ = FlowNetwork(node_count, std::move(arcs));
}

UndirectedGraph UndirectedGraph::from_symmetric(const FlowNetwork& net) {
  std::map<std::tuple<NodeId, NodeId, Capacity>, std::size_t> pending;
  std::vector<Link> links;
  for (const Edge& e : net.edges()) {
    auto partner = pending.find({e.dst, e.src, e.capacity});
    if (partner != pending.end()) {
      links.push_back({e.dst, e.src, e.capacity});
      if (--partner->second == 0) pending.erase(partner);
    } else {
      ++pending[{e.src, e.dst, e.capacity}];
    }
  }
  if (!pending.empty()) {
    const auto& [src, dst, cap] = pending.begin()->first;
    throw NetworkError("network is directed: arc " + std::to_string(src + 1) + "->" +
                       std::to_string(dst + 1) + " has no antiparallel arc of capacity " +
                       std::to_string(cap));
  }
  return UndirectedGraph(net.node_count(), std::move(links));
}

GomoryHuTree gomory_hu_tree(const UndirectedGraph& graph) {
  const std::size_t n = graph.node_count();
  GomoryHuTree tree;
  tree.parent.assign(n, 0);
  tree.weight.assign(n, 0);
  for (NodeId s = 1; s < n; ++s) {
    const NodeId t = tree.parent[s];
    CutResult cut = min_cut(graph.as_network(), s, t);
    ++tree.flow_computations;
    tree.weight[s] = cut.capacity;
    for (NodeId i = s + 1; i < n; ++i) {
      if (cut.contains(i) && tree.parent[i] == t) tree.parent[i] = s;
    }
  }
  return tree;
}

Capacity gh_query(const GomoryHuTree& tree, NodeId u, NodeId v) {
  const std::size_t n = tree.parent.size();
  if (u >= n || v >= n) throw NetworkError("tree query id out of range");
  if (u == v) throw NetworkError("tree query needs two distinct nodes");
  std::vector<std::size_t> depth(n, 0);
  // Gusfield parents always have smaller ids.
  for (NodeId i = 1; i < n; ++i) depth[i] = depth[tree.parent[i]] + 1;
  Capacity best = std::numeric_limits<Capacity>::max();
  while (u != v) {
    if (depth[u] < depth[v]) std::swap(u, v);
    best = std::min(best, tree.weight[u]);
    u = tree.parent[u];
  }
  return best;
}

}  // namespace flowlab

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowlab/flow_network.hpp"

namespace flowlab {

/// Max-flow values for every (source, sink) pair of two node lists. Cells
/// where source == sink hold no value.
class FlowMatrix {
 public:
  FlowMatrix() = default;
  FlowMatrix(std::vector<NodeId> sources, std::vector<NodeId> sinks);

  const std::vector<NodeId>& sources() const { return sources_; }
  const std::vector<NodeId>& sinks() const { return sinks_; }
  std::size_t rows() const { return sources_.size(); }
  std::size_t cols() const { return sinks_.size(); }

  std::optional<Capacity> at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Capacity value);

  /// First row holds sink ids, first column source ids, undefined cells
  /// print as "-". Ids are written 1-based, matching the DIMACS files.
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;

  friend bool operator==(const FlowMatrix&, const FlowMatrix&) = default;

 private:
  std::vector<NodeId> sources_;
  std::vector<NodeId> sinks_;
  std::vector<std::optional<Capacity>> values_;
};

struct QueryOptions {
  // Worker threads for per-pair queries; results never depend on this.
  unsigned threads = 1;
};

FlowMatrix st_max_flow(const FlowNetwork& net, const std::vector<NodeId>& sources,
                       const std::vector<NodeId>& sinks, const QueryOptions& options = {});
FlowMatrix all_pairs_max_flow(const FlowNetwork& net, const QueryOptions& options = {});

/// Entry t is the max s->t flow; entry s is nullopt.
std::vector<std::optional<Capacity>> single_source_max_flow(const FlowNetwork& net, NodeId s,
                                                            const QueryOptions& options = {});

struct PairValue {
  NodeId u = 0;
  NodeId v = 0;
  Capacity value = 0;

  friend bool operator==(const PairValue&, const PairValue&) = default;
  friend auto operator<=>(const PairValue&, const PairValue&) = default;
};

/// Maximum over ordered pairs u != v; ties go to the lexicographically
/// smallest pair. Requires at least two nodes.
PairValue global_max_flow(const FlowNetwork& net, const QueryOptions& options = {});

/// Same contract as global_max_flow, restricted to unit-capacity networks.
PairValue max_local_edge_connectivity(const FlowNetwork& net, const QueryOptions& options = {});

/// Every ordered pair whose max-flow is at most k, sorted by (u, v).
std::vector<PairValue> kpmf(const FlowNetwork& net, Capacity k, const QueryOptions& options = {});

void write_pairs_csv(std::ostream& out, const std::vector<PairValue>& pairs);

/// Undirected weighted graph; each edge becomes two antiparallel arcs for
/// flow queries.
class UndirectedGraph {
 public:
  struct Link {
    NodeId a = 0;
    NodeId b = 0;
    Capacity weight = 0;
  };

  UndirectedGraph(std::size_t node_count, std::vector<Link> links);

  /// Accepts a directed network only if its arcs pair up into antiparallel
  /// arcs of equal capacity; throws NetworkError otherwise.
  static UndirectedGraph from_symmetric(const FlowNetwork& net);

  std::size_t node_count() const { return net_.node_count(); }
  const std::vector<Link>& links() const { return links_; }
  const FlowNetwork& as_network() const { return net_; }

 private:
  std::vector<Link> links_;
  FlowNetwork net_;
};

/// Flow-equivalent tree: parent[v] / weight[v] describe the tree edge from v
/// towards node 0, which is the root (parent[0] == 0, weight[0] unused).
struct GomoryHuTree {
  std::vector<NodeId> parent;
  std::vector<Capacity> weight;
  std::size_t flow_computations = 0;
};

/// Gusfield's scheme: n-1 minimum-cut computations, all on the input graph.
GomoryHuTree gomory_hu_tree(const UndirectedGraph& graph);

/// Minimum edge weight on the tree path u-v. Throws if u == v.
Capacity gh_query(const GomoryHuTree& tree, NodeId u, NodeId v);

}  // namespace flowlab

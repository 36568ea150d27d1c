#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowlab {

using NodeId = std::size_t;
using EdgeId = std::size_t;
using Capacity = std::int64_t;

// Largest allowed sum of all capacities in one network.
inline constexpr Capacity kCapacitySumLimit = Capacity{1} << 62;

class NetworkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  Capacity capacity = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph with positive integer capacities.
///
/// Immutable after construction. Parallel edges are kept distinct and every
/// adjacency list follows edge insertion order, so any query that walks the
/// graph is deterministic.
class FlowNetwork {
 public:
  FlowNetwork() = default;
  FlowNetwork(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Residual arcs incident to `v` in edge insertion order. Arc 2e is the
  /// forward arc of edge e (leaving its src), arc 2e+1 the reverse arc
  /// (leaving its dst).
  std::span<const std::size_t> residual_arcs(NodeId v) const {
    return {arc_ids_.data() + arc_offsets_[v], arc_offsets_[v + 1] - arc_offsets_[v]};
  }
  std::span<const EdgeId> out_edges(NodeId v) const {
    return {out_ids_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_ids_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  std::size_t out_degree(NodeId v) const { return out_edges(v).size(); }
  Capacity out_capacity(NodeId v) const;
  Capacity total_capacity() const { return total_capacity_; }

  bool is_valid_node(NodeId v) const { return v < node_count_; }

  friend bool operator==(const FlowNetwork& a, const FlowNetwork& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  Capacity total_capacity_ = 0;

  std::vector<std::size_t> arc_offsets_{0};
  std::vector<std::size_t> arc_ids_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<EdgeId> in_ids_;
};

/// A flow together with a per-edge witness.
struct FlowResult {
  Capacity value = 0;
  std::vector<Capacity> edge_flows;
};

struct CutResult {
  std::vector<bool> source_side;
  Capacity capacity = 0;

  bool contains(NodeId v) const { return v < source_side.size() && source_side[v]; }
};

/// Outcome of a threshold-halting flow query.
class BoundedValue {
 public:
  static BoundedValue exact(Capacity v) { return BoundedValue(false, v); }
  static BoundedValue exceeds_k() { return BoundedValue(true, 0); }

  bool exceeds() const { return exceeds_; }
  bool is_exact() const { return !exceeds_; }
  // Only meaningful when is_exact().
  Capacity value() const { return value_; }

  friend bool operator==(const BoundedValue&, const BoundedValue&) = default;

 private:
  BoundedValue(bool exceeds, Capacity v) : exceeds_(exceeds), value_(v) {}
  bool exceeds_;
  Capacity value_;
};

std::string to_string(const BoundedValue& v);

}  // namespace flowlab

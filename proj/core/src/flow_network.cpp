#include "flowlab/flow_network.hpp"

#include <numeric>

namespace flowlab {

namespace {

// Buckets `keys` into CSR form, preserving the order in which ids are fed.
void build_csr(std::size_t node_count, const std::vector<std::pair<NodeId, std::size_t>>& entries,
               std::vector<std::size_t>& offsets, std::vector<std::size_t>& ids) {
  offsets.assign(node_count + 1, 0);
  for (const auto& [node, id] : entries) ++offsets[node + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  ids.resize(entries.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [node, id] : entries) ids[cursor[node]++] = id;
}

}  // namespace

FlowNetwork::FlowNetwork(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.src >= node_count_ || edge.dst >= node_count_) {
      throw NetworkError("edge " + std::to_string(e) + " references a node outside [0, " +
                         std::to_string(node_count_) + ")");
    }
    if (edge.src == edge.dst) {
      throw NetworkError("edge " + std::to_string(e) + " is a self-loop");
    }
    if (edge.capacity < 1) {
      throw NetworkError("edge " + std::to_string(e) + " has non-positive capacity");
    }
    if (edge.capacity > kCapacitySumLimit - total_capacity_) {
      throw NetworkError("sum of capacities exceeds 2^62");
    }
    total_capacity_ += edge.capacity;
  }

  std::vector<std::pair<NodeId, std::size_t>> arcs;
  std::vector<std::pair<NodeId, std::size_t>> outs;
  std::vector<std::pair<NodeId, std::size_t>> ins;
  arcs.reserve(2 * edges_.size());
  outs.reserve(edges_.size());
  ins.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    arcs.emplace_back(edges_[e].src, 2 * e);
    arcs.emplace_back(edges_[e].dst, 2 * e + 1);
    outs.emplace_back(edges_[e].src, e);
    ins.emplace_back(edges_[e].dst, e);
  }
  build_csr(node_count_, arcs, arc_offsets_, arc_ids_);
  build_csr(node_count_, outs, out_offsets_, out_ids_);
  build_csr(node_count_, ins, in_offsets_, in_ids_);
}

Capacity FlowNetwork::out_capacity(NodeId v) const {
  Capacity total = 0;
  for (EdgeId e : out_edges(v)) total += edges_[e].capacity;
  return total;
}

std::string to_string(const BoundedValue& v) {
  return v.exceeds() ? std::string("exceeds") : std::to_string(v.value());
}

}  // namespace flowlab

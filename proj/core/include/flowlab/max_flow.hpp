#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flowlab/flow_network.hpp"

namespace flowlab {

/// Exact maximum s->t flow (blocking-flow / Dinic) with a feasible witness.
/// Throws NetworkError on invalid ids or s == t.
FlowResult max_flow(const FlowNetwork& net, NodeId s, NodeId t);

/// Like max_flow but stops augmenting as soon as the flow exceeds k.
BoundedValue max_flow_bounded(const FlowNetwork& net, NodeId s, NodeId t, Capacity k);

/// Minimum s-t cut; the source side is the residual reachability set of s
/// after a maximum flow.
CutResult min_cut(const FlowNetwork& net, NodeId s, NodeId t);

/// Exhaustive minimum cut over all vertex bipartitions. Independent of the
/// flow solver; limited to 20 nodes.
Capacity brute_force_min_cut(const FlowNetwork& net, NodeId s, NodeId t);

inline constexpr std::size_t kBruteForceNodeLimit = 20;

/// Total capacity of edges leaving `source_side`. The vector is indexed by
/// node id; ids past its end count as outside.
Capacity cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side);
Capacity cut_capacity(const FlowNetwork& net, std::span<const NodeId> source_side);

bool is_acyclic(const FlowNetwork& net);

/// Returns a description of the first violated flow invariant (capacity,
/// conservation, value), or nullopt if `flow` is a feasible s->t flow of
/// value flow.value.
std::optional<std::string> flow_violation(const FlowNetwork& net, NodeId s, NodeId t,
                                          const FlowResult& flow);

}  // namespace flowlab

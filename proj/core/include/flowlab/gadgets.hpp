#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flowlab/cnf.hpp"
#include "flowlab/flow_network.hpp"

namespace flowlab {

enum class Variant : std::uint8_t { uncap, cap, mlec };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

enum class EdgeColor : std::uint8_t { none, blue, red };

enum class RoleKind : std::uint8_t {
  alpha,         // alpha(a): assignment a of U1
  beta_l,        // beta_l(b, i)
  beta_c,        // beta_c(b, i), capacitated gadget only
  beta_r,        // beta_r(b, i)
  beta_prime,    // beta_prime(b)
  beta_prime_j,  // beta_prime_j(b, j), j in [1, p-1]
  gamma,         // gamma(g): assignment g of U3
  clause_sat,    // C_i satisfied-by-alpha node
  clause_unsat,  // C_i not-satisfied-by-alpha node
  clause,        // C_i
  hub,           // v_B
  beta,          // beta(b) in the edge-connectivity gadget
  clause_ss,     // c(sat, sat) of clause i
  clause_su,     // c(sat, unsat)
  clause_us,     // c(unsat, sat)
};

/// Node label. `index` is an assignment number (0-based); `clause` is a
/// 1-based clause index or, for beta_prime_j, the 1-based j.
struct Role {
  RoleKind kind = RoleKind::alpha;
  std::uint64_t index = 0;
  std::uint64_t clause = 0;

  std::string str() const;
  static Role parse(const std::string& text);

  friend bool operator==(const Role&, const Role&) = default;
};

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builders refuse blocks with more than 2^20 assignments.
inline constexpr std::size_t kMaxBlockBits = 20;
/// and networks with more than this many edges.
inline constexpr std::uint64_t kMaxGadgetEdges = std::uint64_t{1} << 27;

/// A reduction network with node roles and edge colors.
///
/// Node numbering is fixed by (variant, partition sizes, m, p): the U1 block
/// first, then each beta's node family, then the U3 block, then clause
/// nodes, then the hub. The position accessors below rely on that layout.
class GadgetGraph {
 public:
  GadgetGraph(Variant variant, std::size_t p, CnfFormula formula, Partition partition,
              FlowNetwork net, std::vector<Role> roles, std::vector<EdgeColor> colors);

  Variant variant() const { return variant_; }
  std::size_t p() const { return p_; }
  const CnfFormula& formula() const { return formula_; }
  const Partition& partition() const { return partition_; }
  const FlowNetwork& net() const { return net_; }
  const std::vector<Role>& roles() const { return roles_; }
  const std::vector<EdgeColor>& colors() const { return colors_; }
  std::size_t m() const { return formula_.num_clauses(); }

  std::uint64_t alpha_count() const;
  std::uint64_t beta_count() const;
  std::uint64_t gamma_count() const;

  NodeId alpha(std::uint64_t a) const;
  NodeId gamma(std::uint64_t g) const;
  NodeId beta_l(std::uint64_t b, std::size_t i) const;
  NodeId beta_c(std::uint64_t b, std::size_t i) const;
  NodeId beta_r(std::uint64_t b, std::size_t i) const;
  NodeId beta_prime(std::uint64_t b) const;
  NodeId beta_prime_j(std::uint64_t b, std::size_t j) const;
  NodeId clause_sat(std::size_t i) const;
  NodeId clause_unsat(std::size_t i) const;
  NodeId clause_node(std::size_t i) const;
  NodeId hub() const;
  NodeId mlec_beta(std::uint64_t b) const;

  std::vector<NodeId> alpha_nodes() const;
  /// U3 nodes for the three-block gadgets, beta nodes for the
  /// edge-connectivity gadget.
  std::vector<NodeId> sink_nodes() const;

  /// Flow threshold 2^|U2| * m - 1 separating the two decision outcomes.
  Capacity threshold() const;

  /// Copy with edge e pointing the other way (fault injection).
  GadgetGraph with_reversed_edge(EdgeId e) const;

 private:
  Variant variant_;
  std::size_t p_;
  CnfFormula formula_;
  Partition partition_;
  FlowNetwork net_;
  std::vector<Role> roles_;
  std::vector<EdgeColor> colors_;
};

/// Unit-capacity gadget G_p with 2m+p nodes per U2 assignment.
GadgetGraph build_uncap_gadget(const CnfFormula& formula, const Partition& partition,
                               std::size_t p);

/// Capacitated gadget G_p with 3m+1 nodes per U2 assignment plus clause
/// nodes and the hub v_B. Edges of capacity 0 (p = 1) are omitted.
GadgetGraph build_cap_gadget(const CnfFormula& formula, const Partition& partition,
                             std::size_t p);

/// Edge-connectivity gadget over halves of sizes ceil(n/2), floor(n/2).
GadgetGraph build_mlec_gadget(const CnfFormula& formula);

GadgetGraph build_gadget(Variant variant, const CnfFormula& formula, const Partition& partition,
                         std::size_t p);

/// Closed-form node and edge counts of a gadget for the given formula.
struct GadgetCounts {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
};
GadgetCounts closed_form_counts(Variant variant, const CnfFormula& formula,
                                const Partition& partition, std::size_t p);

/// Induced subnetwork of an uncap gadget on one beta's nodes plus the
/// chosen alpha and gamma.
struct SubGadget {
  FlowNetwork net;
  NodeId source = 0;
  NodeId sink = 0;
  std::vector<NodeId> to_gadget_node;
  std::vector<EdgeId> to_gadget_edge;
};

SubGadget subgadget(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t beta,
                    std::uint64_t gamma);

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two-phase flow on subgadget(g, alpha, beta, gamma) with value
/// |I| + min(m - |I|, p - 1), where I holds up to m-p+1 clauses the triple
/// leaves unsatisfied. Edge flows are indexed by the subgadget's edges.
FlowResult witness_flow_uncap(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t beta,
                              std::uint64_t gamma);

/// Two-phase flow of value 2^|U2| * m from alpha to gamma on the whole cap
/// gadget. Throws PreconditionError if some beta lets the triple satisfy p
/// or more clauses.
FlowResult witness_flow_cap(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t gamma);

/// Source side of a cut separating alpha_Phi from gamma_Phi of capacity at
/// most 2^|U2| * m - 1. Throws PreconditionError if Phi satisfies fewer
/// than p clauses.
std::vector<NodeId> witness_cut_cap(const GadgetGraph& g, const Assignment& phi);

/// Source side of the bounded cut separating alpha' from gamma' used for
/// kPMF. Throws PreconditionError if `variant` does not match the gadget.
std::vector<NodeId> witness_cut_kpmf(const GadgetGraph& g, Variant variant, std::uint64_t alpha,
                                     std::uint64_t gamma);

/// DIMACS max-flow file with "c gadget", "c formula", "c clause", "c block",
/// "c role" and "c color" comment lines.
void write_gadget(std::ostream& out, const GadgetGraph& g);
std::string write_gadget_string(const GadgetGraph& g);
GadgetGraph read_gadget(std::istream& in);
GadgetGraph read_gadget_string(const std::string& text);

}  // namespace flowlab

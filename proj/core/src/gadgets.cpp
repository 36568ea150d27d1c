#include "flowlab/gadgets.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "flowlab/dimacs.hpp"

namespace flowlab {

namespace {

std::vector<bool> sat_row(const CnfFormula& formula, const Partition& partition, Block block,
                          std::uint64_t index) {
  PartialAssignment pa = PartialAssignment::of(partition, block, index);
  std::vector<bool> row(formula.num_clauses());
  for (std::size_t i = 0; i < row.size(); ++i) row[i] = satisfies(pa, formula.clause(i));
  return row;
}

void check_block_sizes(const Partition& partition) {
  for (Block b : {Block::u1, Block::u2, Block::u3}) {
    if (partition.size(b) > kMaxBlockBits) {
      throw SizeGuardError("block U" + std::to_string(static_cast<int>(b) + 1) + " has " +
                           std::to_string(partition.size(b)) + " variables; limit is " +
                           std::to_string(kMaxBlockBits));
    }
  }
}

void check_p(std::size_t p, std::size_t m) {
  if (p < 1 || p > m) {
    throw std::invalid_argument("p = " + std::to_string(p) + " outside [1, " + std::to_string(m) +
                                "]");
  }
}

void check_formula_matches(const CnfFormula& formula, const Partition& partition) {
  if (formula.num_vars() != partition.num_vars()) {
    throw std::invalid_argument("partition covers " + std::to_string(partition.num_vars()) +
                                " variables, formula has " + std::to_string(formula.num_vars()));
  }
}

void check_edge_budget(std::uint64_t edges) {
  if (edges > kMaxGadgetEdges) {
    throw SizeGuardError("gadget would have " + std::to_string(edges) + " edges; limit is " +
                         std::to_string(kMaxGadgetEdges));
  }
}

// Accumulates edges and colors in emission order.
struct EdgeSink {
  std::vector<Edge> edges;
  std::vector<EdgeColor> colors;

  void add(NodeId u, NodeId v, Capacity c, EdgeColor color) {
    edges.push_back({u, v, c});
    colors.push_back(color);
  }
};

Partition halves(Var n) { return Partition::contiguous(n, (n + 1) / 2, 0); }

std::uint64_t parse_u64(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = std::stoull(text, &used);
  if (used != text.size()) throw std::invalid_argument(text);
  return v;
}

struct KindName {
  RoleKind kind;
  const char* name;
  int args;  // 0: none, 1: index, 2: index and clause, 3: clause only
};

constexpr KindName kKindNames[] = {
    {RoleKind::alpha, "alpha", 1},
    {RoleKind::beta_l, "beta_l", 2},
    {RoleKind::beta_c, "beta_c", 2},
    {RoleKind::beta_r, "beta_r", 2},
    {RoleKind::beta_prime, "beta_prime", 1},
    {RoleKind::beta_prime_j, "beta_prime_j", 2},
    {RoleKind::gamma, "gamma", 1},
    {RoleKind::clause_sat, "clause_sat", 3},
    {RoleKind::clause_unsat, "clause_unsat", 3},
    {RoleKind::clause, "clause", 3},
    {RoleKind::hub, "hub", 0},
    {RoleKind::beta, "beta", 1},
    {RoleKind::clause_ss, "clause_ss", 3},
    {RoleKind::clause_su, "clause_su", 3},
    {RoleKind::clause_us, "clause_us", 3},
};

std::vector<Role> layout_roles(Variant variant, const Partition& partition, std::size_t mm,
                               std::size_t p);

const KindName& kind_name(RoleKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("unknown role kind");
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::uncap:
      return "uncap";
    case Variant::cap:
      return "cap";
    case Variant::mlec:
      return "mlec";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  if (text == "uncap") return Variant::uncap;
  if (text == "cap") return Variant::cap;
  if (text == "mlec") return Variant::mlec;
  throw std::invalid_argument("unknown variant '" + text + "'");
}

std::string Role::str() const {
  const KindName& k = kind_name(kind);
  std::string out = k.name;
  switch (k.args) {
    case 1:
      out += "(" + std::to_string(index) + ")";
      break;
    case 2:
      out += "(" + std::to_string(index) + "," + std::to_string(clause) + ")";
      break;
    case 3:
      out += "(" + std::to_string(clause) + ")";
      break;
    default:
      break;
  }
  return out;
}

Role Role::parse(const std::string& text) {
  const std::size_t open = text.find('(');
  const std::string name = text.substr(0, open);
  for (const auto& k : kKindNames) {
    if (name != k.name) continue;
    Role role{k.kind, 0, 0};
    if (k.args == 0) {
      if (open != std::string::npos) break;
      return role;
    }
    if (open == std::string::npos || text.back() != ')') break;
    const std::string inner = text.substr(open + 1, text.size() - open - 2);
    try {
      if (k.args == 2) {
        const std::size_t comma = inner.find(',');
        if (comma == std::string::npos) break;
        role.index = parse_u64(inner.substr(0, comma));
        role.clause = parse_u64(inner.substr(comma + 1));
      } else if (k.args == 1) {
        role.index = parse_u64(inner);
      } else {
        role.clause = parse_u64(inner);
      }
    } catch (const std::logic_error&) {
      break;
    }
    return role;
  }
  throw std::invalid_argument("bad role label '" + text + "'");
}

GadgetGraph::GadgetGraph(Variant variant, std::size_t p, CnfFormula formula, Partition partition,
                         FlowNetwork net, std::vector<Role> roles, std::vector<EdgeColor> colors)
    : variant_(variant), p_(p), formula_(std::move(formula)), partition_(std::move(partition)),
      net_(std::move(net)), roles_(std::move(roles)), colors_(std::move(colors)) {
  check_formula_matches(formula_, partition_);
  check_block_sizes(partition_);
  if (variant_ == Variant::mlec) {
    if (p_ != 0) throw std::invalid_argument("edge-connectivity gadget has no p");
    if (partition_.size(Block::u3) != 0) {
      throw std::invalid_argument("edge-connectivity gadget uses two blocks");
    }
  } else {
    check_p(p_, m());
  }
  if (colors_.size() != net_.edge_count()) {
    throw std::invalid_argument("one color per edge required");
  }
  if (roles_ != layout_roles(variant_, partition_, m(), p_)) {
    throw std::invalid_argument("node roles do not match the gadget layout");
  }
}

std::uint64_t GadgetGraph::alpha_count() const { return partition_.assignments(Block::u1); }
std::uint64_t GadgetGraph::beta_count() const { return partition_.assignments(Block::u2); }
std::uint64_t GadgetGraph::gamma_count() const { return partition_.assignments(Block::u3); }

namespace {

std::size_t beta_stride(Variant v, std::size_t m, std::size_t p) {
  return v == Variant::uncap ? 2 * m + p : 3 * m + 1;
}

}  // namespace

NodeId GadgetGraph::alpha(std::uint64_t a) const { return a; }

NodeId GadgetGraph::beta_l(std::uint64_t b, std::size_t i) const {
  return alpha_count() + b * beta_stride(variant_, m(), p_) + (i - 1);
}

NodeId GadgetGraph::beta_c(std::uint64_t b, std::size_t i) const {
  return alpha_count() + b * beta_stride(variant_, m(), p_) + m() + (i - 1);
}

NodeId GadgetGraph::beta_r(std::uint64_t b, std::size_t i) const {
  const std::size_t offset = variant_ == Variant::uncap ? m() : 2 * m();
  return alpha_count() + b * beta_stride(variant_, m(), p_) + offset + (i - 1);
}

NodeId GadgetGraph::beta_prime(std::uint64_t b) const {
  const std::size_t offset = variant_ == Variant::uncap ? 2 * m() : 3 * m();
  return alpha_count() + b * beta_stride(variant_, m(), p_) + offset;
}

NodeId GadgetGraph::beta_prime_j(std::uint64_t b, std::size_t j) const {
  return beta_prime(b) + j;
}

NodeId GadgetGraph::gamma(std::uint64_t g) const {
  return alpha_count() + beta_count() * beta_stride(variant_, m(), p_) + g;
}

NodeId GadgetGraph::clause_sat(std::size_t i) const { return gamma(gamma_count()) + (i - 1); }
NodeId GadgetGraph::clause_unsat(std::size_t i) const {
  return gamma(gamma_count()) + m() + (i - 1);
}
NodeId GadgetGraph::clause_node(std::size_t i) const {
  return gamma(gamma_count()) + 2 * m() + (i - 1);
}
NodeId GadgetGraph::hub() const { return gamma(gamma_count()) + 3 * m(); }

NodeId GadgetGraph::mlec_beta(std::uint64_t b) const { return alpha_count() + b; }

std::vector<NodeId> GadgetGraph::alpha_nodes() const {
  std::vector<NodeId> nodes(alpha_count());
  for (std::uint64_t a = 0; a < nodes.size(); ++a) nodes[a] = alpha(a);
  return nodes;
}

std::vector<NodeId> GadgetGraph::sink_nodes() const {
  std::vector<NodeId> nodes;
  if (variant_ == Variant::mlec) {
    for (std::uint64_t b = 0; b < beta_count(); ++b) nodes.push_back(mlec_beta(b));
  } else {
    for (std::uint64_t g = 0; g < gamma_count(); ++g) nodes.push_back(gamma(g));
  }
  return nodes;
}

Capacity GadgetGraph::threshold() const {
  return static_cast<Capacity>(beta_count() * m()) - 1;
}

namespace {

std::vector<Role> layout_roles(Variant variant, const Partition& partition, std::size_t mm,
                               std::size_t p) {
  const std::uint64_t alpha_count = partition.assignments(Block::u1);
  const std::uint64_t beta_count = partition.assignments(Block::u2);
  const std::uint64_t gamma_count = partition.assignments(Block::u3);
  std::vector<Role> roles;
  for (std::uint64_t a = 0; a < alpha_count; ++a) roles.push_back({RoleKind::alpha, a, 0});
  if (variant == Variant::mlec) {
    for (std::uint64_t b = 0; b < beta_count; ++b) roles.push_back({RoleKind::beta, b, 0});
    for (std::size_t i = 1; i <= mm; ++i) {
      roles.push_back({RoleKind::clause_ss, 0, i});
      roles.push_back({RoleKind::clause_su, 0, i});
      roles.push_back({RoleKind::clause_us, 0, i});
    }
    return roles;
  }
  for (std::uint64_t b = 0; b < beta_count; ++b) {
    for (std::size_t i = 1; i <= mm; ++i) roles.push_back({RoleKind::beta_l, b, i});
    if (variant == Variant::cap) {
      for (std::size_t i = 1; i <= mm; ++i) roles.push_back({RoleKind::beta_c, b, i});
    }
    for (std::size_t i = 1; i <= mm; ++i) roles.push_back({RoleKind::beta_r, b, i});
    roles.push_back({RoleKind::beta_prime, b, 0});
    if (variant == Variant::uncap) {
      for (std::size_t j = 1; j < p; ++j) roles.push_back({RoleKind::beta_prime_j, b, j});
    }
  }
  for (std::uint64_t g = 0; g < gamma_count; ++g) roles.push_back({RoleKind::gamma, g, 0});
  if (variant == Variant::cap) {
    for (std::size_t i = 1; i <= mm; ++i) roles.push_back({RoleKind::clause_sat, 0, i});
    for (std::size_t i = 1; i <= mm; ++i) roles.push_back({RoleKind::clause_unsat, 0, i});
    for (std::size_t i = 1; i <= mm; ++i) roles.push_back({RoleKind::clause, 0, i});
    roles.push_back({RoleKind::hub, 0, 0});
  }
  return roles;
}

}  // namespace

GadgetGraph GadgetGraph::with_reversed_edge(EdgeId e) const {
  std::vector<Edge> edges(net_.edges().begin(), net_.edges().end());
  std::swap(edges.at(e).src, edges.at(e).dst);
  return GadgetGraph(variant_, p_, formula_, partition_, FlowNetwork(net_.node_count(), edges),
                     roles_, colors_);
}

GadgetCounts closed_form_counts(Variant variant, const CnfFormula& formula,
                                const Partition& partition, std::size_t p) {
  const std::uint64_t m = formula.num_clauses();
  const Partition blocks = variant == Variant::mlec ? halves(formula.num_vars()) : partition;
  const std::uint64_t A = blocks.assignments(Block::u1);
  const std::uint64_t B = blocks.assignments(Block::u2);
  const std::uint64_t C = blocks.assignments(Block::u3);

  // Number of (assignment, clause) pairs where the assignment fails the clause.
  auto unsat_pairs = [&](Block block) {
    BlockSatTable table(formula, blocks, block);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < table.assignments(); ++x) {
      for (std::size_t i = 0; i < m; ++i) count += table(x, i) ? 0 : 1;
    }
    return count;
  };

  GadgetCounts counts;
  switch (variant) {
    case Variant::uncap:
      counts.nodes = A + 2 * B * m + B + B * (p - 1) + C;
      counts.edges = A * B * m + B * unsat_pairs(Block::u3) + 2 * B * m + (p - 1) * B +
                     C * (p - 1) * B;
      break;
    case Variant::cap:
      counts.nodes = A + 2 * m + B * 3 * m + B + 1 + m + C;
      counts.edges = A * m + 5 * B * m + unsat_pairs(Block::u2) + (p > 1 ? B + C : 0) +
                     unsat_pairs(Block::u3);
      break;
    case Variant::mlec:
      counts.nodes = A + B + 3 * m;
      counts.edges = (A + B) * m * 2 - unsat_pairs(Block::u1) - unsat_pairs(Block::u2);
      break;
  }
  return counts;
}

GadgetGraph build_uncap_gadget(const CnfFormula& formula, const Partition& partition,
                               std::size_t p) {
  check_formula_matches(formula, partition);
  check_block_sizes(partition);
  const std::size_t m = formula.num_clauses();
  check_p(p, m);
  const std::uint64_t A = partition.assignments(Block::u1);
  const std::uint64_t B = partition.assignments(Block::u2);
  const std::uint64_t C = partition.assignments(Block::u3);
  check_edge_budget(A * B * m + C * B * m + 2 * B * m + (p - 1) * B * (1 + C));

  const BlockSatTable sat_a(formula, partition, Block::u1);
  const BlockSatTable sat_b(formula, partition, Block::u2);
  const BlockSatTable sat_g(formula, partition, Block::u3);

  const std::size_t stride = 2 * m + p;
  auto beta_l = [&](std::uint64_t b, std::size_t i) { return A + b * stride + (i - 1); };
  auto beta_r = [&](std::uint64_t b, std::size_t i) { return A + b * stride + m + (i - 1); };
  auto beta_prime = [&](std::uint64_t b) { return A + b * stride + 2 * m; };
  auto gamma = [&](std::uint64_t g) { return A + B * stride + g; };

  EdgeSink sink;
  for (std::uint64_t a = 0; a < A; ++a) {
    for (std::uint64_t b = 0; b < B; ++b) {
      for (std::size_t i = 1; i <= m; ++i) {
        if (!sat_a(a, i - 1) && !sat_b(b, i - 1)) {
          sink.add(a, beta_l(b, i), 1, EdgeColor::blue);
        } else {
          sink.add(a, beta_r(b, i), 1, EdgeColor::red);
        }
      }
    }
  }
  for (std::uint64_t b = 0; b < B; ++b) {
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::uint64_t g = 0; g < C; ++g) {
        if (!sat_g(g, i - 1)) sink.add(beta_l(b, i), gamma(g), 1, EdgeColor::blue);
      }
      sink.add(beta_l(b, i), beta_r(b, i), 1, EdgeColor::red);
      sink.add(beta_r(b, i), beta_prime(b), 1, EdgeColor::red);
    }
    for (std::size_t j = 1; j < p; ++j) {
      sink.add(beta_prime(b), beta_prime(b) + j, 1, EdgeColor::red);
      for (std::uint64_t g = 0; g < C; ++g) {
        sink.add(beta_prime(b) + j, gamma(g), 1, EdgeColor::red);
      }
    }
  }

  const std::size_t nodes = A + B * stride + C;
  return GadgetGraph(Variant::uncap, p, formula, partition,
                     FlowNetwork(nodes, std::move(sink.edges)),
                     layout_roles(Variant::uncap, partition, m, p), std::move(sink.colors));
}


GadgetGraph build_cap_gadget(const CnfFormula& formula, const Partition& partition,
                             std::size_t p) {
  check_formula_matches(formula, partition);
  check_block_sizes(partition);
  const std::size_t m = formula.num_clauses();
  check_p(p, m);
  const std::uint64_t A = partition.assignments(Block::u1);
  const std::uint64_t B = partition.assignments(Block::u2);
  const std::uint64_t C = partition.assignments(Block::u3);
  check_edge_budget(A * m + 6 * B * m + B + C + C * m);

  const BlockSatTable sat_a(formula, partition, Block::u1);
  const BlockSatTable sat_b(formula, partition, Block::u2);
  const BlockSatTable sat_g(formula, partition, Block::u3);

  const std::size_t stride = 3 * m + 1;
  auto beta_l = [&](std::uint64_t b, std::size_t i) { return A + b * stride + (i - 1); };
  auto beta_c = [&](std::uint64_t b, std::size_t i) { return A + b * stride + m + (i - 1); };
  auto beta_r = [&](std::uint64_t b, std::size_t i) { return A + b * stride + 2 * m + (i - 1); };
  auto beta_prime = [&](std::uint64_t b) { return A + b * stride + 3 * m; };
  auto gamma = [&](std::uint64_t g) { return A + B * stride + g; };
  const NodeId clause_base = A + B * stride + C;
  auto clause_sat = [&](std::size_t i) { return clause_base + (i - 1); };
  auto clause_unsat = [&](std::size_t i) { return clause_base + m + (i - 1); };
  auto clause = [&](std::size_t i) { return clause_base + 2 * m + (i - 1); };
  const NodeId hub = clause_base + 3 * m;

  const Capacity wide = static_cast<Capacity>(B);
  EdgeSink sink;
  for (std::uint64_t a = 0; a < A; ++a) {
    for (std::size_t i = 1; i <= m; ++i) {
      if (sat_a(a, i - 1)) {
        sink.add(a, clause_sat(i), wide, EdgeColor::red);
      } else {
        sink.add(a, clause_unsat(i), wide, EdgeColor::blue);
      }
    }
  }
  for (std::uint64_t b = 0; b < B; ++b) {
    for (std::size_t i = 1; i <= m; ++i) {
      sink.add(clause_sat(i), beta_c(b, i), 1, EdgeColor::red);
      sink.add(clause_unsat(i), beta_l(b, i), 1, EdgeColor::blue);
      if (!sat_b(b, i - 1)) sink.add(beta_l(b, i), beta_r(b, i), 1, EdgeColor::blue);
      sink.add(beta_l(b, i), beta_c(b, i), 1, EdgeColor::red);
      sink.add(beta_c(b, i), beta_prime(b), 1, EdgeColor::red);
      sink.add(beta_r(b, i), clause(i), 1, EdgeColor::blue);
    }
    if (p > 1) sink.add(beta_prime(b), hub, static_cast<Capacity>(p - 1), EdgeColor::red);
  }
  if (p > 1) {
    for (std::uint64_t g = 0; g < C; ++g) {
      sink.add(hub, gamma(g), wide * static_cast<Capacity>(p - 1), EdgeColor::red);
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::uint64_t g = 0; g < C; ++g) {
      if (!sat_g(g, i - 1)) sink.add(clause(i), gamma(g), wide, EdgeColor::blue);
    }
  }

  const std::size_t nodes = hub + 1;
  return GadgetGraph(Variant::cap, p, formula, partition,
                     FlowNetwork(nodes, std::move(sink.edges)),
                     layout_roles(Variant::cap, partition, m, p), std::move(sink.colors));
}

GadgetGraph build_mlec_gadget(const CnfFormula& formula) {
  const Partition partition = halves(formula.num_vars());
  check_block_sizes(partition);
  const std::size_t m = formula.num_clauses();
  const std::uint64_t A = partition.assignments(Block::u1);
  const std::uint64_t B = partition.assignments(Block::u2);
  check_edge_budget(2 * (A + B) * m);

  const BlockSatTable sat_a(formula, partition, Block::u1);
  const BlockSatTable sat_b(formula, partition, Block::u2);
  auto beta = [&](std::uint64_t b) { return A + b; };
  auto ss = [&](std::size_t i) { return A + B + 3 * (i - 1); };
  auto su = [&](std::size_t i) { return A + B + 3 * (i - 1) + 1; };
  auto us = [&](std::size_t i) { return A + B + 3 * (i - 1) + 2; };

  EdgeSink sink;
  for (std::uint64_t a = 0; a < A; ++a) {
    for (std::size_t i = 1; i <= m; ++i) {
      if (sat_a(a, i - 1)) {
        sink.add(a, ss(i), 1, EdgeColor::none);
        sink.add(a, su(i), 1, EdgeColor::none);
      } else {
        sink.add(a, us(i), 1, EdgeColor::none);
      }
    }
  }
  // Arcs point into the beta nodes so each satisfied clause gives one
  // alpha -> clause node -> beta path.
  for (std::uint64_t b = 0; b < B; ++b) {
    for (std::size_t i = 1; i <= m; ++i) {
      if (sat_b(b, i - 1)) {
        sink.add(ss(i), beta(b), 1, EdgeColor::none);
        sink.add(us(i), beta(b), 1, EdgeColor::none);
      } else {
        sink.add(su(i), beta(b), 1, EdgeColor::none);
      }
    }
  }
  const std::size_t nodes = A + B + 3 * m;
  return GadgetGraph(Variant::mlec, 0, formula, partition,
                     FlowNetwork(nodes, std::move(sink.edges)),
                     layout_roles(Variant::mlec, partition, m, 0), std::move(sink.colors));
}

GadgetGraph build_gadget(Variant variant, const CnfFormula& formula, const Partition& partition,
                         std::size_t p) {
  switch (variant) {
    case Variant::uncap:
      return build_uncap_gadget(formula, partition, p);
    case Variant::cap:
      return build_cap_gadget(formula, partition, p);
    case Variant::mlec:
      return build_mlec_gadget(formula);
  }
  throw std::invalid_argument("unknown variant");
}

namespace {

// (u, v) -> first edge u->v.
class EdgeIndex {
 public:
  explicit EdgeIndex(const FlowNetwork& net) : n_(net.node_count()) {
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      index_.try_emplace(key(net.edges()[e].src, net.edges()[e].dst), e);
    }
  }

  EdgeId at(NodeId u, NodeId v) const {
    auto it = index_.find(key(u, v));
    if (it == index_.end()) {
      throw PreconditionError("witness path needs a missing edge " + std::to_string(u) + "->" +
                              std::to_string(v));
    }
    return it->second;
  }

  void add_path(FlowResult& flow, std::initializer_list<NodeId> path) const {
    const NodeId* prev = nullptr;
    for (const NodeId& v : path) {
      if (prev != nullptr) flow.edge_flows[at(*prev, v)] += 1;
      prev = &v;
    }
    flow.value += 1;
  }

 private:
  std::uint64_t key(NodeId u, NodeId v) const { return static_cast<std::uint64_t>(u) * n_ + v; }

  std::size_t n_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

void require_variant(const GadgetGraph& g, Variant v, const char* op) {
  if (g.variant() != v) {
    throw PreconditionError(std::string(op) + " needs a " + to_string(v) + " gadget, got " +
                            to_string(g.variant()));
  }
}

void check_assignment_indices(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t beta,
                              std::uint64_t gamma) {
  if (alpha >= g.alpha_count() || beta >= g.beta_count() || gamma >= g.gamma_count()) {
    throw std::out_of_range("assignment index out of range");
  }
}

}  // namespace

SubGadget subgadget(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t beta,
                    std::uint64_t gamma) {
  require_variant(g, Variant::uncap, "subgadget");
  check_assignment_indices(g, alpha, beta, gamma);
  const std::size_t m = g.m();
  SubGadget sub;
  sub.to_gadget_node.push_back(g.alpha(alpha));
  for (std::size_t i = 1; i <= m; ++i) sub.to_gadget_node.push_back(g.beta_l(beta, i));
  for (std::size_t i = 1; i <= m; ++i) sub.to_gadget_node.push_back(g.beta_r(beta, i));
  sub.to_gadget_node.push_back(g.beta_prime(beta));
  for (std::size_t j = 1; j < g.p(); ++j) sub.to_gadget_node.push_back(g.beta_prime_j(beta, j));
  sub.to_gadget_node.push_back(g.gamma(gamma));

  std::unordered_map<NodeId, NodeId> local;
  for (NodeId v = 0; v < sub.to_gadget_node.size(); ++v) local.emplace(sub.to_gadget_node[v], v);
  for (NodeId u : sub.to_gadget_node) {
    for (EdgeId e : g.net().out_edges(u)) {
      if (local.contains(g.net().edges()[e].dst)) sub.to_gadget_edge.push_back(e);
    }
  }
  std::sort(sub.to_gadget_edge.begin(), sub.to_gadget_edge.end());
  std::vector<Edge> edges;
  edges.reserve(sub.to_gadget_edge.size());
  for (EdgeId e : sub.to_gadget_edge) {
    const Edge& edge = g.net().edges()[e];
    edges.push_back({local.at(edge.src), local.at(edge.dst), edge.capacity});
  }
  sub.net = FlowNetwork(sub.to_gadget_node.size(), std::move(edges));
  sub.source = 0;
  sub.sink = sub.to_gadget_node.size() - 1;
  return sub;
}

FlowResult witness_flow_uncap(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t beta,
                              std::uint64_t gamma) {
  const SubGadget sub = subgadget(g, alpha, beta, gamma);
  const std::size_t m = g.m();
  const std::size_t p = g.p();
  const auto sat_a = sat_row(g.formula(), g.partition(), Block::u1, alpha);
  const auto sat_b = sat_row(g.formula(), g.partition(), Block::u2, beta);
  const auto sat_g = sat_row(g.formula(), g.partition(), Block::u3, gamma);

  // I: up to m-p+1 clauses left unsatisfied by the triple, smallest first.
  std::vector<std::size_t> first_phase;
  std::vector<std::size_t> rest;
  for (std::size_t i = 1; i <= m; ++i) {
    const bool unsat = !sat_a[i - 1] && !sat_b[i - 1] && !sat_g[i - 1];
    if (unsat && first_phase.size() < m - p + 1) {
      first_phase.push_back(i);
    } else {
      rest.push_back(i);
    }
  }
  // Bijection onto [1, m-|I|]: clauses alpha and beta both fail come first.
  std::stable_partition(rest.begin(), rest.end(),
                        [&](std::size_t i) { return !sat_a[i - 1] && !sat_b[i - 1]; });

  // Local ids: 0 alpha, 1..m beta_l, m+1..2m beta_r, 2m+1 beta', then beta'_j, sink last.
  auto l = [](std::size_t i) { return i; };
  auto r = [m](std::size_t i) { return m + i; };
  const NodeId prime = 2 * m + 1;
  auto prime_j = [prime](std::size_t j) { return prime + j; };
  const NodeId a = sub.source;
  const NodeId t = sub.sink;

  const EdgeIndex index(sub.net);
  FlowResult flow;
  flow.edge_flows.assign(sub.net.edge_count(), 0);
  for (std::size_t i : first_phase) index.add_path(flow, {a, l(i), t});
  for (std::size_t k = 0; k < rest.size() && k + 1 < p; ++k) {
    const std::size_t i = rest[k];
    const std::size_t j = k + 1;
    if (!sat_a[i - 1] && !sat_b[i - 1]) {
      index.add_path(flow, {a, l(i), r(i), prime, prime_j(j), t});
    } else {
      index.add_path(flow, {a, r(i), prime, prime_j(j), t});
    }
  }
  return flow;
}

FlowResult witness_flow_cap(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t gamma) {
  require_variant(g, Variant::cap, "witness_flow_cap");
  check_assignment_indices(g, alpha, 0, gamma);
  const std::size_t m = g.m();
  const std::size_t p = g.p();
  const auto sat_a = sat_row(g.formula(), g.partition(), Block::u1, alpha);
  const auto sat_g = sat_row(g.formula(), g.partition(), Block::u3, gamma);
  const NodeId a = g.alpha(alpha);
  const NodeId t = g.gamma(gamma);

  const EdgeIndex index(g.net());
  FlowResult flow;
  flow.edge_flows.assign(g.net().edge_count(), 0);
  for (std::uint64_t b = 0; b < g.beta_count(); ++b) {
    const auto sat_b = sat_row(g.formula(), g.partition(), Block::u2, b);
    std::vector<std::size_t> first_phase;
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i <= m; ++i) {
      const bool unsat = !sat_a[i - 1] && !sat_b[i - 1] && !sat_g[i - 1];
      if (unsat && first_phase.size() < m - p + 1) {
        first_phase.push_back(i);
      } else {
        rest.push_back(i);
      }
    }
    if (first_phase.size() < m - p + 1) {
      throw PreconditionError("triple (" + std::to_string(alpha) + "," + std::to_string(b) + "," +
                              std::to_string(gamma) + ") satisfies at least p clauses");
    }
    for (std::size_t i : first_phase) {
      index.add_path(flow, {a, g.clause_unsat(i), g.beta_l(b, i), g.beta_r(b, i), g.clause_node(i), t});
    }
    for (std::size_t i : rest) {
      if (!sat_a[i - 1]) {
        index.add_path(flow, {a, g.clause_unsat(i), g.beta_l(b, i), g.beta_c(b, i),
                              g.beta_prime(b), g.hub(), t});
      } else {
        index.add_path(flow, {a, g.clause_sat(i), g.beta_c(b, i), g.beta_prime(b), g.hub(), t});
      }
    }
  }
  return flow;
}

std::vector<NodeId> witness_cut_cap(const GadgetGraph& g, const Assignment& phi) {
  require_variant(g, Variant::cap, "witness_cut_cap");
  const std::size_t m = g.m();
  if (phi.size() != g.formula().num_vars() + std::size_t{1}) {
    throw std::invalid_argument("assignment does not cover the formula's variables");
  }
  if (count_satisfied(g.formula(), phi) < g.p()) {
    throw PreconditionError("assignment satisfies fewer than p clauses");
  }
  const std::uint64_t alpha = restrict_to(g.partition(), Block::u1, phi);
  const std::uint64_t beta = restrict_to(g.partition(), Block::u2, phi);
  const std::uint64_t gamma = restrict_to(g.partition(), Block::u3, phi);
  const auto sat_a = sat_row(g.formula(), g.partition(), Block::u1, alpha);
  const auto sat_b = sat_row(g.formula(), g.partition(), Block::u2, beta);
  const auto sat_g = sat_row(g.formula(), g.partition(), Block::u3, gamma);

  std::vector<NodeId> side{g.alpha(alpha), g.beta_prime(beta)};
  for (std::size_t i = 1; i <= m; ++i) {
    side.push_back(sat_a[i - 1] ? g.clause_sat(i) : g.clause_unsat(i));
    side.push_back(g.beta_c(beta, i));
    if (sat_g[i - 1]) {
      side.push_back(g.clause_node(i));
      side.push_back(g.beta_l(beta, i));
      side.push_back(g.beta_r(beta, i));
    } else if (sat_b[i - 1]) {
      side.push_back(g.beta_l(beta, i));
    }
  }
  // The other U3 nodes have no outgoing arcs; placing them on the source
  // side removes the clause -> gamma arcs into them from the cut.
  for (std::uint64_t other = 0; other < g.gamma_count(); ++other) {
    if (other != gamma) side.push_back(g.gamma(other));
  }
  std::sort(side.begin(), side.end());
  return side;
}

std::vector<NodeId> witness_cut_kpmf(const GadgetGraph& g, Variant variant, std::uint64_t alpha,
                                     std::uint64_t gamma) {
  if (variant == Variant::mlec || g.variant() != variant) {
    throw PreconditionError("kPMF witness cut requested for the wrong variant");
  }
  check_assignment_indices(g, alpha, 0, gamma);
  const std::size_t m = g.m();
  std::vector<NodeId> side{g.alpha(alpha)};
  if (variant == Variant::cap) {
    for (std::size_t i = 1; i <= m; ++i) {
      side.push_back(g.clause_sat(i));
      side.push_back(g.clause_unsat(i));
    }
  }
  for (std::uint64_t b = 0; b < g.beta_count(); ++b) {
    for (std::size_t i = 1; i <= m; ++i) {
      side.push_back(g.beta_l(b, i));
      if (variant == Variant::cap) side.push_back(g.beta_c(b, i));
    }
  }
  for (std::uint64_t other = 0; other < g.gamma_count(); ++other) {
    if (other != gamma) side.push_back(g.gamma(other));
  }
  std::sort(side.begin(), side.end());
  return side;
}

void write_gadget(std::ostream& out, const GadgetGraph& g) {
  DimacsFlowFile file;
  file.comments.push_back("gadget " + to_string(g.variant()) + " " + std::to_string(g.p()));
  file.comments.push_back("formula " + std::to_string(g.formula().num_vars()) + " " +
                          std::to_string(g.m()));
  for (const Clause& c : g.formula().clauses()) {
    std::string line = "clause";
    for (Literal lit : c.literals()) line += " " + std::to_string(lit.signed_value());
    file.comments.push_back(line + " 0");
  }
  for (int b = 0; b < 3; ++b) {
    std::string line = "block " + std::to_string(b + 1);
    for (Var v : g.partition().block(static_cast<Block>(b))) line += " " + std::to_string(v);
    file.comments.push_back(line);
  }
  file.net = g.net();
  for (NodeId v = 0; v < g.roles().size(); ++v) {
    file.trailing_comments.push_back("role " + std::to_string(v + 1) + " " + g.roles()[v].str());
  }
  for (EdgeId e = 0; e < g.colors().size(); ++e) {
    if (g.colors()[e] == EdgeColor::none) continue;
    file.trailing_comments.push_back("color " + std::to_string(e + 1) + " " +
                                     (g.colors()[e] == EdgeColor::blue ? "blue" : "red"));
  }
  write_dimacs_flow(out, file);
}

std::string write_gadget_string(const GadgetGraph& g) {
  std::ostringstream out;
  write_gadget(out, g);
  return out.str();
}

GadgetGraph read_gadget(std::istream& in) {
  DimacsFlowFile file = read_dimacs_flow(in);
  std::optional<Variant> variant;
  std::size_t p = 0;
  Var num_vars = 0;
  std::size_t num_clauses = 0;
  bool seen_formula = false;
  std::vector<Clause> clauses;
  std::vector<Var> blocks[3];
  for (const std::string& line : file.comments) {
    std::istringstream tokens(line);
    std::string tag;
    tokens >> tag;
    if (tag == "gadget") {
      std::string name;
      if (!(tokens >> name >> p)) throw ParseError("bad gadget line: " + line);
      variant = parse_variant(name);
    } else if (tag == "formula") {
      if (!(tokens >> num_vars >> num_clauses)) throw ParseError("bad formula line: " + line);
      seen_formula = true;
    } else if (tag == "clause") {
      std::vector<Literal> lits;
      int v = 0;
      bool closed = false;
      while (tokens >> v) {
        if (v == 0) {
          closed = true;
          break;
        }
        lits.push_back(Literal::from_signed(v));
      }
      if (!closed) throw ParseError("unterminated clause line: " + line);
      clauses.emplace_back(std::move(lits));
    } else if (tag == "block") {
      int which = 0;
      if (!(tokens >> which) || which < 1 || which > 3) throw ParseError("bad block line: " + line);
      Var v = 0;
      while (tokens >> v) blocks[which - 1].push_back(v);
    }
  }
  if (!variant || !seen_formula) throw ParseError("missing gadget or formula header");
  if (clauses.size() != num_clauses) throw ParseError("clause count mismatch");

  const std::size_t n = file.net.node_count();
  std::vector<std::optional<Role>> roles(n);
  std::vector<EdgeColor> colors(file.net.edge_count(), EdgeColor::none);
  for (const std::string& line : file.trailing_comments) {
    std::istringstream tokens(line);
    std::string tag;
    std::size_t id = 0;
    std::string label;
    if (!(tokens >> tag >> id >> label)) continue;
    if (tag == "role") {
      if (id < 1 || id > n || roles[id - 1]) throw ParseError("bad or repeated role id: " + line);
      roles[id - 1] = Role::parse(label);
    } else if (tag == "color") {
      if (id < 1 || id > colors.size()) throw ParseError("bad color edge id: " + line);
      if (label != "blue" && label != "red") throw ParseError("bad color: " + line);
      colors[id - 1] = label == "blue" ? EdgeColor::blue : EdgeColor::red;
    }
  }
  std::vector<Role> role_list;
  role_list.reserve(n);
  for (auto& r : roles) {
    if (!r) throw ParseError("node without a role");
    role_list.push_back(*r);
  }
  CnfFormula formula(num_vars, std::move(clauses));
  Partition partition(num_vars, std::move(blocks[0]), std::move(blocks[1]), std::move(blocks[2]));
  return GadgetGraph(*variant, p, std::move(formula), std::move(partition), std::move(file.net),
                     std::move(role_list), std::move(colors));
}

GadgetGraph read_gadget_string(const std::string& text) {
  std::istringstream in(text);
  return read_gadget(in);
}

}  // namespace flowlab

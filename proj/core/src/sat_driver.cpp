#include "flowlab/sat_driver.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "flowlab/max_flow.hpp"
#include "flowlab/multipair.hpp"

namespace flowlab {

MaxSatResult brute_force_max_sat(const CnfFormula& formula) {
  const Var n = formula.num_vars();
  if (n > kBruteForceVarLimit) {
    throw CnfError("brute force limited to " + std::to_string(kBruteForceVarLimit) + " variables");
  }
  MaxSatResult best;
  best.witness.assign(n + 1, false);
  bool first = true;
  Assignment values(n + 1, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (Var v = 1; v <= n; ++v) values[v] = ((mask >> (v - 1)) & 1U) != 0;
    std::size_t count = 0;
    for (const Clause& c : formula.clauses()) {
      bool sat = false;
      for (Literal lit : c.literals()) sat = sat || literal_true(lit, values[lit.var]);
      count += sat ? 1 : 0;
    }
    if (first || count > best.best_p) {
      best.best_p = count;
      best.witness = values;
      first = false;
    }
  }
  return best;
}

namespace {

void check_threshold_variant(Variant variant) {
  if (variant == Variant::mlec) {
    throw std::invalid_argument("threshold decisions need the uncap or cap gadget");
  }
}

std::size_t satisfied_by(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t beta,
                         std::uint64_t gamma) {
  return count_satisfied(g.formula(), combine(g.partition(), alpha, beta, gamma));
}

}  // namespace

ThresholdDecision decide_threshold(const GadgetGraph& g) {
  check_threshold_variant(g.variant());
  ThresholdDecision decision;
  const Capacity k = g.threshold();
  for (std::uint64_t a = 0; a < g.alpha_count(); ++a) {
    for (std::uint64_t c = 0; c < g.gamma_count(); ++c) {
      ++decision.flow_queries;
      if (max_flow_bounded(g.net(), g.alpha(a), g.gamma(c), k).is_exact()) {
        decision.holds = true;
        decision.pair = {a, c};
        return decision;
      }
    }
  }
  return decision;
}

ThresholdDecision decide_threshold(const CnfFormula& formula, const Partition& partition,
                                   std::size_t p, Variant variant) {
  check_threshold_variant(variant);
  return decide_threshold(build_gadget(variant, formula, partition, p));
}

std::uint64_t recover_triple(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t gamma) {
  check_threshold_variant(g.variant());
  const std::size_t m = g.m();
  for (std::uint64_t b = 0; b < g.beta_count(); ++b) {
    if (g.variant() == Variant::uncap) {
      const SubGadget sub = subgadget(g, alpha, b, gamma);
      if (max_flow(sub.net, sub.source, sub.sink).value > static_cast<Capacity>(m) - 1) continue;
    }
    if (satisfied_by(g, alpha, b, gamma) >= g.p()) return b;
  }
  throw PreconditionError("no beta completes the pair to a triple satisfying " +
                          std::to_string(g.p()) + " clauses");
}

std::uint64_t recover_triple(const CnfFormula& formula, const Partition& partition, std::size_t p,
                             std::uint64_t alpha, std::uint64_t gamma, Variant variant) {
  check_threshold_variant(variant);
  return recover_triple(build_gadget(variant, formula, partition, p), alpha, gamma);
}

MaxSatResult max_sat_via_flow(const CnfFormula& formula, const Partition& partition,
                              Variant variant, SearchMode mode) {
  check_threshold_variant(variant);
  MaxSatResult result;
  result.witness.assign(formula.num_vars() + 1, false);
  const std::size_t m = formula.num_clauses();

  std::optional<GadgetGraph> best_gadget;
  std::pair<std::uint64_t, std::uint64_t> best_pair{0, 0};
  auto probe = [&](std::size_t p) {
    GadgetGraph g = build_gadget(variant, formula, partition, p);
    ++result.gadget_builds;
    ThresholdDecision d = decide_threshold(g);
    result.flow_queries += d.flow_queries;
    if (d.holds && p > result.best_p) {
      result.best_p = p;
      best_pair = *d.pair;
      best_gadget.emplace(std::move(g));
    }
    return d.holds;
  };

  if (mode == SearchMode::linear) {
    for (std::size_t p = 1; p <= m; ++p) probe(p);
  } else {
    // The predicate is monotone in p: find the last p in [1, m] where it holds.
    std::size_t lo = 0;
    std::size_t hi = m;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (probe(mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
  }

  if (best_gadget) {
    const std::uint64_t beta = recover_triple(*best_gadget, best_pair.first, best_pair.second);
    result.triple = Triple{best_pair.first, beta, best_pair.second};
    result.witness = combine(partition, best_pair.first, beta, best_pair.second);
  } else {
    result.triple = Triple{};
  }
  return result;
}

MaxSatResult mlec_max_sat(const CnfFormula& formula) {
  const GadgetGraph g = build_mlec_gadget(formula);
  MaxSatResult result;
  result.gadget_builds = 1;
  const std::vector<NodeId> sources = g.alpha_nodes();
  const std::vector<NodeId> sinks = g.sink_nodes();
  const FlowMatrix matrix = st_max_flow(g.net(), sources, sinks);
  result.flow_queries = sources.size() * sinks.size();
  Triple best;
  bool first = true;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      const Capacity v = matrix.at(r, c).value_or(0);
      if (first || static_cast<std::size_t>(v) > result.best_p) {
        result.best_p = static_cast<std::size_t>(v);
        best = Triple{r, c, 0};
        first = false;
      }
    }
  }
  result.triple = best;
  result.witness = combine(g.partition(), best.alpha, best.beta, 0);
  return result;
}

bool VerificationReport::passed() const {
  for (const LemmaRecord& r : records) {
    if (!r.agree) return false;
  }
  return true;
}

void VerificationReport::write(std::ostream& out) const {
  for (const LemmaRecord& r : records) {
    out << r.p << ' ' << int{r.observed} << ' ' << int{r.oracle} << ' ' << int{r.agree} << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << '\n';
}

std::string VerificationReport::str() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

namespace {

// Witness and sub-gadget checks for one p; returns the first problem found.
std::optional<std::string> check_witnesses(const GadgetGraph& g, const MaxSatResult& oracle,
                                           const VerifyOptions& options) {
  const std::size_t p = g.p();
  const std::size_t m = g.m();
  const bool satisfiable = oracle.best_p >= p;
  const Partition& part = g.partition();
  const Capacity full = static_cast<Capacity>(g.beta_count() * m);

  if (g.variant() == Variant::cap && options.witnesses) {
    if (satisfiable) {
      const std::vector<NodeId> side = witness_cut_cap(g, oracle.witness);
      const NodeId s = g.alpha(restrict_to(part, Block::u1, oracle.witness));
      const NodeId t = g.gamma(restrict_to(part, Block::u3, oracle.witness));
      const bool has_s = std::binary_search(side.begin(), side.end(), s);
      const bool has_t = std::binary_search(side.begin(), side.end(), t);
      if (!has_s || has_t) return "witness cut does not separate alpha from gamma";
      const Capacity cap = cut_capacity(g.net(), side);
      if (cap > g.threshold()) {
        return "witness cut capacity " + std::to_string(cap) + " exceeds " +
               std::to_string(g.threshold());
      }
    } else {
      for (std::uint64_t a = 0; a < g.alpha_count(); ++a) {
        for (std::uint64_t c = 0; c < g.gamma_count(); ++c) {
          const FlowResult flow = witness_flow_cap(g, a, c);
          if (auto bad = flow_violation(g.net(), g.alpha(a), g.gamma(c), flow)) {
            return "witness flow infeasible: " + *bad;
          }
          if (flow.value != full) return "witness flow value " + std::to_string(flow.value);
        }
      }
    }
  }

  if (g.variant() == Variant::uncap) {
    if (options.witnesses) {
      if (satisfiable) {
        const std::uint64_t a = restrict_to(part, Block::u1, oracle.witness);
        const std::uint64_t b = restrict_to(part, Block::u2, oracle.witness);
        const std::uint64_t c = restrict_to(part, Block::u3, oracle.witness);
        const SubGadget sub = subgadget(g, a, b, c);
        const Capacity v = max_flow(sub.net, sub.source, sub.sink).value;
        if (v > static_cast<Capacity>(m) - 1) {
          return "sub-gadget of the optimal triple carries flow " + std::to_string(v);
        }
      } else {
        for (std::uint64_t a = 0; a < g.alpha_count(); ++a) {
          for (std::uint64_t b = 0; b < g.beta_count(); ++b) {
            for (std::uint64_t c = 0; c < g.gamma_count(); ++c) {
              const SubGadget sub = subgadget(g, a, b, c);
              const FlowResult flow = witness_flow_uncap(g, a, b, c);
              if (auto bad = flow_violation(sub.net, sub.source, sub.sink, flow)) {
                return "sub-gadget witness flow infeasible: " + *bad;
              }
              if (flow.value != static_cast<Capacity>(m)) {
                return "sub-gadget witness flow value " + std::to_string(flow.value);
              }
            }
          }
        }
      }
    }
    if (options.exhaustive_subgadgets) {
      for (std::uint64_t a = 0; a < g.alpha_count(); ++a) {
        for (std::uint64_t b = 0; b < g.beta_count(); ++b) {
          for (std::uint64_t c = 0; c < g.gamma_count(); ++c) {
            const SubGadget sub = subgadget(g, a, b, c);
            const bool saturated =
                max_flow(sub.net, sub.source, sub.sink).value == static_cast<Capacity>(m);
            const bool few = satisfied_by(g, a, b, c) + 1 <= p;
            if (saturated != few) {
              return "sub-gadget (" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ") breaks the flow = m characterization";
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_lemma(const CnfFormula& formula, const Partition& partition,
                                Variant variant, const VerifyOptions& options) {
  VerificationReport report;
  const MaxSatResult oracle = brute_force_max_sat(formula);
  const std::size_t m = formula.num_clauses();

  if (variant == Variant::mlec) {
    std::optional<std::size_t> observed;
    std::string error;
    try {
      GadgetGraph g = build_mlec_gadget(formula);
      if (options.tamper) g = options.tamper(g);
      std::size_t best = 0;
      for (NodeId s : g.alpha_nodes()) {
        for (NodeId t : g.sink_nodes()) {
          best = std::max(best, static_cast<std::size_t>(max_flow(g.net(), s, t).value));
        }
      }
      observed = best;
    } catch (const std::exception& e) {
      error = e.what();
    }
    for (std::size_t p = 1; p <= m; ++p) {
      LemmaRecord r{p, observed && *observed >= p, oracle.best_p >= p, false};
      r.agree = observed && r.observed == r.oracle;
      if (!r.agree) {
        report.problems.push_back("p=" + std::to_string(p) + ": " +
                                  (observed ? std::string("decision differs from brute force")
                                            : error));
      }
      report.records.push_back(r);
    }
    return report;
  }

  for (std::size_t p = 1; p <= m; ++p) {
    LemmaRecord r{p, false, oracle.best_p >= p, false};
    try {
      GadgetGraph g = build_gadget(variant, formula, partition, p);
      if (options.tamper) g = options.tamper(g);
      const ThresholdDecision d = decide_threshold(g);
      r.observed = d.holds;
      r.agree = r.observed == r.oracle;
      if (!r.agree) {
        report.problems.push_back("p=" + std::to_string(p) + ": decision differs from brute force");
      } else if (auto problem = check_witnesses(g, oracle, options)) {
        r.agree = false;
        report.problems.push_back("p=" + std::to_string(p) + ": " + *problem);
      }
    } catch (const std::exception& e) {
      r.agree = false;
      report.problems.push_back("p=" + std::to_string(p) + ": " + e.what());
    }
    report.records.push_back(r);
  }
  return report;
}

}  // namespace flowlab

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flowlab/cnf.hpp"
#include "flowlab/gadgets.hpp"

namespace flowlab {

/// Enumeration indices of one partial assignment per block.
struct Triple {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t gamma = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct MaxSatResult {
  std::size_t best_p = 0;
  Assignment witness;           // index 0 unused
  std::optional<Triple> triple;  // set by the flow-based solvers
  std::uint64_t flow_queries = 0;
  std::uint64_t gadget_builds = 0;
};

inline constexpr Var kBruteForceVarLimit = 24;

/// Exhaustive MAX-SAT; the witness is the first optimal assignment in
/// counting order. Throws CnfError above kBruteForceVarLimit variables.
MaxSatResult brute_force_max_sat(const CnfFormula& formula);

struct ThresholdDecision {
  bool holds = false;
  // Smallest (alpha, gamma) by enumeration index whose flow is at most the
  // threshold.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair;
  std::uint64_t flow_queries = 0;
};

/// Whether some triple satisfies at least p clauses, answered by flow
/// queries on the p-th gadget. p must lie in [1, m].
ThresholdDecision decide_threshold(const CnfFormula& formula, const Partition& partition,
                                   std::size_t p, Variant variant);
/// Same question on an already built (possibly modified) uncap/cap gadget.
ThresholdDecision decide_threshold(const GadgetGraph& g);

/// A beta completing (alpha, gamma) to a triple that satisfies at least
/// p = g.p() clauses. For uncap gadgets beta is found by sub-gadget flow;
/// the result is always checked directly. Throws PreconditionError if none.
std::uint64_t recover_triple(const GadgetGraph& g, std::uint64_t alpha, std::uint64_t gamma);
std::uint64_t recover_triple(const CnfFormula& formula, const Partition& partition, std::size_t p,
                             std::uint64_t alpha, std::uint64_t gamma, Variant variant);

enum class SearchMode : std::uint8_t { binary, linear };

/// Largest p for which decide_threshold holds, with a recovered triple.
MaxSatResult max_sat_via_flow(const CnfFormula& formula, const Partition& partition,
                              Variant variant, SearchMode mode = SearchMode::binary);

/// Maximum over (alpha, beta) pairs of the edge-connectivity gadget.
MaxSatResult mlec_max_sat(const CnfFormula& formula);

struct LemmaRecord {
  std::size_t p = 0;
  bool observed = false;
  bool oracle = false;
  bool agree = false;
};

class VerificationReport {
 public:
  std::vector<LemmaRecord> records;
  // Human-readable reasons behind failed records.
  std::vector<std::string> problems;

  bool passed() const;
  /// "p observed oracle agree" per record, then PASS or FAIL.
  void write(std::ostream& out) const;
  std::string str() const;
};

struct VerifyOptions {
  // Applied to every gadget before it is queried (fault injection).
  std::function<GadgetGraph(const GadgetGraph&)> tamper;
  // Check the sub-gadget flow characterization on every triple (uncap).
  bool exhaustive_subgadgets = true;
  // Check witness cuts and flows.
  bool witnesses = true;
};

/// Compares the flow decision against brute force at every p in [1, m].
/// Exceptions raised while checking a p count as disagreement.
VerificationReport verify_lemma(const CnfFormula& formula, const Partition& partition,
                                Variant variant, const VerifyOptions& options = {});

}  // namespace flowlab

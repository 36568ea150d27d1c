#include <gtest/gtest.h>

#include "flowlab/max_flow.hpp"
#include "flowlab/sat_driver.hpp"
#include "oracles.hpp"

using namespace flowlab;

namespace {

Partition planned(Var n, Rational c1, Rational c2) {
  PartitionSizes s = plan_partition(c1, c2, n);
  return Partition::contiguous(n, s.u1, s.u3);
}

}  // namespace

TEST(BruteForce, TrivialCases) {
  EXPECT_EQ(brute_force_max_sat(CnfFormula(1, {Clause{1}, Clause{-1}})).best_p, 1u);
  EXPECT_EQ(brute_force_max_sat(CnfFormula(0, {})).best_p, 0u);
  EXPECT_EQ(brute_force_max_sat(CnfFormula(2, {Clause{}, Clause{1}})).best_p, 1u);
  MaxSatResult r = brute_force_max_sat(CnfFormula(2, {Clause{-1}, Clause{2}}));
  EXPECT_EQ(r.best_p, 2u);
  EXPECT_EQ(r.witness, (Assignment{false, false, true}));
  EXPECT_THROW(brute_force_max_sat(CnfFormula(25, {})), CnfError);
}

TEST(Threshold, SmallCases) {
  CnfFormula f(3, {Clause{1, 2}, Clause{-1, 3}, Clause{2, -3}});
  Partition p = Partition::contiguous(3, 1, 1);
  for (Variant v : {Variant::uncap, Variant::cap}) {
    ThresholdDecision d = decide_threshold(f, p, 3, v);
    ASSERT_TRUE(d.holds);
    const std::uint64_t beta = recover_triple(f, p, 3, d.pair->first, d.pair->second, v);
    EXPECT_EQ(count_satisfied(f, combine(p, d.pair->first, beta, d.pair->second)), 3u);
    EXPECT_TRUE(decide_threshold(f, p, 1, v).holds);
    EXPECT_THROW(decide_threshold(f, p, 0, v), std::invalid_argument);
    EXPECT_THROW(decide_threshold(f, p, 4, v), std::invalid_argument);
  }
  EXPECT_THROW(decide_threshold(f, p, 1, Variant::mlec), std::invalid_argument);
}

TEST(Threshold, UnsatisfiableCore) {
  CnfFormula f(2, {Clause{1}, Clause{-1}, Clause{2}, Clause{-2}});
  Partition p = Partition::contiguous(2, 1, 0);
  for (Variant v : {Variant::uncap, Variant::cap}) {
    EXPECT_TRUE(decide_threshold(f, p, 2, v).holds);
    EXPECT_FALSE(decide_threshold(f, p, 3, v).holds);
    EXPECT_THROW(recover_triple(f, p, 3, 0, 0, v), PreconditionError);
  }
}

TEST(Threshold, EmptyMiddleBlock) {
  CnfFormula f(2, {Clause{1}, Clause{2}});
  Partition p = Partition::contiguous(2, 1, 1);
  for (Variant v : {Variant::uncap, Variant::cap}) {
    ThresholdDecision d = decide_threshold(f, p, 2, v);
    ASSERT_TRUE(d.holds);
    EXPECT_EQ(d.pair, (std::pair<std::uint64_t, std::uint64_t>{1, 1}));
    EXPECT_EQ(recover_triple(f, p, 2, 1, 1, v), 0u);
  }
}

TEST(Threshold, MonotoneAndShuffleInvariant) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Var n = 4 + seed % 4;
    CnfFormula f = random_formula(n, 3 + seed % 6, 3, seed);
    PartitionSizes s = plan_partition(Rational(1), Rational(1), n);
    Partition in_order = Partition::contiguous(n, s.u1, s.u3);
    Partition shuffled = Partition::shuffled(n, s.u1, s.u3, seed + 100);
    for (Variant v : {Variant::uncap, Variant::cap}) {
      bool previous = true;
      for (std::size_t p = 1; p <= f.num_clauses(); ++p) {
        const bool holds = decide_threshold(f, in_order, p, v).holds;
        EXPECT_EQ(holds, decide_threshold(f, shuffled, p, v).holds);
        EXPECT_TRUE(previous || !holds);
        previous = holds;
      }
    }
  }
}

TEST(MaxSat, ExhaustiveThreeVariableSweep) {
  Partition p = Partition::contiguous(3, 1, 1);
  for (const CnfFormula& f : oracle::all_formulas(3, 3, 2)) {
    const std::size_t want = brute_force_max_sat(f).best_p;
    for (Variant v : {Variant::uncap, Variant::cap}) {
      MaxSatResult r = max_sat_via_flow(f, p, v);
      ASSERT_EQ(r.best_p, want);
      ASSERT_TRUE(r.triple.has_value());
      EXPECT_GE(count_satisfied(f, r.witness), r.best_p);
    }
    ASSERT_EQ(mlec_max_sat(f).best_p, want);
  }
}

TEST(MaxSat, RandomFormulasAllSolversAgree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Var n = 3 + seed % 7;
    CnfFormula f = random_formula(n, 1 + seed % 12, std::min<std::size_t>(3, n), seed * 7 + 1);
    const std::size_t want = brute_force_max_sat(f).best_p;
    Partition p = planned(n, Rational(seed % 2 ? 1 : 0, 1), Rational(1, 1 + seed % 2));
    MaxSatResult bin = max_sat_via_flow(f, p, Variant::cap, SearchMode::binary);
    MaxSatResult lin = max_sat_via_flow(f, p, Variant::uncap, SearchMode::linear);
    EXPECT_EQ(bin.best_p, want);
    EXPECT_EQ(lin.best_p, want);
    EXPECT_EQ(lin.gadget_builds, f.num_clauses());
    EXPECT_LE(bin.gadget_builds, lin.gadget_builds);
    EXPECT_GE(count_satisfied(f, bin.witness), want);
    EXPECT_GE(count_satisfied(f, lin.witness), want);
    MaxSatResult mlec = mlec_max_sat(f);
    EXPECT_EQ(mlec.best_p, want);
    EXPECT_EQ(count_satisfied(f, mlec.witness), want);
  }
}

TEST(MaxSat, EdgeCases) {
  CnfFormula empty(2, {});
  EXPECT_EQ(max_sat_via_flow(empty, Partition::contiguous(2, 1, 1), Variant::uncap).best_p, 0u);
  EXPECT_EQ(mlec_max_sat(empty).best_p, 0u);
  CnfFormula single(1, {Clause{1}});
  EXPECT_EQ(max_sat_via_flow(single, Partition::contiguous(1, 0, 0), Variant::cap).best_p, 1u);
  CnfFormula empties(2, {Clause{}, Clause{}});
  EXPECT_EQ(max_sat_via_flow(empties, Partition::contiguous(2, 1, 0), Variant::uncap).best_p, 0u);
  CnfFormula taut(2, {Clause{1, -1}, Clause{2}});
  EXPECT_GE(mlec_max_sat(taut).best_p, 1u);
  // n = 2, m = 2 edge-connectivity instance.
  CnfFormula two(2, {Clause{1, -2}, Clause{-1, 2}});
  EXPECT_EQ(mlec_max_sat(two).best_p, brute_force_max_sat(two).best_p);
}

TEST(Verify, PassesAndReports) {
  CnfFormula f(3, {Clause{1, 2}, Clause{-1}, Clause{-2, 3}, Clause{-3}});
  Partition p = Partition::contiguous(3, 1, 1);
  for (Variant v : {Variant::uncap, Variant::cap, Variant::mlec}) {
    VerificationReport r = verify_lemma(f, p, v);
    EXPECT_TRUE(r.passed()) << to_string(v) << "\n" << r.str();
    EXPECT_EQ(r.records.size(), 4u);
    EXPECT_TRUE(r.problems.empty());
  }
  VerificationReport r = verify_lemma(f, p, Variant::cap);
  EXPECT_EQ(r.str(), "1 1 1 1\n2 1 1 1\n3 1 1 1\n4 0 0 1\nPASS\n");
  VerificationReport vacuous = verify_lemma(CnfFormula(2, {}), Partition::contiguous(2, 1, 1),
                                            Variant::uncap);
  EXPECT_TRUE(vacuous.passed());
  EXPECT_EQ(vacuous.str(), "PASS\n");
}

TEST(Verify, DetectsCorruptedGadgets) {
  CnfFormula f(3, {Clause{-2, 3}, Clause{2, 1}, Clause{2, -3}});
  Partition p = Partition::contiguous(3, 1, 1);
  for (Variant v : {Variant::uncap, Variant::cap}) {
    std::size_t detected = 0;
    const std::size_t edges = build_gadget(v, f, p, 1).net().edge_count();
    for (EdgeId e = 0; e < edges; ++e) {
      VerifyOptions options;
      options.tamper = [e](const GadgetGraph& g) {
        return e < g.net().edge_count() ? g.with_reversed_edge(e) : g;
      };
      if (!verify_lemma(f, p, v, options).passed()) ++detected;
    }
    // Reversing the very first alpha edge always breaks the checks.
    EXPECT_GT(detected, 0u);
    VerifyOptions first;
    first.tamper = [](const GadgetGraph& g) { return g.with_reversed_edge(0); };
    VerificationReport r = verify_lemma(f, p, v, first);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.problems.empty());
    EXPECT_NE(r.str().find("FAIL"), std::string::npos);
  }
}

TEST(Verify, AdversarialClauses) {
  CnfFormula f(3, {Clause{1, -1}, Clause{}, Clause{2}, Clause{2}, Clause{-2, 3, -1}});
  for (const Partition& p : {Partition::contiguous(3, 1, 1), Partition::contiguous(3, 0, 2),
                             Partition::contiguous(3, 3, 0)}) {
    for (Variant v : {Variant::uncap, Variant::cap}) {
      VerificationReport r = verify_lemma(f, p, v);
      EXPECT_TRUE(r.passed()) << r.str();
    }
  }
}

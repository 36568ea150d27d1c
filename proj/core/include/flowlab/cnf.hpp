#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowlab {

using Var = std::uint32_t;  // 1-based variable index

struct Literal {
  Var var = 1;
  bool negated = false;

  /// DIMACS form: +v or -v.
  int signed_value() const { return negated ? -static_cast<int>(var) : static_cast<int>(var); }
  static Literal from_signed(int value);

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Truth of a literal under a value for its variable. Every satisfaction
/// check in the library goes through this.
inline bool literal_true(Literal lit, bool var_value) { return var_value != lit.negated; }

/// A set of literals; input order is kept, repeated literals are dropped.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<int> signed_literals);

  const std::vector<Literal>& literals() const { return literals_; }
  bool empty() const { return literals_.empty(); }
  /// Contains some literal together with its negation.
  bool tautological() const { return tautological_; }

  friend bool operator==(const Clause& a, const Clause& b) { return a.literals_ == b.literals_; }

 private:
  std::vector<Literal> literals_;
  bool tautological_ = false;
};

class CnfError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(Var num_vars, std::vector<Clause> clauses);

  Var num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_.at(i); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  Var num_vars_ = 0;
  std::vector<Clause> clauses_;
};

/// DIMACS CNF: "p cnf <n> <m>" then clauses of signed ints ending in 0.
CnfFormula read_dimacs_cnf(std::istream& in);
CnfFormula read_dimacs_cnf_string(const std::string& text);
void write_dimacs_cnf(std::ostream& out, const CnfFormula& formula);
std::string write_dimacs_cnf_string(const CnfFormula& formula);

/// Uniform random formula: each clause draws `width` distinct variables and
/// independent signs. Deterministic for a given seed.
CnfFormula random_formula(Var num_vars, std::size_t num_clauses, std::size_t width,
                          std::uint64_t seed);

/// Exact non-negative rational, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  /// Parses "num/den" or an integer.
  static Rational parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Block : std::uint8_t { u1 = 0, u2 = 1, u3 = 2 };

/// Split of the variables into three disjoint blocks.
class Partition {
 public:
  Partition() = default;
  Partition(Var num_vars, std::vector<Var> u1, std::vector<Var> u2, std::vector<Var> u3);

  /// Contiguous split by ascending variable index: U1 first, then U2, U3.
  static Partition contiguous(Var num_vars, std::size_t u1_size, std::size_t u3_size);
  /// Same block sizes, variables placed by a seeded shuffle.
  static Partition shuffled(Var num_vars, std::size_t u1_size, std::size_t u3_size,
                            std::uint64_t seed);

  Var num_vars() const { return num_vars_; }
  const std::vector<Var>& block(Block b) const { return blocks_[static_cast<int>(b)]; }
  std::size_t size(Block b) const { return block(b).size(); }
  /// Number of partial assignments of the block, 2^|block|.
  std::uint64_t assignments(Block b) const { return std::uint64_t{1} << size(b); }

  // Targets (a, b) the sizes were planned from, when known.
  Rational target_a;
  Rational target_b;

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.num_vars_ == y.num_vars_ && x.blocks_ == y.blocks_;
  }

 private:
  Var num_vars_ = 0;
  std::array<std::vector<Var>, 3> blocks_;
};

struct PartitionSizes {
  std::size_t u1 = 0;
  std::size_t u2 = 0;
  std::size_t u3 = 0;
  Rational a;
  Rational b;
};

/// a = c1/(1+c1+c2), b = c2/(1+c1+c2); |U1| = floor(a n), |U3| = floor(b n),
/// U2 takes the rest. c1, c2 must lie in [0, 1].
PartitionSizes plan_partition(Rational c1, Rational c2, Var n);

/// Balanced split a = b with c = 1/a - 1, i.e. a = 1/(c+1); c in [1, 2].
PartitionSizes plan_partition_all_pairs(Rational c, Var n);

/// Truth values for the variables of one block; bit k of `bits` is the
/// value of block(b)[k]. Assignment number `bits` is the enumeration index.
struct PartialAssignment {
  Block block = Block::u1;
  std::vector<Var> vars;
  std::uint64_t bits = 0;

  static PartialAssignment of(const Partition& partition, Block b, std::uint64_t index);
  bool value_of(Var v, bool& value) const;
};

/// True iff the partial assignment sets some literal of the clause true.
/// Literals over variables outside the block are ignored.
bool satisfies(const PartialAssignment& pa, const Clause& clause);

/// Satisfaction table of one block: row = assignment index, column = clause.
class BlockSatTable {
 public:
  BlockSatTable(const CnfFormula& formula, const Partition& partition, Block block);
  bool operator()(std::uint64_t assignment, std::size_t clause) const {
    return table_[assignment * clauses_ + clause] != 0;
  }
  std::uint64_t assignments() const { return assignments_; }

 private:
  std::uint64_t assignments_;
  std::size_t clauses_;
  std::vector<std::uint8_t> table_;
};

/// Full assignment, index 0 unused; values[v] is variable v.
using Assignment = std::vector<bool>;

/// Number of clauses satisfied by a full assignment.
std::size_t count_satisfied(const CnfFormula& formula, const Assignment& assignment);

/// Assignment index of `full` restricted to the block.
std::uint64_t restrict_to(const Partition& partition, Block b, const Assignment& full);

/// Combines one partial assignment per block into a full assignment.
Assignment combine(const Partition& partition, std::uint64_t alpha, std::uint64_t beta,
                   std::uint64_t gamma);

}  // namespace flowlab

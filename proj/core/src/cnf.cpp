#include "flowlab/cnf.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace flowlab {

Literal Literal::from_signed(int value) {
  if (value == 0) throw CnfError("literal 0 is a clause terminator, not a literal");
  return {static_cast<Var>(value < 0 ? -value : value), value < 0};
}

Clause::Clause(std::vector<Literal> literals) {
  for (Literal lit : literals) {
    if (std::find(literals_.begin(), literals_.end(), lit) != literals_.end()) continue;
    if (std::find(literals_.begin(), literals_.end(), Literal{lit.var, !lit.negated}) !=
        literals_.end()) {
      tautological_ = true;
    }
    literals_.push_back(lit);
  }
}

Clause::Clause(std::initializer_list<int> signed_literals) {
  std::vector<Literal> lits;
  for (int v : signed_literals) lits.push_back(Literal::from_signed(v));
  *this = Clause(std::move(lits));
}

CnfFormula::CnfFormula(Var num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    for (Literal lit : clauses_[i].literals()) {
      if (lit.var < 1 || lit.var > num_vars_) {
        throw CnfError("clause " + std::to_string(i + 1) + " uses variable " +
                       std::to_string(lit.var) + " outside [1, " + std::to_string(num_vars_) + "]");
      }
    }
  }
}

CnfFormula read_dimacs_cnf(std::istream& in) {
  bool seen_problem = false;
  long long n = 0;
  long long m = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  bool open_clause = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (seen_problem || !(tokens >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0) {
        throw CnfError("bad problem line: " + line);
      }
      seen_problem = true;
      continue;
    }
    if (!seen_problem) throw CnfError("clause data before problem line");
    std::istringstream values(line);
    long long v = 0;
    while (values >> v) {
      if (v == 0) {
        clauses.emplace_back(std::move(current));
        current.clear();
        open_clause = false;
      } else {
        if (v > n || -v > n) throw CnfError("literal " + std::to_string(v) + " out of range");
        current.push_back(Literal::from_signed(static_cast<int>(v)));
        open_clause = true;
      }
    }
    if (!values.eof()) throw CnfError("non-integer token in clause line: " + line);
  }
  if (!seen_problem) throw CnfError("missing problem line");
  if (open_clause) throw CnfError("last clause is not terminated by 0");
  if (clauses.size() != static_cast<std::size_t>(m)) {
    throw CnfError("problem line declares " + std::to_string(m) + " clauses, found " +
                   std::to_string(clauses.size()));
  }
  return CnfFormula(static_cast<Var>(n), std::move(clauses));
}

CnfFormula read_dimacs_cnf_string(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs_cnf(in);
}

void write_dimacs_cnf(std::ostream& out, const CnfFormula& formula) {
  out << "p cnf " << formula.num_vars() << ' ' << formula.num_clauses() << '\n';
  for (const Clause& c : formula.clauses()) {
    for (Literal lit : c.literals()) out << lit.signed_value() << ' ';
    out << "0\n";
  }
}

std::string write_dimacs_cnf_string(const CnfFormula& formula) {
  std::ostringstream out;
  write_dimacs_cnf(out, formula);
  return out.str();
}

CnfFormula random_formula(Var num_vars, std::size_t num_clauses, std::size_t width,
                          std::uint64_t seed) {
  if (num_vars == 0 || width == 0 || width > num_vars) {
    throw CnfError("random formula needs 1 <= width <= vars");
  }
  std::mt19937_64 rng(seed);
  std::vector<Var> vars(num_vars);
  std::iota(vars.begin(), vars.end(), Var{1});
  std::vector<Clause> clauses;
  clauses.reserve(num_clauses);
  for (std::size_t i = 0; i < num_clauses; ++i) {
    // Partial Fisher-Yates: the first `width` slots become the sample.
    std::vector<Literal> lits;
    for (std::size_t k = 0; k < width; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, vars.size() - 1);
      std::swap(vars[k], vars[pick(rng)]);
      lits.push_back({vars[k], (rng() & 1U) != 0});
    }
    clauses.emplace_back(std::move(lits));
  }
  return CnfFormula(num_vars, std::move(clauses));
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d <= 0 || n < 0) throw CnfError("rational must be non-negative with positive denominator");
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw CnfError("bad rational '" + text + "'");
      return Rational(n);
    }
    std::string num_text = text.substr(0, slash);
    std::string den_text = text.substr(slash + 1);
    std::int64_t n = std::stoll(num_text, &used);
    if (used != num_text.size()) throw CnfError("bad rational '" + text + "'");
    std::int64_t d = std::stoll(den_text, &used);
    if (used != den_text.size()) throw CnfError("bad rational '" + text + "'");
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw CnfError("bad rational '" + text + "'");
  }
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Partition::Partition(Var num_vars, std::vector<Var> u1, std::vector<Var> u2, std::vector<Var> u3)
    : num_vars_(num_vars), blocks_{std::move(u1), std::move(u2), std::move(u3)} {
  std::vector<int> seen(num_vars_ + 1, 0);
  for (const auto& block : blocks_) {
    for (Var v : block) {
      if (v < 1 || v > num_vars_) throw CnfError("partition variable out of range");
      if (seen[v]++) throw CnfError("variable " + std::to_string(v) + " in two blocks");
    }
  }
  if (blocks_[0].size() + blocks_[1].size() + blocks_[2].size() != num_vars_) {
    throw CnfError("partition does not cover every variable");
  }
  for (const auto& block : blocks_) {
    if (block.size() > 62) throw CnfError("block too large to enumerate");
  }
}

Partition Partition::contiguous(Var num_vars, std::size_t u1_size, std::size_t u3_size) {
  if (u1_size + u3_size > num_vars) throw CnfError("block sizes exceed variable count");
  std::vector<Var> blocks[3];
  for (Var v = 1; v <= num_vars; ++v) {
    std::size_t k = v - 1;
    int b = k < u1_size ? 0 : (k < num_vars - u3_size ? 1 : 2);
    blocks[b].push_back(v);
  }
  return Partition(num_vars, std::move(blocks[0]), std::move(blocks[1]), std::move(blocks[2]));
}

Partition Partition::shuffled(Var num_vars, std::size_t u1_size, std::size_t u3_size,
                              std::uint64_t seed) {
  if (u1_size + u3_size > num_vars) throw CnfError("block sizes exceed variable count");
  std::vector<Var> order(num_vars);
  std::iota(order.begin(), order.end(), Var{1});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  auto take = [&](std::size_t from, std::size_t to) {
    std::vector<Var> block(order.begin() + static_cast<std::ptrdiff_t>(from),
                           order.begin() + static_cast<std::ptrdiff_t>(to));
    std::sort(block.begin(), block.end());
    return block;
  };
  const std::size_t u2_end = num_vars - u3_size;
  return Partition(num_vars, take(0, u1_size), take(u1_size, u2_end), take(u2_end, num_vars));
}

PartitionSizes plan_partition(Rational c1, Rational c2, Var n) {
  auto in_unit = [](const Rational& r) { return r.num <= r.den; };
  if (!in_unit(c1) || !in_unit(c2)) throw CnfError("c1 and c2 must lie in [0, 1]");
  // a = c1/(1+c1+c2) with c1 = p1/q1, c2 = p2/q2.
  const std::int64_t denom = c1.den * c2.den + c1.num * c2.den + c2.num * c1.den;
  PartitionSizes sizes;
  sizes.a = Rational(c1.num * c2.den, denom);
  sizes.b = Rational(c2.num * c1.den, denom);
  sizes.u1 = static_cast<std::size_t>(sizes.a.num * n / sizes.a.den);
  sizes.u3 = static_cast<std::size_t>(sizes.b.num * n / sizes.b.den);
  sizes.u2 = n - sizes.u1 - sizes.u3;
  return sizes;
}

PartitionSizes plan_partition_all_pairs(Rational c, Var n) {
  if (c.num < c.den || c.num > 2 * c.den) throw CnfError("c must lie in [1, 2]");
  PartitionSizes sizes;
  sizes.a = Rational(c.den, c.num + c.den);
  sizes.b = sizes.a;
  sizes.u1 = static_cast<std::size_t>(sizes.a.num * n / sizes.a.den);
  sizes.u3 = sizes.u1;
  sizes.u2 = n - sizes.u1 - sizes.u3;
  return sizes;
}

PartialAssignment PartialAssignment::of(const Partition& partition, Block b,
                                        std::uint64_t index) {
  if (index >= partition.assignments(b)) throw CnfError("assignment index out of range");
  return {b, partition.block(b), index};
}

bool PartialAssignment::value_of(Var v, bool& value) const {
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k] == v) {
      value = ((bits >> k) & 1U) != 0;
      return true;
    }
  }
  return false;
}

bool satisfies(const PartialAssignment& pa, const Clause& clause) {
  for (Literal lit : clause.literals()) {
    bool value = false;
    if (pa.value_of(lit.var, value) && literal_true(lit, value)) return true;
  }
  return false;
}

BlockSatTable::BlockSatTable(const CnfFormula& formula, const Partition& partition, Block block)
    : assignments_(partition.assignments(block)), clauses_(formula.num_clauses()),
      table_(assignments_ * clauses_) {
  for (std::uint64_t a = 0; a < assignments_; ++a) {
    PartialAssignment pa = PartialAssignment::of(partition, block, a);
    for (std::size_t i = 0; i < clauses_; ++i) {
      table_[a * clauses_ + i] = satisfies(pa, formula.clause(i)) ? 1 : 0;
    }
  }
}

std::size_t count_satisfied(const CnfFormula& formula, const Assignment& assignment) {
  std::size_t count = 0;
  for (const Clause& c : formula.clauses()) {
    for (Literal lit : c.literals()) {
      if (literal_true(lit, assignment.at(lit.var))) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::uint64_t restrict_to(const Partition& partition, Block b, const Assignment& full) {
  std::uint64_t bits = 0;
  const auto& vars = partition.block(b);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (full.at(vars[k])) bits |= std::uint64_t{1} << k;
  }
  return bits;
}

Assignment combine(const Partition& partition, std::uint64_t alpha, std::uint64_t beta,
                   std::uint64_t gamma) {
  Assignment full(partition.num_vars() + 1, false);
  const std::uint64_t bits[3] = {alpha, beta, gamma};
  for (int b = 0; b < 3; ++b) {
    const auto& vars = partition.block(static_cast<Block>(b));
    for (std::size_t k = 0; k < vars.size(); ++k) full[vars[k]] = ((bits[b] >> k) & 1U) != 0;
  }
  return full;
}

}  // namespace flowlab

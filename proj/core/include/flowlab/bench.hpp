#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flowlab/cnf.hpp"
#include "flowlab/gadgets.hpp"

namespace flowlab {

struct BenchRecord {
  Variant variant = Variant::uncap;
  Var n = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t wall_time_us = 0;
  std::uint64_t flow_queries = 0;
};

struct BenchSpec {
  Variant variant = Variant::uncap;
  std::vector<Var> sizes;           // one instance per n
  std::optional<std::size_t> m;     // clauses per instance; defaults to n
  std::size_t width = 3;            // clipped to n
  std::optional<std::size_t> p;     // defaults to m; ignored for mlec
  Rational c1{1};
  Rational c2{1};
  std::uint64_t seed = 1;
};

/// Builds one random instance per size and times a full threshold decision
/// (uncap, cap) or the maximum over alpha-beta pairs (mlec). Instance i uses
/// seed + i.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

/// Header "variant,n,m,p,node_count,edge_count,wall_time_us,flow_queries".
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace flowlab

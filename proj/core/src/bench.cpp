#include "flowlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "flowlab/sat_driver.hpp"

namespace flowlab {

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    const Var n = spec.sizes[i];
    const std::size_t m = spec.m.value_or(n);
    const std::size_t width = std::min<std::size_t>(spec.width, n);
    const CnfFormula formula = random_formula(n, m, width, spec.seed + i);

    BenchRecord rec;
    rec.variant = spec.variant;
    rec.n = n;
    rec.m = m;
    using Clock = std::chrono::steady_clock;
    if (spec.variant == Variant::mlec) {
      const GadgetGraph g = build_mlec_gadget(formula);
      rec.node_count = g.net().node_count();
      rec.edge_count = g.net().edge_count();
      const auto start = Clock::now();
      const MaxSatResult r = mlec_max_sat(formula);
      rec.wall_time_us = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count());
      rec.flow_queries = r.flow_queries;
    } else {
      const PartitionSizes sizes = plan_partition(spec.c1, spec.c2, n);
      const Partition partition = Partition::contiguous(n, sizes.u1, sizes.u3);
      rec.p = spec.p.value_or(m);
      const auto start = Clock::now();
      const GadgetGraph g = build_gadget(spec.variant, formula, partition, rec.p);
      const ThresholdDecision d = decide_threshold(g);
      rec.wall_time_us = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count());
      rec.node_count = g.net().node_count();
      rec.edge_count = g.net().edge_count();
      rec.flow_queries = d.flow_queries;
    }
    records.push_back(rec);
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "variant,n,m,p,node_count,edge_count,wall_time_us,flow_queries\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.variant) << ',' << r.n << ',' << r.m << ',' << r.p << ',' << r.node_count
        << ',' << r.edge_count << ',' << r.wall_time_us << ',' << r.flow_queries << '\n';
  }
}

}  // namespace flowlab

#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "flowlab/bench.hpp"
#include "flowlab/cnf.hpp"
#include "flowlab/dimacs.hpp"
#include "flowlab/gadgets.hpp"
#include "flowlab/max_flow.hpp"
#include "flowlab/multipair.hpp"
#include "flowlab/sat_driver.hpp"

namespace flowlab::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Writes to --out when given, else to the command's output stream.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
  }
  if (used != text.size()) throw UsageError(std::string("bad ") + what + " '" + text + "'");
  return v;
}

NodeId parse_node(const std::string& text, const FlowNetwork& net) {
  const std::uint64_t id = parse_count(text, "node id");
  if (id < 1 || id > net.node_count()) throw UsageError("node id " + text + " out of range");
  return static_cast<NodeId>(id - 1);
}

// A node list: comma-separated 1-based ids, or a role name such as "alpha"
// selecting the gadget nodes labelled with it.
std::vector<NodeId> parse_nodes(const std::string& text, const DimacsFlowFile& file) {
  std::vector<NodeId> nodes;
  if (!text.empty() && std::isalpha(static_cast<unsigned char>(text[0]))) {
    for (const std::string& line : file.trailing_comments) {
      std::istringstream tokens(line);
      std::string tag;
      std::uint64_t id = 0;
      std::string label;
      if (!(tokens >> tag >> id >> label) || tag != "role") continue;
      if (label.substr(0, label.find('(')) == text && id >= 1) nodes.push_back(id - 1);
    }
    if (nodes.empty()) throw UsageError("no node has role '" + text + "'");
    return nodes;
  }
  for (const std::string& part : split(text, ',')) nodes.push_back(parse_node(part, file.net));
  if (nodes.empty()) throw UsageError("empty node list");
  return nodes;
}

Partition make_partition(const CnfFormula& formula, const std::string& c1, const std::string& c2,
                         std::optional<std::uint64_t> partition_seed) {
  const Var n = formula.num_vars();
  const PartitionSizes sizes = plan_partition(Rational::parse(c1), Rational::parse(c2), n);
  Partition partition = partition_seed
                            ? Partition::shuffled(n, sizes.u1, sizes.u3, *partition_seed)
                            : Partition::contiguous(n, sizes.u1, sizes.u3);
  partition.target_a = sizes.a;
  partition.target_b = sizes.b;
  return partition;
}

struct PartitionFlags {
  std::string c1 = "1";
  std::string c2 = "1";
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--c1", c1, "U1 weight c1 in [0,1], as num/den")->capture_default_str();
    cmd->add_option("--c2", c2, "U3 weight c2 in [0,1], as num/den")->capture_default_str();
    cmd->add_option("--partition-seed", seed,
                    "place variables into blocks by a seeded shuffle instead of in order");
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max-flow algorithms and MAX-SAT reduction gadgets", "flowlab"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a random CNF formula (DIMACS)");
  Var gen_vars = 0;
  std::size_t gen_clauses = 0;
  std::size_t gen_width = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--vars", gen_vars, "number of variables")->required();
  gen->add_option("--clauses", gen_clauses, "number of clauses")->required();
  gen->add_option("--width", gen_width, "literals per clause")->capture_default_str();
  gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // build
  auto* build = app.add_subcommand("build", "build a reduction gadget from a CNF file");
  std::string build_variant = "uncap";
  std::string build_cnf;
  std::optional<std::size_t> build_p;
  PartitionFlags build_part;
  std::string build_out;
  build->add_option("--variant", build_variant, "uncap, cap or mlec")->capture_default_str();
  build->add_option("--cnf", build_cnf, "DIMACS CNF input")->required();
  build->add_option("--p", build_p, "clause threshold in [1,m] (default m)");
  build_part.attach(build);
  build->add_option("--out", build_out, "output file (default stdout)");

  // query
  auto* query = app.add_subcommand("query", "flow queries on a DIMACS max-flow file");
  query->require_subcommand(1);
  std::string graph_path;
  unsigned threads = 1;
  std::string query_out;
  query->add_option("--graph", graph_path, "DIMACS max-flow input")->required();
  query->add_option("--threads", threads, "worker threads")->capture_default_str();
  query->add_option("--out", query_out, "output file (default stdout)");
  auto* q_maxflow = query->add_subcommand("maxflow", "max s-t flow value");
  std::string q_s;
  std::string q_t;
  q_maxflow->add_option("s", q_s, "source id (1-based)")->required();
  q_maxflow->add_option("t", q_t, "sink id (1-based)")->required();
  auto* q_st = query->add_subcommand("st", "flow matrix for sources x sinks (CSV)");
  std::string q_sources;
  std::string q_sinks;
  q_st->add_option("--sources", q_sources, "ids like 1,2,3 or a role name like alpha")
      ->required();
  q_st->add_option("--sinks", q_sinks, "ids like 4,5 or a role name like gamma")->required();
  auto* q_allpairs = query->add_subcommand("allpairs", "flow matrix for all pairs (CSV)");
  auto* q_global = query->add_subcommand("global", "pair with the largest max-flow (CSV)");
  auto* q_kpmf = query->add_subcommand("kpmf", "pairs with max-flow at most k (CSV)");
  std::string q_k;
  q_kpmf->add_option("k", q_k, "threshold, or 'inf'")->required();
  auto* q_gomoryhu = query->add_subcommand("gomoryhu", "flow-equivalent tree (CSV)");
  auto* q_mlec = query->add_subcommand("mlec", "maximum local edge connectivity (CSV)");

  // verify
  auto* verify = app.add_subcommand("verify", "check gadget decisions against brute force");
  std::string verify_variant = "cap";
  std::string verify_cnf;
  PartitionFlags verify_part;
  std::optional<std::uint64_t> corrupt_edge;
  verify->add_option("--variant", verify_variant, "uncap, cap or mlec")->capture_default_str();
  verify->add_option("--cnf", verify_cnf, "DIMACS CNF input")->required();
  verify_part.attach(verify);
  verify->add_option("--corrupt-edge", corrupt_edge,
                     "reverse this edge (1-based) of every gadget before checking");

  // bench
  auto* bench = app.add_subcommand("bench", "time threshold decisions on random formulas (CSV)");
  BenchSpec spec;
  std::string bench_variant = "uncap";
  std::string bench_sizes = "6,8,10";
  std::optional<std::size_t> bench_m;
  std::optional<std::size_t> bench_p;
  std::string bench_c1 = "1";
  std::string bench_c2 = "1";
  std::string bench_out;
  bench->add_option("--variant", bench_variant, "uncap, cap or mlec")->capture_default_str();
  bench->add_option("--sizes", bench_sizes, "comma-separated variable counts")
      ->capture_default_str();
  bench->add_option("--m", bench_m, "clauses per instance (default n)");
  bench->add_option("--width", spec.width, "literals per clause")->capture_default_str();
  bench->add_option("--p", bench_p, "clause threshold (default m)");
  bench->add_option("--c1", bench_c1, "U1 weight")->capture_default_str();
  bench->add_option("--c2", bench_c2, "U3 weight")->capture_default_str();
  bench->add_option("--seed", spec.seed, "random seed")->capture_default_str();
  bench->add_option("--out", bench_out, "output file (default stdout)");

  std::vector<std::string> argv_store{"flowlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      if (gen_vars == 0 || gen_width == 0) throw UsageError("--vars and --width must be positive");
      emit(gen_out, out,
           write_dimacs_cnf_string(random_formula(gen_vars, gen_clauses, gen_width, gen_seed)));
      return kOk;
    }

    if (*build) {
      const Variant variant = parse_variant(build_variant);
      const CnfFormula formula = read_dimacs_cnf_string(read_file(build_cnf));
      const Partition partition =
          make_partition(formula, build_part.c1, build_part.c2, build_part.seed);
      const std::size_t p = variant == Variant::mlec ? 0 : build_p.value_or(formula.num_clauses());
      emit(build_out, out, write_gadget_string(build_gadget(variant, formula, partition, p)));
      return kOk;
    }

    if (*query) {
      const DimacsFlowFile file = read_dimacs_flow_string(read_file(graph_path));
      const FlowNetwork& net = file.net;
      const QueryOptions options{std::max(threads, 1U)};
      std::ostringstream text;
      if (*q_maxflow) {
        const NodeId s = parse_node(q_s, net);
        const NodeId t = parse_node(q_t, net);
        if (s == t) throw UsageError("source and sink must differ");
        text << max_flow(net, s, t).value << '\n';
      } else if (*q_st) {
        st_max_flow(net, parse_nodes(q_sources, file), parse_nodes(q_sinks, file), options)
            .write_csv(text);
      } else if (*q_allpairs) {
        all_pairs_max_flow(net, options).write_csv(text);
      } else if (*q_global || *q_mlec) {
        const PairValue best =
            *q_mlec ? max_local_edge_connectivity(net, options) : global_max_flow(net, options);
        write_pairs_csv(text, {best});
      } else if (*q_kpmf) {
        const Capacity k = q_k == "inf" ? std::numeric_limits<Capacity>::max()
                                        : static_cast<Capacity>(parse_count(q_k, "k"));
        write_pairs_csv(text, kpmf(net, k, options));
      } else if (*q_gomoryhu) {
        const GomoryHuTree tree = gomory_hu_tree(UndirectedGraph::from_symmetric(net));
        text << "node,parent,weight\n";
        for (NodeId v = 1; v < tree.parent.size(); ++v) {
          text << v + 1 << ',' << tree.parent[v] + 1 << ',' << tree.weight[v] << '\n';
        }
      }
      emit(query_out, out, text.str());
      return kOk;
    }

    if (*verify) {
      const Variant variant = parse_variant(verify_variant);
      const CnfFormula formula = read_dimacs_cnf_string(read_file(verify_cnf));
      const Partition partition =
          make_partition(formula, verify_part.c1, verify_part.c2, verify_part.seed);
      VerifyOptions options;
      if (corrupt_edge) {
        if (*corrupt_edge < 1) throw UsageError("--corrupt-edge is 1-based");
        const EdgeId e = *corrupt_edge - 1;
        options.tamper = [e](const GadgetGraph& g) { return g.with_reversed_edge(e); };
      }
      const VerificationReport report = verify_lemma(formula, partition, variant, options);
      report.write(out);
      for (const std::string& problem : report.problems) err << problem << '\n';
      return report.passed() ? kOk : kVerifyFailed;
    }

    if (*bench) {
      spec.variant = parse_variant(bench_variant);
      for (const std::string& part : split(bench_sizes, ',')) {
        spec.sizes.push_back(static_cast<Var>(parse_count(part, "size")));
      }
      spec.m = bench_m;
      spec.p = bench_p;
      spec.c1 = Rational::parse(bench_c1);
      spec.c2 = Rational::parse(bench_c2);
      std::ostringstream text;
      write_bench_csv(text, run_bench(spec));
      emit(bench_out, out, text.str());
      return kOk;
    }
  } catch (const SizeGuardError& e) {
    err << "flowlab: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const std::exception& e) {
    err << "flowlab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace flowlab::cli

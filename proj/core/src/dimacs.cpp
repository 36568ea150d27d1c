#include "flowlab/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace flowlab {

namespace {

std::string comment_body(const std::string& line) {
  if (line.size() <= 1) return {};
  return line.substr(line[1] == ' ' ? 2 : 1);
}

NodeId to_node(long long one_based, std::size_t node_count, std::size_t line_no) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > node_count) {
    throw ParseError("line " + std::to_string(line_no) + ": node id " + std::to_string(one_based) +
                     " out of range");
  }
  return static_cast<NodeId>(one_based - 1);
}

}  // namespace

DimacsFlowFile read_dimacs_flow(std::istream& in) {
  DimacsFlowFile file;
  bool seen_problem = false;
  std::size_t node_count = 0;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream tokens(line);
    std::string tag;
    tokens >> tag;
    if (tag == "c") {
      (seen_problem ? file.trailing_comments : file.comments).push_back(comment_body(line));
    } else if (tag == "p") {
      std::string kind;
      long long n = -1;
      long long m = -1;
      if (seen_problem || !(tokens >> kind >> n >> m) || kind != "max" || n < 0 || m < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": bad problem line");
      }
      seen_problem = true;
      node_count = static_cast<std::size_t>(n);
      declared_edges = static_cast<std::size_t>(m);
      edges.reserve(declared_edges);
    } else if (tag == "n") {
      long long id = 0;
      std::string which;
      if (!seen_problem || !(tokens >> id >> which) || (which != "s" && which != "t")) {
        throw ParseError("line " + std::to_string(line_no) + ": bad node designator");
      }
      (which == "s" ? file.source : file.sink) = to_node(id, node_count, line_no);
    } else if (tag == "a") {
      long long u = 0;
      long long v = 0;
      long long cap = 0;
      if (!seen_problem || !(tokens >> u >> v >> cap)) {
        throw ParseError("line " + std::to_string(line_no) + ": bad arc line");
      }
      edges.push_back({to_node(u, node_count, line_no), to_node(v, node_count, line_no),
                       static_cast<Capacity>(cap)});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
    }
  }
  if (!seen_problem) throw ParseError("missing problem line");
  if (edges.size() != declared_edges) {
    throw ParseError("problem line declares " + std::to_string(declared_edges) + " arcs, found " +
                     std::to_string(edges.size()));
  }
  file.net = FlowNetwork(node_count, std::move(edges));
  return file;
}

DimacsFlowFile read_dimacs_flow_string(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs_flow(in);
}

void write_dimacs_flow(std::ostream& out, const DimacsFlowFile& file) {
  for (const auto& c : file.comments) out << (c.empty() ? "c" : "c " + c) << '\n';
  out << "p max " << file.net.node_count() << ' ' << file.net.edge_count() << '\n';
  if (file.source) out << "n " << *file.source + 1 << " s\n";
  if (file.sink) out << "n " << *file.sink + 1 << " t\n";
  for (const Edge& e : file.net.edges()) {
    out << "a " << e.src + 1 << ' ' << e.dst + 1 << ' ' << e.capacity << '\n';
  }
  for (const auto& c : file.trailing_comments) out << (c.empty() ? "c" : "c " + c) << '\n';
}

std::string write_dimacs_flow_string(const DimacsFlowFile& file) {
  std::ostringstream out;
  write_dimacs_flow(out, file);
  return out.str();
}

}  // namespace flowlab

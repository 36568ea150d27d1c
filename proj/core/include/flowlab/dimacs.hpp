#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flowlab/flow_network.hpp"

namespace flowlab {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contents of a DIMACS max-flow file. Node ids in the file are 1-based;
/// in memory they are 0-based.
struct DimacsFlowFile {
  std::vector<std::string> comments;  // leading "c ..." lines, without the "c " prefix
  FlowNetwork net;
  std::optional<NodeId> source;  // "n <id> s"
  std::optional<NodeId> sink;    // "n <id> t"
  // Comment lines found after the problem line, verbatim without "c ".
  std::vector<std::string> trailing_comments;
};

/// Parses "p max <nodes> <edges>", "n <id> s|t", "a <u> <v> <cap>" and "c"
/// lines. Throws ParseError on malformed input and NetworkError on an
/// invalid network.
DimacsFlowFile read_dimacs_flow(std::istream& in);
DimacsFlowFile read_dimacs_flow_string(const std::string& text);

/// Canonical writer: leading comments, problem line, designators, arcs,
/// trailing comments. write(read(write(x))) reproduces write(x) byte for byte.
void write_dimacs_flow(std::ostream& out, const DimacsFlowFile& file);
std::string write_dimacs_flow_string(const DimacsFlowFile& file);

inline DimacsFlowFile as_dimacs(FlowNetwork net) {
  DimacsFlowFile file;
  file.net = std::move(net);
  return file;
}

}  // namespace flowlab

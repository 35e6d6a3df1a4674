#pragma once

#include <map>
#include <string>

#include "hrl/hypergraph.hpp"
#include "hrl/partition.hpp"

namespace hrl {

// Parse failures carry the 1-based line number of the offending input line.
class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// Text edge-list format.
//   header line:  n=<int> k=<2|3>
//   edge lines:   k space-separated 0-based vertex ids
//   '#' starts a comment (rest of line); blank lines ignored.
// Duplicate edges, out-of-range ids and repeated vertices are rejected.
Hypergraph3 parse_hypergraph3(const std::string& text);
Graph2 parse_graph2(const std::string& text);
std::string serialize(const Hypergraph3& h);
std::string serialize(const Graph2& g);

Hypergraph3 load_hypergraph3(const std::string& path);
Graph2 load_graph2(const std::string& path);

// Vertex partition format: one line per part,
//   part <id>: v1 v2 ...
// Part ids must be 0..t-1 in order; every vertex of 0..n-1 exactly once.
VertexPartition parse_partition(const std::string& text, int n);
std::string serialize(const VertexPartition& p);
VertexPartition load_partition(const std::string& path, int n);

// key = value per line, '#' comments.  Later keys override earlier ones.
std::map<std::string, std::string> parse_config(const std::string& text);
std::map<std::string, std::string> load_config(const std::string& path);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hrl

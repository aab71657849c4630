#pragma once

#include <string>

#include "idealgraph/graph.hpp"

namespace idealgraph {

enum class ExportFormat { dot, dimacs, json };

// Byte-stable text export. All formats list edges once with the lower vertex
// index first, ordered lexicographically; line endings are LF.
//   dot    - undirected graph, node ids are decimal divisor values
//   dimacs - "p edge V E" header, then "e i j" lines with 1-based indices
//   json   - {n, factorization, vertices, edges, is_complemented} with
//            0-based index pairs in "edges"
std::string export_graph(const IdealGraph& g, ExportFormat format);

}  // namespace idealgraph

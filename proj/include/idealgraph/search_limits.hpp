#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealgraph {

// Exact searches (odd holes, cliques, colorings) refuse graphs larger than
// this unless the caller raises the cap explicitly. A hard error beats a
// silent partial answer in the verification harness.
inline constexpr int kDefaultSearchCap = 64;

struct SearchInfeasibleError : std::runtime_error {
    SearchInfeasibleError(std::size_t vertex_count, int cap)
        : std::runtime_error("search-infeasible: graph has " +
                             std::to_string(vertex_count) +
                             " vertices, above the cap of " + std::to_string(cap)),
          vertex_count(vertex_count),
          cap(cap) {}

    std::size_t vertex_count;
    int cap;
};

}  // namespace idealgraph

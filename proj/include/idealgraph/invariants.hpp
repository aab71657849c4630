#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idealgraph/graph.hpp"
#include "idealgraph/search_limits.hpp"

namespace idealgraph {

struct CliqueResult {
    int omega = 0;
    std::vector<std::size_t> witness;  // vertex indices, pairwise adjacent
};

struct ColoringResult {
    int chi = 0;
    std::vector<int> colors;  // color per vertex index, exactly chi colors used
};

struct InvariantReport {
    std::uint64_t n = 1;
    int omega = 0;
    int chi = 0;
    std::vector<std::uint64_t> max_clique_witness;            // divisor values
    std::vector<std::pair<std::uint64_t, int>> coloring_witness;  // value -> color
};

// Exact maximum clique, branch and bound with greedy-coloring upper bounds.
// Vertices are explored in descending degree order, ties by ascending divisor
// value. The witness is re-validated before it is returned. Throws
// SearchInfeasibleError above `cap`.
CliqueResult clique_number(const IdealGraph& g, int cap = kDefaultSearchCap);

// Backtracking search for a proper coloring with at most k colors, in the
// same vertex order, with color symmetry broken: a vertex may open at most
// one color beyond those already in use. Not capped; used by
// chromatic_number and exposed for infeasibility checks in tests.
std::optional<std::vector<int>> try_color(const IdealGraph& g, int k);

// Exact chromatic number by iterative deepening on the color count starting
// at k = omega (a valid lower bound, so the first success is optimal).
// Recomputes omega unless a known clique size is passed in omega_hint.
ColoringResult chromatic_number(const IdealGraph& g, int cap = kDefaultSearchCap,
                                int omega_hint = -1);

// omega(G(Z_n)) == chi(G(Z_n))
bool check_weakly_perfect(const Factorization& f, int cap = kDefaultSearchCap);

InvariantReport invariant_report(const Factorization& f, int cap = kDefaultSearchCap);

}  // namespace idealgraph

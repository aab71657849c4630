#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idealgraph/bitset.hpp"
#include "idealgraph/factorization.hpp"

namespace idealgraph {

// Intersection graph of the nontrivial ideals of Z_n. Vertices are the
// nontrivial divisors of n in ascending value order; adjacency is stored as
// symmetric bitset rows with an all-false diagonal. Immutable after build.
struct IdealGraph {
    Factorization fact;
    std::vector<Divisor> vertices;
    std::vector<std::uint64_t> values;  // decimal value per vertex, ascending
    std::vector<Bitset> adj;
    bool is_complemented = false;

    std::size_t vertex_count() const { return vertices.size(); }

    // 0- or 1-vertex graphs carry no structure; reports flag them.
    bool degenerate() const { return vertices.size() <= 1; }

    bool has_edge(std::size_t i, std::size_t j) const { return adj[i].test(j); }

    std::size_t edge_count() const;

    std::optional<std::size_t> index_of_value(std::uint64_t value) const;
};

// Ideals (a) and (b) intersect nontrivially iff lcm(a,b) divides n with
// 1 < lcm(a,b) < n. For nontrivial divisors a, b the lcm always divides n
// and exceeds 1, so the condition reduces to lcm(a,b) != n, i.e. the
// componentwise max of the exponent vectors differs from (alpha_1,...,alpha_k)
// somewhere. Inputs must be nontrivial divisors governed by f.
bool adjacent(const Divisor& a, const Divisor& b, const Factorization& f);

IdealGraph build_graph(const Factorization& f);

// Same vertices, off-diagonal adjacency negated, is_complemented flipped.
IdealGraph complement(const IdealGraph& g);

// Vertex list restricted to `subset` (indices into g, distinct, in range),
// order of surviving vertices preserved, adjacency reindexed.
IdealGraph induced_subgraph(const IdealGraph& g, const std::vector<std::size_t>& subset);

}  // namespace idealgraph

#include "idealgraph/graph.hpp"

#include <algorithm>
#include <cassert>

namespace idealgraph {

std::size_t IdealGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.count();
    return twice / 2;
}

std::optional<std::size_t> IdealGraph::index_of_value(std::uint64_t value) const {
    auto it = std::lower_bound(values.begin(), values.end(), value);
    if (it == values.end() || *it != value) return std::nullopt;
    return static_cast<std::size_t>(it - values.begin());
}

bool adjacent(const Divisor& a, const Divisor& b, const Factorization& f) {
    assert(!is_unit(a) && !is_full(a, f));
    assert(!is_unit(b) && !is_full(b, f));
    assert(a.exponents.size() == f.primes.size());
    assert(b.exponents.size() == f.primes.size());
    for (std::size_t i = 0; i < f.primes.size(); ++i)
        if (std::max(a.exponents[i], b.exponents[i]) != f.primes[i].exponent) return true;
    return false;
}

IdealGraph build_graph(const Factorization& f) {
    IdealGraph g;
    g.fact = f;
    g.vertices = nontrivial_divisors(f);
    g.values.reserve(g.vertices.size());
    for (const auto& d : g.vertices) g.values.push_back(divisor_value(d, f));

    const std::size_t v = g.vertices.size();
    g.adj.assign(v, Bitset(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (adjacent(g.vertices[i], g.vertices[j], f)) {
                g.adj[i].set(j);
                g.adj[j].set(i);
            }
    return g;
}

IdealGraph complement(const IdealGraph& g) {
    IdealGraph c;
    c.fact = g.fact;
    c.vertices = g.vertices;
    c.values = g.values;
    c.is_complemented = !g.is_complemented;

    const std::size_t v = g.vertices.size();
    c.adj.assign(v, Bitset(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (!g.adj[i].test(j)) {
                c.adj[i].set(j);
                c.adj[j].set(i);
            }
    return c;
}

IdealGraph induced_subgraph(const IdealGraph& g, const std::vector<std::size_t>& subset) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < subset.size(); ++i) {
        assert(subset[i] < g.vertex_count());
        for (std::size_t j = i + 1; j < subset.size(); ++j) assert(subset[i] != subset[j]);
    }
#endif
    IdealGraph h;
    h.fact = g.fact;
    h.is_complemented = g.is_complemented;
    h.vertices.reserve(subset.size());
    h.values.reserve(subset.size());
    for (std::size_t idx : subset) {
        h.vertices.push_back(g.vertices[idx]);
        h.values.push_back(g.values[idx]);
    }

    const std::size_t v = subset.size();
    h.adj.assign(v, Bitset(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (g.adj[subset[i]].test(subset[j])) {
                h.adj[i].set(j);
                h.adj[j].set(i);
            }
    return h;
}

}  // namespace idealgraph

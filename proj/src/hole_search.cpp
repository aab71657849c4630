#include "idealgraph/hole_search.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace idealgraph {

namespace {

// Depth-first enumeration of induced cycles with exactly `target` vertices.
//
// A path v0..vt grows only with vertices u > v0 (the cycle is anchored at its
// minimum index) satisfying the induced-path conditions: u adjacent to the
// tail vt and non-adjacent to every earlier path vertex. The closing vertex
// must additionally be adjacent to v0, and the direction is canonical:
// path[1] < path.back(). Excluded sets are maintained incrementally as the
// union of the neighborhoods of the interior vertices v1..v_{t-1}; v0's
// neighborhood is kept separate because the closing vertex is required to
// lie inside it rather than outside.
class CycleSearch {
  public:
    explicit CycleSearch(const std::vector<Bitset>& adj)
        : adj_(adj), n_(adj.size()), used_(n_) {}

    // First cycle of exactly `target` vertices in canonical DFS order, if any.
    std::optional<std::vector<std::size_t>> run(int target) {
        target_ = target;
        hit_depth_limit_ = false;
        if (target_ < 3 || static_cast<std::size_t>(target_) > n_) return std::nullopt;

        excluded_.assign(static_cast<std::size_t>(target_) + 1, Bitset(n_));
        path_.clear();
        used_.clear();

        for (std::size_t v0 = 0; v0 + static_cast<std::size_t>(target_) <= n_; ++v0) {
            path_.push_back(v0);
            used_.set(v0);
            for (std::size_t v1 = adj_[v0].find_next(v0); v1 != Bitset::npos;
                 v1 = adj_[v0].find_next(v1)) {
                path_.push_back(v1);
                used_.set(v1);
                excluded_[2].clear();
                if (extend()) return path_;
                used_.reset(v1);
                path_.pop_back();
            }
            used_.reset(v0);
            path_.pop_back();
        }
        return std::nullopt;
    }

    // True when some branch of the last run reached target-1 placed vertices.
    // When false, the induced-path tree is exhausted below that depth and no
    // larger target can produce a cycle either.
    bool hit_depth_limit() const { return hit_depth_limit_; }

  private:
    bool extend() {
        const std::size_t t = path_.size();
        const std::size_t v0 = path_[0];
        const std::size_t tail = path_.back();

        if (t == static_cast<std::size_t>(target_) - 1) {
            hit_depth_limit_ = true;
            Bitset cand = adj_[tail] & adj_[v0];
            cand.and_not(excluded_[t]);
            cand.and_not(used_);
            // closing vertex above path_[1] fixes the traversal direction
            for (std::size_t u = cand.find_next(path_[1]); u != Bitset::npos;
                 u = cand.find_next(u)) {
                path_.push_back(u);
                return true;
            }
            return false;
        }

        Bitset cand = adj_[tail];
        cand.and_not(excluded_[t]);
        cand.and_not(adj_[v0]);
        cand.and_not(used_);
        std::size_t first = cand.find_next(v0);
        if (first == Bitset::npos) return false;

        excluded_[t + 1] = excluded_[t] | adj_[tail];
        for (std::size_t u = first; u != Bitset::npos; u = cand.find_next(u)) {
            path_.push_back(u);
            used_.set(u);
            if (extend()) return true;
            used_.reset(u);
            path_.pop_back();
        }
        return false;
    }

    const std::vector<Bitset>& adj_;
    std::size_t n_;
    int target_ = 0;
    bool hit_depth_limit_ = false;
    std::vector<std::size_t> path_;
    Bitset used_;
    std::vector<Bitset> excluded_;
};

HoleCertificate make_certificate(const IdealGraph& g, std::vector<std::size_t> cycle) {
    HoleCertificate c;
    c.n = g.fact.n;
    c.host = g.is_complemented ? HoleHost::complement : HoleHost::graph;
    c.length = static_cast<int>(cycle.size());
    c.divisor_values.reserve(cycle.size());
    for (std::size_t idx : cycle) c.divisor_values.push_back(g.values[idx]);
    c.cycle = std::move(cycle);
    return c;
}

std::optional<HoleCertificate> find_cycle_lengths(const IdealGraph& g, int first_length,
                                                  int max_length, int cap) {
    const std::size_t v = g.vertex_count();
    if (static_cast<int>(v) > cap) throw SearchInfeasibleError(v, cap);

    CycleSearch search(g.adj);
    for (int len = first_length; len <= max_length; len += 2) {
        if (static_cast<std::size_t>(len) > v) break;
        if (auto cycle = search.run(len)) {
            HoleCertificate c = make_certificate(g, std::move(*cycle));
            std::string why;
            if (!is_induced_cycle(g, c.cycle, &why))
                throw std::logic_error("cycle search produced an invalid witness: " + why);
            return c;
        }
        if (!search.hit_depth_limit()) break;  // no longer induced paths exist
    }
    return std::nullopt;
}

}  // namespace

std::optional<HoleCertificate> find_odd_hole(const IdealGraph& g, int max_length, int cap) {
    assert(max_length >= 5 && max_length % 2 == 1);
    return find_cycle_lengths(g, 5, max_length, cap);
}

std::optional<HoleCertificate> find_even_cycle(const IdealGraph& g, int max_length, int cap) {
    assert(max_length >= 6 && max_length % 2 == 0);
    return find_cycle_lengths(g, 6, max_length, cap);
}

HoleCertificate construct_five_hole(const Factorization& f) {
    const std::size_t k = f.prime_count();
    if (k < 5) throw std::invalid_argument("construction requires >= 5 distinct primes");

    // window j keeps p_{j}, p_{j+1}, p_{j+2} (mod 5) at full exponent, plus
    // every prime beyond the fifth
    std::vector<Divisor> cycle_divisors(5);
    for (std::size_t j = 0; j < 5; ++j) {
        Divisor d;
        d.exponents.assign(k, 0);
        for (std::size_t w = 0; w < 3; ++w) {
            std::size_t i = (j + w) % 5;
            d.exponents[i] = f.primes[i].exponent;
        }
        for (std::size_t i = 5; i < k; ++i) d.exponents[i] = f.primes[i].exponent;
        cycle_divisors[j] = std::move(d);
    }

    const std::vector<Divisor> verts = nontrivial_divisors(f);
    std::vector<std::uint64_t> values;
    values.reserve(verts.size());
    for (const auto& d : verts) values.push_back(divisor_value(d, f));

    HoleCertificate c;
    c.n = f.n;
    c.host = HoleHost::graph;
    c.length = 5;
    for (const auto& d : cycle_divisors) {
        std::uint64_t v = divisor_value(d, f);
        auto it = std::lower_bound(values.begin(), values.end(), v);
        if (it == values.end() || *it != v)
            throw std::logic_error("five-hole divisor missing from the vertex list");
        c.cycle.push_back(static_cast<std::size_t>(it - values.begin()));
        c.divisor_values.push_back(v);
    }

    // emission self-check: pairwise adjacency of the five divisors must form
    // exactly the cycle (done directly so huge divisor lattices need no
    // full adjacency matrix)
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == 4);
            if (adjacent(cycle_divisors[i], cycle_divisors[j], f) != consecutive)
                throw std::logic_error("five-hole construction failed its adjacency check");
        }
    return c;
}

bool is_induced_cycle(const IdealGraph& host, const std::vector<std::size_t>& cycle,
                      std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    const std::size_t len = cycle.size();
    if (len < 3) return fail("cycle has fewer than 3 vertices");
    for (std::size_t idx : cycle)
        if (idx >= host.vertex_count())
            return fail("vertex index " + std::to_string(idx) + " out of range");
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j)
            if (cycle[i] == cycle[j]) return fail("repeated vertex in cycle");

    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            bool edge = host.has_edge(cycle[i], cycle[j]);
            if (consecutive && !edge)
                return fail("consecutive pair not adjacent: (" +
                            std::to_string(host.values[cycle[i]]) + ", " +
                            std::to_string(host.values[cycle[j]]) + ")");
            if (!consecutive && edge)
                return fail("chord between non-consecutive pair: (" +
                            std::to_string(host.values[cycle[i]]) + ", " +
                            std::to_string(host.values[cycle[j]]) + ")");
        }
    return true;
}

bool validate_certificate(const IdealGraph& g, const HoleCertificate& c, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (c.n != g.fact.n) return fail("certificate n does not match the graph");
    if (c.length != static_cast<int>(c.cycle.size()))
        return fail("length field does not match the cycle");
    if (c.length < 5) return fail("cycle length below 5");
    if (c.length % 2 == 0) return fail("cycle length is even");
    if (c.divisor_values.size() != c.cycle.size())
        return fail("divisor value list does not match the cycle");

    bool want_complement = (c.host == HoleHost::complement);
    const IdealGraph* host = &g;
    IdealGraph materialized;
    if (want_complement != g.is_complemented) {
        materialized = complement(g);
        host = &materialized;
    }

    for (std::size_t i = 0; i < c.cycle.size(); ++i) {
        if (c.cycle[i] >= host->vertex_count())
            return fail("vertex index " + std::to_string(c.cycle[i]) + " out of range");
        if (host->values[c.cycle[i]] != c.divisor_values[i])
            return fail("divisor value " + std::to_string(c.divisor_values[i]) +
                        " does not match vertex " + std::to_string(c.cycle[i]));
    }
    return is_induced_cycle(*host, c.cycle, reason);
}

}  // namespace idealgraph

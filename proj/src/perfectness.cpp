#include "idealgraph/perfectness.hpp"

#include <cassert>
#include <stdexcept>

namespace idealgraph {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::perfect: return "perfect";
        case Verdict::not_perfect: return "not_perfect";
        case Verdict::degenerate_perfect: return "degenerate_perfect";
    }
    return "?";
}

PerfectnessReport decide_perfectness(const IdealGraph& g, const PerfectnessOptions& opts) {
    assert(!g.is_complemented);

    PerfectnessReport r;
    r.n = g.fact.n;
    r.all_lengths = opts.all_lengths;

    const std::size_t v = g.vertex_count();
    if (v <= 1) {
        r.verdict = Verdict::degenerate_perfect;
        r.search_exhausted = true;
        r.even_search_exhausted = true;
        return r;
    }
    if (static_cast<int>(v) > opts.cap) throw SearchInfeasibleError(v, opts.cap);

    const int max_odd = static_cast<int>(v % 2 == 0 ? v - 1 : v);

    std::optional<HoleCertificate> hole;
    std::optional<IdealGraph> co;
    if (v >= 5) {
        hole = find_odd_hole(g, max_odd, opts.cap);
        if (!hole) {
            co = complement(g);
            hole = find_odd_hole(*co, max_odd, opts.cap);
        }
    }

    if (hole) {
        r.verdict = Verdict::not_perfect;
        r.search_exhausted = false;
        r.max_length_searched = hole->length;
        r.certificate = std::move(hole);
    } else {
        r.verdict = Verdict::perfect;
        r.search_exhausted = true;
        r.max_length_searched = max_odd;
    }

    if (opts.all_lengths) {
        const int max_even = static_cast<int>(v % 2 == 0 ? v : v - 1);
        std::optional<HoleCertificate> even;
        if (v >= 6) {
            even = find_even_cycle(g, max_even, opts.cap);
            if (!even) {
                if (!co) co = complement(g);
                even = find_even_cycle(*co, max_even, opts.cap);
            }
        }
        r.even_search_exhausted = !even.has_value();
        r.even_cycle = std::move(even);
    }
    return r;
}

PerfectnessReport is_perfect(const Factorization& f, const PerfectnessOptions& opts) {
    return decide_perfectness(build_graph(f), opts);
}

}  // namespace idealgraph

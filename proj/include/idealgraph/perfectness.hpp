#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "idealgraph/hole_search.hpp"

namespace idealgraph {

enum class Verdict { perfect, not_perfect, degenerate_perfect };

std::string to_string(Verdict v);

struct PerfectnessOptions {
    int cap = kDefaultSearchCap;
    // also rule out even induced cycles (length > 4), a stronger property
    // than the odd-only search the perfectness verdict needs
    bool all_lengths = false;
};

struct PerfectnessReport {
    std::uint64_t n = 1;
    Verdict verdict = Verdict::degenerate_perfect;
    std::optional<HoleCertificate> certificate;
    bool search_exhausted = false;
    int max_length_searched = 0;
    // populated only when all_lengths was requested
    bool all_lengths = false;
    std::optional<HoleCertificate> even_cycle;
    bool even_search_exhausted = false;
};

// Perfectness decision on a prebuilt graph: search G for an induced odd
// cycle of length in [5, vertex count rounded down to odd], then its
// complement; the first hole found decides not_perfect. 0- and 1-vertex
// graphs are degenerate_perfect. `g` must be a base (non-complemented) graph.
PerfectnessReport decide_perfectness(const IdealGraph& g,
                                     const PerfectnessOptions& opts = {});

PerfectnessReport is_perfect(const Factorization& f, const PerfectnessOptions& opts = {});

}  // namespace idealgraph

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealgraph/graph.hpp"
#include "idealgraph/search_limits.hpp"

namespace idealgraph {

enum class HoleHost { graph, complement };

// Ordered vertex sequence claimed to be an induced cycle in the named host
// (relative to the base graph of Z_n). A hole witness in the SPGT sense has
// odd length >= 5; the even-length search reuses the same record for the
// stronger no-cycle-longer-than-4 check.
struct HoleCertificate {
    std::uint64_t n = 1;
    HoleHost host = HoleHost::graph;
    int length = 0;
    std::vector<std::size_t> cycle;             // vertex indices in the host
    std::vector<std::uint64_t> divisor_values;  // parallel decimal values
};

// Shortest induced odd cycle with length in [5, max_length], or absence after
// exhausting every odd length in that range. Lengths are tried ascending; a
// cycle is enumerated once, anchored at its minimum vertex index with the
// direction fixed by second vertex < last vertex, so the returned witness is
// deterministic. Throws SearchInfeasibleError when the graph exceeds `cap`.
std::optional<HoleCertificate> find_odd_hole(const IdealGraph& g, int max_length,
                                             int cap = kDefaultSearchCap);

// Same search over even lengths in [6, max_length].
std::optional<HoleCertificate> find_even_cycle(const IdealGraph& g, int max_length,
                                               int cap = kDefaultSearchCap);

// The explicit induced 5-cycle that exists whenever n has k >= 5 distinct
// prime factors: with s = prod_{i>=6} p_i^alpha_i, the divisors
//   p1^a1 p2^a2 p3^a3 s,  p2^a2 p3^a3 p4^a4 s,  p3^a3 p4^a4 p5^a5 s,
//   p4^a4 p5^a5 p1^a1 s,  p5^a5 p1^a1 p2^a2 s
// in this order. Consecutive entries miss some p_i^alpha_i jointly, so their
// lcm is a proper divisor; non-consecutive entries cover all of n. The
// certificate is validated before it is returned. Throws
// std::invalid_argument when k <= 4.
HoleCertificate construct_five_hole(const Factorization& f);

// True iff `cycle` lists >= 3 distinct in-range vertices that induce exactly
// a cycle in `host`: cyclically consecutive pairs adjacent, all other pairs
// non-adjacent. On failure an explanation is written to *reason.
bool is_induced_cycle(const IdealGraph& host, const std::vector<std::size_t>& cycle,
                      std::string* reason = nullptr);

// Re-checks every HoleCertificate invariant against the host graph resolved
// from c.host (g may be the base graph or its complement; the other one is
// materialized when needed). Malformed certificates return false and report
// the first failed check through *reason.
bool validate_certificate(const IdealGraph& g, const HoleCertificate& c,
                          std::string* reason = nullptr);

}  // namespace idealgraph

#include "idealgraph/sweep.hpp"

#include <chrono>
#include <cstdio>

#include "idealgraph/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace idealgraph {

std::string to_string(RowVerdict v) {
    switch (v) {
        case RowVerdict::perfect: return "perfect";
        case RowVerdict::not_perfect: return "not_perfect";
        case RowVerdict::degenerate_perfect: return "degenerate_perfect";
        case RowVerdict::infeasible: return "infeasible";
    }
    return "?";
}

bool row_matches_expected_verdict(const VerifyRow& row) {
    if (row.verdict == RowVerdict::infeasible) return true;
    bool perfect_side =
        row.verdict == RowVerdict::perfect || row.verdict == RowVerdict::degenerate_perfect;
    return perfect_side == (row.k <= 4);
}

bool row_weakly_perfect(const VerifyRow& row) {
    if (row.verdict == RowVerdict::infeasible) return true;
    return row.omega && row.chi && *row.omega == *row.chi;
}

VerifyRow compute_row(std::uint64_t n, const PerfectnessOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();

    VerifyRow row;
    row.n = n;

    Factorization f = factorize(n);
    row.k = static_cast<int>(f.prime_count());

    IdealGraph g = build_graph(f);
    row.vertex_count = static_cast<int>(g.vertex_count());

    if (row.vertex_count > opts.cap) {
        row.verdict = RowVerdict::infeasible;
    } else {
        PerfectnessReport rep = decide_perfectness(g, opts);
        switch (rep.verdict) {
            case Verdict::perfect: row.verdict = RowVerdict::perfect; break;
            case Verdict::not_perfect: row.verdict = RowVerdict::not_perfect; break;
            case Verdict::degenerate_perfect:
                row.verdict = RowVerdict::degenerate_perfect;
                break;
        }
        if (rep.certificate) row.hole_length = rep.certificate->length;

        CliqueResult cl = clique_number(g, opts.cap);
        ColoringResult co = chromatic_number(g, opts.cap, cl.omega);
        row.omega = cl.omega;
        row.chi = co.chi;
    }

    const auto t1 = std::chrono::steady_clock::now();
    row.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

std::vector<VerifyRow> sweep_serial(const std::vector<std::uint64_t>& ns,
                                    const PerfectnessOptions& opts) {
    std::vector<VerifyRow> rows(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) rows[i] = compute_row(ns[i], opts);
    return rows;
}

std::vector<VerifyRow> sweep_parallel(const std::vector<std::uint64_t>& ns,
                                      const PerfectnessOptions& opts, int jobs) {
    std::vector<VerifyRow> rows(ns.size());
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(ns.size()); ++i)
        rows[static_cast<std::size_t>(i)] = compute_row(ns[static_cast<std::size_t>(i)], opts);
#else
    (void)jobs;
    for (std::size_t i = 0; i < ns.size(); ++i) rows[i] = compute_row(ns[i], opts);
#endif
    return rows;
}

bool rows_equivalent(const std::vector<VerifyRow>& a, const std::vector<VerifyRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const VerifyRow& x = a[i];
        const VerifyRow& y = b[i];
        if (x.n != y.n || x.k != y.k || x.vertex_count != y.vertex_count ||
            x.verdict != y.verdict || x.hole_length != y.hole_length || x.omega != y.omega ||
            x.chi != y.chi)
            return false;
    }
    return true;
}

std::string csv_header() { return "n,k,vertex_count,verdict,hole_length,omega,chi,elapsed_ms"; }

std::string csv_row(const VerifyRow& row) {
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", row.elapsed_ms);
    return std::to_string(row.n) + "," + std::to_string(row.k) + "," +
           std::to_string(row.vertex_count) + "," + to_string(row.verdict) + "," +
           opt(row.hole_length) + "," + opt(row.omega) + "," + opt(row.chi) + "," + ms;
}

}  // namespace idealgraph

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealgraph/perfectness.hpp"

namespace idealgraph {

enum class RowVerdict { perfect, not_perfect, degenerate_perfect, infeasible };

std::string to_string(RowVerdict v);

// One line of the range-verification harness: perfectness verdict plus exact
// clique and chromatic numbers for a single n.
struct VerifyRow {
    std::uint64_t n = 1;
    int k = 0;             // distinct prime factors
    int vertex_count = 0;  // tau(n) - 2
    RowVerdict verdict = RowVerdict::degenerate_perfect;
    std::optional<int> hole_length;
    std::optional<int> omega;
    std::optional<int> chi;
    double elapsed_ms = 0.0;
};

// verdict is perfect/degenerate exactly when k <= 4 (infeasible rows pass)
bool row_matches_expected_verdict(const VerifyRow& row);
// omega == chi (infeasible rows pass)
bool row_weakly_perfect(const VerifyRow& row);

VerifyRow compute_row(std::uint64_t n, const PerfectnessOptions& opts = {});

// Serial reference for the sweep kernel; the parallel version must produce
// identical rows (elapsed time aside) for any job count.
std::vector<VerifyRow> sweep_serial(const std::vector<std::uint64_t>& ns,
                                    const PerfectnessOptions& opts = {});

// OpenMP over independent n; jobs <= 0 means the OpenMP default. Row order
// matches ns regardless of scheduling. Falls back to the serial loop when
// compiled without OpenMP.
std::vector<VerifyRow> sweep_parallel(const std::vector<std::uint64_t>& ns,
                                      const PerfectnessOptions& opts = {}, int jobs = 0);

// equality ignoring the elapsed-time field
bool rows_equivalent(const std::vector<VerifyRow>& a, const std::vector<VerifyRow>& b);

// CSV in fixed column order; hole_length/omega/chi cells are empty when absent
std::string csv_header();
std::string csv_row(const VerifyRow& row);

}  // namespace idealgraph

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "idealgraph/export.hpp"
#include "idealgraph/factorization.hpp"
#include "idealgraph/json_io.hpp"
#include "idealgraph/sweep.hpp"

namespace {

using namespace idealgraph;

int cmd_factor(std::uint64_t n) {
    std::cout << format_factorization(factorize(n)) << "\n";
    return 0;
}

int cmd_graph(std::uint64_t n, const std::string& format) {
    ExportFormat fmt = format == "dot"      ? ExportFormat::dot
                       : format == "dimacs" ? ExportFormat::dimacs
                                            : ExportFormat::json;
    std::cout << export_graph(build_graph(factorize(n)), fmt);
    return 0;
}

int cmd_perfect(std::uint64_t n, int cap, bool all_lengths) {
    PerfectnessOptions opts;
    opts.cap = cap;
    opts.all_lengths = all_lengths;
    PerfectnessReport rep = is_perfect(factorize(n), opts);
    std::cout << report_json(rep).dump(2) << "\n";
    return rep.verdict == Verdict::not_perfect ? 1 : 0;
}

int cmd_hole(std::uint64_t n, int cap, bool construct) {
    Factorization f = factorize(n);
    std::optional<HoleCertificate> cert;
    if (construct) {
        cert = construct_five_hole(f);
    } else {
        IdealGraph g = build_graph(f);
        if (g.vertex_count() >= 5) {
            const int max_odd =
                static_cast<int>(g.vertex_count() % 2 == 0 ? g.vertex_count() - 1
                                                           : g.vertex_count());
            cert = find_odd_hole(g, max_odd, cap);
            if (!cert) cert = find_odd_hole(complement(g), max_odd, cap);
        }
    }
    if (!cert) {
        std::cout << "null\n";
        return 1;
    }
    std::cout << certificate_json(*cert).dump(2) << "\n";
    return 0;
}

int cmd_invariants(std::uint64_t n, int cap) {
    std::cout << report_json(invariant_report(factorize(n), cap)).dump(2) << "\n";
    return 0;
}

std::vector<std::uint64_t> read_n_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open n-list file: " + path);
    std::vector<std::uint64_t> ns;
    std::string tok;
    while (in >> tok) {
        while (!tok.empty() && tok.back() == ',') tok.pop_back();
        if (tok.empty()) continue;
        ns.push_back(std::stoull(tok));
    }
    return ns;
}

int cmd_verify(std::uint64_t max_n, const std::string& n_list, int jobs, int cap) {
    std::vector<std::uint64_t> ns;
    if (!n_list.empty()) {
        ns = read_n_list(n_list);
    } else {
        ns.reserve(max_n);
        for (std::uint64_t n = 1; n <= max_n; ++n) ns.push_back(n);
    }

    PerfectnessOptions opts;
    opts.cap = cap;

    std::size_t infeasible = 0, violations = 0;
    std::size_t counts[4] = {0, 0, 0, 0};

    std::cout << csv_header() << "\n";
    const std::size_t block = std::size_t{64} * (jobs > 0 ? static_cast<std::size_t>(jobs) : 8);
    for (std::size_t off = 0; off < ns.size(); off += block) {
        std::vector<std::uint64_t> chunk(ns.begin() + off,
                                         ns.begin() + std::min(off + block, ns.size()));
        std::vector<VerifyRow> rows = sweep_parallel(chunk, opts, jobs);
        for (const VerifyRow& row : rows) {
            std::cout << csv_row(row) << "\n";
            ++counts[static_cast<int>(row.verdict)];
            if (row.verdict == RowVerdict::infeasible) ++infeasible;
            if (!row_matches_expected_verdict(row) || !row_weakly_perfect(row)) {
                ++violations;
                std::cerr << "violation at n=" << row.n << "\n";
            }
        }
    }

    std::cerr << "verified " << ns.size() << " rows: " << counts[0] << " perfect, " << counts[1]
              << " not_perfect, " << counts[2] << " degenerate_perfect, " << infeasible
              << " infeasible, " << violations << " violations\n";
    return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection graph of ideals of Z_n: construction, perfectness, witnesses"};
    app.require_subcommand(1);

    std::uint64_t n = 1;
    std::string format = "dot";
    int cap = kDefaultSearchCap;
    bool all_lengths = false;
    bool construct = false;
    std::uint64_t max_n = 0;
    std::string n_list;
    int jobs = 0;

    auto* factor = app.add_subcommand("factor", "print the prime factorization of n");
    factor->add_option("n", n, "positive integer, at most 2^63 - 1")->required();

    auto* graph = app.add_subcommand("graph", "export the intersection graph of ideals of Z_n");
    graph->add_option("n", n)->required();
    graph->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"dot", "dimacs", "json"}));

    auto* perfect = app.add_subcommand(
        "perfect", "decide perfectness by exhaustive induced odd-cycle search");
    perfect->add_option("n", n)->required();
    perfect->add_option("--cap", cap, "vertex-count cap for exact searches");
    perfect->add_flag("--all-lengths", all_lengths,
                      "also search even cycle lengths (stronger structural check)");

    auto* hole = app.add_subcommand("hole", "emit an odd-hole certificate, if one exists");
    hole->add_option("n", n)->required();
    hole->add_option("--cap", cap);
    hole->add_flag("--construct", construct,
                   "use the explicit 5-cycle construction (requires >= 5 distinct primes)");

    auto* invariants =
        app.add_subcommand("invariants", "exact clique and chromatic numbers with witnesses");
    invariants->add_option("n", n)->required();
    invariants->add_option("--cap", cap);

    auto* verify = app.add_subcommand(
        "verify", "sweep a range of n, checking the perfectness criterion and omega = chi");
    auto* vmax = verify->add_option("--max", max_n, "verify all n in [1, max]");
    auto* vlist = verify->add_option("--n-list", n_list, "file of n values to verify");
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify->add_option("--cap", cap);
    vmax->excludes(vlist);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (factor->parsed()) return cmd_factor(n);
        if (graph->parsed()) return cmd_graph(n, format);
        if (perfect->parsed()) return cmd_perfect(n, cap, all_lengths);
        if (hole->parsed()) return cmd_hole(n, cap, construct);
        if (invariants->parsed()) return cmd_invariants(n, cap);
        if (verify->parsed()) {
            if (max_n == 0 && n_list.empty()) {
                std::cerr << "verify: pass --max or --n-list\n";
                return 2;
            }
            return cmd_verify(max_n, n_list, jobs, cap);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

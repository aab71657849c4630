#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "idealgraph/hole_search.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(IDEALGRAPH_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

// drop the elapsed_ms column so reruns compare equal
std::string strip_elapsed(const std::string& csv) {
    std::string out;
    for (const std::string& line : lines_of(csv)) {
        auto cut = line.rfind(',');
        out += line.substr(0, cut) + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("factor") {
    CHECK(run("factor 2310").out == "2 * 3 * 5 * 7 * 11\n");
    CHECK(run("factor 2310").exit_code == 0);
    CHECK(run("factor 1").out == "1\n");
    CHECK(run("factor 12").out == "2^2 * 3\n");
    CHECK(run("factor 0").exit_code == 2);
    CHECK(run("factor").exit_code == 2);

    // 2^63 - 1 is in range, 2^63 is not
    CHECK(run("factor 9223372036854775807").out == "7^2 * 73 * 127 * 337 * 92737 * 649657\n");
    CHECK(run("factor 9223372036854775808").exit_code == 2);
}

TEST_CASE("graph export") {
    RunResult dimacs = run("graph 12 --format dimacs");
    CHECK(dimacs.exit_code == 0);
    CHECK(dimacs.out == "p edge 4 4\ne 1 2\ne 1 3\ne 1 4\ne 2 4\n");

    RunResult json7 = run("graph 7 --format json");
    CHECK(json7.exit_code == 0);
    auto j = nlohmann::json::parse(json7.out);
    CHECK(j["vertices"].empty());
    CHECK(j["edges"].empty());

    RunResult dot30 = run("graph 30 --format dot");
    CHECK(dot30.exit_code == 0);
    std::size_t edges = 0;
    for (const auto& line : lines_of(dot30.out))
        if (line.find("--") != std::string::npos) ++edges;
    CHECK(edges == 9);

    CHECK(run("graph 12 --format gml").exit_code == 2);
}

TEST_CASE("perfect") {
    RunResult r210 = run("perfect 210");
    CHECK(r210.exit_code == 0);
    auto j210 = nlohmann::json::parse(r210.out);
    CHECK(j210["verdict"] == "perfect");
    CHECK(j210["search_exhausted"] == true);
    CHECK(j210["certificate"].is_null());

    RunResult r2310 = run("perfect 2310");
    CHECK(r2310.exit_code == 1);
    auto j2310 = nlohmann::json::parse(r2310.out);
    CHECK(j2310["verdict"] == "not_perfect");
    REQUIRE(j2310["certificate"].is_object());
    CHECK(j2310["certificate"]["length"] == 5);

    // re-validate the emitted certificate independently
    using namespace idealgraph;
    IdealGraph g = build_graph(factorize(2310));
    HoleCertificate cert;
    cert.n = j2310["certificate"]["n"];
    cert.host = j2310["certificate"]["host"] == "graph" ? HoleHost::graph : HoleHost::complement;
    cert.length = j2310["certificate"]["length"];
    for (std::uint64_t value : j2310["certificate"]["cycle"]) {
        cert.divisor_values.push_back(value);
        auto idx = g.index_of_value(value);
        REQUIRE(idx.has_value());
        cert.cycle.push_back(*idx);
    }
    CHECK(validate_certificate(g, cert));

    CHECK(run("perfect 7").exit_code == 0);
    CHECK(nlohmann::json::parse(run("perfect 7").out)["verdict"] == "degenerate_perfect");

    CHECK(run("perfect 20160").exit_code == 2);  // 82 vertices, above the cap
    CHECK(run("perfect 20160 --cap 128").exit_code == 0);

    RunResult all = run("perfect 210 --all-lengths");
    auto jall = nlohmann::json::parse(all.out);
    CHECK(jall["all_lengths"] == true);
    CHECK(jall["even_cycle"].is_null());
    CHECK(jall["even_search_exhausted"] == true);
}

TEST_CASE("hole") {
    RunResult constructed = run("hole 2310 --construct");
    CHECK(constructed.exit_code == 0);
    auto j = nlohmann::json::parse(constructed.out);
    CHECK(j["cycle"] == nlohmann::json::parse("[30,105,385,154,66]"));
    CHECK(j["host"] == "graph");
    CHECK(j["length"] == 5);

    RunResult searched = run("hole 2310");
    CHECK(searched.exit_code == 0);
    CHECK(nlohmann::json::parse(searched.out)["length"] == 5);

    RunResult none = run("hole 210");
    CHECK(none.exit_code == 1);
    CHECK(none.out == "null\n");

    CHECK(run("hole 210 --construct").exit_code == 2);
}

TEST_CASE("invariants") {
    RunResult r = run("invariants 12");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["omega"] == 3);
    CHECK(j["chi"] == 3);
    CHECK(j["max_clique_witness"] == nlohmann::json::parse("[2,3,6]"));
    CHECK(j["coloring_witness"].size() == 4);
}

TEST_CASE("verify over a range") {
    RunResult r = run("verify --max 100");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 101);
    CHECK(lines[0] == "n,k,vertex_count,verdict,hole_length,omega,chi,elapsed_ms");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 8);
        CHECK(std::stoull(cells[0]) == i);
        bool perfect_side = cells[3] == "perfect" || cells[3] == "degenerate_perfect";
        CHECK(perfect_side);  // smallest 5-prime n is 2310
        CHECK(cells[5] == cells[6]);
    }
}

TEST_CASE("verify an explicit list") {
    std::string path = "cli_test_nlist.txt";
    std::ofstream(path) << "2310\n30030\n";
    RunResult r = run("verify --n-list " + path);
    std::remove(path.c_str());

    CHECK(r.exit_code == 0);  // not perfect, but exactly as the criterion predicts
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split_csv(lines[i]);
        CHECK(cells[3] == "not_perfect");
        CHECK(cells[4] == "5");
        CHECK(cells[5] == cells[6]);
    }
}

TEST_CASE("verify output does not depend on the job count") {
    RunResult j1 = run("verify --max 60 --jobs 1");
    RunResult j2 = run("verify --max 60 --jobs 2");
    RunResult j3 = run("verify --max 60 --jobs 3");
    CHECK(j1.exit_code == 0);
    CHECK(strip_elapsed(j1.out) == strip_elapsed(j2.out));
    CHECK(strip_elapsed(j1.out) == strip_elapsed(j3.out));
}

TEST_CASE("verify --max 1 emits a single degenerate row") {
    RunResult r = run("verify --max 1");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    auto cells = split_csv(lines[1]);
    CHECK(cells[0] == "1");
    CHECK(cells[3] == "degenerate_perfect");
}

TEST_CASE("verify rejects calls without a range") {
    CHECK(run("verify").exit_code == 2);
}

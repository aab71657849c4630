#include <doctest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "idealgraph/export.hpp"
#include "idealgraph/graph.hpp"
#include "oracles.hpp"

using namespace idealgraph;

namespace {

std::set<std::pair<std::uint64_t, std::uint64_t>> edge_values(const IdealGraph& g) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.has_edge(i, j)) edges.emplace(g.values[i], g.values[j]);
    return edges;
}

void check_symmetric_irreflexive(const IdealGraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        REQUIRE(!g.adj[i].test(i));
        for (std::size_t j = 0; j < g.vertex_count(); ++j)
            REQUIRE(g.adj[i].test(j) == g.adj[j].test(i));
    }
}

}  // namespace

TEST_CASE("the n=12 graph") {
    IdealGraph g = build_graph(factorize(12));
    CHECK(g.values == std::vector<std::uint64_t>{2, 3, 4, 6});
    CHECK(!g.is_complemented);
    CHECK(!g.degenerate());

    std::set<std::pair<std::uint64_t, std::uint64_t>> expected{{2, 3}, {2, 4}, {2, 6}, {3, 6}};
    CHECK(edge_values(g) == expected);
    CHECK(edge_values(g) == oracles::edge_values_brute(12));
    check_symmetric_irreflexive(g);
}

TEST_CASE("small and degenerate graphs") {
    IdealGraph g6 = build_graph(factorize(6));
    CHECK(g6.values == std::vector<std::uint64_t>{2, 3});
    CHECK(g6.edge_count() == 0);

    CHECK(build_graph(factorize(7)).vertex_count() == 0);
    CHECK(build_graph(factorize(7)).degenerate());
    CHECK(build_graph(factorize(1)).vertex_count() == 0);
    CHECK(build_graph(factorize(4)).vertex_count() == 1);
    CHECK(build_graph(factorize(4)).degenerate());

    // prime power: complete graph on alpha - 1 vertices
    IdealGraph g32 = build_graph(factorize(32));
    CHECK(g32.values == std::vector<std::uint64_t>{2, 4, 8, 16});
    CHECK(g32.edge_count() == 6);
}

TEST_CASE("adjacency agrees with the three-clause integer oracle for all n <= 2000") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        Factorization f = factorize(n);
        IdealGraph g = build_graph(f);
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
            for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
                bool fast = adjacent(g.vertices[i], g.vertices[j], f);
                bool slow = oracles::adjacent_three_clause(g.values[i], g.values[j], n);
                if (fast != slow) {
                    CAPTURE(n);
                    CAPTURE(g.values[i]);
                    CAPTURE(g.values[j]);
                    REQUIRE(fast == slow);
                }
            }
    }
}

TEST_CASE("vertex count is tau(n) - 2 for all n <= 10000") {
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        Factorization f = factorize(n);
        std::size_t v = build_graph(f).vertex_count();
        if (v != divisor_count(f) - 2) {
            CAPTURE(n);
            REQUIRE(v == divisor_count(f) - 2);
        }
    }
}

TEST_CASE("prime-power graphs are complete for all prime powers up to 2^16") {
    // sieve
    std::vector<bool> composite(65537, false);
    for (std::uint64_t p = 2; p * p <= 65536; ++p)
        if (!composite[p])
            for (std::uint64_t q = p * p; q <= 65536; q += p) composite[q] = true;

    for (std::uint64_t p = 2; p <= 65536; ++p) {
        if (composite[p]) continue;
        std::uint64_t n = p;
        for (std::uint32_t alpha = 1;; ++alpha) {
            IdealGraph g = build_graph(factorize(n));
            std::size_t v = alpha - 1;
            std::size_t complete_edges = v < 2 ? 0 : v * (v - 1) / 2;
            if (g.vertex_count() != v || g.edge_count() != complete_edges) {
                CAPTURE(n);
                REQUIRE(g.vertex_count() == v);
                REQUIRE(g.edge_count() == complete_edges);
            }
            if (n > 65536 / p) break;
            n *= p;
        }
    }
}

TEST_CASE("complement") {
    IdealGraph g12 = build_graph(factorize(12));
    IdealGraph c12 = complement(g12);
    CHECK(c12.is_complemented);
    CHECK(complement(c12).is_complemented == false);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(complement(c12).adj[i] == g12.adj[i]);

    IdealGraph c6 = complement(build_graph(factorize(6)));
    CHECK(edge_values(c6) == std::set<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}});

    IdealGraph c30 = complement(build_graph(factorize(30)));
    std::set<std::pair<std::uint64_t, std::uint64_t>> expected{{6, 10}, {6, 15}, {10, 15},
                                                               {2, 15}, {3, 10}, {5, 6}};
    CHECK(edge_values(c30) == expected);

    for (std::uint64_t n : {12ull, 30ull, 210ull, 360ull}) {
        IdealGraph g = build_graph(factorize(n));
        std::size_t v = g.vertex_count();
        CHECK(g.edge_count() + complement(g).edge_count() == v * (v - 1) / 2);
        check_symmetric_irreflexive(complement(g));
    }
}

TEST_CASE("induced subgraphs") {
    IdealGraph g12 = build_graph(factorize(12));

    // {2, 3, 6} is a triangle
    IdealGraph tri = induced_subgraph(g12, {0, 1, 3});
    CHECK(tri.values == std::vector<std::uint64_t>{2, 3, 6});
    CHECK(tri.edge_count() == 3);

    // {3, 4} has no edge
    IdealGraph pair = induced_subgraph(g12, {1, 2});
    CHECK(pair.values == std::vector<std::uint64_t>{3, 4});
    CHECK(pair.edge_count() == 0);

    // whole vertex set reproduces the graph
    IdealGraph same = induced_subgraph(g12, {0, 1, 2, 3});
    CHECK(same.values == g12.values);
    for (std::size_t i = 0; i < 4; ++i) CHECK(same.adj[i] == g12.adj[i]);

    // nested subsets compose
    IdealGraph g210 = build_graph(factorize(210));
    std::vector<std::size_t> outer{0, 2, 3, 5, 7, 9};
    std::vector<std::size_t> inner{1, 3, 4};
    IdealGraph nested = induced_subgraph(induced_subgraph(g210, outer), inner);
    std::vector<std::size_t> composed;
    for (std::size_t i : inner) composed.push_back(outer[i]);
    IdealGraph direct = induced_subgraph(g210, composed);
    CHECK(nested.values == direct.values);
    for (std::size_t i = 0; i < nested.vertex_count(); ++i)
        CHECK(nested.adj[i] == direct.adj[i]);
}

TEST_CASE("DIMACS export") {
    CHECK(export_graph(build_graph(factorize(6)), ExportFormat::dimacs) == "p edge 2 0\n");
    CHECK(export_graph(build_graph(factorize(7)), ExportFormat::dimacs) == "p edge 0 0\n");
    CHECK(export_graph(build_graph(factorize(12)), ExportFormat::dimacs) ==
          "p edge 4 4\n"
          "e 1 2\n"
          "e 1 3\n"
          "e 1 4\n"
          "e 2 4\n");
}

TEST_CASE("DOT export") {
    CHECK(export_graph(build_graph(factorize(12)), ExportFormat::dot) ==
          "graph G {\n"
          "  2;\n"
          "  3;\n"
          "  4;\n"
          "  6;\n"
          "  2 -- 3;\n"
          "  2 -- 4;\n"
          "  2 -- 6;\n"
          "  3 -- 6;\n"
          "}\n");

    // n=30: 6 nodes, 9 edges
    std::string dot = export_graph(build_graph(factorize(30)), ExportFormat::dot);
    std::size_t nodes = 0, edges = 0, pos = 0;
    for (std::size_t at = dot.find('\n'); at != std::string::npos;
         pos = at + 1, at = dot.find('\n', pos)) {
        std::string line = dot.substr(pos, at - pos);
        if (line.find("--") != std::string::npos)
            ++edges;
        else if (line.size() > 2 && line.back() == ';')
            ++nodes;
    }
    CHECK(nodes == 6);
    CHECK(edges == 9);
}

TEST_CASE("JSON export") {
    auto j7 = nlohmann::json::parse(export_graph(build_graph(factorize(7)), ExportFormat::json));
    CHECK(j7["n"] == 7);
    CHECK(j7["vertices"].empty());
    CHECK(j7["edges"].empty());
    CHECK(j7["is_complemented"] == false);

    auto j12 = nlohmann::json::parse(export_graph(build_graph(factorize(12)), ExportFormat::json));
    CHECK(j12["n"] == 12);
    CHECK(j12["factorization"] == nlohmann::json::parse("[[2,2],[3,1]]"));
    CHECK(j12["vertices"] == nlohmann::json::parse("[2,3,4,6]"));
    CHECK(j12["edges"] == nlohmann::json::parse("[[0,1],[0,2],[0,3],[1,3]]"));

    // exports are byte-stable
    for (auto fmt : {ExportFormat::dot, ExportFormat::dimacs, ExportFormat::json}) {
        IdealGraph g = build_graph(factorize(360));
        CHECK(export_graph(g, fmt) == export_graph(g, fmt));
    }
}

#include "idealgraph/export.hpp"

#include <json.hpp>

namespace idealgraph {

namespace {

std::string export_dot(const IdealGraph& g) {
    std::string out = "graph G {\n";
    for (std::uint64_t v : g.values) out += "  " + std::to_string(v) + ";\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.has_edge(i, j))
                out += "  " + std::to_string(g.values[i]) + " -- " +
                       std::to_string(g.values[j]) + ";\n";
    out += "}\n";
    return out;
}

std::string export_dimacs(const IdealGraph& g) {
    const std::size_t v = g.vertex_count();
    std::string out = "p edge " + std::to_string(v) + " " + std::to_string(g.edge_count()) + "\n";
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (g.has_edge(i, j))
                out += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return out;
}

std::string export_json(const IdealGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.fact.n;
    j["factorization"] = nlohmann::ordered_json::array();
    for (const auto& pp : g.fact.primes)
        j["factorization"].push_back({pp.prime, pp.exponent});
    j["vertices"] = g.values;
    j["edges"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t k = i + 1; k < g.vertex_count(); ++k)
            if (g.has_edge(i, k)) j["edges"].push_back({i, k});
    j["is_complemented"] = g.is_complemented;
    return j.dump(2) + "\n";
}

}  // namespace

std::string export_graph(const IdealGraph& g, ExportFormat format) {
    switch (format) {
        case ExportFormat::dot: return export_dot(g);
        case ExportFormat::dimacs: return export_dimacs(g);
        case ExportFormat::json: return export_json(g);
    }
    return {};
}

}  // namespace idealgraph

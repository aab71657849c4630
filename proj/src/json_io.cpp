#include "idealgraph/json_io.hpp"

namespace idealgraph {

nlohmann::ordered_json certificate_json(const HoleCertificate& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["host"] = c.host == HoleHost::graph ? "graph" : "complement";
    j["length"] = c.length;
    j["cycle"] = c.divisor_values;
    return j;
}

nlohmann::ordered_json report_json(const PerfectnessReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["verdict"] = to_string(r.verdict);
    j["certificate"] = r.certificate ? certificate_json(*r.certificate)
                                     : nlohmann::ordered_json(nullptr);
    j["search_exhausted"] = r.search_exhausted;
    j["max_length_searched"] = r.max_length_searched;
    if (r.all_lengths) {
        j["all_lengths"] = true;
        j["even_cycle"] = r.even_cycle ? certificate_json(*r.even_cycle)
                                       : nlohmann::ordered_json(nullptr);
        j["even_search_exhausted"] = r.even_search_exhausted;
    }
    return j;
}

nlohmann::ordered_json report_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["omega"] = r.omega;
    j["chi"] = r.chi;
    j["max_clique_witness"] = r.max_clique_witness;
    auto colors = nlohmann::ordered_json::object();
    for (const auto& [value, color] : r.coloring_witness)
        colors[std::to_string(value)] = color;
    j["coloring_witness"] = colors;
    return j;
}

}  // namespace idealgraph

#include "oddsub/certificate_json.hpp"

#include "oddsub/error.hpp"

namespace oddsub {

nlohmann::json certificate_to_json(const Graph& g, const Certificate& cert) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {
        {"theorem_tag", cert.theorem_tag},
        {"target", cert.target == CertificateTarget::Graph ? "G" : "L(G)"},
        {"witness", cert.witness.to_vector()},
        {"bound", {{"num", cert.bound.num()}, {"den", cert.bound.den()}}},
        {"size", cert.size()},
        {"trace", cert.trace},
        {"graph", {{"n", g.order()}, {"edges", edges}}},
    };
}

CertificateDocument certificate_from_json(const nlohmann::json& doc) {
    try {
        CertificateDocument out;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : doc.at("graph").at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
        out.graph = build_graph(doc.at("graph").at("n").get<int>(), edges);

        auto& cert = out.certificate;
        cert.theorem_tag = doc.at("theorem_tag").get<std::string>();
        const auto target = doc.at("target").get<std::string>();
        if (target == "G") {
            cert.target = CertificateTarget::Graph;
        } else if (target == "L(G)") {
            cert.target = CertificateTarget::LineGraph;
        } else {
            throw GraphError("certificate target must be \"G\" or \"L(G)\", got \"" + target + "\"");
        }
        cert.witness = VertexSet(doc.at("witness").get<std::vector<Vertex>>());
        cert.bound = Rational(doc.at("bound").at("num").get<std::int64_t>(), doc.at("bound").at("den").get<std::int64_t>());
        cert.trace = doc.value("trace", std::vector<std::string>{});
        if (doc.contains("size") && doc.at("size").get<int>() != cert.size()) {
            throw GraphError("certificate size field disagrees with the witness");
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("malformed certificate JSON: ") + e.what());
    }
}

}  // namespace oddsub

#pragma once

#include <json.hpp>

#include "oddsub/certify.hpp"

namespace oddsub {

/// Certificate as JSON:
/// {theorem_tag, target: "G" | "L(G)", witness, bound: {num, den}, size, trace, graph: {n, edges}}.
nlohmann::json certificate_to_json(const Graph& g, const Certificate& cert);

struct CertificateDocument {
    Graph graph;
    Certificate certificate;
};

/// Inverse of certificate_to_json. Throws GraphError on malformed documents.
CertificateDocument certificate_from_json(const nlohmann::json& doc);

}  // namespace oddsub

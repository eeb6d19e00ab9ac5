#include "mgd/discovery/knowledge.hpp"

#include <nlohmann/json.hpp>

#include "mgd/error.hpp"

namespace mgd::discovery {

Constraints resolve(const KnowledgeBase& kb, const std::vector<std::string>& vertices) {
    const graphs::Dag names(vertices, std::vector<graphs::Edge>{});
    Constraints out;
    for (const auto& [p, c] : kb.forbidden) out.forbidden.insert({names.index_of(p), names.index_of(c)});
    for (const auto& [p, c] : kb.required) {
        if (kb.forbidden.count({p, c}))
            throw Error(ErrorCode::KnowledgeInfeasible, "edge " + p + " -> " + c + " is both required and forbidden");
        out.required.insert({names.index_of(p), names.index_of(c)});
    }
    try {
        required_graph(vertices, out);
    } catch (const Error& e) {
        throw Error(ErrorCode::KnowledgeInfeasible, std::string("required edges: ") + e.what());
    }
    return out;
}

graphs::Dag required_graph(const std::vector<std::string>& vertices, const Constraints& c) {
    return graphs::Dag(vertices, std::vector<graphs::Edge>(c.required.begin(), c.required.end()));
}

bool satisfies(const graphs::Dag& g, const Constraints& c) {
    for (const auto& [p, ch] : c.required)
        if (!g.has_edge(p, ch)) return false;
    for (const auto& [p, ch] : c.forbidden)
        if (g.has_edge(p, ch)) return false;
    return true;
}

void check_satisfies(const graphs::Dag& g, const Constraints& c) {
    for (const auto& [p, ch] : c.required)
        if (!g.has_edge(p, ch))
            throw Error(ErrorCode::KnowledgeViolatedByInput, "required edge " + g.name(p) + " -> " + g.name(ch) + " is absent");
    for (const auto& [p, ch] : c.forbidden)
        if (g.has_edge(p, ch))
            throw Error(ErrorCode::KnowledgeViolatedByInput, "forbidden edge " + g.name(p) + " -> " + g.name(ch) + " is present");
}

namespace {

std::set<graphs::NamedEdge> edge_list(const nlohmann::json& doc, const char* key) {
    std::set<graphs::NamedEdge> out;
    if (!doc.contains(key)) return out;
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw Error(ErrorCode::Parse, std::string("'") + key + "' must be an array");
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw Error(ErrorCode::Parse, std::string("'") + key + "' entries must be [parent, child] name pairs");
        out.insert({e[0].get<std::string>(), e[1].get<std::string>()});
    }
    return out;
}

}  // namespace

KnowledgeBase parse_knowledge_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::Parse, "knowledge document must be an object");
    return {edge_list(doc, "forbidden"), edge_list(doc, "required")};
}

std::string write_knowledge_json(const KnowledgeBase& kb) {
    nlohmann::json doc = {{"forbidden", nlohmann::json::array()}, {"required", nlohmann::json::array()}};
    for (const auto& [p, c] : kb.forbidden) doc["forbidden"].push_back({p, c});
    for (const auto& [p, c] : kb.required) doc["required"].push_back({p, c});
    return doc.dump(2) + "\n";
}

}  // namespace mgd::discovery

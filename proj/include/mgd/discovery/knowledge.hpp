#ifndef MGD_DISCOVERY_KNOWLEDGE_HPP
#define MGD_DISCOVERY_KNOWLEDGE_HPP

#include <set>
#include <string>
#include <vector>

#include "mgd/graphs/dag.hpp"

namespace mgd::discovery {

// Expert-elicited edge constraints, by vertex name.
struct KnowledgeBase {
    std::set<graphs::NamedEdge> forbidden;
    std::set<graphs::NamedEdge> required;

    bool empty() const { return forbidden.empty() && required.empty(); }
};

// The same constraints resolved against a vertex list.
struct Constraints {
    std::set<graphs::Edge> forbidden;
    std::set<graphs::Edge> required;

    bool is_forbidden(int parent, int child) const { return forbidden.count({parent, child}) > 0; }
    bool is_required(int parent, int child) const { return required.count({parent, child}) > 0; }
};

// Checks forbidden and required are disjoint, names are known, and the
// required edges alone are acyclic. Throws KnowledgeInfeasible, UnknownVertex.
Constraints resolve(const KnowledgeBase& kb, const std::vector<std::string>& vertices);

// Required edges only.
graphs::Dag required_graph(const std::vector<std::string>& vertices, const Constraints& c);

bool satisfies(const graphs::Dag& g, const Constraints& c);
// Throws KnowledgeViolatedByInput naming the first offending edge.
void check_satisfies(const graphs::Dag& g, const Constraints& c);

// {"forbidden": [[p, c], ...], "required": [[p, c], ...]}; both keys optional.
KnowledgeBase parse_knowledge_json(const std::string& text);
std::string write_knowledge_json(const KnowledgeBase& kb);

}  // namespace mgd::discovery

#endif  // MGD_DISCOVERY_KNOWLEDGE_HPP

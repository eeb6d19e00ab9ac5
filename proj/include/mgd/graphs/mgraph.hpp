#ifndef MGD_GRAPHS_MGRAPH_HPP
#define MGD_GRAPHS_MGRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgd/graphs/dag.hpp"

namespace mgd::graphs {

enum class VertexClass { Observed, Latent, PartiallyObserved, Proxy, Indicator };

enum class MechanismClass { MCAR, MAR, MNAR };

const char* to_string(VertexClass c);
const char* to_string(MechanismClass c);
// Accepts the names produced by to_string (case-sensitive). Throws Parse.
VertexClass parse_vertex_class(const std::string& s);
MechanismClass parse_mechanism(const std::string& s);

struct Wiring {
    int proxy = -1;
    int indicator = -1;
};

// A missingness graph: a Dag whose vertices are partitioned into fully observed,
// latent, partially observed, proxy and indicator classes. Every partially
// observed X is wired to exactly one proxy S_X (parents {X, R_X}, no children)
// and one indicator R_X whose only child is S_X. The wiring is inferred from
// the proxies' parents and validated on construction (InvalidMGraph).
class MGraph {
public:
    MGraph(Dag graph, std::vector<VertexClass> classes);

    const Dag& graph() const { return graph_; }
    const std::vector<VertexClass>& classes() const { return classes_; }
    VertexClass vertex_class(int v) const { return classes_.at(static_cast<std::size_t>(v)); }
    // Keyed by the partially observed vertex.
    const std::map<int, Wiring>& wiring() const { return wiring_; }

    std::vector<int> members(VertexClass c) const;

private:
    Dag graph_;
    std::vector<VertexClass> classes_;
    std::map<int, Wiring> wiring_;
};

// Builds the m-graph implied by a causal graph over O/U/M variables plus a
// parent set for each indicator: adds R_<X> and S_<X> per partially observed X
// with the standard proxy wiring. Indicator parents may include X itself.
MGraph build_mgraph(const Dag& causal, const std::vector<VertexClass>& classes,
                    const std::map<std::string, std::vector<std::string>>& indicator_parents);

// MCAR when O ∪ U ∪ M is d-separated from R given nothing, else MAR when U ∪ M
// is d-separated from R given O, else MNAR. Proxies and their wiring edges are
// removed before testing.
MechanismClass classify_mechanism(const MGraph& m);

}  // namespace mgd::graphs

#endif  // MGD_GRAPHS_MGRAPH_HPP

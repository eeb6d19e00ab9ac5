#include "mgd/graphs/mgraph.hpp"

#include <set>

#include "mgd/error.hpp"
#include "mgd/graphs/dsep.hpp"

namespace mgd::graphs {

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Observed: return "observed";
        case VertexClass::Latent: return "latent";
        case VertexClass::PartiallyObserved: return "partially_observed";
        case VertexClass::Proxy: return "proxy";
        case VertexClass::Indicator: return "indicator";
    }
    return "observed";
}

const char* to_string(MechanismClass c) {
    switch (c) {
        case MechanismClass::MCAR: return "MCAR";
        case MechanismClass::MAR: return "MAR";
        case MechanismClass::MNAR: return "MNAR";
    }
    return "MNAR";
}

VertexClass parse_vertex_class(const std::string& s) {
    for (auto c : {VertexClass::Observed, VertexClass::Latent, VertexClass::PartiallyObserved, VertexClass::Proxy,
                   VertexClass::Indicator})
        if (s == to_string(c)) return c;
    throw Error(ErrorCode::Parse, "unknown vertex class '" + s + "'");
}

MechanismClass parse_mechanism(const std::string& s) {
    for (auto c : {MechanismClass::MCAR, MechanismClass::MAR, MechanismClass::MNAR})
        if (s == to_string(c)) return c;
    throw Error(ErrorCode::Parse, "unknown mechanism '" + s + "'");
}

MGraph::MGraph(Dag graph, std::vector<VertexClass> classes) : graph_(std::move(graph)), classes_(std::move(classes)) {
    if (classes_.size() != graph_.size())
        throw Error(ErrorCode::InvalidMGraph, "class map must cover every vertex exactly once");
    auto fail = [&](int v, const std::string& why) {
        throw Error(ErrorCode::InvalidMGraph, "'" + graph_.name(v) + "' " + why);
    };
    std::set<int> used_indicators;
    for (std::size_t i = 0; i < graph_.size(); ++i) {
        const int v = static_cast<int>(i);
        if (classes_[i] != VertexClass::Proxy) continue;
        if (!graph_.children(v).empty()) fail(v, "is a proxy with children");
        const auto& pa = graph_.parents(v);
        if (pa.size() != 2) fail(v, "is a proxy without exactly two parents");
        int x = -1, r = -1;
        for (int p : pa) {
            if (vertex_class(p) == VertexClass::PartiallyObserved) x = p;
            if (vertex_class(p) == VertexClass::Indicator) r = p;
        }
        if (x < 0 || r < 0) fail(v, "must have one partially observed and one indicator parent");
        if (wiring_.count(x)) fail(x, "has more than one proxy");
        if (!used_indicators.insert(r).second) fail(r, "drives more than one proxy");
        wiring_[x] = Wiring{v, r};
    }
    for (std::size_t i = 0; i < graph_.size(); ++i) {
        const int v = static_cast<int>(i);
        switch (classes_[i]) {
            case VertexClass::PartiallyObserved:
                if (!wiring_.count(v)) fail(v, "is partially observed but has no proxy");
                break;
            case VertexClass::Indicator: {
                if (!used_indicators.count(v)) fail(v, "is an indicator without a proxy");
                if (graph_.children(v).size() != 1) fail(v, "is an indicator with children besides its proxy");
                for (int p : graph_.parents(v))
                    if (vertex_class(p) == VertexClass::Indicator || vertex_class(p) == VertexClass::Proxy)
                        fail(v, "is an indicator with an indicator or proxy parent");
                break;
            }
            default:
                break;
        }
    }
}

std::vector<int> MGraph::members(VertexClass c) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == c) out.push_back(static_cast<int>(i));
    return out;
}

MGraph build_mgraph(const Dag& causal, const std::vector<VertexClass>& classes,
                    const std::map<std::string, std::vector<std::string>>& indicator_parents) {
    if (classes.size() != causal.size())
        throw Error(ErrorCode::InvalidMGraph, "class map must cover every vertex exactly once");
    std::vector<std::string> names = causal.vertices();
    std::vector<VertexClass> all = classes;
    std::vector<NamedEdge> edges = causal.named_edges();
    for (std::size_t i = 0; i < causal.size(); ++i) {
        if (classes[i] == VertexClass::Proxy || classes[i] == VertexClass::Indicator)
            throw Error(ErrorCode::InvalidMGraph, "causal part may only hold observed/latent/partially observed");
        if (classes[i] != VertexClass::PartiallyObserved) continue;
        const std::string x = names[i];
        const std::string r = "R_" + x;
        const std::string s = "S_" + x;
        names.push_back(r);
        all.push_back(VertexClass::Indicator);
        names.push_back(s);
        all.push_back(VertexClass::Proxy);
        edges.emplace_back(x, s);
        edges.emplace_back(r, s);
        if (auto it = indicator_parents.find(x); it != indicator_parents.end())
            for (const auto& p : it->second) edges.emplace_back(p, r);
    }
    for (const auto& [x, parents] : indicator_parents) {
        auto v = causal.find(x);
        if (!v || classes[static_cast<std::size_t>(*v)] != VertexClass::PartiallyObserved)
            throw Error(ErrorCode::InvalidMGraph, "indicator parents given for '" + x + "', which is not partially observed");
    }
    return MGraph(Dag(std::move(names), edges), std::move(all));
}

MechanismClass classify_mechanism(const MGraph& m) {
    std::vector<int> keep;
    for (std::size_t i = 0; i < m.classes().size(); ++i)
        if (m.classes()[i] != VertexClass::Proxy) keep.push_back(static_cast<int>(i));
    const Dag reduced = m.graph().subgraph(keep);

    std::vector<int> observed, hidden, indicators;  // O, U ∪ M, R (indices in `reduced`)
    for (std::size_t j = 0; j < keep.size(); ++j) {
        const int v = static_cast<int>(j);
        switch (m.vertex_class(keep[j])) {
            case VertexClass::Observed: observed.push_back(v); break;
            case VertexClass::Latent:
            case VertexClass::PartiallyObserved: hidden.push_back(v); break;
            case VertexClass::Indicator: indicators.push_back(v); break;
            case VertexClass::Proxy: break;
        }
    }
    if (indicators.empty()) return MechanismClass::MCAR;
    std::vector<int> all_variables = observed;
    all_variables.insert(all_variables.end(), hidden.begin(), hidden.end());
    if (d_separated(reduced, all_variables, indicators, {})) return MechanismClass::MCAR;
    if (d_separated(reduced, hidden, indicators, observed)) return MechanismClass::MAR;
    return MechanismClass::MNAR;
}

}  // namespace mgd::graphs

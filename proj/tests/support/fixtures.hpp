// Helpers that turn oracle networks and literal tables into library values.
#ifndef MGD_TESTS_FIXTURES_HPP
#define MGD_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/graphs/dag.hpp"
#include "oracles.hpp"

namespace fixtures {

inline std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("V" + std::to_string(i));
    return out;
}

inline mgd::data::VariableSchema variable(const std::string& name, int card) {
    mgd::data::VariableSchema v{name, {}};
    for (int k = 0; k < card; ++k) v.states.push_back("s" + std::to_string(k));
    return v;
}

inline std::vector<mgd::data::VariableSchema> schema(const std::vector<int>& cards) {
    std::vector<mgd::data::VariableSchema> out;
    for (std::size_t i = 0; i < cards.size(); ++i) out.push_back(variable("V" + std::to_string(i), cards[i]));
    return out;
}

// Rows given row-major, -1 = missing.
inline mgd::data::CategoricalDataset dataset(const std::vector<mgd::data::VariableSchema>& s,
                                             const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<int>> cols(s.size());
    for (const auto& r : rows)
        for (std::size_t j = 0; j < s.size(); ++j) cols[j].push_back(r[j]);
    return mgd::data::CategoricalDataset(s, cols);
}

inline std::vector<std::vector<int>> rows_of(const mgd::data::CategoricalDataset& d) {
    std::vector<std::vector<int>> out(d.rows(), std::vector<int>(d.cols()));
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) out[i][j] = d.at(i, j);
    return out;
}

inline mgd::graphs::Dag dag(const oracle::Network& net) {
    std::vector<mgd::graphs::Edge> edges;
    for (std::size_t v = 0; v < net.parents.size(); ++v)
        for (int p : net.parents[v]) edges.push_back({p, static_cast<int>(v)});
    return mgd::graphs::Dag(names(net.cards.size()), edges);
}

inline mgd::estimation::ParameterSet params(const oracle::Network& net, const mgd::graphs::Dag& g) {
    std::vector<mgd::estimation::Cpt> cpts;
    for (std::size_t v = 0; v < net.cards.size(); ++v) {
        mgd::estimation::Cpt c;
        c.parents = net.parents[v];
        for (int p : c.parents) c.parent_cardinalities.push_back(static_cast<std::size_t>(net.cards[static_cast<std::size_t>(p)]));
        c.cardinality = static_cast<std::size_t>(net.cards[v]);
        c.table = net.table[v];
        cpts.push_back(std::move(c));
    }
    return mgd::estimation::ParameterSet(g, schema(net.cards), std::move(cpts));
}

}  // namespace fixtures

#endif  // MGD_TESTS_FIXTURES_HPP

#include "mgd/estimation/mle.hpp"

#include "mgd/error.hpp"

namespace mgd::estimation {

Cpt cpt_from_counts(const FamilyCounts& counts, std::vector<int> parents, std::vector<std::size_t> parent_cards,
                    double pseudocount) {
    if (pseudocount < 0.0) throw Error(ErrorCode::InvalidArgument, "pseudocount must be non-negative");
    Cpt cpt;
    cpt.parents = std::move(parents);
    cpt.parent_cardinalities = std::move(parent_cards);
    cpt.cardinality = counts.cardinality;
    cpt.table.resize(counts.counts.size());
    const auto card = static_cast<double>(counts.cardinality);
    for (std::size_t c = 0; c < counts.configurations; ++c) {
        const double denom = counts.parent_total(c) + pseudocount * card;
        for (std::size_t s = 0; s < counts.cardinality; ++s)
            cpt.table[c * counts.cardinality + s] = denom > 0.0 ? (counts.at(c, s) + pseudocount) / denom : 1.0 / card;
    }
    return cpt;
}

ParameterSet params_from_counts(const graphs::Dag& g, std::vector<data::VariableSchema> schema,
                                const std::vector<FamilyCounts>& families, double pseudocount) {
    std::vector<Cpt> cpts;
    cpts.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<std::size_t> cards;
        for (int p : g.parents(static_cast<int>(v))) cards.push_back(schema[static_cast<std::size_t>(p)].cardinality());
        cpts.push_back(cpt_from_counts(families.at(v), g.parents(static_cast<int>(v)), std::move(cards), pseudocount));
    }
    return ParameterSet(g, std::move(schema), std::move(cpts), pseudocount);
}

ParameterSet fit_mle(const graphs::Dag& g, const data::CategoricalDataset& d, double pseudocount) {
    auto schema = schema_for(g, d);
    const auto cols = column_map(g, d, schema);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (d.missing_count(cols[v]) > 0)
            throw Error(ErrorCode::MissingCellsPresent, "column '" + g.name(static_cast<int>(v)) + "' has missing cells");
    const auto counts = weighted_counts(g, d);
    return params_from_counts(g, std::move(schema), counts.families, pseudocount);
}

}  // namespace mgd::estimation

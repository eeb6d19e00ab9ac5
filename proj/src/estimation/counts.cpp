#include "mgd/estimation/counts.hpp"

#include <numeric>

#include "mgd/error.hpp"
#include "mgd/estimation/parameters.hpp"

namespace mgd::estimation {

double FamilyCounts::parent_total(std::size_t config) const {
    double sum = 0.0;
    for (std::size_t s = 0; s < cardinality; ++s) sum += at(config, s);
    return sum;
}

double FamilyCounts::total() const { return std::accumulate(counts.begin(), counts.end(), 0.0); }

FamilyCounts count_family(const data::CategoricalDataset& d, std::size_t child, std::span<const std::size_t> parents,
                          std::span<const double> weights) {
    if (!weights.empty() && weights.size() != d.rows())
        throw Error(ErrorCode::InvalidArgument, "weights must hold one entry per row");
    FamilyCounts out;
    out.cardinality = d.cardinality(child);
    for (std::size_t p : parents) out.configurations *= d.cardinality(p);
    out.counts.assign(out.configurations * out.cardinality, 0.0);

    const auto child_col = d.column(child);
    std::vector<std::span<const int>> parent_cols;
    parent_cols.reserve(parents.size());
    for (std::size_t p : parents) parent_cols.push_back(d.column(p));

    for (std::size_t i = 0; i < d.rows(); ++i) {
        const int x = child_col[i];
        if (x == data::CategoricalDataset::kMissing) continue;
        std::size_t config = 0;
        bool complete = true;
        for (std::size_t k = 0; k < parents.size(); ++k) {
            const int s = parent_cols[k][i];
            if (s == data::CategoricalDataset::kMissing) {
                complete = false;
                break;
            }
            config = config * d.cardinality(parents[k]) + static_cast<std::size_t>(s);
        }
        if (!complete) continue;
        out.counts[config * out.cardinality + static_cast<std::size_t>(x)] += weights.empty() ? 1.0 : weights[i];
    }
    return out;
}

WeightedCounts weighted_counts(const graphs::Dag& g, const data::CategoricalDataset& d, std::span<const double> weights) {
    const auto schema = schema_for(g, d);
    const auto cols = column_map(g, d, schema);
    WeightedCounts out;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<std::size_t> parents;
        for (int p : g.parents(static_cast<int>(v))) parents.push_back(cols[static_cast<std::size_t>(p)]);
        out.families.push_back(count_family(d, cols[v], parents, weights));
    }
    out.total_weight = weights.empty() ? static_cast<double>(d.rows()) : std::accumulate(weights.begin(), weights.end(), 0.0);
    return out;
}

}  // namespace mgd::estimation

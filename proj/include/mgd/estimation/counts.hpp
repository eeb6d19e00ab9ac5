#ifndef MGD_ESTIMATION_COUNTS_HPP
#define MGD_ESTIMATION_COUNTS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::estimation {

// Accumulated weight per (parent configuration, state) of one family.
struct FamilyCounts {
    std::size_t cardinality = 0;
    std::size_t configurations = 1;
    std::vector<double> counts;  // configuration * cardinality + state

    double at(std::size_t config, std::size_t state) const { return counts[config * cardinality + state]; }
    double parent_total(std::size_t config) const;
    double total() const;
};

// Counts rows in which the child and all parents are observed. `weights` is
// either empty (unit weights) or holds one non-negative weight per row.
FamilyCounts count_family(const data::CategoricalDataset& d, std::size_t child, std::span<const std::size_t> parents,
                          std::span<const double> weights = {});

// Family counts for every vertex of a graph, mapping vertices to dataset
// columns by name.
struct WeightedCounts {
    std::vector<FamilyCounts> families;
    double total_weight = 0.0;
};

WeightedCounts weighted_counts(const graphs::Dag& g, const data::CategoricalDataset& d,
                               std::span<const double> weights = {});

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_COUNTS_HPP

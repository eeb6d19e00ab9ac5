#ifndef MGD_ESTIMATION_MLE_HPP
#define MGD_ESTIMATION_MLE_HPP

#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/estimation/counts.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::estimation {

// P(x | pa) = (N(x, pa) + c) / (N(pa) + c |X|); a configuration with no
// weight and c = 0 gets a uniform row.
Cpt cpt_from_counts(const FamilyCounts& counts, std::vector<int> parents, std::vector<std::size_t> parent_cards,
                    double pseudocount);

ParameterSet params_from_counts(const graphs::Dag& g, std::vector<data::VariableSchema> schema,
                                const std::vector<FamilyCounts>& families, double pseudocount);

// Maximum-likelihood (c = 0) or Laplace-smoothed CPTs from complete data.
// Throws MissingCellsPresent if a graph column has missing cells, and
// SchemaMismatch if a vertex has no column.
ParameterSet fit_mle(const graphs::Dag& g, const data::CategoricalDataset& d, double pseudocount);

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_MLE_HPP

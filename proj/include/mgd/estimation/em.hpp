#ifndef MGD_ESTIMATION_EM_HPP
#define MGD_ESTIMATION_EM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/estimation/counts.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::estimation {

struct EmOptions {
    double pseudocount = 0.0;
    std::size_t max_iter = 100;
    double tol = 1e-6;
};

struct EmResult {
    ParameterSet params;
    // Observed-data LL of the parameters entering each iteration, followed by
    // the LL of the returned parameters.
    std::vector<double> trace;
    std::size_t iterations = 0;
    bool converged = false;
};

// Expected sufficient statistics: one FamilyCounts per vertex of g, each row
// spreading its unit weight over its completions by posterior probability.
// `log_likelihood` receives the observed-data LL under `params`.
std::vector<FamilyCounts> expected_counts(const graphs::Dag& g, const ParameterSet& params,
                                          const data::CategoricalDataset& d, double* log_likelihood = nullptr);

// Parameter EM. Starts from `init` when given, otherwise from available-case
// counts smoothed with pseudocount 1. On data with no missing cell in the
// graph's columns this is a single iteration equal to fit_mle.
// Throws TooManyMissingInRow, SchemaMismatch.
EmResult em_fit(const graphs::Dag& g, const data::CategoricalDataset& d, const EmOptions& options,
                const std::optional<ParameterSet>& init = std::nullopt);

// The dataset with every incomplete row replaced by all of its completions
// (over the graph's columns), each weighted by its posterior under `params`.
// Complete rows keep weight 1. Columns outside g must be complete.
struct WeightedDataset {
    data::CategoricalDataset data;
    std::vector<double> weights;
};

WeightedDataset expected_completions(const graphs::Dag& g, const ParameterSet& params,
                                     const data::CategoricalDataset& d);

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_EM_HPP

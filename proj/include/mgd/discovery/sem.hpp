#ifndef MGD_DISCOVERY_SEM_HPP
#define MGD_DISCOVERY_SEM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/discovery/knowledge.hpp"
#include "mgd/discovery/search.hpp"
#include "mgd/estimation/em.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::discovery {

struct SemOptions {
    std::size_t max_outer = 20;
    estimation::EmOptions em;
    HillClimbOptions search;
};

struct SemResult {
    graphs::Dag graph;
    estimation::ParameterSet params;
    std::size_t outer_iterations = 0;
    // Observed-data LL and penalized LL (same penalty as the search score)
    // of each (graph, parameters) pair visited, starting with the initial one.
    std::vector<double> log_likelihood;
    std::vector<double> penalized;
};

// Structural EM over all columns of d. Each outer iteration completes the
// data with posterior-weighted completions under the current model, hill
// climbs on those expected statistics from the current graph, and refits
// the parameters by EM (warm-started from the expected-count MLE). Stops when
// the search leaves the graph unchanged or after max_outer iterations.
// `init` defaults to the required edges.
SemResult structural_em(const data::CategoricalDataset& d, const Constraints& c, const SemOptions& options = {},
                        const std::optional<graphs::Dag>& init = std::nullopt);

// (log n / 2) * sum over vertices of (|X| - 1) * parent configurations.
double bic_penalty(const graphs::Dag& g, const std::vector<data::VariableSchema>& schema, double n);

}  // namespace mgd::discovery

#endif  // MGD_DISCOVERY_SEM_HPP

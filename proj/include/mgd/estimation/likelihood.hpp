#ifndef MGD_ESTIMATION_LIKELIHOOD_HPP
#define MGD_ESTIMATION_LIKELIHOOD_HPP

#include <cstddef>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/estimation/score.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::estimation {

// Sum over rows of log P(observed cells of the row): missing cells are summed
// out by exact enumeration of their completions (at most 2^20 per row).
// Columns of d that are not graph vertices are ignored. Returns -inf only when
// an observed configuration has probability zero. penalty = 0.
// Throws SchemaMismatch, TooManyMissingInRow.
ScoreValue log_likelihood(const ParameterSet& params, const graphs::Dag& g, const data::CategoricalDataset& d);

// Each LL divided by n, then by the largest absolute per-sample value in the
// list. Throws EmptyList, AllZero, InvalidArgument (n == 0).
std::vector<double> rescale_ll(const std::vector<ScoreValue>& values, std::size_t n);

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_LIKELIHOOD_HPP

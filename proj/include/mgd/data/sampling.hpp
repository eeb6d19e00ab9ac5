#ifndef MGD_DATA_SAMPLING_HPP
#define MGD_DATA_SAMPLING_HPP

#include <cstddef>
#include <cstdint>

#include "mgd/data/dataset.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::data {

// n i.i.d. rows drawn in topological order; columns follow the graph's vertex
// order. Rows are drawn in blocks of kSampleBlock, block b seeded by
// derive_seed(seed, b), so the output does not depend on scheduling.
// Throws IncompleteParameters when params do not fit g.
CategoricalDataset forward_sample(const graphs::Dag& g, const estimation::ParameterSet& params, std::size_t n,
                                  std::uint64_t seed);

inline constexpr std::size_t kSampleBlock = 4096;

}  // namespace mgd::data

#endif  // MGD_DATA_SAMPLING_HPP

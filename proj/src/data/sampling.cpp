#include "mgd/data/sampling.hpp"

#include <algorithm>

#include "mgd/error.hpp"
#include "mgd/random.hpp"

namespace mgd::data {

CategoricalDataset forward_sample(const graphs::Dag& g, const estimation::ParameterSet& params, std::size_t n,
                                  std::uint64_t seed) {
    if (params.size() != g.size())
        throw Error(ErrorCode::IncompleteParameters, "parameter set does not cover the graph");
    for (std::size_t v = 0; v < g.size(); ++v)
        if (params.cpt(v).parents != g.parents(static_cast<int>(v)) || params.schema()[v].name != g.name(static_cast<int>(v)))
            throw Error(ErrorCode::IncompleteParameters, "parameters for '" + g.name(static_cast<int>(v)) + "' do not match the graph");

    const auto order = g.topological_order();
    std::vector<std::vector<int>> columns(g.size(), std::vector<int>(n, 0));
    for (std::size_t block = 0; block * kSampleBlock < n; ++block) {
        Rng rng(derive_seed(seed, block));
        const std::size_t end = std::min(n, (block + 1) * kSampleBlock);
        for (std::size_t i = block * kSampleBlock; i < end; ++i) {
            for (int v : order) {
                const auto& cpt = params.cpt(static_cast<std::size_t>(v));
                std::size_t config = 0;
                for (std::size_t k = 0; k < cpt.parents.size(); ++k)
                    config = config * cpt.parent_cardinalities[k] +
                             static_cast<std::size_t>(columns[static_cast<std::size_t>(cpt.parents[k])][i]);
                const auto row = cpt.row(config);
                const double u = rng.uniform();
                double acc = 0.0;
                int state = static_cast<int>(cpt.cardinality) - 1;
                for (std::size_t s = 0; s < cpt.cardinality; ++s) {
                    acc += row[s];
                    if (u < acc) {
                        state = static_cast<int>(s);
                        break;
                    }
                }
                // Guard against rounding at the top of the cumulative sum landing on a zero-probability state.
                while (state > 0 && row[static_cast<std::size_t>(state)] == 0.0) --state;
                columns[static_cast<std::size_t>(v)][i] = state;
            }
        }
    }
    return CategoricalDataset(params.schema(), std::move(columns));
}

}  // namespace mgd::data

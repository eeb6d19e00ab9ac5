#ifndef MGD_DATA_TRANSFORMS_HPP
#define MGD_DATA_TRANSFORMS_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "mgd/data/dataset.hpp"

namespace mgd::data {

inline std::string indicator_name(const std::string& variable) { return "R_" + variable; }

// Appends a binary indicator R_X (states "0","1"; 1 = missing) for every
// partially observed X, in column order. Throws NameCollision if R_X exists.
CategoricalDataset indicators(const CategoricalDataset& d);

// Replaces each missing cell by its column's most frequent observed state,
// ties to the lowest state index. Throws AllMissingColumn.
CategoricalDataset impute_mode(const CategoricalDataset& d);

// n rows drawn with replacement (masks carried). Throws EmptyDataset.
CategoricalDataset bootstrap(const CategoricalDataset& d, std::uint64_t seed);
// The row indices a bootstrap with this seed draws.
std::vector<std::size_t> bootstrap_rows(std::size_t n, std::uint64_t seed);

struct Split {
    CategoricalDataset train;
    CategoricalDataset test;
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
};

// floor(n * held_out_fraction) rows held out, chosen by a seeded shuffle; both
// parts keep the original row order. Throws BadFraction (needs 0 < f < 1, n >= 2).
Split split(const CategoricalDataset& d, double held_out_fraction, std::uint64_t seed);

}  // namespace mgd::data

#endif  // MGD_DATA_TRANSFORMS_HPP

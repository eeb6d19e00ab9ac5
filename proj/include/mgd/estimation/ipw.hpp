#ifndef MGD_ESTIMATION_IPW_HPP
#define MGD_ESTIMATION_IPW_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/estimation/score.hpp"

namespace mgd::estimation {

// Rows with `target` observed get 1 / P(target observed | parent stratum),
// the stratum rate smoothed as (observed + 1) / (rows + 2). Rows with the
// target missing get 0. A target-observed row whose stratum has no rows with
// every parent observed gets 1. Throws UnknownVariable.
std::vector<double> ipw_weights(const data::CategoricalDataset& d, const std::string& target,
                                const std::vector<std::string>& detected_parents);
std::vector<double> ipw_weights(const data::CategoricalDataset& d, std::size_t target,
                                std::span<const std::size_t> detected_parents);

// BIC from inverse-probability-weighted counts. A set of variables is scored
// on the rows where its closure is observed: the variables plus, recursively,
// the detected missingness parents of every partially observed member. Each
// such row is weighted by the product of the closure members' IPW weights,
// rescaled to average 1 over the rows used, and the penalty uses
// log(rows used) / 2.
//
// family_score uses the family's own closure. delta scores both families on
// the closure of their union, so a move is judged on one set of rows. With
// no missing cells this is exactly BicScorer.
class IpwScorer : public FamilyScorer {
public:
    // r_parents[j] = detected parents (column indices) of column j's indicator.
    IpwScorer(const data::CategoricalDataset& d, std::vector<std::vector<std::size_t>> r_parents);

    std::size_t variable_count() const override { return data_.cols(); }
    double family_score(int child, std::span<const int> parents) const override;
    bool context_free() const override { return complete_; }
    double delta(int child, std::span<const int> before, std::span<const int> after) const override;

    std::vector<std::size_t> closure(std::span<const std::size_t> family) const;
    // Row weights for a variable set (0 where the closure is not observed),
    // before normalization.
    std::vector<double> family_weights(std::span<const std::size_t> family) const;
    // family_weights rescaled to average 1 over the rows with positive weight
    // (their count goes to rows_used).
    std::vector<double> normalized_weights(std::span<const std::size_t> family, double* rows_used = nullptr) const;
    const std::vector<double>& variable_weights(std::size_t column) const { return weights_[column]; }

private:
    const data::CategoricalDataset& data_;
    std::vector<std::vector<std::size_t>> r_parents_;
    std::vector<bool> partial_;
    bool complete_ = true;
    std::vector<std::vector<double>> weights_;
};

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_IPW_HPP

#ifndef MGD_ESTIMATION_COMPLETION_HPP
#define MGD_ESTIMATION_COMPLETION_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/error.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::estimation {

// Upper bound on joint completions enumerated for a single row.
inline constexpr std::size_t kMaxCompletions = std::size_t{1} << 20;

// Exact enumeration of a row's missing-cell completions under a Bayesian
// network. Factors whose family is fully observed in the row are constant
// across completions and folded into a single log term.
class RowCompletions {
public:
    RowCompletions(const graphs::Dag& g, const ParameterSet& params, const data::CategoricalDataset& d);

    struct Row {
        double log_fixed = 0.0;    // sum of log-probabilities of untouched factors
        double touched_mass = 1.0; // sum over completions of the product of touched factors
        double log_likelihood() const { return log_fixed + std::log(touched_mass); }
    };

    // Calls visit(states, mass) for every completion, where `states` is the
    // full vertex assignment and `mass` the product of touched factors.
    // Throws TooManyMissingInRow.
    template <typename Visit>
    Row enumerate(std::size_t row, std::vector<int>& states, std::vector<int>& missing, std::vector<int>& touched,
                  Visit&& visit) const;

    Row evaluate(std::size_t row) const;

    std::size_t column(std::size_t v) const { return cols_[v]; }
    const graphs::Dag& graph() const { return g_; }
    const ParameterSet& params() const { return params_; }
    const data::CategoricalDataset& data() const { return d_; }
    std::size_t config_of(std::size_t v, const std::vector<int>& states) const;

private:
    const graphs::Dag& g_;
    const ParameterSet& params_;
    const data::CategoricalDataset& d_;
    std::vector<std::size_t> cols_;
};

inline std::size_t RowCompletions::config_of(std::size_t v, const std::vector<int>& states) const {
    const Cpt& cpt = params_.cpt(v);
    std::size_t config = 0;
    for (std::size_t k = 0; k < cpt.parents.size(); ++k)
        config = config * cpt.parent_cardinalities[k] + static_cast<std::size_t>(states[static_cast<std::size_t>(cpt.parents[k])]);
    return config;
}

template <typename Visit>
RowCompletions::Row RowCompletions::enumerate(std::size_t row, std::vector<int>& states, std::vector<int>& missing,
                                              std::vector<int>& touched, Visit&& visit) const {
    const std::size_t n_vars = g_.size();
    states.resize(n_vars);
    missing.clear();
    touched.clear();
    std::size_t completions = 1;
    for (std::size_t v = 0; v < n_vars; ++v) {
        states[v] = d_.at(row, cols_[v]);
        if (states[v] == data::CategoricalDataset::kMissing) {
            missing.push_back(static_cast<int>(v));
            completions *= params_.cpt(v).cardinality;
            if (completions > kMaxCompletions)
                throw Error(ErrorCode::TooManyMissingInRow,
                            "row " + std::to_string(row) + " needs more than 2^20 completions");
            states[v] = 0;
        }
    }
    Row out;
    std::vector<bool> is_missing(n_vars, false);
    for (int v : missing) is_missing[static_cast<std::size_t>(v)] = true;
    for (std::size_t v = 0; v < n_vars; ++v) {
        bool touches = is_missing[v];
        for (int p : params_.cpt(v).parents) touches = touches || is_missing[static_cast<std::size_t>(p)];
        if (touches)
            touched.push_back(static_cast<int>(v));
        else
            out.log_fixed += std::log(params_.cpt(v).prob(config_of(v, states), states[v]));
    }
    out.touched_mass = 0.0;
    for (;;) {
        double mass = 1.0;
        for (int v : touched) {
            const auto vi = static_cast<std::size_t>(v);
            mass *= params_.cpt(vi).prob(config_of(vi, states), states[vi]);
        }
        out.touched_mass += mass;
        visit(static_cast<const std::vector<int>&>(states), mass);
        // Odometer over the missing cells, last missing vertex fastest.
        std::size_t k = missing.size();
        while (k > 0) {
            const auto v = static_cast<std::size_t>(missing[k - 1]);
            if (++states[v] < static_cast<int>(params_.cpt(v).cardinality)) break;
            states[v] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_COMPLETION_HPP

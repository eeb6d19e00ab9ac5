#include "mgd/estimation/likelihood.hpp"

#include <cmath>

#include "mgd/error.hpp"
#include "mgd/estimation/completion.hpp"

namespace mgd::estimation {

RowCompletions::RowCompletions(const graphs::Dag& g, const ParameterSet& params, const data::CategoricalDataset& d)
    : g_(g), params_(params), d_(d), cols_(column_map(g, d, params.schema())) {
    if (params.size() != g.size()) throw Error(ErrorCode::SchemaMismatch, "parameters do not cover the graph");
    for (std::size_t v = 0; v < g.size(); ++v)
        if (params.cpt(v).parents != g.parents(static_cast<int>(v)))
            throw Error(ErrorCode::SchemaMismatch, "parameters for '" + g.name(static_cast<int>(v)) + "' do not match the graph");
}

RowCompletions::Row RowCompletions::evaluate(std::size_t row) const {
    std::vector<int> states, missing, touched;
    return enumerate(row, states, missing, touched, [](const std::vector<int>&, double) {});
}

ScoreValue log_likelihood(const ParameterSet& params, const graphs::Dag& g, const data::CategoricalDataset& d) {
    const RowCompletions rows(g, params, d);
    std::vector<int> states, missing, touched;
    ScoreValue out;
    for (std::size_t i = 0; i < d.rows(); ++i)
        out.log_likelihood += rows.enumerate(i, states, missing, touched, [](const std::vector<int>&, double) {}).log_likelihood();
    out.per_sample = d.rows() ? out.log_likelihood / static_cast<double>(d.rows()) : 0.0;
    return out;
}

std::vector<double> rescale_ll(const std::vector<ScoreValue>& values, std::size_t n) {
    if (values.empty()) throw Error(ErrorCode::EmptyList, "nothing to rescale");
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample size must be positive");
    double max_abs = 0.0;
    for (const auto& v : values) max_abs = std::max(max_abs, std::abs(v.log_likelihood / static_cast<double>(n)));
    if (max_abs == 0.0) throw Error(ErrorCode::AllZero, "all log-likelihoods are zero");
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.log_likelihood / static_cast<double>(n) / max_abs);
    return out;
}

}  // namespace mgd::estimation

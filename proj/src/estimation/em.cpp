#include "mgd/estimation/em.hpp"

#include <cmath>

#include "mgd/error.hpp"
#include "mgd/estimation/completion.hpp"
#include "mgd/estimation/likelihood.hpp"
#include "mgd/estimation/mle.hpp"

namespace mgd::estimation {
namespace {

std::vector<FamilyCounts> empty_counts(const ParameterSet& params) {
    std::vector<FamilyCounts> out;
    for (const Cpt& cpt : params.cpts()) {
        FamilyCounts fc;
        fc.cardinality = cpt.cardinality;
        fc.configurations = cpt.configurations();
        fc.counts.assign(fc.configurations * fc.cardinality, 0.0);
        out.push_back(std::move(fc));
    }
    return out;
}

bool graph_columns_complete(const graphs::Dag& g, const data::CategoricalDataset& d) {
    const auto cols = column_map(g, d, schema_for(g, d));
    for (std::size_t c : cols)
        if (d.missing_count(c) > 0) return false;
    return true;
}

}  // namespace

std::vector<FamilyCounts> expected_counts(const graphs::Dag& g, const ParameterSet& params,
                                          const data::CategoricalDataset& d, double* log_likelihood) {
    const RowCompletions rows(g, params, d);
    auto counts = empty_counts(params);
    std::vector<int> states, missing, touched;
    std::vector<std::size_t> touched_cells;
    std::vector<double> touched_mass;
    double ll = 0.0;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        // First pass collects the unnormalized mass per completion, the second
        // distributes posterior weight to the touched families.
        touched_cells.clear();
        touched_mass.clear();
        const auto row = rows.enumerate(i, states, missing, touched, [&](const std::vector<int>& s, double mass) {
            touched_mass.push_back(mass);
            for (int v : touched) {
                const auto vi = static_cast<std::size_t>(v);
                touched_cells.push_back(rows.config_of(vi, s) * counts[vi].cardinality + static_cast<std::size_t>(s[vi]));
            }
        });
        ll += row.log_likelihood();
        if (row.touched_mass > 0.0) {
            std::size_t cell = 0;
            for (double mass : touched_mass) {
                const double w = mass / row.touched_mass;
                for (int v : touched) counts[static_cast<std::size_t>(v)].counts[touched_cells[cell++]] += w;
            }
        }
        // Untouched families are observed in this row; `states` holds the
        // observed values there regardless of where the odometer stopped.
        std::vector<bool> is_touched(g.size(), false);
        for (int v : touched) is_touched[static_cast<std::size_t>(v)] = true;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (!is_touched[v]) counts[v].counts[rows.config_of(v, states) * counts[v].cardinality + static_cast<std::size_t>(states[v])] += 1.0;
    }
    if (log_likelihood) *log_likelihood = ll;
    return counts;
}

EmResult em_fit(const graphs::Dag& g, const data::CategoricalDataset& d, const EmOptions& options,
                const std::optional<ParameterSet>& init) {
    if (options.pseudocount < 0.0) throw Error(ErrorCode::InvalidArgument, "pseudocount must be non-negative");
    auto schema = schema_for(g, d);
    EmResult out;
    if (graph_columns_complete(g, d)) {
        out.params = fit_mle(g, d, options.pseudocount);
        out.trace.push_back(log_likelihood(out.params, g, d).log_likelihood);
        out.iterations = 1;
        out.converged = true;
        return out;
    }
    ParameterSet params = init ? *init : params_from_counts(g, schema, weighted_counts(g, d).families, 1.0);
    double previous = -INFINITY;
    for (std::size_t it = 0; it < options.max_iter; ++it) {
        double ll = 0.0;
        const auto counts = expected_counts(g, params, d, &ll);
        out.trace.push_back(ll);
        if (it > 0 && ll - previous < options.tol) {
            out.converged = true;
            break;
        }
        previous = ll;
        params = params_from_counts(g, schema, counts, options.pseudocount);
        ++out.iterations;
    }
    if (!out.converged) out.trace.push_back(log_likelihood(params, g, d).log_likelihood);
    out.params = std::move(params);
    return out;
}

WeightedDataset expected_completions(const graphs::Dag& g, const ParameterSet& params,
                                     const data::CategoricalDataset& d) {
    const RowCompletions rows(g, params, d);
    std::vector<bool> in_graph(d.cols(), false);
    for (std::size_t v = 0; v < g.size(); ++v) in_graph[rows.column(v)] = true;
    for (std::size_t c = 0; c < d.cols(); ++c)
        if (!in_graph[c] && d.missing_count(c) > 0)
            throw Error(ErrorCode::MissingCellsPresent, "column '" + d.variable(c).name + "' is outside the graph and incomplete");

    std::vector<std::vector<int>> columns(d.cols());
    WeightedDataset out;
    std::vector<int> states, missing, touched;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        const std::size_t first = out.weights.size();
        const auto row = rows.enumerate(i, states, missing, touched, [&](const std::vector<int>& s, double mass) {
            for (std::size_t c = 0; c < d.cols(); ++c) columns[c].push_back(d.at(i, c));
            for (int v : missing) columns[rows.column(static_cast<std::size_t>(v))].back() = s[static_cast<std::size_t>(v)];
            out.weights.push_back(mass);
        });
        for (std::size_t k = first; k < out.weights.size(); ++k)
            out.weights[k] = row.touched_mass > 0.0 ? out.weights[k] / row.touched_mass : 1.0 / static_cast<double>(out.weights.size() - first);
    }
    out.data = data::CategoricalDataset(d.schema(), std::move(columns));
    return out;
}

}  // namespace mgd::estimation

#include "mgd/discovery/sem.hpp"

#include <cmath>

#include "mgd/estimation/likelihood.hpp"
#include "mgd/estimation/mle.hpp"
#include "mgd/estimation/score.hpp"

namespace mgd::discovery {

double bic_penalty(const graphs::Dag& g, const std::vector<data::VariableSchema>& schema, double n) {
    if (n <= 1.0) return 0.0;
    double params = 0.0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        double configs = 1.0;
        for (int p : g.parents(static_cast<int>(v))) configs *= static_cast<double>(schema[static_cast<std::size_t>(p)].cardinality());
        params += static_cast<double>(schema[v].cardinality() - 1) * configs;
    }
    return 0.5 * std::log(n) * params;
}

SemResult structural_em(const data::CategoricalDataset& d, const Constraints& c, const SemOptions& options,
                        const std::optional<graphs::Dag>& init) {
    std::vector<std::string> names;
    for (const auto& v : d.schema()) names.push_back(v.name);
    SemResult out;
    out.graph = init ? *init : required_graph(names, c);
    check_satisfies(out.graph, c);
    const auto schema = estimation::schema_for(out.graph, d);
    const auto n = static_cast<double>(d.rows());

    auto record = [&](const estimation::EmResult& fit) {
        out.params = fit.params;
        out.log_likelihood.push_back(fit.trace.back());
        out.penalized.push_back(fit.trace.back() - bic_penalty(out.graph, schema, n));
    };
    record(estimation::em_fit(out.graph, d, options.em));

    for (std::size_t outer = 0; outer < options.max_outer; ++outer) {
        const auto completed = estimation::expected_completions(out.graph, out.params, d);
        const estimation::BicScorer scorer(completed.data, completed.weights, n);
        const estimation::FamilyScoreCache cache(scorer);
        auto step = hill_climb(cache, c, out.graph, options.search);
        if (step.graph == out.graph) break;
        out.graph = std::move(step.graph);
        const auto counts = estimation::weighted_counts(out.graph, completed.data, completed.weights);
        const auto start = estimation::params_from_counts(out.graph, schema, counts.families, options.em.pseudocount);
        record(estimation::em_fit(out.graph, d, options.em, start));
        ++out.outer_iterations;
    }
    return out;
}

}  // namespace mgd::discovery

#include "mgd/discovery/evaluate.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

#include "mgd/data/transforms.hpp"
#include "mgd/error.hpp"
#include "mgd/estimation/counts.hpp"
#include "mgd/estimation/em.hpp"
#include "mgd/estimation/ipw.hpp"
#include "mgd/estimation/likelihood.hpp"
#include "mgd/estimation/mle.hpp"
#include "mgd/parallel.hpp"
#include "mgd/random.hpp"

namespace mgd::discovery {

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::HcComplete: return "HC-complete";
        case Algorithm::BootstrapSem: return "Bootstrap-SEM";
        case Algorithm::HcAipw: return "HC-aIPW";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& s) {
    for (Algorithm a : {Algorithm::HcComplete, Algorithm::BootstrapSem, Algorithm::HcAipw})
        if (s == to_string(a)) return a;
    throw Error(ErrorCode::Parse, "unknown algorithm '" + s + "'");
}

graphs::Dag indicator_graph(const graphs::Dag& g, const data::CategoricalDataset& augmented,
                            const std::vector<std::vector<std::size_t>>& r_parents) {
    std::vector<std::string> names = g.vertices();
    std::vector<graphs::NamedEdge> edges = g.named_edges();
    for (std::size_t j = 0; j < g.size(); ++j) {
        const std::string r = data::indicator_name(g.name(static_cast<int>(j)));
        if (!augmented.find(r)) continue;
        names.push_back(r);
        for (std::size_t p : r_parents.at(j)) edges.push_back({g.name(static_cast<int>(p)), r});
    }
    return graphs::Dag(std::move(names), edges);
}

estimation::ParameterSet indicator_parameters(const graphs::Dag& model, const estimation::ParameterSet& params,
                                              const data::CategoricalDataset& augmented, double pseudocount) {
    auto schema = estimation::schema_for(model, augmented);
    const auto cols = estimation::column_map(model, augmented, schema);
    std::vector<estimation::Cpt> cpts = params.cpts();
    for (std::size_t v = params.size(); v < model.size(); ++v) {
        std::vector<std::size_t> parents, cards;
        for (int p : model.parents(static_cast<int>(v))) {
            parents.push_back(cols[static_cast<std::size_t>(p)]);
            cards.push_back(schema[static_cast<std::size_t>(p)].cardinality());
        }
        const auto counts = estimation::count_family(augmented, cols[v], parents);
        cpts.push_back(estimation::cpt_from_counts(counts, model.parents(static_cast<int>(v)), std::move(cards), pseudocount));
    }
    return estimation::ParameterSet(model, std::move(schema), std::move(cpts), pseudocount);
}

namespace {

struct Fitted {
    graphs::Dag graph;
    estimation::ParameterSet params;
    std::vector<std::vector<std::size_t>> r_parents;
    // Refit the joint data + indicator model by EM, starting from `params`.
    bool joint_em = false;
};

Fitted run_algorithm(Algorithm a, const data::CategoricalDataset& d, const Constraints& c,
                     const EvaluationOptions& options, const std::vector<std::string>& names) {
    Fitted out;
    HillClimbOptions search = options.search;
    if (options.threads > 1) search.threads = 1;
    switch (a) {
        case Algorithm::HcComplete: {
            const auto imputed = data::impute_mode(d);
            const estimation::BicScorer scorer(imputed);
            const estimation::FamilyScoreCache cache(scorer);
            out.graph = hill_climb(cache, c, required_graph(names, c), search).graph;
            out.params = estimation::fit_mle(out.graph, imputed, options.pseudocount);
            out.r_parents = r_parent_columns(d, detect_missingness(d, options.alpha, false));
            break;
        }
        case Algorithm::BootstrapSem: {
            SemOptions sem = options.sem;
            sem.search = search;
            out.graph = structural_em(d, c, sem).graph;
            estimation::EmOptions em = sem.em;
            em.pseudocount = options.pseudocount;
            out.params = estimation::em_fit(out.graph, d, em).params;
            out.r_parents = r_parent_columns(d, detect_missingness(d, options.alpha, false));
            out.joint_em = true;
            break;
        }
        case Algorithm::HcAipw: {
            AipwOptions aipw;
            aipw.alpha = options.alpha;
            aipw.search = search;
            auto fit = hc_aipw(d, c, aipw);
            out.graph = std::move(fit.graph);
            out.r_parents = std::move(fit.r_parents);
            const estimation::IpwScorer scorer(d, out.r_parents);
            std::vector<estimation::FamilyCounts> families;
            for (std::size_t v = 0; v < out.graph.size(); ++v) {
                std::vector<std::size_t> family{v}, parents;
                for (int p : out.graph.parents(static_cast<int>(v))) {
                    family.push_back(static_cast<std::size_t>(p));
                    parents.push_back(static_cast<std::size_t>(p));
                }
                families.push_back(estimation::count_family(d, v, parents, scorer.family_weights(family)));
            }
            out.params = estimation::params_from_counts(out.graph, d.schema(), families, options.pseudocount);
            out.joint_em = true;
            break;
        }
    }
    return out;
}

}  // namespace

EvaluationReport evaluate(const data::CategoricalDataset& d, const Constraints& c, const EvaluationOptions& options) {
    if (options.replicates == 0) throw Error(ErrorCode::InvalidArgument, "at least one replicate is required");
    if (options.algorithms.empty()) throw Error(ErrorCode::InvalidArgument, "no algorithm selected");
    std::vector<std::string> names;
    std::vector<std::size_t> data_cols;
    for (std::size_t j = 0; j < d.cols(); ++j) {
        names.push_back(d.variable(j).name);
        data_cols.push_back(j);
    }
    const auto augmented = data::indicators(d);
    const auto parts = data::split(augmented, options.held_out_fraction, derive_seed(options.seed, kSplitStream));
    const std::size_t B = options.replicates, A = options.algorithms.size();

    EvaluationReport report;
    report.replicates = B;
    report.n_in = parts.train.rows();
    report.n_out = parts.test.rows();
    report.rows.resize(B * A);
    parallel_for(B, options.threads, [&](std::size_t b) {
        const auto resample_aug = data::bootstrap(parts.train, derive_seed(options.seed, b));
        const auto resample = resample_aug.select_columns(data_cols);
        for (std::size_t k = 0; k < A; ++k) {
            const Algorithm a = options.algorithms[k];
            auto fit = run_algorithm(a, resample, c, options, names);
            const auto model = indicator_graph(fit.graph, resample_aug, fit.r_parents);
            auto params = indicator_parameters(model, fit.params, resample_aug, options.pseudocount);
            if (fit.joint_em) {
                estimation::EmOptions em = options.sem.em;
                em.pseudocount = options.pseudocount;
                params = estimation::em_fit(model, resample_aug, em, params).params;
            }
            EvaluationRow& row = report.rows[b * A + k];
            row.algorithm = to_string(a);
            row.replicate = b;
            row.ll_in = estimation::log_likelihood(params, model, resample_aug);
            row.ll_out = estimation::log_likelihood(params, model, parts.test);
            row.graph = std::move(fit.graph);
        }
    });

    std::vector<estimation::ScoreValue> ins, outs;
    for (const auto& row : report.rows) {
        ins.push_back(row.ll_in);
        outs.push_back(row.ll_out);
    }
    const auto in_r = estimation::rescale_ll(ins, report.n_in);
    const auto out_r = estimation::rescale_ll(outs, report.n_out);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        report.rows[i].ll_in_rescaled = in_r[i];
        report.rows[i].ll_out_rescaled = out_r[i];
    }
    for (std::size_t k = 0; k < A; ++k) {
        std::vector<double> li, lo, ri, ro;
        for (std::size_t b = 0; b < B; ++b) {
            const auto& row = report.rows[b * A + k];
            li.push_back(row.ll_in.log_likelihood);
            lo.push_back(row.ll_out.log_likelihood);
            ri.push_back(row.ll_in_rescaled);
            ro.push_back(row.ll_out_rescaled);
        }
        report.summaries.push_back({to_string(options.algorithms[k]), mean_sd(li), mean_sd(lo), mean_sd(ri), mean_sd(ro)});
    }
    return report;
}

namespace {

// Shortest representation that reads back to the same double.
std::string number(double v) {
    char buf[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

nlohmann::json stats(const MeanSd& m) { return {{"mean", m.mean}, {"sd", m.sd}}; }

}  // namespace

std::string write_report_json(const EvaluationReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"algorithm", row.algorithm},
                        {"replicate", row.replicate},
                        {"ll_in", row.ll_in.log_likelihood},
                        {"ll_out", row.ll_out.log_likelihood},
                        {"ll_in_rescaled", row.ll_in_rescaled},
                        {"ll_out_rescaled", row.ll_out_rescaled},
                        {"edges", row.graph.edge_count()}});
    nlohmann::json summaries = nlohmann::json::array();
    for (const auto& s : r.summaries)
        summaries.push_back({{"algorithm", s.algorithm},
                             {"ll_in", stats(s.ll_in)},
                             {"ll_out", stats(s.ll_out)},
                             {"ll_in_rescaled", stats(s.ll_in_rescaled)},
                             {"ll_out_rescaled", stats(s.ll_out_rescaled)}});
    const nlohmann::json doc = {{"replicates", r.replicates}, {"n_in", r.n_in}, {"n_out", r.n_out},
                                {"summary", summaries},       {"rows", rows}};
    return doc.dump(2) + "\n";
}

std::string write_report_csv(const EvaluationReport& r) {
    std::string out = "algorithm,replicate,ll_in,ll_out,ll_in_rescaled,ll_out_rescaled\n";
    for (const auto& row : r.rows)
        out += row.algorithm + "," + std::to_string(row.replicate) + "," + number(row.ll_in.log_likelihood) + "," +
               number(row.ll_out.log_likelihood) + "," + number(row.ll_in_rescaled) + "," +
               number(row.ll_out_rescaled) + "\n";
    return out;
}

}  // namespace mgd::discovery

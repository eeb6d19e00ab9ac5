#include "mgd/discovery/missingness.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

#include "mgd/data/transforms.hpp"
#include "mgd/error.hpp"
#include "mgd/estimation/independence.hpp"

namespace mgd::discovery {

const char* to_string(SelfMasking s) {
    switch (s) {
        case SelfMasking::Suspected: return "suspected";
        case SelfMasking::NotDetected: return "not-detected";
        case SelfMasking::Undetectable: return "undetectable";
    }
    return "?";
}

MissingnessReport detect_missingness(const data::CategoricalDataset& d, double alpha, bool include_partial) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
    const auto partial = d.partially_observed();
    const auto aug = data::indicators(d);
    MissingnessReport out;
    out.alpha = alpha;
    std::vector<bool> candidate(d.cols(), true);
    std::size_t candidates = 0;
    for (std::size_t y = 0; y < d.cols(); ++y) {
        candidate[y] = include_partial || d.missing_count(y) == 0;
        candidates += candidate[y];
    }
    for (std::size_t x : partial) out.tests += candidates - (candidate[x] ? 1 : 0);
    const double level = out.tests ? alpha / static_cast<double>(out.tests) : alpha;

    for (std::size_t k = 0; k < partial.size(); ++k) {
        const std::size_t x = partial[k];
        const std::size_t r = d.cols() + k;
        IndicatorReport rep;
        rep.variable = d.variable(x).name;

        struct Found {
            double p_value;
            double strength;  // statistic per degree of freedom
            std::size_t column;
        };
        std::vector<Found> found;
        std::vector<bool> proxy(d.cols(), false);
        bool any_proxy = false;
        for (std::size_t y = 0; y < d.cols(); ++y) {
            if (y == x) continue;
            if (candidate[y]) {
                const auto t = estimation::g_test(aug, r, y);
                if (t.p_value < level) found.push_back({t.p_value, t.statistic / t.df, y});
            }
            proxy[y] = estimation::g_test(d, x, y).p_value < level;
            any_proxy = any_proxy || proxy[y];
        }
        // Weakest association first: largest p, then smallest statistic per
        // degree of freedom (p underflows to 0 for strong associations).
        std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
            if (a.p_value != b.p_value) return a.p_value > b.p_value;
            if (a.strength != b.strength) return a.strength < b.strength;
            return a.column < b.column;
        });
        std::vector<std::size_t> kept;
        for (const auto& f : found) kept.push_back(f.column);
        for (const auto& f : found) {
            const std::size_t y = f.column;
            for (std::size_t z : kept) {
                if (z == y) continue;
                const std::size_t zs[] = {z};
                if (estimation::g_test(aug, r, y, zs).p_value >= level) {
                    kept.erase(std::find(kept.begin(), kept.end(), y));
                    break;
                }
            }
        }
        std::sort(kept.begin(), kept.end());
        bool suspected = false;
        for (std::size_t y : kept) {
            rep.parents.push_back(d.variable(y).name);
            suspected = suspected || proxy[y];
        }
        rep.self_masking = suspected ? SelfMasking::Suspected
                                     : (any_proxy ? SelfMasking::NotDetected : SelfMasking::Undetectable);
        out.indicators.push_back(std::move(rep));
    }
    return out;
}

std::vector<std::vector<std::size_t>> r_parent_columns(const data::CategoricalDataset& d, const MissingnessReport& r) {
    std::vector<std::vector<std::size_t>> out(d.cols());
    for (const auto& ind : r.indicators) {
        auto& list = out[d.index_of(ind.variable)];
        for (const auto& p : ind.parents) list.push_back(d.index_of(p));
        std::sort(list.begin(), list.end());
    }
    return out;
}

void classify_report(MissingnessReport& r, const graphs::Dag& causal, const data::CategoricalDataset& d) {
    std::vector<graphs::VertexClass> classes(causal.size(), graphs::VertexClass::Observed);
    for (std::size_t j : d.partially_observed())
        classes[static_cast<std::size_t>(causal.index_of(d.variable(j).name))] = graphs::VertexClass::PartiallyObserved;
    std::map<std::string, std::vector<std::string>> all;
    for (auto& ind : r.indicators) {
        all[ind.variable] = ind.parents;
        const std::map<std::string, std::vector<std::string>> one{{ind.variable, ind.parents}};
        ind.mechanism = graphs::classify_mechanism(graphs::build_mgraph(causal, classes, one));
    }
    r.overall = graphs::classify_mechanism(graphs::build_mgraph(causal, classes, all));
}

std::string write_report_json(const MissingnessReport& r) {
    nlohmann::json inds = nlohmann::json::array();
    for (const auto& ind : r.indicators) {
        nlohmann::json e = {{"variable", ind.variable},
                            {"indicator", data::indicator_name(ind.variable)},
                            {"parents", ind.parents},
                            {"self_masking", to_string(ind.self_masking)}};
        e["mechanism"] = ind.mechanism ? nlohmann::json(graphs::to_string(*ind.mechanism)) : nlohmann::json(nullptr);
        inds.push_back(std::move(e));
    }
    nlohmann::json doc = {{"alpha", r.alpha}, {"tests", r.tests}, {"indicators", inds}};
    doc["mechanism"] = r.overall ? nlohmann::json(graphs::to_string(*r.overall)) : nlohmann::json(nullptr);
    return doc.dump(2) + "\n";
}

}  // namespace mgd::discovery

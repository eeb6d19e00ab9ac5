#include "mgd/data/amputation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "mgd/error.hpp"
#include "mgd/random.hpp"

namespace mgd::data {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double p) {
    if (p <= 0.0) return -1000.0;
    if (p >= 1.0) return 1000.0;
    return std::log(p / (1.0 - p));
}

void validate_amputation(const CategoricalDataset& d, const AmputationSpec& spec) {
    std::set<std::string> targets;
    for (const auto& t : spec.targets) {
        d.index_of(t.target);
        if (!targets.insert(t.target).second)
            throw Error(ErrorCode::InvalidArgument, "target '" + t.target + "' listed twice");
    }
    for (const auto& t : spec.targets) {
        if (t.mechanism == graphs::MechanismClass::MCAR && !t.drivers.empty())
            throw Error(ErrorCode::InvalidArgument, "MCAR target '" + t.target + "' cannot have drivers");
        for (const auto& drv : t.drivers) {
            const std::size_t j = d.index_of(drv);
            if (d.missing_count(j) > 0)
                throw Error(ErrorCode::DriverMissing, "driver '" + drv + "' has missing cells");
            if (t.mechanism == graphs::MechanismClass::MAR && targets.count(drv))
                throw Error(ErrorCode::DriverMissing, "MAR driver '" + drv + "' of '" + t.target + "' is itself amputated");
        }
        for (const auto& [drv, w] : t.weights) {
            if (std::find(t.drivers.begin(), t.drivers.end(), drv) == t.drivers.end())
                throw Error(ErrorCode::InvalidArgument, "weights given for non-driver '" + drv + "'");
            if (w.size() != d.cardinality(d.index_of(drv)))
                throw Error(ErrorCode::InvalidArgument, "weights for '" + drv + "' need one entry per state");
        }
    }
}

std::vector<double> missing_probabilities(const CategoricalDataset& d, const AmputationTarget& t) {
    std::vector<double> eta(d.rows(), t.intercept);
    for (const auto& drv : t.drivers) {
        auto it = t.weights.find(drv);
        if (it == t.weights.end()) continue;
        const auto col = d.column(d.index_of(drv));
        for (std::size_t i = 0; i < d.rows(); ++i) eta[i] += it->second.at(static_cast<std::size_t>(col[i]));
    }
    for (double& e : eta) e = logistic(e);
    return eta;
}

CategoricalDataset ampute(const CategoricalDataset& d, const AmputationSpec& spec) {
    validate_amputation(d, spec);
    std::vector<std::vector<int>> columns;
    for (std::size_t j = 0; j < d.cols(); ++j) {
        auto col = d.column(j);
        columns.emplace_back(col.begin(), col.end());
    }
    for (std::size_t k = 0; k < spec.targets.size(); ++k) {
        const auto& t = spec.targets[k];
        const auto probs = missing_probabilities(d, t);
        auto& col = columns[d.index_of(t.target)];
        Rng rng(derive_seed(spec.seed, k));
        for (std::size_t i = 0; i < d.rows(); ++i)
            if (rng.uniform() < probs[i]) col[i] = CategoricalDataset::kMissing;
    }
    return CategoricalDataset(d.schema(), std::move(columns));
}

AmputationSpec parse_amputation_json(const std::string& text, const CategoricalDataset* d) {
    AmputationSpec spec;
    try {
        const auto doc = nlohmann::json::parse(text);
        spec.seed = doc.value("seed", std::uint64_t{0});
        for (const auto& entry : doc.at("targets")) {
            AmputationTarget t;
            t.target = entry.at("target").get<std::string>();
            t.mechanism = graphs::parse_mechanism(entry.at("mechanism").get<std::string>());
            t.drivers = entry.value("drivers", std::vector<std::string>{});
            t.intercept = entry.value("intercept", 0.0);
            if (entry.contains("weights")) {
                for (const auto& [drv, w] : entry.at("weights").items()) {
                    if (w.is_array()) {
                        t.weights[drv] = w.get<std::vector<double>>();
                    } else {
                        if (!d) throw Error(ErrorCode::Parse, "state-keyed weights need the dataset schema");
                        const auto& var = d->variable(d->index_of(drv));
                        std::vector<double> row(var.cardinality(), 0.0);
                        for (const auto& [state, value] : w.items()) {
                            auto s = var.state_index(state);
                            if (!s) throw Error(ErrorCode::UnknownState, "weight for unknown state '" + state + "' of '" + drv + "'");
                            row[static_cast<std::size_t>(*s)] = value.get<double>();
                        }
                        t.weights[drv] = std::move(row);
                    }
                }
            }
            spec.targets.push_back(std::move(t));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("amputation JSON: ") + e.what());
    }
    return spec;
}

std::string write_amputation_json(const AmputationSpec& spec) {
    nlohmann::json targets = nlohmann::json::array();
    for (const auto& t : spec.targets) {
        nlohmann::json weights = nlohmann::json::object();
        for (const auto& [drv, w] : t.weights) weights[drv] = w;
        targets.push_back({{"target", t.target},
                           {"mechanism", graphs::to_string(t.mechanism)},
                           {"drivers", t.drivers},
                           {"intercept", t.intercept},
                           {"weights", weights}});
    }
    return nlohmann::json{{"targets", targets}, {"seed", spec.seed}}.dump(2) + "\n";
}

}  // namespace mgd::data

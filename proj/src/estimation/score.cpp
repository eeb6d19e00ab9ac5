#include "mgd/estimation/score.hpp"

#include <cmath>
#include <mutex>

#include "mgd/error.hpp"

namespace mgd::estimation {

double family_log_likelihood(const FamilyCounts& counts) {
    double ll = 0.0;
    for (std::size_t c = 0; c < counts.configurations; ++c) {
        const double total = counts.parent_total(c);
        if (total <= 0.0) continue;
        for (std::size_t s = 0; s < counts.cardinality; ++s) {
            const double n = counts.at(c, s);
            if (n > 0.0) ll += n * std::log(n / total);
        }
    }
    return ll;
}

double family_penalty(const FamilyCounts& counts, double n_effective) {
    if (n_effective <= 1.0) return 0.0;
    return 0.5 * std::log(n_effective) * static_cast<double>(counts.cardinality - 1) *
           static_cast<double>(counts.configurations);
}

ScoreValue bic(const graphs::Dag& g, const WeightedCounts& counts, double n_effective) {
    if (counts.families.size() != g.size())
        throw Error(ErrorCode::SchemaMismatch, "counts must hold one family per vertex");
    ScoreValue out;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& fam = counts.families[v];
        std::size_t expected_configs = 1;
        for (int p : g.parents(static_cast<int>(v))) expected_configs *= counts.families.at(static_cast<std::size_t>(p)).cardinality;
        if (fam.configurations != expected_configs)
            throw Error(ErrorCode::SchemaMismatch, "counts for '" + g.name(static_cast<int>(v)) + "' do not match its parents");
        out.log_likelihood += family_log_likelihood(fam);
        out.penalty += family_penalty(fam, n_effective);
    }
    out.per_sample = n_effective > 0.0 ? out.log_likelihood / n_effective : 0.0;
    return out;
}

BicScorer::BicScorer(const data::CategoricalDataset& d, std::vector<double> weights, double n_effective)
    : data_(d), weights_(std::move(weights)), n_effective_(n_effective) {
    if (!weights_.empty() && weights_.size() != d.rows())
        throw Error(ErrorCode::InvalidArgument, "weights must hold one entry per row");
}

BicScorer::BicScorer(const data::CategoricalDataset& d) : BicScorer(d, {}, static_cast<double>(d.rows())) {}

double BicScorer::family_score(int child, std::span<const int> parents) const {
    std::vector<std::size_t> cols(parents.begin(), parents.end());
    return family_bic(count_family(data_, static_cast<std::size_t>(child), cols, weights_), n_effective_);
}

double FamilyScoreCache::score(int child, std::span<const int> parents) const {
    std::vector<int> key;
    key.reserve(parents.size() + 1);
    key.push_back(child);
    key.insert(key.end(), parents.begin(), parents.end());
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const double value = scorer_.family_score(child, parents);
    std::unique_lock lock(mutex_);
    return cache_.emplace(std::move(key), value).first->second;
}

double FamilyScoreCache::delta(int child, std::span<const int> before, std::span<const int> after) const {
    if (scorer_.context_free()) return score(child, after) - score(child, before);
    // -1 separates the two parent lists (indices are non-negative).
    std::vector<int> key;
    key.reserve(before.size() + after.size() + 2);
    key.push_back(child);
    key.insert(key.end(), before.begin(), before.end());
    key.push_back(-1);
    key.insert(key.end(), after.begin(), after.end());
    {
        std::shared_lock lock(mutex_);
        if (auto it = deltas_.find(key); it != deltas_.end()) return it->second;
    }
    const double value = scorer_.delta(child, before, after);
    std::unique_lock lock(mutex_);
    return deltas_.emplace(std::move(key), value).first->second;
}

double FamilyScoreCache::graph_score(const graphs::Dag& g) const {
    double total = 0.0;
    for (std::size_t v = 0; v < g.size(); ++v) total += score(static_cast<int>(v), g.parents(static_cast<int>(v)));
    return total;
}

std::size_t FamilyScoreCache::size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

}  // namespace mgd::estimation

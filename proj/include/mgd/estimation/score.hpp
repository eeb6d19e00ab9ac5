#ifndef MGD_ESTIMATION_SCORE_HPP
#define MGD_ESTIMATION_SCORE_HPP

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <span>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/estimation/counts.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::estimation {

// All scores are in nats.
struct ScoreValue {
    double log_likelihood = 0.0;
    double penalty = 0.0;
    double per_sample = 0.0;  // log_likelihood / n (0 when n = 0)

    double bic() const { return log_likelihood - penalty; }
};

// sum_{config, x} N(x, config) log(N(x, config) / N(config)), zero-count cells skipped.
double family_log_likelihood(const FamilyCounts& counts);
// (log n_effective / 2) * (|X| - 1) * configurations.
double family_penalty(const FamilyCounts& counts, double n_effective);
inline double family_bic(const FamilyCounts& counts, double n_effective) {
    return family_log_likelihood(counts) - family_penalty(counts, n_effective);
}

// Decomposable BIC over the families in `counts` (one per vertex of g).
ScoreValue bic(const graphs::Dag& g, const WeightedCounts& counts, double n_effective);

// A decomposable structure score: the score of a DAG is the sum of its
// families' scores. Vertex indices are the scorer's own variable indices.
class FamilyScorer {
public:
    virtual ~FamilyScorer() = default;
    virtual std::size_t variable_count() const = 0;
    // `parents` sorted ascending.
    virtual double family_score(int child, std::span<const int> parents) const = 0;

    // Score change when child's parents go from `before` to `after`. Scorers
    // whose family scores depend on the rows they are computed on override
    // this to compare both families on common rows, and return false from
    // context_free().
    virtual bool context_free() const { return true; }
    virtual double delta(int child, std::span<const int> before, std::span<const int> after) const {
        return family_score(child, after) - family_score(child, before);
    }
};

// BIC on a complete (optionally row-weighted) dataset whose columns are the
// search variables.
class BicScorer : public FamilyScorer {
public:
    BicScorer(const data::CategoricalDataset& d, std::vector<double> weights, double n_effective);
    explicit BicScorer(const data::CategoricalDataset& d);

    std::size_t variable_count() const override { return data_.cols(); }
    double family_score(int child, std::span<const int> parents) const override;

private:
    const data::CategoricalDataset& data_;
    std::vector<double> weights_;
    double n_effective_;
};

// Memoizes family scores by (child, parent set). Safe for concurrent lookups;
// concurrent misses on the same key may both compute, and the first value
// stored wins (scores are deterministic, so the results are identical).
class FamilyScoreCache {
public:
    explicit FamilyScoreCache(const FamilyScorer& scorer) : scorer_(scorer) {}

    double score(int child, std::span<const int> parents) const;
    // score(after) - score(before) for context-free scorers, else the
    // scorer's own (memoized) delta.
    double delta(int child, std::span<const int> before, std::span<const int> after) const;
    double graph_score(const graphs::Dag& g) const;
    std::size_t variable_count() const { return scorer_.variable_count(); }
    std::size_t size() const;
    const FamilyScorer& scorer() const { return scorer_; }

private:
    const FamilyScorer& scorer_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::vector<int>, double> cache_;
    mutable std::map<std::vector<int>, double> deltas_;
};

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_SCORE_HPP

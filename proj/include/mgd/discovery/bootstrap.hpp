#ifndef MGD_DISCOVERY_BOOTSTRAP_HPP
#define MGD_DISCOVERY_BOOTSTRAP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/discovery/knowledge.hpp"
#include "mgd/discovery/sem.hpp"
#include "mgd/estimation/score.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::discovery {

// Stream ids for seeds derived from a master seed. Replicate b uses stream b.
inline constexpr std::uint64_t kSplitStream = 0xFFFF0001ULL;

struct BootstrapOptions {
    std::size_t replicates = 100;
    double threshold = 0.5;
    std::uint64_t seed = 0;
    double held_out_fraction = 0.2;
    // Pseudocount of the parameters behind the reported log-likelihoods.
    double pseudocount = 1.0;
    SemOptions sem;
    unsigned threads = 1;
};

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation, 0 for a single value
};
MeanSd mean_sd(const std::vector<double>& values);

struct BootstrapSummary {
    std::size_t replicates = 0;
    // Occurrences / replicates, listing every edge seen at least once.
    std::map<graphs::NamedEdge, double> edge_frequency;
    std::vector<estimation::ScoreValue> in_sample;
    std::vector<estimation::ScoreValue> out_of_sample;
    MeanSd in_sample_ll;
    MeanSd out_of_sample_ll;

    double frequency(const graphs::NamedEdge& e) const;
};

struct BootstrapResult {
    graphs::Dag consensus;
    BootstrapSummary summary;
    std::vector<graphs::Dag> replicate_graphs;
};

// Edges with frequency >= threshold; while a directed cycle remains, drops
// its lowest-frequency non-required edge (first in (parent, child) order on
// ties); then adds any missing required edge.
graphs::Dag consensus_graph(const std::vector<std::string>& vertices, const std::map<graphs::Edge, double>& frequency,
                            double threshold, const Constraints& c);

// Bootstrap Structural EM. The data is split once (held-out rows chosen with
// the split stream); replicate b runs structural_em on a resample of the
// training rows drawn with derive_seed(seed, b). Each replicate's graph is
// refit by EM on its resample; in-sample LL is taken on the resample and
// out-of-sample LL on the held-out rows.
BootstrapResult bootstrap_sem(const data::CategoricalDataset& d, const Constraints& c, const BootstrapOptions& options);

// {"replicates", "edge_frequency": [{"parent","child","frequency"}], "in_sample": {...}, "out_of_sample": {...}}
std::string write_summary_json(const BootstrapSummary& s);

}  // namespace mgd::discovery

#endif  // MGD_DISCOVERY_BOOTSTRAP_HPP

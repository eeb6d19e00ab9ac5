#ifndef MGD_DISCOVERY_EVALUATE_HPP
#define MGD_DISCOVERY_EVALUATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/discovery/aipw.hpp"
#include "mgd/discovery/bootstrap.hpp"
#include "mgd/discovery/knowledge.hpp"
#include "mgd/discovery/sem.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/estimation/score.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::discovery {

enum class Algorithm { HcComplete, BootstrapSem, HcAipw };
// "HC-complete", "Bootstrap-SEM", "HC-aIPW".
const char* to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& s);

struct EvaluationOptions {
    std::vector<Algorithm> algorithms{Algorithm::HcComplete, Algorithm::BootstrapSem, Algorithm::HcAipw};
    std::size_t replicates = 100;
    double held_out_fraction = 0.2;
    std::uint64_t seed = 0;
    double pseudocount = 1.0;
    double alpha = 0.01;
    SemOptions sem;
    HillClimbOptions search;
    unsigned threads = 1;
};

struct EvaluationRow {
    std::string algorithm;
    std::size_t replicate = 0;
    estimation::ScoreValue ll_in;
    estimation::ScoreValue ll_out;
    double ll_in_rescaled = 0.0;
    double ll_out_rescaled = 0.0;
    graphs::Dag graph;
};

struct AlgorithmSummary {
    std::string algorithm;
    MeanSd ll_in, ll_out, ll_in_rescaled, ll_out_rescaled;
};

struct EvaluationReport {
    std::size_t replicates = 0;
    std::size_t n_in = 0;   // rows of each training resample
    std::size_t n_out = 0;  // held-out rows
    std::vector<EvaluationRow> rows;  // replicate-major, algorithms in the requested order
    std::vector<AlgorithmSummary> summaries;  // one per requested entry
};

// Missingness-aware model of data and indicators: the learned graph over the
// data columns plus one indicator R_X per partially observed column, with
// the given indicator parents (data-column indices).
graphs::Dag indicator_graph(const graphs::Dag& g, const data::CategoricalDataset& augmented,
                            const std::vector<std::vector<std::size_t>>& r_parents);
// Parameters of indicator_graph: the data-column CPTs are copied from `params`,
// the indicator CPTs are fitted on the rows of `augmented` where their
// parents are observed.
estimation::ParameterSet indicator_parameters(const graphs::Dag& model, const estimation::ParameterSet& params,
                                              const data::CategoricalDataset& augmented, double pseudocount);

// The data are augmented with missingness indicators (data::indicators) and
// split once with the split stream. Replicate b resamples the training rows
// with derive_seed(seed, b); every algorithm runs on that resample:
//   HC-complete    hill climbing on the mode-imputed resample, MLE parameters
//                  on the imputed rows, indicator parents detected among
//                  fully observed columns;
//   Bootstrap-SEM  structural_em on the resample, EM parameters, indicator
//                  parents as for HC-complete;
//   HC-aIPW        hc_aipw on the resample with its own detected indicator
//                  parents, IPW-weighted counts as the starting parameters.
// For Bootstrap-SEM and HC-aIPW the data and indicator CPTs are then refit
// jointly by EM on the augmented resample.
// ll_in / ll_out are the log-likelihoods of the observed cells together with
// the indicators, under indicator_graph, on the resample and on the held-out
// rows. Rescaling applies rescale_ll to each column across all rows.
EvaluationReport evaluate(const data::CategoricalDataset& d, const Constraints& c, const EvaluationOptions& options);

std::string write_report_json(const EvaluationReport& r);
// algorithm,replicate,ll_in,ll_out,ll_in_rescaled,ll_out_rescaled
std::string write_report_csv(const EvaluationReport& r);

}  // namespace mgd::discovery

#endif  // MGD_DISCOVERY_EVALUATE_HPP

#ifndef MGD_DATA_AMPUTATION_HPP
#define MGD_DATA_AMPUTATION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/graphs/mgraph.hpp"

namespace mgd::data {

// P(missing | drivers) = logistic(intercept + sum_d weights[d][state of d]).
// Driver states are read from the input (pre-amputation) values, so a target
// may drive itself (self-masking) or other targets.
struct AmputationTarget {
    std::string target;
    graphs::MechanismClass mechanism = graphs::MechanismClass::MCAR;
    std::vector<std::string> drivers;
    double intercept = 0.0;
    // One weight per driver state (state-index order). Absent drivers weigh 0.
    std::map<std::string, std::vector<double>> weights;
};

struct AmputationSpec {
    std::vector<AmputationTarget> targets;
    std::uint64_t seed = 0;
};

double logistic(double x);
// logit(p), mapping 0 and 1 to +-1000 so logistic() reproduces them exactly.
double logit(double p);

// Checks an amputation spec against a dataset without amputating: UnknownVariable for
// unknown targets/drivers, InvalidArgument for MCAR drivers or bad weight
// lengths, DriverMissing when a driver has missing cells or a MAR driver is
// itself amputated.
void validate_amputation(const CategoricalDataset& d, const AmputationSpec& spec);

// Masks each target cell independently with its row's logistic probability.
// Deterministic in spec.seed; unmasked cells are untouched.
CategoricalDataset ampute(const CategoricalDataset& d, const AmputationSpec& spec);

// The per-row missingness probability of one target entry (for tests and tools).
std::vector<double> missing_probabilities(const CategoricalDataset& d, const AmputationTarget& target);

// {"targets": [{"target", "mechanism", "drivers", "intercept", "weights": {driver: [..] | {state: w}}}], "seed"}
AmputationSpec parse_amputation_json(const std::string& text, const CategoricalDataset* d = nullptr);
std::string write_amputation_json(const AmputationSpec& spec);

}  // namespace mgd::data

#endif  // MGD_DATA_AMPUTATION_HPP

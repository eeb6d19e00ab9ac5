#ifndef MGD_DISCOVERY_MISSINGNESS_HPP
#define MGD_DISCOVERY_MISSINGNESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/graphs/dag.hpp"
#include "mgd/graphs/mgraph.hpp"

namespace mgd::discovery {

enum class SelfMasking { Suspected, NotDetected, Undetectable };
const char* to_string(SelfMasking s);

struct IndicatorReport {
    std::string variable;
    std::vector<std::string> parents;  // detected parents of R_variable
    SelfMasking self_masking = SelfMasking::Undetectable;
    // Class implied by this indicator's wiring alone (set once a causal graph is known).
    std::optional<graphs::MechanismClass> mechanism;
};

struct MissingnessReport {
    std::vector<IndicatorReport> indicators;  // one per partially observed column, in column order
    std::optional<graphs::MechanismClass> overall;
    double alpha = 0.01;
    std::size_t tests = 0;  // Bonferroni denominator
};

// Detects the parents of each indicator R_X among the other columns. Every
// (R_X, Y) pair is G-tested on the rows where Y is observed at level
// alpha / (number of pairs). Detected parents are then pruned one at a
// time, weakest association first: Y is dropped when R_X _||_ Y | Z is not
// rejected for some other retained parent Z. Partially observed Y are
// candidates too, tested on their available cases.
//
// Self-masking cannot be tested directly, since X is never seen where R_X = 1.
// The report marks it Suspected when a retained parent is itself associated
// with X on the available cases (a proxy of X), NotDetected when X has
// proxies but none drive R_X, and Undetectable when X has no proxy at all.
// A proxy-driven MAR mechanism looks the same as self-masking through that
// proxy, so Suspected is a flag for review rather than a verdict.
// With include_partial = false only fully observed columns are candidates.
MissingnessReport detect_missingness(const data::CategoricalDataset& d, double alpha = 0.01,
                                     bool include_partial = true);

// Detected parents as column indices, one list per column (empty for fully
// observed columns).
std::vector<std::vector<std::size_t>> r_parent_columns(const data::CategoricalDataset& d, const MissingnessReport& r);

// Classifies each indicator's wiring, and the joint wiring, on the m-graph
// built from `causal` (whose vertices are the columns of d).
void classify_report(MissingnessReport& r, const graphs::Dag& causal, const data::CategoricalDataset& d);

std::string write_report_json(const MissingnessReport& r);

}  // namespace mgd::discovery

#endif  // MGD_DISCOVERY_MISSINGNESS_HPP

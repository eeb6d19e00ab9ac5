#ifndef MGD_DISCOVERY_AIPW_HPP
#define MGD_DISCOVERY_AIPW_HPP

#include <cstddef>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/discovery/knowledge.hpp"
#include "mgd/discovery/missingness.hpp"
#include "mgd/discovery/search.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::discovery {

struct AipwOptions {
    double alpha = 0.01;
    HillClimbOptions search;
};

struct AipwResult {
    graphs::Dag graph;
    SearchTrace trace;
    MissingnessReport report;
    std::vector<std::vector<std::size_t>> r_parents;  // by column
};

// Hill climbing on inverse-probability-weighted family scores (IpwScorer)
// after detecting the missingness indicators' parents. Starts from the
// required edges. With no missing cells this is hill_climb on BicScorer.
AipwResult hc_aipw(const data::CategoricalDataset& d, const Constraints& c, const AipwOptions& options = {});

}  // namespace mgd::discovery

#endif  // MGD_DISCOVERY_AIPW_HPP

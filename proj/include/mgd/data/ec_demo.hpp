#ifndef MGD_DATA_EC_DEMO_HPP
#define MGD_DATA_EC_DEMO_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mgd/data/amputation.hpp"
#include "mgd/data/dataset.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/graphs/dag.hpp"
#include "mgd/graphs/io.hpp"

// Synthetic endometrial-cancer cohort: 19 categorical variables (clinical
// grades, treatments, tumour markers, lymph node metastasis, recurrence,
// survival and the treating hospital), a hand-written ground-truth DAG and
// fixed CPTs. Stands in for the private clinical data.
namespace mgd::data::ec_demo {

inline constexpr std::size_t kReferenceRows = 763;
inline constexpr std::size_t kHospitals = 10;

std::vector<VariableSchema> schema();
graphs::Dag graph();
estimation::ParameterSet parameters();
graphs::RoleMap roles();

// Forward-samples the ground truth (complete data).
CategoricalDataset sample(std::size_t n, std::uint64_t seed);

// Missing-not-at-random benchmark: CA125, p53 and L1CAM are masked with
// probabilities driven by other partially observed variables; LVSI is masked
// completely at random.
AmputationSpec mnar_amputation(std::uint64_t seed);

// Forbidden/required edges used by the demo experiments: survival ordering is
// required, and nothing may point into Hospital.
std::vector<graphs::NamedEdge> required_edges();
std::vector<graphs::NamedEdge> forbidden_edges();

}  // namespace mgd::data::ec_demo

#endif  // MGD_DATA_EC_DEMO_HPP

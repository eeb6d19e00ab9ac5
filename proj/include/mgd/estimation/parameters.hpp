#ifndef MGD_ESTIMATION_PARAMETERS_HPP
#define MGD_ESTIMATION_PARAMETERS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::estimation {

// P(X | parents) for one variable. Parent configurations are enumerated
// lexicographically over the parents in ascending vertex order, the first
// parent varying slowest; `table` is row-major (configuration, state).
struct Cpt {
    std::vector<int> parents;
    std::vector<std::size_t> parent_cardinalities;
    std::size_t cardinality = 0;
    std::vector<double> table;

    std::size_t configurations() const;
    std::span<const double> row(std::size_t config) const { return {table.data() + config * cardinality, cardinality}; }
    double prob(std::size_t config, int state) const { return table[config * cardinality + static_cast<std::size_t>(state)]; }
};

std::size_t configuration_count(std::span<const std::size_t> cardinalities);

// One CPT per graph vertex, aligned with the graph's vertex order. Construction
// checks that parents and dimensions match the graph and schema and that every
// row sums to 1 within 1e-9 (IncompleteParameters otherwise).
class ParameterSet {
public:
    ParameterSet() = default;
    ParameterSet(const graphs::Dag& g, std::vector<data::VariableSchema> schema, std::vector<Cpt> cpts,
                 double pseudocount = 0.0);

    std::size_t size() const { return cpts_.size(); }
    const std::vector<data::VariableSchema>& schema() const { return schema_; }
    const Cpt& cpt(std::size_t v) const { return cpts_.at(v); }
    const std::vector<Cpt>& cpts() const { return cpts_; }
    double pseudocount() const { return pseudocount_; }

    friend bool operator==(const ParameterSet& a, const ParameterSet& b) {
        return a.schema_ == b.schema_ && a.pseudocount_ == b.pseudocount_ && a.cpts_.size() == b.cpts_.size() &&
               std::equal(a.cpts_.begin(), a.cpts_.end(), b.cpts_.begin(), [](const Cpt& x, const Cpt& y) {
                   return x.parents == y.parents && x.table == y.table;
               });
    }

private:
    std::vector<data::VariableSchema> schema_;
    std::vector<Cpt> cpts_;
    double pseudocount_ = 0.0;
};

// Schema for each graph vertex taken from the dataset by name (SchemaMismatch if absent).
std::vector<data::VariableSchema> schema_for(const graphs::Dag& g, const data::CategoricalDataset& d);
// Dataset column of each graph vertex (SchemaMismatch if absent or if states differ).
std::vector<std::size_t> column_map(const graphs::Dag& g, const data::CategoricalDataset& d,
                                    const std::vector<data::VariableSchema>& schema);

// {"pseudocount": c, "variables": {name: {"states": [...], "parents": [...], "table": [[...], ...]}}}
std::string write_parameters_json(const ParameterSet& params, const graphs::Dag& g);
ParameterSet parse_parameters_json(const std::string& text, const graphs::Dag& g);

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_PARAMETERS_HPP

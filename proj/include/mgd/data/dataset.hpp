#ifndef MGD_DATA_DATASET_HPP
#define MGD_DATA_DATASET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mgd::data {

struct VariableSchema {
    std::string name;
    std::vector<std::string> states;

    std::size_t cardinality() const { return states.size(); }
    std::optional<int> state_index(const std::string& label) const;
};

// Throws InvalidArgument unless names are non-empty and unique and each
// variable has >= 2 unique state labels.
void validate_schema(const std::vector<VariableSchema>& schema);

// Tabular categorical data stored column-major. Missing cells hold kMissing;
// that sentinel is the mask, so estimators test is_missing() and never read
// the stored value of a masked cell.
class CategoricalDataset {
public:
    static constexpr int kMissing = -1;

    CategoricalDataset() = default;
    // columns[j] has one entry per row; every non-missing value must be a valid
    // state index for schema[j]. Throws InvalidArgument / SchemaMismatch.
    CategoricalDataset(std::vector<VariableSchema> schema, std::vector<std::vector<int>> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return schema_.size(); }
    const std::vector<VariableSchema>& schema() const { return schema_; }
    const VariableSchema& variable(std::size_t j) const { return schema_.at(j); }
    std::size_t cardinality(std::size_t j) const { return schema_.at(j).cardinality(); }

    std::optional<std::size_t> find(const std::string& name) const;
    // Throws UnknownVariable.
    std::size_t index_of(const std::string& name) const;

    std::span<const int> column(std::size_t j) const { return columns_.at(j); }
    int at(std::size_t row, std::size_t col) const { return columns_[col][row]; }
    bool is_missing(std::size_t row, std::size_t col) const { return columns_[col][row] == kMissing; }

    // Row-major n x p mask, true = missing.
    std::vector<std::vector<bool>> mask() const;
    std::size_t missing_count(std::size_t col) const;
    bool is_complete() const;
    // Columns with at least one missing cell, in column order.
    std::vector<std::size_t> partially_observed() const;

    CategoricalDataset select_rows(std::span<const std::size_t> rows) const;
    CategoricalDataset select_columns(std::span<const std::size_t> cols) const;

    friend bool operator==(const CategoricalDataset& a, const CategoricalDataset& b);

private:
    std::vector<VariableSchema> schema_;
    std::vector<std::vector<int>> columns_;
    std::size_t rows_ = 0;
};

bool operator==(const VariableSchema& a, const VariableSchema& b);

}  // namespace mgd::data

#endif  // MGD_DATA_DATASET_HPP

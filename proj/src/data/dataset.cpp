#include "mgd/data/dataset.hpp"

#include <algorithm>
#include <set>

#include "mgd/error.hpp"

namespace mgd::data {

std::optional<int> VariableSchema::state_index(const std::string& label) const {
    for (std::size_t s = 0; s < states.size(); ++s)
        if (states[s] == label) return static_cast<int>(s);
    return std::nullopt;
}

bool operator==(const VariableSchema& a, const VariableSchema& b) { return a.name == b.name && a.states == b.states; }

void validate_schema(const std::vector<VariableSchema>& schema) {
    std::set<std::string> names;
    for (const auto& v : schema) {
        if (v.name.empty()) throw Error(ErrorCode::InvalidArgument, "variable names must be non-empty");
        if (!names.insert(v.name).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + v.name + "'");
        if (v.states.size() < 2)
            throw Error(ErrorCode::InvalidArgument, "variable '" + v.name + "' needs at least two states");
        std::set<std::string> labels(v.states.begin(), v.states.end());
        if (labels.size() != v.states.size())
            throw Error(ErrorCode::InvalidArgument, "variable '" + v.name + "' has repeated state labels");
    }
}

CategoricalDataset::CategoricalDataset(std::vector<VariableSchema> schema, std::vector<std::vector<int>> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {
    validate_schema(schema_);
    if (columns_.size() != schema_.size())
        throw Error(ErrorCode::SchemaMismatch, "column count does not match schema");
    rows_ = columns_.empty() ? 0 : columns_.front().size();
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].size() != rows_) throw Error(ErrorCode::SchemaMismatch, "ragged columns");
        const int card = static_cast<int>(schema_[j].cardinality());
        for (int v : columns_[j])
            if (v != kMissing && (v < 0 || v >= card))
                throw Error(ErrorCode::SchemaMismatch, "state index out of range in column '" + schema_[j].name + "'");
    }
}

std::optional<std::size_t> CategoricalDataset::find(const std::string& name) const {
    for (std::size_t j = 0; j < schema_.size(); ++j)
        if (schema_[j].name == name) return j;
    return std::nullopt;
}

std::size_t CategoricalDataset::index_of(const std::string& name) const {
    if (auto j = find(name)) return *j;
    throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
}

std::vector<std::vector<bool>> CategoricalDataset::mask() const {
    std::vector<std::vector<bool>> out(rows_, std::vector<bool>(cols(), false));
    for (std::size_t j = 0; j < cols(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out[i][j] = columns_[j][i] == kMissing;
    return out;
}

std::size_t CategoricalDataset::missing_count(std::size_t col) const {
    const auto& c = columns_.at(col);
    return static_cast<std::size_t>(std::count(c.begin(), c.end(), kMissing));
}

bool CategoricalDataset::is_complete() const {
    for (std::size_t j = 0; j < cols(); ++j)
        if (missing_count(j) > 0) return false;
    return true;
}

std::vector<std::size_t> CategoricalDataset::partially_observed() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cols(); ++j)
        if (missing_count(j) > 0) out.push_back(j);
    return out;
}

CategoricalDataset CategoricalDataset::select_rows(std::span<const std::size_t> rows) const {
    std::vector<std::vector<int>> cols_out(cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        cols_out[j].reserve(rows.size());
        for (std::size_t r : rows) cols_out[j].push_back(columns_[j].at(r));
    }
    return CategoricalDataset(schema_, std::move(cols_out));
}

CategoricalDataset CategoricalDataset::select_columns(std::span<const std::size_t> cols_in) const {
    std::vector<VariableSchema> schema;
    std::vector<std::vector<int>> cols_out;
    for (std::size_t j : cols_in) {
        schema.push_back(schema_.at(j));
        cols_out.push_back(columns_.at(j));
    }
    return CategoricalDataset(std::move(schema), std::move(cols_out));
}

bool operator==(const CategoricalDataset& a, const CategoricalDataset& b) {
    return a.schema_ == b.schema_ && a.columns_ == b.columns_;
}

}  // namespace mgd::data

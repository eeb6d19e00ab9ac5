#ifndef MGD_DATA_CSV_HPP
#define MGD_DATA_CSV_HPP

#include <optional>
#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"

namespace mgd::data {

// RFC-4180-style CSV with a header row. "" and "NA" are the only missing
// tokens. Without a schema, states are inferred in first-appearance order; with
// one, header names must match the schema's variables (any order, result
// follows the header) and every cell must be a declared state.
// Errors: MalformedCsv, UnknownState (names row and column), HeaderMismatch.
CategoricalDataset parse_csv(const std::string& text,
                             const std::optional<std::vector<VariableSchema>>& schema = std::nullopt);
CategoricalDataset read_csv(const std::string& path,
                            const std::optional<std::vector<VariableSchema>>& schema = std::nullopt);

// Missing cells are written as NA; LF line endings; fields quoted only when needed.
std::string write_csv(const CategoricalDataset& d);
void write_csv_file(const std::string& path, const CategoricalDataset& d);

// {"variables": [{"name": ..., "states": [...]}, ...]}
std::vector<VariableSchema> parse_schema_json(const std::string& text);
std::string write_schema_json(const std::vector<VariableSchema>& schema);

}  // namespace mgd::data

#endif  // MGD_DATA_CSV_HPP

#include "mgd/data/csv.hpp"

#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "mgd/error.hpp"
#include "mgd/graphs/io.hpp"

namespace mgd::data {

namespace {

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t line = 1;
    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (in_quotes) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++line;
                field += ch;
            }
            continue;
        }
        switch (ch) {
            case '"':
                if (field_started)
                    throw Error(ErrorCode::MalformedCsv, "stray quote on line " + std::to_string(line));
                in_quotes = true;
                field_started = true;
                break;
            case ',':
                end_field();
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') break;
                [[fallthrough]];
            case '\n':
                end_record();
                ++line;
                break;
            default:
                field += ch;
                field_started = true;
        }
    }
    if (in_quotes) throw Error(ErrorCode::MalformedCsv, "unterminated quoted field");
    if (field_started || !record.empty()) end_record();
    return records;
}

bool is_missing_token(const std::string& s) { return s.empty() || s == "NA"; }

std::string escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos && s != "NA" && !s.empty()) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

CategoricalDataset parse_csv(const std::string& text, const std::optional<std::vector<VariableSchema>>& schema) {
    auto records = tokenize(text);
    if (records.empty()) throw Error(ErrorCode::MalformedCsv, "missing header row");
    const auto header = records.front();
    const std::size_t p = header.size();
    for (std::size_t r = 1; r < records.size(); ++r)
        if (records[r].size() != p)
            throw Error(ErrorCode::MalformedCsv, "row " + std::to_string(r) + " has " + std::to_string(records[r].size()) +
                                                     " fields, header has " + std::to_string(p));
    const std::size_t n = records.size() - 1;

    std::vector<VariableSchema> vars(p);
    if (schema) {
        std::map<std::string, const VariableSchema*> by_name;
        for (const auto& v : *schema) by_name[v.name] = &v;
        if (by_name.size() != p) throw Error(ErrorCode::HeaderMismatch, "header has " + std::to_string(p) +
                                                                            " columns, schema has " + std::to_string(by_name.size()));
        for (std::size_t j = 0; j < p; ++j) {
            auto it = by_name.find(header[j]);
            if (it == by_name.end()) throw Error(ErrorCode::HeaderMismatch, "column '" + header[j] + "' not in schema");
            vars[j] = *it->second;
        }
    } else {
        for (std::size_t j = 0; j < p; ++j) vars[j].name = header[j];
    }

    std::vector<std::vector<int>> columns(p, std::vector<int>(n, CategoricalDataset::kMissing));
    for (std::size_t j = 0; j < p; ++j) {
        std::unordered_map<std::string, int> lookup;
        for (std::size_t s = 0; s < vars[j].states.size(); ++s) lookup[vars[j].states[s]] = static_cast<int>(s);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& cell = records[i + 1][j];
            if (is_missing_token(cell)) continue;
            auto it = lookup.find(cell);
            if (it == lookup.end()) {
                if (schema)
                    throw Error(ErrorCode::UnknownState, "row " + std::to_string(i + 1) + ", column '" + header[j] +
                                                             "': state '" + cell + "' not in schema");
                it = lookup.emplace(cell, static_cast<int>(vars[j].states.size())).first;
                vars[j].states.push_back(cell);
            }
            columns[j][i] = it->second;
        }
        if (!schema && vars[j].states.size() < 2)
            throw Error(ErrorCode::MalformedCsv, "column '" + header[j] +
                                                     "' shows fewer than two distinct states; supply a schema");
    }
    return CategoricalDataset(std::move(vars), std::move(columns));
}

CategoricalDataset read_csv(const std::string& path, const std::optional<std::vector<VariableSchema>>& schema) {
    return parse_csv(graphs::read_text_file(path), schema);
}

std::string write_csv(const CategoricalDataset& d) {
    std::string out;
    for (std::size_t j = 0; j < d.cols(); ++j) out += (j ? "," : "") + escape(d.variable(j).name);
    out += '\n';
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (j) out += ',';
            out += d.is_missing(i, j) ? std::string("NA") : escape(d.variable(j).states[static_cast<std::size_t>(d.at(i, j))]);
        }
        out += '\n';
    }
    return out;
}

void write_csv_file(const std::string& path, const CategoricalDataset& d) { graphs::write_text_file(path, write_csv(d)); }

std::vector<VariableSchema> parse_schema_json(const std::string& text) {
    std::vector<VariableSchema> out;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& v : doc.at("variables"))
            out.push_back({v.at("name").get<std::string>(), v.at("states").get<std::vector<std::string>>()});
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("schema JSON: ") + e.what());
    }
    validate_schema(out);
    return out;
}

std::string write_schema_json(const std::vector<VariableSchema>& schema) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : schema) vars.push_back({{"name", v.name}, {"states", v.states}});
    return nlohmann::json{{"variables", vars}}.dump(2) + "\n";
}

}  // namespace mgd::data

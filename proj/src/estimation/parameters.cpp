#include "mgd/estimation/parameters.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "mgd/error.hpp"

namespace mgd::estimation {

std::size_t configuration_count(std::span<const std::size_t> cardinalities) {
    std::size_t total = 1;
    for (std::size_t c : cardinalities) total *= c;
    return total;
}

std::size_t Cpt::configurations() const { return configuration_count(parent_cardinalities); }

ParameterSet::ParameterSet(const graphs::Dag& g, std::vector<data::VariableSchema> schema, std::vector<Cpt> cpts,
                           double pseudocount)
    : schema_(std::move(schema)), cpts_(std::move(cpts)), pseudocount_(pseudocount) {
    if (schema_.size() != g.size() || cpts_.size() != g.size())
        throw Error(ErrorCode::IncompleteParameters, "parameter set must hold one CPT per vertex");
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& name = g.name(static_cast<int>(v));
        if (schema_[v].name != name)
            throw Error(ErrorCode::IncompleteParameters, "CPT " + std::to_string(v) + " is for '" + schema_[v].name +
                                                             "', expected '" + name + "'");
        const Cpt& cpt = cpts_[v];
        if (cpt.parents != g.parents(static_cast<int>(v)))
            throw Error(ErrorCode::IncompleteParameters, "CPT parents of '" + name + "' differ from the graph");
        if (cpt.cardinality != schema_[v].cardinality() || cpt.parent_cardinalities.size() != cpt.parents.size())
            throw Error(ErrorCode::IncompleteParameters, "CPT dimensions of '" + name + "' differ from the schema");
        for (std::size_t k = 0; k < cpt.parents.size(); ++k)
            if (cpt.parent_cardinalities[k] != schema_[static_cast<std::size_t>(cpt.parents[k])].cardinality())
                throw Error(ErrorCode::IncompleteParameters, "parent cardinality mismatch in CPT of '" + name + "'");
        if (cpt.table.size() != cpt.configurations() * cpt.cardinality)
            throw Error(ErrorCode::IncompleteParameters, "CPT of '" + name + "' has the wrong number of entries");
        for (std::size_t c = 0; c < cpt.configurations(); ++c) {
            double sum = 0.0;
            for (double p : cpt.row(c)) {
                if (!(p >= 0.0) || !std::isfinite(p))
                    throw Error(ErrorCode::IncompleteParameters, "CPT of '" + name + "' has an invalid probability");
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-9)
                throw Error(ErrorCode::IncompleteParameters, "CPT row of '" + name + "' does not sum to 1");
        }
    }
}

std::vector<data::VariableSchema> schema_for(const graphs::Dag& g, const data::CategoricalDataset& d) {
    std::vector<data::VariableSchema> out;
    out.reserve(g.size());
    for (const auto& name : g.vertices()) {
        auto j = d.find(name);
        if (!j) throw Error(ErrorCode::SchemaMismatch, "dataset has no column '" + name + "'");
        out.push_back(d.variable(*j));
    }
    return out;
}

std::vector<std::size_t> column_map(const graphs::Dag& g, const data::CategoricalDataset& d,
                                    const std::vector<data::VariableSchema>& schema) {
    std::vector<std::size_t> out;
    out.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto j = d.find(g.name(static_cast<int>(v)));
        if (!j) throw Error(ErrorCode::SchemaMismatch, "dataset has no column '" + g.name(static_cast<int>(v)) + "'");
        if (d.variable(*j).states != schema.at(v).states)
            throw Error(ErrorCode::SchemaMismatch, "states of '" + g.name(static_cast<int>(v)) + "' differ from the model");
        out.push_back(*j);
    }
    return out;
}

std::string write_parameters_json(const ParameterSet& params, const graphs::Dag& g) {
    nlohmann::json vars = nlohmann::json::object();
    for (std::size_t v = 0; v < g.size(); ++v) {
        const Cpt& cpt = params.cpt(v);
        nlohmann::json parents = nlohmann::json::array();
        for (int p : cpt.parents) parents.push_back(g.name(p));
        nlohmann::json table = nlohmann::json::array();
        for (std::size_t c = 0; c < cpt.configurations(); ++c) {
            auto row = cpt.row(c);
            table.push_back(std::vector<double>(row.begin(), row.end()));
        }
        vars[g.name(static_cast<int>(v))] = {{"states", params.schema()[v].states}, {"parents", parents}, {"table", table}};
    }
    return nlohmann::json{{"pseudocount", params.pseudocount()}, {"variables", vars}}.dump(2) + "\n";
}

ParameterSet parse_parameters_json(const std::string& text, const graphs::Dag& g) {
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto& vars = doc.at("variables");
        std::vector<data::VariableSchema> schema(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
            const auto& name = g.name(static_cast<int>(v));
            if (!vars.contains(name)) throw Error(ErrorCode::IncompleteParameters, "no parameters for '" + name + "'");
            schema[v] = {name, vars.at(name).at("states").get<std::vector<std::string>>()};
        }
        data::validate_schema(schema);
        std::vector<Cpt> cpts(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
            const auto& entry = vars.at(g.name(static_cast<int>(v)));
            Cpt& cpt = cpts[v];
            for (const auto& p : entry.at("parents")) cpt.parents.push_back(g.index_of(p.get<std::string>()));
            for (int p : cpt.parents) cpt.parent_cardinalities.push_back(schema[static_cast<std::size_t>(p)].cardinality());
            cpt.cardinality = schema[v].cardinality();
            for (const auto& row : entry.at("table")) {
                auto values = row.get<std::vector<double>>();
                if (values.size() != cpt.cardinality)
                    throw Error(ErrorCode::IncompleteParameters, "table row width mismatch for '" + schema[v].name + "'");
                cpt.table.insert(cpt.table.end(), values.begin(), values.end());
            }
        }
        return ParameterSet(g, std::move(schema), std::move(cpts), doc.value("pseudocount", 0.0));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("parameter JSON: ") + e.what());
    }
}

}  // namespace mgd::estimation

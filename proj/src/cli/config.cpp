#include "mgd/cli/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <set>

#include "mgd/data/amputation.hpp"
#include "mgd/data/csv.hpp"
#include "mgd/data/ec_demo.hpp"
#include "mgd/error.hpp"
#include "mgd/random.hpp"

namespace mgd::cli {
namespace {

using nlohmann::json;

// Seed streams of the synthetic datasets.
constexpr std::uint64_t kSampleStream = 0xEC0001ULL;
constexpr std::uint64_t kAmputeStream = 0xEC0002ULL;

std::string resolve_path(const std::string& path, const std::string& base_dir) {
    if (base_dir.empty() || std::filesystem::path(path).is_absolute()) return path;
    return (std::filesystem::path(base_dir) / path).string();
}

void require_file(const std::string& path, const std::string& field) {
    if (!std::filesystem::is_regular_file(path)) throw ConfigError("config field '" + field + "': no such file '" + path + "'");
}

template <typename T>
T get(const json& doc, const std::string& key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config field '" + key + "' has the wrong type");
    }
}

}  // namespace

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError(what + ": seed must be an unsigned integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw ConfigError(what + ": seed out of range");
    }
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> config) {
    if (flag) return *flag;
    if (config) return *config;
    if (const char* env = std::getenv("MGD_SEED"); env && *env) return parse_seed(env, "MGD_SEED");
    throw ConfigError("no seed given (use --seed, the config's 'seed', or MGD_SEED)");
}

ExperimentConfig parse_config(const std::string& text, const std::string& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> known = {
        "dataset", "schema", "rows", "knowledge", "roles", "algorithm", "algorithms", "replicates", "threshold",
        "alpha", "pseudocount", "max_iter", "max_outer", "held_out_fraction", "max_parents", "seed", "out"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");

    ExperimentConfig c;
    if (!doc.contains("dataset")) throw ConfigError("config field 'dataset' is missing");
    c.dataset = get<std::string>(doc, "dataset");
    if (c.dataset != kEcDemo && c.dataset != kEcDemoMnar) {
        c.dataset = resolve_path(c.dataset, base_dir);
        require_file(c.dataset, "dataset");
    }
    if (doc.contains("schema")) {
        c.schema = resolve_path(get<std::string>(doc, "schema"), base_dir);
        require_file(*c.schema, "schema");
    }
    if (doc.contains("knowledge")) {
        c.knowledge = get<std::string>(doc, "knowledge");
        if (*c.knowledge != kBuiltinEcDemo) {
            c.knowledge = resolve_path(*c.knowledge, base_dir);
            require_file(*c.knowledge, "knowledge");
        }
    }
    if (doc.contains("roles")) {
        c.roles = get<std::string>(doc, "roles");
        if (*c.roles != kBuiltinEcDemo) {
            c.roles = resolve_path(*c.roles, base_dir);
            require_file(*c.roles, "roles");
        }
    }
    try {
        if (doc.contains("algorithm")) c.algorithms.push_back(discovery::parse_algorithm(get<std::string>(doc, "algorithm")));
        if (doc.contains("algorithms"))
            for (const auto& a : get<std::vector<std::string>>(doc, "algorithms")) c.algorithms.push_back(discovery::parse_algorithm(a));
    } catch (const Error& e) {
        throw ConfigError(std::string("config field 'algorithm': ") + e.what());
    }
    if (doc.contains("rows")) c.rows = get<std::size_t>(doc, "rows");
    if (doc.contains("replicates")) c.replicates = get<std::size_t>(doc, "replicates");
    if (doc.contains("threshold")) c.threshold = get<double>(doc, "threshold");
    if (doc.contains("alpha")) c.alpha = get<double>(doc, "alpha");
    if (doc.contains("pseudocount")) c.pseudocount = get<double>(doc, "pseudocount");
    if (doc.contains("max_iter")) c.max_iter = get<std::size_t>(doc, "max_iter");
    if (doc.contains("max_outer")) c.max_outer = get<std::size_t>(doc, "max_outer");
    if (doc.contains("held_out_fraction")) c.held_out_fraction = get<double>(doc, "held_out_fraction");
    if (doc.contains("max_parents")) c.max_parents = get<std::size_t>(doc, "max_parents");
    if (doc.contains("seed")) c.seed = get<std::uint64_t>(doc, "seed");
    if (doc.contains("out")) c.out = resolve_path(get<std::string>(doc, "out"), base_dir);

    if (c.replicates == 0) throw ConfigError("config field 'replicates' must be at least 1");
    if (!(c.threshold > 0.0 && c.threshold <= 1.0)) throw ConfigError("config field 'threshold' must lie in (0, 1]");
    if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw ConfigError("config field 'alpha' must lie in (0, 1)");
    if (!(c.pseudocount >= 0.0)) throw ConfigError("config field 'pseudocount' must be non-negative");
    if (!(c.held_out_fraction > 0.0 && c.held_out_fraction < 1.0))
        throw ConfigError("config field 'held_out_fraction' must lie in (0, 1)");
    return c;
}

ExperimentConfig read_config(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw ConfigError("config file '" + path + "' not found");
    return parse_config(graphs::read_text_file(path), std::filesystem::path(path).parent_path().string());
}

data::CategoricalDataset load_dataset(const ExperimentConfig& config, std::uint64_t seed) {
    if (config.dataset == kEcDemo || config.dataset == kEcDemoMnar) {
        auto d = data::ec_demo::sample(config.rows, derive_seed(seed, kSampleStream));
        if (config.dataset == kEcDemoMnar) d = data::ampute(d, data::ec_demo::mnar_amputation(derive_seed(seed, kAmputeStream)));
        return d;
    }
    std::optional<std::vector<data::VariableSchema>> schema;
    if (config.schema) schema = data::parse_schema_json(graphs::read_text_file(*config.schema));
    return data::read_csv(config.dataset, schema);
}

discovery::KnowledgeBase load_knowledge(const ExperimentConfig& config) {
    discovery::KnowledgeBase kb;
    if (!config.knowledge) return kb;
    if (*config.knowledge == kBuiltinEcDemo) {
        for (const auto& e : data::ec_demo::required_edges()) kb.required.insert(e);
        for (const auto& e : data::ec_demo::forbidden_edges()) kb.forbidden.insert(e);
        return kb;
    }
    return discovery::parse_knowledge_json(graphs::read_text_file(*config.knowledge));
}

std::optional<graphs::RoleMap> load_roles(const ExperimentConfig& config) {
    if (config.roles) {
        if (*config.roles == kBuiltinEcDemo) return data::ec_demo::roles();
        return graphs::parse_role_json(graphs::read_text_file(*config.roles));
    }
    if (config.dataset == kEcDemo || config.dataset == kEcDemoMnar) return data::ec_demo::roles();
    return std::nullopt;
}

}  // namespace mgd::cli

#ifndef MGD_CLI_CONFIG_HPP
#define MGD_CLI_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgd/data/dataset.hpp"
#include "mgd/discovery/evaluate.hpp"
#include "mgd/discovery/knowledge.hpp"
#include "mgd/graphs/io.hpp"

namespace mgd::cli {

// Usage or configuration problem: exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Synthetic dataset references accepted in place of a CSV path.
inline constexpr const char* kEcDemo = "synthetic:ec-demo";
inline constexpr const char* kEcDemoMnar = "synthetic:ec-demo-mnar";
inline constexpr const char* kBuiltinEcDemo = "builtin:ec-demo";

struct ExperimentConfig {
    std::string dataset;                // CSV path or a synthetic reference
    std::optional<std::string> schema;  // schema JSON for the CSV
    std::size_t rows = 763;             // synthetic datasets only
    std::optional<std::string> knowledge;
    std::optional<std::string> roles;
    std::vector<discovery::Algorithm> algorithms;
    std::size_t replicates = 100;
    double threshold = 0.5;
    double alpha = 0.01;
    double pseudocount = 1.0;
    std::size_t max_iter = 100;  // EM iterations
    std::size_t max_outer = 20;  // Structural EM iterations
    double held_out_fraction = 0.2;
    std::size_t max_parents = 4;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
};

// Reads a config JSON. Relative paths are resolved against the config's
// directory. Unknown keys, wrong types, missing files and a missing dataset
// are ConfigErrors naming the field.
ExperimentConfig parse_config(const std::string& text, const std::string& base_dir = "");
ExperimentConfig read_config(const std::string& path);

// Seed precedence: flag, then config, then MGD_SEED. ConfigError if none.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> config);
std::uint64_t parse_seed(const std::string& text, const std::string& what);

// The experiment's dataset. Synthetic data derive their sampling and
// amputation seeds from the master seed.
data::CategoricalDataset load_dataset(const ExperimentConfig& config, std::uint64_t seed);
discovery::KnowledgeBase load_knowledge(const ExperimentConfig& config);
std::optional<graphs::RoleMap> load_roles(const ExperimentConfig& config);

}  // namespace mgd::cli

#endif  // MGD_CLI_CONFIG_HPP

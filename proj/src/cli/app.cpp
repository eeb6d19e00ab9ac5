#include "mgd/cli/app.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <ostream>

#include "mgd/cli/config.hpp"
#include "mgd/cli/query.hpp"
#include "mgd/data/amputation.hpp"
#include "mgd/data/csv.hpp"
#include "mgd/data/sampling.hpp"
#include "mgd/data/transforms.hpp"
#include "mgd/discovery/aipw.hpp"
#include "mgd/discovery/bootstrap.hpp"
#include "mgd/discovery/evaluate.hpp"
#include "mgd/error.hpp"
#include "mgd/estimation/parameters.hpp"
#include "mgd/estimation/score.hpp"
#include "mgd/graphs/dsep.hpp"
#include "mgd/graphs/io.hpp"
#include "mgd/parallel.hpp"

namespace mgd::cli {
namespace {

using nlohmann::json;

class Logger {
public:
    Logger(std::ostream& err, const bool& json) : err_(err), json_(json) {}

    void log(const char* level, const std::string& message) const {
        if (json_)
            err_ << json{{"level", level}, {"message", message}}.dump() << "\n";
        else
            err_ << level << ": " << message << "\n";
    }
    void info(const std::string& m) const { log("info", m); }
    void error(const std::string& m) const { log("error", m); }

private:
    std::ostream& err_;
    const bool& json_;
};

struct Globals {
    std::string config;
    std::string seed;
    unsigned threads = 0;
    std::string out;
    bool json_logs = false;
};

struct DataFlags {
    std::string data;
    std::string schema;
    std::vector<std::string> algorithms;
    std::string knowledge;
};

std::optional<std::uint64_t> flag_seed(const Globals& g) {
    if (g.seed.empty()) return std::nullopt;
    return parse_seed(g.seed, "--seed");
}

unsigned thread_count(const Globals& g) { return g.threads ? g.threads : default_thread_count(); }

// Config from --config (if any) with command-line overrides applied.
ExperimentConfig experiment(const Globals& g, const DataFlags& f) {
    ExperimentConfig c;
    if (!g.config.empty()) {
        c = read_config(g.config);
    } else if (f.data.empty()) {
        throw ConfigError("config field 'dataset' is missing (give --config or --data)");
    }
    if (!f.data.empty()) {
        json doc = {{"dataset", f.data}};
        if (!f.schema.empty()) doc["schema"] = f.schema;
        const auto flags = parse_config(doc.dump());
        c.dataset = flags.dataset;
        c.schema = flags.schema;
    }
    if (!f.algorithms.empty()) {
        c.algorithms.clear();
        try {
            for (const auto& a : f.algorithms) c.algorithms.push_back(discovery::parse_algorithm(a));
        } catch (const Error& e) {
            throw ConfigError(std::string("--algorithm: ") + e.what());
        }
    }
    if (!f.knowledge.empty()) {
        c.knowledge = f.knowledge;
        if (f.knowledge != kBuiltinEcDemo && !std::filesystem::is_regular_file(f.knowledge))
            throw ConfigError("--knowledge: no such file '" + f.knowledge + "'");
    }
    if (!g.out.empty()) c.out = g.out;
    return c;
}

std::filesystem::path output_dir(const ExperimentConfig& c) {
    if (!c.out) throw ConfigError("config field 'out' is missing (give --out)");
    std::filesystem::create_directories(*c.out);
    return *c.out;
}

std::vector<std::string> column_names(const data::CategoricalDataset& d) {
    std::vector<std::string> out;
    for (const auto& v : d.schema()) out.push_back(v.name);
    return out;
}

discovery::Constraints constraints_for(const ExperimentConfig& c, const data::CategoricalDataset& d) {
    try {
        return discovery::resolve(load_knowledge(c), column_names(d));
    } catch (const Error& e) {
        throw ConfigError(std::string("knowledge: ") + e.what());
    }
}

graphs::ClassMap data_classes(const data::CategoricalDataset& d) {
    graphs::ClassMap classes;
    for (std::size_t j = 0; j < d.cols(); ++j)
        classes.push_back(d.missing_count(j) ? graphs::VertexClass::PartiallyObserved : graphs::VertexClass::Observed);
    return classes;
}

discovery::SemOptions sem_options(const ExperimentConfig& c, unsigned threads) {
    discovery::SemOptions sem;
    sem.max_outer = c.max_outer;
    sem.em.max_iter = c.max_iter;
    sem.search.max_parents = c.max_parents;
    sem.search.threads = threads;
    return sem;
}

void write(const std::filesystem::path& dir, const std::string& file, const std::string& text) {
    graphs::write_text_file((dir / file).string(), text);
}

int cmd_discover(const Globals& g, const DataFlags& f, const Logger& log) {
    const auto c = experiment(g, f);
    if (c.algorithms.size() != 1) throw ConfigError("config field 'algorithm' must name exactly one algorithm");
    const auto seed = resolve_seed(flag_seed(g), c.seed);
    const auto dir = output_dir(c);
    const unsigned threads = thread_count(g);
    const auto d = load_dataset(c, seed);
    const auto kb = constraints_for(c, d);
    const auto algorithm = c.algorithms.front();

    graphs::Dag graph;
    json trace;
    switch (algorithm) {
        case discovery::Algorithm::HcComplete: {
            const auto imputed = data::impute_mode(d);
            const estimation::BicScorer scorer(imputed);
            const estimation::FamilyScoreCache cache(scorer);
            discovery::HillClimbOptions search;
            search.max_parents = c.max_parents;
            search.threads = threads;
            auto result = discovery::hill_climb(cache, kb, discovery::required_graph(column_names(d), kb), search);
            graph = std::move(result.graph);
            trace = json::parse(discovery::write_trace_json(result.trace, graph));
            break;
        }
        case discovery::Algorithm::BootstrapSem: {
            discovery::BootstrapOptions options;
            options.replicates = c.replicates;
            options.threshold = c.threshold;
            options.seed = seed;
            options.held_out_fraction = c.held_out_fraction;
            options.pseudocount = c.pseudocount;
            options.sem = sem_options(c, threads);
            options.threads = threads;
            auto result = discovery::bootstrap_sem(d, kb, options);
            graph = std::move(result.consensus);
            json edges = json::array();
            for (const auto& r : result.replicate_graphs) edges.push_back(r.edge_count());
            trace = {{"replicates", c.replicates}, {"threshold", c.threshold}, {"replicate_edge_counts", edges}};
            write(dir, "summary.json", discovery::write_summary_json(result.summary));
            break;
        }
        case discovery::Algorithm::HcAipw: {
            discovery::AipwOptions options;
            options.alpha = c.alpha;
            options.search.max_parents = c.max_parents;
            options.search.threads = threads;
            auto result = discovery::hc_aipw(d, kb, options);
            graph = std::move(result.graph);
            trace = json::parse(discovery::write_trace_json(result.trace, graph));
            write(dir, "missingness.json", discovery::write_report_json(result.report));
            break;
        }
    }
    trace["algorithm"] = discovery::to_string(algorithm);
    const auto classes = data_classes(d);
    write(dir, "graph.json", graphs::write_graph_json(graph, classes));
    write(dir, "graph.dot", graphs::export_dot(graph, classes, load_roles(c)));
    write(dir, "trace.json", trace.dump(2) + "\n");
    log.info(std::string(discovery::to_string(algorithm)) + ": " + std::to_string(graph.edge_count()) + " edges written to " +
             dir.string());
    return 0;
}

int cmd_evaluate(const Globals& g, const DataFlags& f, const Logger& log) {
    const auto c = experiment(g, f);
    const auto seed = resolve_seed(flag_seed(g), c.seed);
    const auto dir = output_dir(c);
    const unsigned threads = thread_count(g);
    const auto d = load_dataset(c, seed);
    const auto kb = constraints_for(c, d);

    discovery::EvaluationOptions options;
    if (!c.algorithms.empty()) options.algorithms = c.algorithms;
    options.replicates = c.replicates;
    options.held_out_fraction = c.held_out_fraction;
    options.seed = seed;
    options.pseudocount = c.pseudocount;
    options.alpha = c.alpha;
    options.sem = sem_options(c, threads);
    options.search = options.sem.search;
    options.threads = threads;
    const auto report = discovery::evaluate(d, kb, options);
    write(dir, "report.json", discovery::write_report_json(report));
    write(dir, "report.csv", discovery::write_report_csv(report));
    for (const auto& s : report.summaries)
        log.info(s.algorithm + ": rescaled LL in " + std::to_string(s.ll_in_rescaled.mean) + ", out " +
                 std::to_string(s.ll_out_rescaled.mean));
    return 0;
}

graphs::GraphDocument read_graph_any(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw ConfigError("--graph: no such file '" + path + "'");
    try {
        const auto text = graphs::read_text_file(path);
        if (std::filesystem::path(path).extension() == ".dot" || std::filesystem::path(path).extension() == ".gv")
            return graphs::parse_dot(text);
        return graphs::parse_graph_json(text);
    } catch (const Error& e) {
        throw ConfigError(std::string("--graph: ") + e.what());
    }
}

int cmd_dsep(const std::string& graph_path, const std::string& query_text, std::ostream& out) {
    const auto doc = read_graph_any(graph_path);
    const auto q = parse_dsep_query(query_text);
    std::optional<std::vector<int>> trail;
    try {
        trail = graphs::active_trail(doc.graph, graphs::resolve_vertices(doc.graph, q.x),
                                     graphs::resolve_vertices(doc.graph, q.y), graphs::resolve_vertices(doc.graph, q.z));
    } catch (const Error& e) {
        throw ConfigError(std::string("query: ") + e.what());
    }
    if (!trail) {
        out << "d-separated\n";
        return 0;
    }
    out << "d-connected\n";
    std::string line = "path: " + doc.graph.name((*trail)[0]);
    for (std::size_t i = 1; i < trail->size(); ++i) {
        const int a = (*trail)[i - 1], b = (*trail)[i];
        line += doc.graph.has_edge(a, b) ? " -> " : " <- ";
        line += doc.graph.name(b);
    }
    out << line << "\n";
    return 0;
}

void emit(const Globals& g, const std::string& file, const std::string& text, std::ostream& out, const Logger& log) {
    if (g.out.empty()) {
        out << text;
        return;
    }
    std::filesystem::create_directories(g.out);
    write(g.out, file, text);
    log.info("wrote " + (std::filesystem::path(g.out) / file).string());
}

int cmd_ampute(const Globals& g, const std::string& data_path, const std::string& schema_path,
               const std::string& spec_path, std::ostream& out, const Logger& log) {
    ExperimentConfig c;
    {
        json doc = {{"dataset", data_path}};
        if (!schema_path.empty()) doc["schema"] = schema_path;
        c = parse_config(doc.dump());
    }
    if (!std::filesystem::is_regular_file(spec_path)) throw ConfigError("--spec: no such file '" + spec_path + "'");
    const auto d = load_dataset(c, 0);
    data::AmputationSpec spec;
    try {
        const auto text = graphs::read_text_file(spec_path);
        spec = data::parse_amputation_json(text, &d);
        const bool has_seed = json::parse(text).contains("seed");
        if (auto s = flag_seed(g)) {
            spec.seed = *s;
        } else if (!has_seed) {
            spec.seed = resolve_seed(std::nullopt, std::nullopt);
        }
        data::validate_amputation(d, spec);
    } catch (const Error& e) {
        throw ConfigError(std::string("--spec: ") + e.what());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("--spec: ") + e.what());
    }
    emit(g, "amputed.csv", data::write_csv(data::ampute(d, spec)), out, log);
    return 0;
}

int cmd_simulate(const Globals& g, const std::string& model, std::size_t rows, std::ostream& out, const Logger& log) {
    const auto seed = resolve_seed(flag_seed(g), std::nullopt);
    data::CategoricalDataset d;
    if (model == "ec-demo" || model == "ec-demo-mnar") {
        ExperimentConfig c;
        c.dataset = model == "ec-demo" ? kEcDemo : kEcDemoMnar;
        c.rows = rows;
        d = load_dataset(c, seed);
    } else {
        if (!std::filesystem::is_regular_file(model)) throw ConfigError("--model: expected ec-demo, ec-demo-mnar or a model file");
        graphs::Dag graph;
        estimation::ParameterSet params;
        try {
            const auto doc = json::parse(graphs::read_text_file(model));
            graph = graphs::parse_graph_json(doc.at("graph").dump()).graph;
            params = estimation::parse_parameters_json(doc.at("parameters").dump(), graph);
        } catch (const Error& e) {
            throw ConfigError(std::string("--model: ") + e.what());
        } catch (const json::exception& e) {
            throw ConfigError(std::string("--model: ") + e.what());
        }
        d = data::forward_sample(graph, params, rows, seed);
    }
    emit(g, "simulated.csv", data::write_csv(d), out, log);
    // State order is only recoverable from a schema, so keep one next to the CSV.
    if (!g.out.empty()) emit(g, "schema.json", data::write_schema_json(d.schema()), out, log);
    return 0;
}

int cmd_export_dot(const Globals& g, const std::string& graph_path, const std::string& roles_path, std::ostream& out,
                   const Logger& log) {
    const auto doc = read_graph_any(graph_path);
    std::optional<graphs::RoleMap> roles;
    if (roles_path == kBuiltinEcDemo) {
        ExperimentConfig c;
        c.roles = roles_path;
        roles = load_roles(c);
    } else if (!roles_path.empty()) {
        if (!std::filesystem::is_regular_file(roles_path)) throw ConfigError("--roles: no such file '" + roles_path + "'");
        try {
            roles = graphs::parse_role_json(graphs::read_text_file(roles_path));
        } catch (const Error& e) {
            throw ConfigError(std::string("--roles: ") + e.what());
        }
    }
    emit(g, "graph.dot", graphs::export_dot(doc.graph, doc.classes, roles), out, log);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Globals g;
    const Logger log(err, g.json_logs);
    CLI::App app{"Causal discovery on categorical data with missing values", "mgd"};
    app.require_subcommand(1);
    app.add_option("--config", g.config, "Experiment config JSON");
    app.add_option("--seed", g.seed, "Master seed (falls back to the config, then MGD_SEED)");
    app.add_option("--threads", g.threads, "Worker threads (default: available processors)")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Output directory");
    app.add_flag("--json-logs", g.json_logs, "Diagnostics as line-delimited JSON");

    DataFlags f;
    auto add_data_flags = [&f](CLI::App* sub) {
        sub->add_option("--data", f.data, "Dataset CSV or synthetic:ec-demo[-mnar]");
        sub->add_option("--schema", f.schema, "Schema JSON for the dataset");
        sub->add_option("--algorithm", f.algorithms, "HC-complete, Bootstrap-SEM or HC-aIPW");
        sub->add_option("--knowledge", f.knowledge, "Knowledge JSON or builtin:ec-demo");
    };
    auto* discover = app.add_subcommand("discover", "Learn a graph with one algorithm")->fallthrough();
    add_data_flags(discover);
    auto* evaluate = app.add_subcommand("evaluate", "Compare algorithms by in/out-of-sample log-likelihood")->fallthrough();
    add_data_flags(evaluate);

    std::string graph_path, query, spec_path, model, roles_path;
    std::size_t rows = 0;
    auto* dsep = app.add_subcommand("dsep", "d-separation query, e.g. 'X _||_ Y | Z1,Z2'")->fallthrough();
    dsep->add_option("--graph", graph_path, "Graph JSON or DOT")->required();
    dsep->add_option("query", query, "Query")->required();
    auto* ampute = app.add_subcommand("ampute", "Inject missing values")->fallthrough();
    ampute->add_option("--data", f.data, "Dataset CSV")->required();
    ampute->add_option("--schema", f.schema, "Schema JSON for the dataset");
    ampute->add_option("--spec", spec_path, "Amputation spec JSON")->required();
    auto* simulate = app.add_subcommand("simulate", "Forward-sample a model")->fallthrough();
    simulate->add_option("--model", model, "ec-demo, ec-demo-mnar, or a JSON file {graph, parameters}")->required();
    simulate->add_option("--rows", rows, "Number of rows")->required();
    auto* export_dot = app.add_subcommand("export-dot", "Render a graph as DOT")->fallthrough();
    export_dot->add_option("--graph", graph_path, "Graph JSON or DOT")->required();
    export_dot->add_option("--roles", roles_path, "Role JSON or builtin:ec-demo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        log.error(e.what());
        return 2;
    }

    try {
        if (*discover) return cmd_discover(g, f, log);
        if (*evaluate) return cmd_evaluate(g, f, log);
        if (*dsep) return cmd_dsep(graph_path, query, out);
        if (*ampute) return cmd_ampute(g, f.data, f.schema, spec_path, out, log);
        if (*simulate) return cmd_simulate(g, model, rows, out, log);
        if (*export_dot) return cmd_export_dot(g, graph_path, roles_path, out, log);
    } catch (const ConfigError& e) {
        log.error(e.what());
        return 2;
    } catch (const std::exception& e) {
        log.error(e.what());
        return 1;
    }
    return 2;
}

}  // namespace mgd::cli

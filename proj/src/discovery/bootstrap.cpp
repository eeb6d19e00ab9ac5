#include "mgd/discovery/bootstrap.hpp"

#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>

#include "mgd/data/transforms.hpp"
#include "mgd/error.hpp"
#include "mgd/estimation/likelihood.hpp"
#include "mgd/parallel.hpp"
#include "mgd/random.hpp"

namespace mgd::discovery {

MeanSd mean_sd(const std::vector<double>& values) {
    MeanSd out;
    if (values.empty()) return out;
    for (double v : values) out.mean += v;
    out.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return out;
}

double BootstrapSummary::frequency(const graphs::NamedEdge& e) const {
    const auto it = edge_frequency.find(e);
    return it == edge_frequency.end() ? 0.0 : it->second;
}

namespace {

// Edges of one directed cycle in `edges`, if any.
std::optional<std::vector<graphs::Edge>> find_cycle(std::size_t n, const std::set<graphs::Edge>& edges) {
    std::vector<std::vector<int>> out(n);
    for (const auto& [p, c] : edges) out[static_cast<std::size_t>(p)].push_back(c);
    std::vector<int> state(n, 0), parent(n, -1);
    std::vector<graphs::Edge> cycle;
    std::function<bool(int)> dfs = [&](int v) {
        state[static_cast<std::size_t>(v)] = 1;
        for (int w : out[static_cast<std::size_t>(v)]) {
            if (state[static_cast<std::size_t>(w)] == 1) {
                cycle.push_back({v, w});
                for (int u = v; u != w; u = parent[static_cast<std::size_t>(u)])
                    cycle.push_back({parent[static_cast<std::size_t>(u)], u});
                return true;
            }
            if (state[static_cast<std::size_t>(w)] == 0) {
                parent[static_cast<std::size_t>(w)] = v;
                if (dfs(w)) return true;
            }
        }
        state[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (state[v] == 0 && dfs(static_cast<int>(v))) return cycle;
    return std::nullopt;
}

}  // namespace

graphs::Dag consensus_graph(const std::vector<std::string>& vertices, const std::map<graphs::Edge, double>& frequency,
                            double threshold, const Constraints& c) {
    if (!(threshold > 0.0 && threshold <= 1.0)) throw Error(ErrorCode::InvalidArgument, "threshold must lie in (0, 1]");
    std::set<graphs::Edge> edges;
    for (const auto& [e, f] : frequency)
        if (f >= threshold && !c.is_forbidden(e.first, e.second)) edges.insert(e);
    for (const auto& e : c.required) edges.insert(e);
    const auto freq = [&](const graphs::Edge& e) {
        const auto it = frequency.find(e);
        return it == frequency.end() ? 0.0 : it->second;
    };
    while (auto cycle = find_cycle(vertices.size(), edges)) {
        std::optional<graphs::Edge> drop;
        for (const auto& e : *cycle) {
            if (c.is_required(e.first, e.second)) continue;
            if (!drop || freq(e) < freq(*drop) || (freq(e) == freq(*drop) && e < *drop)) drop = e;
        }
        if (!drop) throw Error(ErrorCode::KnowledgeInfeasible, "required edges form a cycle");
        edges.erase(*drop);
    }
    return graphs::Dag(vertices, std::vector<graphs::Edge>(edges.begin(), edges.end()));
}

BootstrapResult bootstrap_sem(const data::CategoricalDataset& d, const Constraints& c, const BootstrapOptions& options) {
    if (options.replicates == 0) throw Error(ErrorCode::InvalidArgument, "at least one replicate is required");
    if (!(options.threshold > 0.0 && options.threshold <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "threshold must lie in (0, 1]");
    const auto parts = data::split(d, options.held_out_fraction, derive_seed(options.seed, kSplitStream));
    const std::size_t B = options.replicates;

    BootstrapResult out;
    out.replicate_graphs.resize(B);
    out.summary.replicates = B;
    out.summary.in_sample.resize(B);
    out.summary.out_of_sample.resize(B);
    SemOptions sem = options.sem;
    if (options.threads > 1) sem.search.threads = 1;
    parallel_for(B, options.threads, [&](std::size_t b) {
        const auto resample = data::bootstrap(parts.train, derive_seed(options.seed, b));
        auto fit = structural_em(resample, c, sem);
        estimation::EmOptions em = sem.em;
        em.pseudocount = options.pseudocount;
        const auto params = estimation::em_fit(fit.graph, resample, em).params;
        out.summary.in_sample[b] = estimation::log_likelihood(params, fit.graph, resample);
        out.summary.out_of_sample[b] = estimation::log_likelihood(params, fit.graph, parts.test);
        out.replicate_graphs[b] = std::move(fit.graph);
    });

    std::vector<std::string> names;
    for (const auto& v : d.schema()) names.push_back(v.name);
    std::map<graphs::Edge, double> frequency;
    for (const auto& g : out.replicate_graphs)
        for (const auto& e : g.edges()) frequency[e] += 1.0;
    for (auto& [e, f] : frequency) {
        f /= static_cast<double>(B);
        out.summary.edge_frequency[{names[static_cast<std::size_t>(e.first)], names[static_cast<std::size_t>(e.second)]}] = f;
    }
    out.consensus = consensus_graph(names, frequency, options.threshold, c);

    std::vector<double> ins, outs;
    for (std::size_t b = 0; b < B; ++b) {
        ins.push_back(out.summary.in_sample[b].log_likelihood);
        outs.push_back(out.summary.out_of_sample[b].log_likelihood);
    }
    out.summary.in_sample_ll = mean_sd(ins);
    out.summary.out_of_sample_ll = mean_sd(outs);
    return out;
}

std::string write_summary_json(const BootstrapSummary& s) {
    nlohmann::json freq = nlohmann::json::array();
    for (const auto& [e, f] : s.edge_frequency) freq.push_back({{"parent", e.first}, {"child", e.second}, {"frequency", f}});
    auto block = [](const std::vector<estimation::ScoreValue>& values, const MeanSd& m) {
        nlohmann::json raw = nlohmann::json::array();
        for (const auto& v : values) raw.push_back(v.log_likelihood);
        return nlohmann::json{{"mean", m.mean}, {"sd", m.sd}, {"values", raw}};
    };
    const nlohmann::json doc = {{"replicates", s.replicates},
                                {"edge_frequency", freq},
                                {"in_sample", block(s.in_sample, s.in_sample_ll)},
                                {"out_of_sample", block(s.out_of_sample, s.out_of_sample_ll)}};
    return doc.dump(2) + "\n";
}

}  // namespace mgd::discovery

#include "mgd/discovery/search.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "mgd/error.hpp"
#include "mgd/parallel.hpp"
#include "mgd/random.hpp"

namespace mgd::discovery {

const char* to_string(Operation op) {
    switch (op) {
        case Operation::Add: return "add";
        case Operation::Delete: return "delete";
        case Operation::Reverse: return "reverse";
    }
    return "?";
}

namespace {

// Would reversing parent -> child close a cycle? Only if another directed
// path parent ~> child exists.
bool reversal_creates_cycle(const graphs::Dag& g, int parent, int child) {
    for (int q : g.children(parent))
        if (q != child && g.reaches(q, child)) return true;
    return false;
}

std::vector<int> with_parent(const std::vector<int>& parents, int p) {
    std::vector<int> out = parents;
    out.insert(std::lower_bound(out.begin(), out.end(), p), p);
    return out;
}

std::vector<int> without_parent(const std::vector<int>& parents, int p) {
    std::vector<int> out = parents;
    out.erase(std::find(out.begin(), out.end(), p));
    return out;
}

}  // namespace

std::vector<Move> legal_moves(const graphs::Dag& g, const Constraints& c, std::size_t max_parents) {
    check_satisfies(g, c);
    const int n = static_cast<int>(g.size());
    const auto room = [&](int v) { return max_parents == 0 || g.parents(v).size() < max_parents; };
    std::vector<Move> out;
    for (int p = 0; p < n; ++p)
        for (int ch = 0; ch < n; ++ch)
            if (p != ch && !g.has_edge(p, ch) && !g.has_edge(ch, p) && !c.is_forbidden(p, ch) && room(ch) &&
                !g.reaches(ch, p))
                out.push_back({Operation::Add, p, ch});
    for (const auto& [p, ch] : g.edges())
        if (!c.is_required(p, ch)) out.push_back({Operation::Delete, p, ch});
    for (const auto& [p, ch] : g.edges())
        if (!c.is_required(p, ch) && !c.is_forbidden(ch, p) && room(p) && !reversal_creates_cycle(g, p, ch))
            out.push_back({Operation::Reverse, p, ch});
    return out;
}

void apply_move(graphs::Dag& g, const Move& m) {
    switch (m.op) {
        case Operation::Add: g.add_edge(m.parent, m.child); break;
        case Operation::Delete: g.remove_edge(m.parent, m.child); break;
        case Operation::Reverse: g.reverse_edge(m.parent, m.child); break;
    }
}

double move_delta(const estimation::FamilyScoreCache& cache, const graphs::Dag& g, const Move& m) {
    const auto& pc = g.parents(m.child);
    switch (m.op) {
        case Operation::Add:
            return cache.delta(m.child, pc, with_parent(pc, m.parent));
        case Operation::Delete:
            return cache.delta(m.child, pc, without_parent(pc, m.parent));
        case Operation::Reverse: {
            const auto& pp = g.parents(m.parent);
            return cache.delta(m.child, pc, without_parent(pc, m.parent)) +
                   cache.delta(m.parent, pp, with_parent(pp, m.child));
        }
    }
    return 0.0;
}

std::optional<TraceStep> best_move(const estimation::FamilyScoreCache& cache, const Constraints& c,
                                   const graphs::Dag& g, const HillClimbOptions& options) {
    const auto moves = legal_moves(g, c, options.max_parents);
    std::vector<double> deltas(moves.size());
    parallel_for(moves.size(), options.threads, [&](std::size_t i) { deltas[i] = move_delta(cache, g, moves[i]); });
    std::optional<TraceStep> best;
    for (std::size_t i = 0; i < moves.size(); ++i)
        if (deltas[i] > options.min_improvement && (!best || deltas[i] > best->delta)) best = TraceStep{moves[i], deltas[i]};
    return best;
}

namespace {

SearchResult climb(const estimation::FamilyScoreCache& cache, const Constraints& c, const graphs::Dag& init,
                   const HillClimbOptions& options) {
    SearchResult out{init, {}};
    out.trace.initial_score = cache.graph_score(init);
    while (out.trace.iterations < options.max_iter) {
        const auto step = best_move(cache, c, out.graph, options);
        if (!step) break;
        apply_move(out.graph, step->move);
        out.trace.steps.push_back(*step);
        ++out.trace.iterations;
    }
    // Path score: for context-free scorers this equals graph_score(result)
    // up to rounding; otherwise family scores depend on the rows compared.
    out.trace.final_score = out.trace.initial_score;
    for (const auto& s : out.trace.steps) out.trace.final_score += s.delta;
    return out;
}

}  // namespace

SearchResult hill_climb(const estimation::FamilyScoreCache& cache, const Constraints& c, const graphs::Dag& init,
                        const HillClimbOptions& options) {
    if (init.size() != cache.variable_count())
        throw Error(ErrorCode::SchemaMismatch, "initial graph and score cover different variables");
    check_satisfies(init, c);
    SearchResult best = climb(cache, c, init, options);
    if (options.restarts == 0) return best;
    double best_score = cache.graph_score(best.graph);
    Rng rng(options.restart_seed);
    for (std::size_t r = 0; r < options.restarts; ++r) {
        graphs::Dag start = best.graph;
        for (std::size_t k = 0; k < options.perturbation; ++k) {
            const auto moves = legal_moves(start, c, options.max_parents);
            if (moves.empty()) break;
            apply_move(start, moves[rng.below(moves.size())]);
        }
        auto candidate = climb(cache, c, start, options);
        const double score = cache.graph_score(candidate.graph);
        if (score > best_score + options.min_improvement) {
            best = std::move(candidate);
            best_score = score;
        }
    }
    return best;
}

std::string write_trace_json(const SearchTrace& trace, const graphs::Dag& g) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"op", to_string(s.move.op)},
                         {"parent", g.name(s.move.parent)},
                         {"child", g.name(s.move.child)},
                         {"delta", s.delta}});
    const nlohmann::json doc = {{"initial_score", trace.initial_score},
                                {"final_score", trace.final_score},
                                {"iterations", trace.iterations},
                                {"steps", steps}};
    return doc.dump(2) + "\n";
}

}  // namespace mgd::discovery

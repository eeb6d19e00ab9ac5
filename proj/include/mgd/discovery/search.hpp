#ifndef MGD_DISCOVERY_SEARCH_HPP
#define MGD_DISCOVERY_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgd/discovery/knowledge.hpp"
#include "mgd/estimation/score.hpp"
#include "mgd/graphs/dag.hpp"

namespace mgd::discovery {

enum class Operation { Add, Delete, Reverse };
const char* to_string(Operation op);

// Add/Delete act on parent -> child; Reverse turns parent -> child into
// child -> parent. Moves order by (operation, parent, child).
struct Move {
    Operation op = Operation::Add;
    int parent = 0;
    int child = 0;

    friend auto operator<=>(const Move&, const Move&) = default;
};

// Every single-edge move that keeps g acyclic and within the constraints and
// the parent cap (0 = no cap), in (operation, parent, child) order.
// Throws KnowledgeViolatedByInput if g itself breaks the constraints.
std::vector<Move> legal_moves(const graphs::Dag& g, const Constraints& c, std::size_t max_parents = 0);

void apply_move(graphs::Dag& g, const Move& m);
double move_delta(const estimation::FamilyScoreCache& cache, const graphs::Dag& g, const Move& m);

struct TraceStep {
    Move move;
    double delta = 0.0;
};

struct SearchTrace {
    std::vector<TraceStep> steps;
    double initial_score = 0.0;
    double final_score = 0.0;
    std::size_t iterations = 0;
};

struct HillClimbOptions {
    std::size_t max_iter = 10000;
    std::size_t max_parents = 4;
    // A move must raise the score by more than this to be taken.
    double min_improvement = 1e-9;
    unsigned threads = 1;
    // Optional restarts: after converging, the best graph so far is perturbed
    // by `perturbation` random legal moves (seeded by restart_seed) and
    // climbed again; a result replaces the best one only if its graph score is
    // higher by more than min_improvement.
    std::size_t restarts = 0;
    std::size_t perturbation = 3;
    std::uint64_t restart_seed = 0;
};

struct SearchResult {
    graphs::Dag graph;
    SearchTrace trace;
};

// Best-improvement hill climbing: each iteration scores every legal move and
// applies the one with the largest delta, the earliest move in
// (operation, parent, child) order winning ties. Stops when no move improves
// by more than min_improvement or after max_iter moves. The cache's variables
// are the vertices of init, in order. With restarts the trace is that of the
// winning climb, which starts from a perturbed graph rather than init.
SearchResult hill_climb(const estimation::FamilyScoreCache& cache, const Constraints& c, const graphs::Dag& init,
                        const HillClimbOptions& options = {});

// The move hill_climb would take next, if any.
std::optional<TraceStep> best_move(const estimation::FamilyScoreCache& cache, const Constraints& c,
                                   const graphs::Dag& g, const HillClimbOptions& options = {});

// Trace as JSON: {"initial_score", "final_score", "iterations", "steps": [{"op", "parent", "child", "delta"}]}.
std::string write_trace_json(const SearchTrace& trace, const graphs::Dag& g);

}  // namespace mgd::discovery

#endif  // MGD_DISCOVERY_SEARCH_HPP

#include "mgd/graphs/dsep.hpp"

#include <algorithm>
#include <deque>

#include "mgd/error.hpp"

namespace mgd::graphs {

namespace {

enum Direction : int { kUp = 0, kDown = 1 };  // up: arrived from a child; down: arrived from a parent

std::vector<bool> membership(const Dag& g, const std::vector<int>& set) {
    std::vector<bool> in(g.size(), false);
    for (int v : set) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.size())
            throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = true;
    }
    return in;
}

void check_disjoint(const Dag& g, const std::vector<bool>& a, const std::vector<bool>& b, const char* what) {
    for (std::size_t v = 0; v < g.size(); ++v)
        if (a[v] && b[v])
            throw Error(ErrorCode::OverlappingSets, std::string(what) + " share vertex '" + g.name(static_cast<int>(v)) + "'");
}

}  // namespace

std::vector<int> resolve_vertices(const Dag& g, const std::vector<std::string>& names) {
    std::vector<int> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(g.index_of(n));
    return out;
}

std::optional<std::vector<int>> active_trail(const Dag& g, const std::vector<int>& x, const std::vector<int>& y,
                                             const std::vector<int>& z) {
    const auto in_x = membership(g, x);
    const auto in_y = membership(g, y);
    const auto in_z = membership(g, z);
    check_disjoint(g, in_x, in_y, "x and y");
    check_disjoint(g, in_x, in_z, "x and z");
    check_disjoint(g, in_y, in_z, "y and z");

    // Colliders are open when they are ancestors of (or in) z.
    const auto opens_collider = g.ancestors_of(z);

    const std::size_t n = g.size();
    // State = vertex * 2 + direction; predecessor state for trail reconstruction.
    std::vector<int> prev(2 * n, -2);
    std::deque<int> queue;
    for (int s : x) {
        const int state = s * 2 + kUp;
        if (prev[static_cast<std::size_t>(state)] == -2) {
            prev[static_cast<std::size_t>(state)] = -1;
            queue.push_back(state);
        }
    }
    auto visit = [&](int from_state, int v, Direction d) {
        const int state = v * 2 + d;
        if (prev[static_cast<std::size_t>(state)] != -2) return;
        prev[static_cast<std::size_t>(state)] = from_state;
        queue.push_back(state);
    };
    while (!queue.empty()) {
        const int state = queue.front();
        queue.pop_front();
        const int v = state / 2;
        const auto dir = static_cast<Direction>(state % 2);
        const auto vi = static_cast<std::size_t>(v);
        if (in_y[vi]) {
            std::vector<int> trail;
            for (int s = state; s != -1; s = prev[static_cast<std::size_t>(s)]) trail.push_back(s / 2);
            std::reverse(trail.begin(), trail.end());
            return trail;
        }
        if (dir == kUp) {
            if (in_z[vi]) continue;
            for (int p : g.parents(v)) visit(state, p, kUp);
            for (int c : g.children(v)) visit(state, c, kDown);
        } else {
            if (!in_z[vi])
                for (int c : g.children(v)) visit(state, c, kDown);
            if (opens_collider[vi])
                for (int p : g.parents(v)) visit(state, p, kUp);
        }
    }
    return std::nullopt;
}

bool d_separated(const Dag& g, const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& z) {
    return !active_trail(g, x, y, z).has_value();
}

bool d_separated(const Dag& g, const std::vector<std::string>& x, const std::vector<std::string>& y,
                 const std::vector<std::string>& z) {
    return d_separated(g, resolve_vertices(g, x), resolve_vertices(g, y), resolve_vertices(g, z));
}

}  // namespace mgd::graphs

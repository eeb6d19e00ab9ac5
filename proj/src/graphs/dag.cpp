#include "mgd/graphs/dag.hpp"

#include <algorithm>

#include "mgd/error.hpp"

namespace mgd::graphs {

namespace {

void insert_sorted(std::vector<int>& v, int x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); }

void erase_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace

Dag::Dag(std::vector<std::string> vertices, const std::vector<Edge>& edges) : names_(std::move(vertices)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error(ErrorCode::InvalidArgument, "vertex names must be non-empty");
        if (!index_.emplace(names_[i], static_cast<int>(i)).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate vertex name '" + names_[i] + "'");
    }
    parents_.resize(names_.size());
    children_.resize(names_.size());
    for (const auto& [p, c] : edges) add_edge(p, c);
}

Dag::Dag(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges)
    : Dag(std::move(vertices), std::vector<Edge>{}) {
    for (const auto& [p, c] : edges) add_edge(index_of(p), index_of(c));
}

std::optional<int> Dag::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Dag::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
    return it->second;
}

void Dag::check_vertex(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= names_.size())
        throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

bool Dag::has_edge(int parent, int child) const {
    const auto& pa = parents_[static_cast<std::size_t>(child)];
    return std::binary_search(pa.begin(), pa.end(), parent);
}

std::size_t Dag::edge_count() const {
    std::size_t total = 0;
    for (const auto& pa : parents_) total += pa.size();
    return total;
}

std::vector<Edge> Dag::edges() const {
    std::vector<Edge> out;
    for (std::size_t p = 0; p < children_.size(); ++p)
        for (int c : children_[p]) out.emplace_back(static_cast<int>(p), c);
    return out;
}

std::vector<NamedEdge> Dag::named_edges() const {
    std::vector<NamedEdge> out;
    for (const auto& [p, c] : edges()) out.emplace_back(name(p), name(c));
    return out;
}

std::optional<std::vector<int>> Dag::find_path(int from, int to) const {
    std::vector<int> prev(names_.size(), -2);
    std::vector<int> stack{from};
    prev[static_cast<std::size_t>(from)] = -1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == to) {
            std::vector<int> path;
            for (int u = to; u != -1; u = prev[static_cast<std::size_t>(u)]) path.push_back(u);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int c : children_[static_cast<std::size_t>(v)]) {
            if (prev[static_cast<std::size_t>(c)] == -2) {
                prev[static_cast<std::size_t>(c)] = v;
                stack.push_back(c);
            }
        }
    }
    return std::nullopt;
}

bool Dag::reaches(int from, int to) const { return find_path(from, to).has_value(); }

std::vector<int> Dag::topological_order() const {
    std::vector<std::size_t> indegree(names_.size());
    for (std::size_t v = 0; v < names_.size(); ++v) indegree[v] = parents_[v].size();
    std::vector<int> order;
    order.reserve(names_.size());
    // Kahn's algorithm, always releasing the lowest ready index for a stable order.
    std::vector<int> ready;
    for (std::size_t v = 0; v < names_.size(); ++v)
        if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
    while (!ready.empty()) {
        auto it = std::min_element(ready.begin(), ready.end());
        const int v = *it;
        ready.erase(it);
        order.push_back(v);
        for (int c : children_[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(c)] == 0) ready.push_back(c);
    }
    return order;
}

std::vector<bool> Dag::ancestors_of(const std::vector<int>& targets) const {
    std::vector<bool> mark(names_.size(), false);
    std::vector<int> stack;
    for (int t : targets) {
        if (!mark[static_cast<std::size_t>(t)]) {
            mark[static_cast<std::size_t>(t)] = true;
            stack.push_back(t);
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int p : parents_[static_cast<std::size_t>(v)]) {
            if (!mark[static_cast<std::size_t>(p)]) {
                mark[static_cast<std::size_t>(p)] = true;
                stack.push_back(p);
            }
        }
    }
    return mark;
}

std::vector<bool> Dag::descendants_of(int v) const {
    std::vector<bool> mark(names_.size(), false);
    std::vector<int> stack{v};
    mark[static_cast<std::size_t>(v)] = true;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int c : children_[static_cast<std::size_t>(u)]) {
            if (!mark[static_cast<std::size_t>(c)]) {
                mark[static_cast<std::size_t>(c)] = true;
                stack.push_back(c);
            }
        }
    }
    return mark;
}

void Dag::add_edge(int parent, int child) {
    check_vertex(parent);
    check_vertex(child);
    if (parent == child) throw Error(ErrorCode::CycleDetected, "self-loop on '" + name(parent) + "'");
    if (has_edge(parent, child))
        throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + name(parent) + " -> " + name(child));
    if (auto path = find_path(child, parent)) {
        std::string cycle;
        for (int v : *path) cycle += name(v) + " -> ";
        cycle += name(child);
        throw Error(ErrorCode::CycleDetected, "cycle " + cycle);
    }
    insert_sorted(parents_[static_cast<std::size_t>(child)], parent);
    insert_sorted(children_[static_cast<std::size_t>(parent)], child);
}

void Dag::remove_edge(int parent, int child) {
    check_vertex(parent);
    check_vertex(child);
    if (!has_edge(parent, child))
        throw Error(ErrorCode::InvalidArgument, "no edge " + name(parent) + " -> " + name(child));
    erase_sorted(parents_[static_cast<std::size_t>(child)], parent);
    erase_sorted(children_[static_cast<std::size_t>(parent)], child);
}

void Dag::reverse_edge(int parent, int child) {
    remove_edge(parent, child);
    try {
        add_edge(child, parent);
    } catch (...) {
        add_edge(parent, child);
        throw;
    }
}

Dag Dag::subgraph(const std::vector<int>& keep) const {
    std::vector<std::string> names;
    std::vector<int> remap(names_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        names.push_back(name(keep[i]));
        remap[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (const auto& [p, c] : edges()) {
        const int np = remap[static_cast<std::size_t>(p)];
        const int nc = remap[static_cast<std::size_t>(c)];
        if (np >= 0 && nc >= 0) kept.emplace_back(np, nc);
    }
    return Dag(std::move(names), kept);
}

}  // namespace mgd::graphs

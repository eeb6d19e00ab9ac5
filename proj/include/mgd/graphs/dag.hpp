#ifndef MGD_GRAPHS_DAG_HPP
#define MGD_GRAPHS_DAG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mgd::graphs {

// (parent, child) by vertex index.
using Edge = std::pair<int, int>;
using NamedEdge = std::pair<std::string, std::string>;

// A directed acyclic graph over named vertices. Vertex identity is the exact,
// case-sensitive name; the declared order fixes vertex indices. Every mutation
// re-checks acyclicity, self-loops and duplicates, so a Dag value is always valid.
class Dag {
public:
    Dag() = default;

    // Throws InvalidArgument for empty or repeated names, UnknownVertex,
    // DuplicateEdge, and CycleDetected (the message lists one offending cycle).
    Dag(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);
    Dag(std::vector<std::string> vertices, const std::vector<Edge>& edges);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& vertices() const { return names_; }
    const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }

    std::optional<int> find(const std::string& name) const;
    // Throws UnknownVertex.
    int index_of(const std::string& name) const;

    // Sorted ascending by index.
    const std::vector<int>& parents(int v) const { return parents_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }

    bool has_edge(int parent, int child) const;
    std::size_t edge_count() const;
    // Sorted by (parent, child).
    std::vector<Edge> edges() const;
    std::vector<NamedEdge> named_edges() const;

    // True when a directed path from -> ... -> to exists (from == to counts).
    bool reaches(int from, int to) const;
    std::vector<int> topological_order() const;
    std::vector<bool> ancestors_of(const std::vector<int>& targets) const;
    std::vector<bool> descendants_of(int v) const;

    void add_edge(int parent, int child);
    void remove_edge(int parent, int child);
    void reverse_edge(int parent, int child);

    // Induced subgraph on `keep` (in the given order).
    Dag subgraph(const std::vector<int>& keep) const;

    friend bool operator==(const Dag& a, const Dag& b) {
        return a.names_ == b.names_ && a.parents_ == b.parents_;
    }

private:
    void check_vertex(int v) const;
    std::optional<std::vector<int>> find_path(int from, int to) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
};

// The build_dag entry point: validated construction from names.
inline Dag build_dag(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges) {
    return Dag(std::move(vertices), edges);
}

}  // namespace mgd::graphs

#endif  // MGD_GRAPHS_DAG_HPP

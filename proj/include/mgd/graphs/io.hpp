#ifndef MGD_GRAPHS_IO_HPP
#define MGD_GRAPHS_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgd/graphs/dag.hpp"
#include "mgd/graphs/mgraph.hpp"

namespace mgd::graphs {

// Semantic roles used to color exported graphs.
enum class Role { Treatment, Outcome, Event, Biomarker, Context };

const char* to_string(Role r);
Role parse_role(const std::string& s);
// blue, red, orange, lightblue, gray.
const char* role_color(Role r);

using ClassMap = std::vector<VertexClass>;
using RoleMap = std::map<std::string, Role>;

// A graph as stored on disk: {"vertices": [...], "edges": [[p, c], ...], "classes": {...}}.
struct GraphDocument {
    Dag graph;
    std::optional<ClassMap> classes;
};

std::string write_graph_json(const Dag& g, const std::optional<ClassMap>& classes = std::nullopt);
GraphDocument parse_graph_json(const std::string& text);
GraphDocument read_graph_json_file(const std::string& path);

RoleMap parse_role_json(const std::string& text);

// Deterministic DOT text: one node line per vertex in declared order, then one
// edge line per edge sorted by (parent, child) index. LF line endings.
std::string export_dot(const Dag& g, const std::optional<ClassMap>& classes = std::nullopt,
                       const std::optional<RoleMap>& roles = std::nullopt);

// Reads the digraph subset produced by export_dot (quoted or bare IDs, node and
// edge statements with attribute lists, `a -> b -> c` chains, comments).
GraphDocument parse_dot(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mgd::graphs

#endif  // MGD_GRAPHS_IO_HPP

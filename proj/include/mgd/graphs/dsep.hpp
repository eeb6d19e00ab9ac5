#ifndef MGD_GRAPHS_DSEP_HPP
#define MGD_GRAPHS_DSEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "mgd/graphs/dag.hpp"

namespace mgd::graphs {

// True iff z blocks every trail between x and y. Linear-time active-trail
// reachability (a fork/chain node blocks when conditioned; a collider passes
// only when it or one of its descendants is conditioned).
// Throws UnknownVertex and OverlappingSets (x, y, z must be pairwise disjoint).
bool d_separated(const Dag& g, const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& z);
bool d_separated(const Dag& g, const std::vector<std::string>& x, const std::vector<std::string>& y,
                 const std::vector<std::string>& z);

// One active trail from some member of x to some member of y given z, or
// nullopt when d-separated. The trail is a vertex sequence along graph edges.
std::optional<std::vector<int>> active_trail(const Dag& g, const std::vector<int>& x, const std::vector<int>& y,
                                             const std::vector<int>& z);

std::vector<int> resolve_vertices(const Dag& g, const std::vector<std::string>& names);

}  // namespace mgd::graphs

#endif  // MGD_GRAPHS_DSEP_HPP

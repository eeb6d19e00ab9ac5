#ifndef MGD_CLI_QUERY_HPP
#define MGD_CLI_QUERY_HPP

#include <string>
#include <vector>

namespace mgd::cli {

// "X[,X2...] _||_ Y[,Y2...] | [Z1,Z2...]"; the "|" part may be absent or empty.
struct DsepQuery {
    std::vector<std::string> x, y, z;
};

// Throws ConfigError on malformed queries.
DsepQuery parse_dsep_query(const std::string& text);

}  // namespace mgd::cli

#endif  // MGD_CLI_QUERY_HPP

#include "mgd/cli/query.hpp"

#include "mgd/cli/config.hpp"

namespace mgd::cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> names(const std::string& text, bool allow_empty, const char* what) {
    std::vector<std::string> out;
    const std::string t = trim(text);
    if (t.empty()) {
        if (!allow_empty) throw ConfigError(std::string("query: empty ") + what + " set");
        return out;
    }
    std::size_t start = 0;
    for (;;) {
        const auto comma = t.find(',', start);
        const std::string name = trim(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (name.empty()) throw ConfigError(std::string("query: empty name in ") + what + " set");
        out.push_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

DsepQuery parse_dsep_query(const std::string& text) {
    const auto sep = text.find("_||_");
    if (sep == std::string::npos) throw ConfigError("query: expected 'X _||_ Y | Z'");
    if (text.find("_||_", sep + 4) != std::string::npos) throw ConfigError("query: more than one '_||_'");
    const std::string rest = text.substr(sep + 4);
    const auto bar = rest.find('|');
    DsepQuery q;
    q.x = names(text.substr(0, sep), false, "x");
    q.y = names(rest.substr(0, bar), false, "y");
    if (bar != std::string::npos) {
        if (rest.find('|', bar + 1) != std::string::npos) throw ConfigError("query: more than one '|'");
        q.z = names(rest.substr(bar + 1), true, "z");
    }
    return q;
}

}  // namespace mgd::cli

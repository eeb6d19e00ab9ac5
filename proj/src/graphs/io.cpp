#include "mgd/graphs/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mgd/error.hpp"

namespace mgd::graphs {

using nlohmann::json;

const char* to_string(Role r) {
    switch (r) {
        case Role::Treatment: return "treatment";
        case Role::Outcome: return "outcome";
        case Role::Event: return "event";
        case Role::Biomarker: return "biomarker";
        case Role::Context: return "context";
    }
    return "context";
}

Role parse_role(const std::string& s) {
    for (auto r : {Role::Treatment, Role::Outcome, Role::Event, Role::Biomarker, Role::Context})
        if (s == to_string(r)) return r;
    throw Error(ErrorCode::Parse, "unknown role '" + s + "'");
}

const char* role_color(Role r) {
    switch (r) {
        case Role::Treatment: return "blue";
        case Role::Outcome: return "red";
        case Role::Event: return "orange";
        case Role::Biomarker: return "lightblue";
        case Role::Context: return "gray";
    }
    return "gray";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << text;
    if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

std::string write_graph_json(const Dag& g, const std::optional<ClassMap>& classes) {
    json doc;
    doc["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [p, c] : g.named_edges()) edges.push_back({p, c});
    doc["edges"] = std::move(edges);
    if (classes) {
        json cls = json::object();
        for (std::size_t i = 0; i < g.size(); ++i) cls[g.name(static_cast<int>(i))] = to_string((*classes)[i]);
        doc["classes"] = std::move(cls);
    }
    return doc.dump(2) + "\n";
}

GraphDocument parse_graph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
    }
    try {
        auto vertices = doc.at("vertices").get<std::vector<std::string>>();
        std::vector<NamedEdge> edges;
        for (const auto& e : doc.value("edges", json::array())) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "edges must be [parent, child] pairs");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        GraphDocument out{Dag(std::move(vertices), edges), std::nullopt};
        if (doc.contains("classes")) {
            ClassMap classes(out.graph.size(), VertexClass::Observed);
            const auto& cls = doc.at("classes");
            if (cls.size() != out.graph.size())
                throw Error(ErrorCode::InvalidMGraph, "classes must cover every vertex exactly once");
            for (const auto& [name, value] : cls.items())
                classes[static_cast<std::size_t>(out.graph.index_of(name))] = parse_vertex_class(value.get<std::string>());
            out.classes = std::move(classes);
        }
        return out;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
    }
}

GraphDocument read_graph_json_file(const std::string& path) { return parse_graph_json(read_text_file(path)); }

RoleMap parse_role_json(const std::string& text) {
    RoleMap roles;
    try {
        const json doc = json::parse(text);
        for (const auto& [name, value] : doc.items()) roles[name] = parse_role(value.get<std::string>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("role JSON: ") + e.what());
    }
    return roles;
}

namespace {

std::string quote(const std::string& id) {
    std::string out = "\"";
    for (char ch : id) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const Dag& g, const std::optional<ClassMap>& classes, const std::optional<RoleMap>& roles) {
    std::string out = "digraph G {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::string& name = g.name(static_cast<int>(i));
        std::vector<std::string> attrs;
        if (classes) attrs.push_back(std::string("class=") + quote(to_string((*classes)[i])));
        if (roles) {
            if (auto it = roles->find(name); it != roles->end()) {
                attrs.push_back("style=\"filled\"");
                attrs.push_back(std::string("fillcolor=") + quote(role_color(it->second)));
            }
        }
        out += "  " + quote(name);
        if (!attrs.empty()) {
            out += " [";
            for (std::size_t a = 0; a < attrs.size(); ++a) out += (a ? ", " : "") + attrs[a];
            out += "]";
        }
        out += ";\n";
    }
    for (const auto& [p, c] : g.edges()) out += "  " + quote(g.name(p)) + " -> " + quote(g.name(c)) + ";\n";
    out += "}\n";
    return out;
}

namespace {

class DotLexer {
public:
    explicit DotLexer(const std::string& text) : text_(text) {}

    // Returns the next token, or empty at end. Quoted IDs are returned unescaped
    // with a leading '"' marker stripped; punctuation as single characters.
    std::optional<std::string> next(bool& quoted) {
        skip();
        quoted = false;
        if (pos_ >= text_.size()) return std::nullopt;
        const char ch = text_[pos_];
        if (ch == '"') {
            quoted = true;
            std::string out;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
                out += text_[pos_++];
            }
            if (pos_ >= text_.size()) throw Error(ErrorCode::Parse, "DOT: unterminated string");
            ++pos_;
            return out;
        }
        if (ch == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            return std::string("->");
        }
        if (std::string("{}[];,=").find(ch) != std::string::npos) {
            ++pos_;
            return std::string(1, ch);
        }
        std::string out;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '.' ||
                static_cast<unsigned char>(text_[pos_]) >= 0x80))
            out += text_[pos_++];
        if (out.empty()) throw Error(ErrorCode::Parse, std::string("DOT: unexpected character '") + ch + "'");
        return out;
    }

private:
    void skip() {
        for (;;) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (text_.compare(pos_, 2, "//") == 0 || (pos_ < text_.size() && text_[pos_] == '#')) {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (text_.compare(pos_, 2, "/*") == 0) {
                const auto end = text_.find("*/", pos_ + 2);
                pos_ = end == std::string::npos ? text_.size() : end + 2;
            } else {
                return;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

struct Token {
    std::string text;
    bool quoted = false;
    bool is(const char* s) const { return !quoted && text == s; }
};

}  // namespace

GraphDocument parse_dot(const std::string& text) {
    DotLexer lexer(text);
    std::vector<Token> tokens;
    bool quoted = false;
    while (auto t = lexer.next(quoted)) tokens.push_back({*t, quoted});

    std::size_t i = 0;
    auto expect = [&](const char* s) {
        if (i >= tokens.size() || !tokens[i].is(s)) throw Error(ErrorCode::Parse, std::string("DOT: expected '") + s + "'");
        ++i;
    };
    if (i < tokens.size() && tokens[i].is("strict")) ++i;
    expect("digraph");
    if (i < tokens.size() && !tokens[i].is("{")) ++i;  // graph name
    expect("{");

    std::vector<std::string> names;
    std::map<std::string, std::string> class_attr;
    std::vector<NamedEdge> edges;
    auto declare = [&](const std::string& n) {
        for (const auto& existing : names)
            if (existing == n) return;
        names.push_back(n);
    };
    auto read_attrs = [&]() {
        std::map<std::string, std::string> attrs;
        if (i < tokens.size() && tokens[i].is("[")) {
            ++i;
            while (i < tokens.size() && !tokens[i].is("]")) {
                const std::string key = tokens[i++].text;
                expect("=");
                if (i >= tokens.size()) throw Error(ErrorCode::Parse, "DOT: truncated attribute list");
                attrs[key] = tokens[i++].text;
                if (i < tokens.size() && (tokens[i].is(",") || tokens[i].is(";"))) ++i;
            }
            expect("]");
        }
        return attrs;
    };

    while (i < tokens.size() && !tokens[i].is("}")) {
        const Token& head = tokens[i];
        if (head.is(";")) {
            ++i;
            continue;
        }
        if (head.is("graph") || head.is("node") || head.is("edge")) {
            ++i;
            read_attrs();
            continue;
        }
        if (i + 1 < tokens.size() && tokens[i + 1].is("=")) {  // graph attribute a=b
            i += 3;
            continue;
        }
        std::vector<std::string> chain{tokens[i++].text};
        while (i < tokens.size() && tokens[i].is("->")) {
            ++i;
            if (i >= tokens.size()) throw Error(ErrorCode::Parse, "DOT: dangling edge");
            chain.push_back(tokens[i++].text);
        }
        const auto attrs = read_attrs();
        for (const auto& n : chain) declare(n);
        if (chain.size() == 1) {
            if (auto it = attrs.find("class"); it != attrs.end()) class_attr[chain[0]] = it->second;
        } else {
            for (std::size_t k = 0; k + 1 < chain.size(); ++k) edges.emplace_back(chain[k], chain[k + 1]);
        }
    }
    expect("}");

    GraphDocument out{Dag(names, edges), std::nullopt};
    if (!class_attr.empty()) {
        if (class_attr.size() != names.size())
            throw Error(ErrorCode::InvalidMGraph, "DOT: class attribute present on only some vertices");
        ClassMap classes(names.size());
        for (std::size_t v = 0; v < names.size(); ++v) classes[v] = parse_vertex_class(class_attr.at(names[v]));
        out.classes = std::move(classes);
    }
    return out;
}

}  // namespace mgd::graphs

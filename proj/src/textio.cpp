#include "bdg/textio.hpp"

#include "bdg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace bdg {

namespace {

struct Token {
    std::string text;
    std::size_t col = 0; // 1-based start column
};

struct Line {
    std::size_t number = 0; // 1-based
    std::vector<Token> tokens;
};

[[noreturn]] void fail(const std::string& name, std::size_t line, std::size_t col,
                       const std::string& message) {
    std::ostringstream os;
    os << name << ":" << line << ":" << col << ": " << message;
    throw InputError(os.str());
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size() && raw[i] != '#') {
            if (is_space(raw[i])) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < raw.size() && !is_space(raw[i]) && raw[i] != '#') {
                ++i;
            }
            line.tokens.push_back(Token{raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

long long parse_weight(const std::string& name, const Line& line, const Token& tok) {
    const std::string& s = tok.text;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) {
        fail(name, line.number, tok.col, "expected an integer weight, got '" + s + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            fail(name, line.number, tok.col, "expected an integer weight, got '" + s + "'");
        }
    }
    try {
        return std::stoll(s);
    } catch (const std::out_of_range&) {
        fail(name, line.number, tok.col, "weight out of range: '" + s + "'");
    }
}

void require_arity(const std::string& name, const Line& line, std::size_t want) {
    if (line.tokens.size() != want + 1) {
        fail(name, line.number, line.tokens[0].col,
             "directive '" + line.tokens[0].text + "' takes " + std::to_string(want) +
                 " argument" + (want == 1 ? "" : "s") + ", got " +
                 std::to_string(line.tokens.size() - 1));
    }
}

} // namespace

ParsedGraph parse_graph_text(const std::string& text, const std::string& name) {
    const std::vector<Line> lines = tokenize(text);
    ParsedGraph out;

    for (const Line& line : lines) {
        const Token& head = line.tokens[0];
        if (head.text != "v" && head.text != "e" && head.text != "c") {
            fail(name, line.number, head.col, "unknown directive '" + head.text + "'");
        }
        if (head.text == "v") {
            require_arity(name, line, 2);
            const Token& id = line.tokens[1];
            if (out.graph.has_vertex(id.text)) {
                fail(name, line.number, id.col, "duplicate vertex '" + id.text + "'");
            }
            out.graph.add_vertex(id.text, parse_weight(name, line, line.tokens[2]));
        }
    }

    std::set<std::pair<std::string, std::string>> seen_edges;
    for (const Line& line : lines) {
        const Token& head = line.tokens[0];
        if (head.text == "e") {
            require_arity(name, line, 2);
            const Token& a = line.tokens[1];
            const Token& b = line.tokens[2];
            if (!out.graph.has_vertex(a.text)) {
                fail(name, line.number, a.col, "edge uses undeclared vertex '" + a.text + "'");
            }
            if (!out.graph.has_vertex(b.text)) {
                fail(name, line.number, b.col, "edge uses undeclared vertex '" + b.text + "'");
            }
            if (a.text == b.text) {
                fail(name, line.number, b.col, "edge joins '" + a.text + "' to itself");
            }
            const auto key = std::minmax(a.text, b.text);
            if (!seen_edges.insert(key).second) {
                fail(name, line.number, head.col,
                     "duplicate edge between '" + key.first + "' and '" + key.second + "'");
            }
            out.graph.add_edge(a.text, b.text);
        } else if (head.text == "c") {
            require_arity(name, line, 1);
            const Token& id = line.tokens[1];
            if (out.c_id) {
                fail(name, line.number, head.col, "more than one 'c' directive");
            }
            if (!out.graph.has_vertex(id.text)) {
                fail(name, line.number, id.col, "'c' names undeclared vertex '" + id.text + "'");
            }
            out.c_id = id.text;
        }
    }

    return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str(), path);
}

std::string emit_graph_text(const WeightedDualGraph& g,
                            const std::optional<std::string>& c_id) {
    if (c_id && !g.has_vertex(*c_id)) {
        throw InputError("marked vertex '" + *c_id + "' is not in the graph");
    }
    std::ostringstream os;
    for (const auto& id : g.vertex_ids()) {
        os << "v " << id << " " << g.weight(id) << "\n";
    }
    for (const auto& [a, b] : g.edge_list()) {
        os << "e " << a << " " << b << "\n";
    }
    if (c_id) {
        os << "c " << *c_id << "\n";
    }
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) {
        ++b;
    }
    while (e > b && is_space(s[e - 1])) {
        --e;
    }
    return s.substr(b, e - b);
}

} // namespace

std::map<std::string, Rat> parse_cycle_literal(const WeightedDualGraph& g,
                                               const std::string& text) {
    std::map<std::string, Rat> coeffs;
    const std::string whole = trim(text);
    if (whole.empty()) {
        return coeffs;
    }
    std::size_t pos = 0;
    while (pos <= whole.size()) {
        const std::size_t comma = whole.find(',', pos);
        const std::string entry =
            trim(whole.substr(pos, (comma == std::string::npos ? whole.size() : comma) - pos));
        if (entry.empty()) {
            throw InputError("empty entry in cycle literal");
        }
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos) {
            throw InputError("cycle entry '" + entry + "' is not of the form <id>=<value>");
        }
        const std::string id = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        if (id.empty() || value.empty()) {
            throw InputError("cycle entry '" + entry + "' is not of the form <id>=<value>");
        }
        if (!g.has_vertex(id)) {
            throw InputError("cycle entry names unknown vertex '" + id + "'");
        }
        if (coeffs.count(id)) {
            throw InputError("cycle entry repeats vertex '" + id + "'");
        }
        coeffs.emplace(id, rat_from_string(value));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return coeffs;
}

std::string emit_cycle_literal(const Cycle& z) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, value] : z.coeffs()) {
        if (value == 0) {
            continue;
        }
        if (!first) {
            os << ",";
        }
        first = false;
        os << id << "=" << rat_to_string(value);
    }
    return os.str();
}

} // namespace bdg

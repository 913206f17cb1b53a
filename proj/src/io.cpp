#include "herg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace herg {

namespace {

bool valid_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ':') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
            out.push_back(":");
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

Herg parse(const std::string& text) {
    Herg g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    std::map<std::string, int> token_line;  // for validate attribution

    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;

        if (!header_seen) {
            if (tok.size() != 2 || tok[0] != "herg" || tok[1] != "1")
                throw ParseError(lineno, "expected header \"herg 1\"");
            header_seen = true;
            continue;
        }

        if (tok.size() < 3 || tok[2] != ":")
            throw ParseError(lineno, "expected \"kind NAME : ...\"");
        const std::string& kind = tok[0];
        const std::string& name = tok[1];
        if (!valid_token(name)) throw ParseError(lineno, "bad name token \"" + name + "\"");
        std::vector<std::string> rest(tok.begin() + 3, tok.end());

        if (kind == "vertex") {
            VertexRecord v{name, {}};
            for (const auto& d : rest) {
                if (!valid_token(d)) throw ParseError(lineno, "bad dart token \"" + d + "\"");
                v.rotation.push_back(d);
                token_line.emplace(d, lineno);
            }
            token_line.emplace("vertex " + name, lineno);
            g.vertices.push_back(std::move(v));
        } else if (kind == "edge") {
            bool twisted = false;
            if (!rest.empty() && rest.back() == "twisted") {
                twisted = true;
                rest.pop_back();
            }
            if (rest.size() != 2)
                throw ParseError(lineno, "edge needs exactly two darts");
            for (const auto& d : rest)
                if (!valid_token(d)) throw ParseError(lineno, "bad dart token \"" + d + "\"");
            token_line.emplace("edge " + name, lineno);
            g.edges.push_back({name, rest[0], rest[1], twisted});
        } else if (kind == "half") {
            if (rest.size() != 1)
                throw ParseError(lineno, "half needs exactly one dart");
            if (!valid_token(rest[0]))
                throw ParseError(lineno, "bad dart token \"" + rest[0] + "\"");
            token_line.emplace("half " + name, lineno);
            g.halves.push_back({name, rest[0]});
        } else {
            throw ParseError(lineno, "unknown record kind \"" + kind + "\"");
        }
    }
    if (!header_seen) throw ParseError(lineno, "missing header \"herg 1\"");

    ValidationReport rep = validate(g);
    if (!rep.ok()) {
        const Violation& v = rep.violations.front();
        int at = 0;
        auto it = token_line.find(v.detail);
        if (it != token_line.end()) at = it->second;
        // Detail may carry a "kind name" pair already.
        for (const auto& [tok, ln] : token_line)
            if (at == 0 && (tok == v.detail || tok.substr(tok.find(' ') + 1) == v.detail)) at = ln;
        throw ParseError(at, v.code + ": " + v.detail);
    }
    return g;
}

Herg parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw HergError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string serialize(const Herg& g) {
    std::ostringstream os;
    os << "herg 1\n";
    std::vector<const VertexRecord*> vs;
    for (const auto& v : g.vertices) vs.push_back(&v);
    std::sort(vs.begin(), vs.end(),
              [](const VertexRecord* a, const VertexRecord* b) { return a->name < b->name; });
    for (const VertexRecord* v : vs) {
        os << "vertex " << v->name << " :";
        for (const auto& d : v->rotation) os << " " << d;
        os << "\n";
    }
    std::vector<const EdgeRecord*> es;
    for (const auto& e : g.edges) es.push_back(&e);
    std::sort(es.begin(), es.end(),
              [](const EdgeRecord* a, const EdgeRecord* b) { return a->name < b->name; });
    for (const EdgeRecord* e : es) {
        os << "edge " << e->name << " : " << e->dart_a << " " << e->dart_b;
        if (e->twisted) os << " twisted";
        os << "\n";
    }
    std::vector<const HalfRibbonRecord*> hs;
    for (const auto& h : g.halves) hs.push_back(&h);
    std::sort(hs.begin(), hs.end(),
              [](const HalfRibbonRecord* a, const HalfRibbonRecord* b) { return a->name < b->name; });
    for (const HalfRibbonRecord* h : hs) os << "half " << h->name << " : " << h->dart << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw HergError("cannot write " + path);
    out << text;
}

}  // namespace herg

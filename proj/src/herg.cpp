#include "herg/herg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace herg {

const VertexRecord* Herg::find_vertex(const std::string& name) const {
    for (const auto& v : vertices)
        if (v.name == name) return &v;
    return nullptr;
}

const EdgeRecord* Herg::find_edge(const std::string& name) const {
    for (const auto& e : edges)
        if (e.name == name) return &e;
    return nullptr;
}

const HalfRibbonRecord* Herg::find_half(const std::string& name) const {
    for (const auto& h : halves)
        if (h.name == name) return &h;
    return nullptr;
}

VertexRecord* Herg::find_vertex(const std::string& name) {
    for (auto& v : vertices)
        if (v.name == name) return &v;
    return nullptr;
}

EdgeRecord* Herg::find_edge(const std::string& name) {
    for (auto& e : edges)
        if (e.name == name) return &e;
    return nullptr;
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.code << ": " << v.detail << "\n";
    return os.str();
}

ValidationReport validate(const Herg& g) {
    ValidationReport rep;
    auto flag = [&](const std::string& code, const std::string& detail) {
        rep.violations.push_back({code, detail});
    };

    std::set<std::string> names;
    for (const auto& v : g.vertices)
        if (!names.insert(v.name).second) flag("duplicate label", "vertex " + v.name);
    names.clear();
    for (const auto& e : g.edges)
        if (!names.insert(e.name).second) flag("duplicate label", "edge " + e.name);
    names.clear();
    for (const auto& h : g.halves)
        if (!names.insert(h.name).second) flag("duplicate label", "half " + h.name);

    // Dart occurrences in the vertex layer.
    std::map<DartId, int> in_rotation;
    for (const auto& v : g.vertices)
        for (const auto& d : v.rotation) in_rotation[d]++;
    for (const auto& [d, count] : in_rotation)
        if (count > 1) flag("duplicate dart", d);

    // Dart occurrences in the edge/half layer.
    std::map<DartId, int> in_record;
    for (const auto& e : g.edges) {
        if (e.dart_a == e.dart_b) {
            flag("edge darts not distinct", e.name);
            in_record[e.dart_a]++;
        } else {
            in_record[e.dart_a]++;
            in_record[e.dart_b]++;
        }
    }
    for (const auto& h : g.halves) {
        in_record[h.dart]++;
        if (in_rotation.count(h.dart) && in_rotation[h.dart] > 1)
            flag("loop half-ribbon", h.name);
    }
    for (const auto& [d, count] : in_record) {
        if (count > 1) flag("dart in two records", d);
        if (!in_rotation.count(d)) flag("unknown dart", d);
    }
    for (const auto& [d, count] : in_rotation)
        if (!in_record.count(d)) flag("orphan dart", d);

    return rep;
}

void require_valid(const Herg& g) {
    ValidationReport rep = validate(g);
    if (!rep.ok()) throw HergError("invalid herg:\n" + rep.str());
}

std::string fresh_label(const std::vector<std::string>& taken, const std::string& base) {
    if (std::find(taken.begin(), taken.end(), base) == taken.end()) return base;
    for (int i = 2;; ++i) {
        std::string cand = base + std::to_string(i);
        if (std::find(taken.begin(), taken.end(), cand) == taken.end()) return cand;
    }
}

namespace {

std::vector<std::string> all_vertex_names(const Herg& g) {
    std::vector<std::string> out;
    for (const auto& v : g.vertices) out.push_back(v.name);
    return out;
}

std::vector<std::string> all_dart_tokens(const Herg& g) {
    std::vector<std::string> out;
    for (const auto& v : g.vertices)
        for (const auto& d : v.rotation) out.push_back(d);
    return out;
}

}  // namespace

std::vector<std::string> completion_leaves(const Herg& g) {
    std::vector<std::string> taken = all_vertex_names(g);
    std::vector<std::string> out;
    for (const auto& h : g.halves) {
        std::string leaf = fresh_label(taken, h.name + "_v");
        taken.push_back(leaf);
        out.push_back(leaf);
    }
    return out;
}

Herg complete(const Herg& g) {
    require_valid(g);
    Herg out = g;
    std::vector<std::string> vnames = all_vertex_names(g);
    std::vector<std::string> darts = all_dart_tokens(g);
    for (const auto& h : g.halves) {
        std::string leaf = fresh_label(vnames, h.name + "_v");
        vnames.push_back(leaf);
        std::string dart = fresh_label(darts, h.name + "_d");
        darts.push_back(dart);
        out.vertices.push_back({leaf, {dart}});
        out.edges.push_back({h.name, h.dart, dart, false});
    }
    out.halves.clear();
    return out;
}

Herg prune(const Herg& g, const std::vector<std::string>& leaves) {
    Herg out = g;
    for (const auto& name : leaves) {
        const VertexRecord* v = out.find_vertex(name);
        if (!v) throw HergError("prune: unknown vertex " + name);
        if (v->rotation.size() != 1)
            throw HergError("prune: vertex " + name + " is not a leaf");
        DartId d = v->rotation.front();
        // Find the record that owns the leaf dart.
        const EdgeRecord* owner = nullptr;
        for (const auto& e : out.edges)
            if (e.dart_a == d || e.dart_b == d) owner = &e;
        if (!owner) throw HergError("prune: leaf " + name + " carries a half-ribbon");
        if (owner->twisted)
            throw HergError("prune: edge incident to " + name + " is twisted");
        DartId survivor = (owner->dart_a == d) ? owner->dart_b : owner->dart_a;
        if (survivor == d)
            throw HergError("prune: vertex " + name + " is not a leaf");
        std::string ename = owner->name;
        out.halves.push_back({ename, survivor});
        out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                       [&](const EdgeRecord& e) { return e.name == ename; }),
                        out.edges.end());
        out.vertices.erase(std::remove_if(out.vertices.begin(), out.vertices.end(),
                                          [&](const VertexRecord& w) { return w.name == name; }),
                           out.vertices.end());
    }
    return out;
}

Herg underlying(const Herg& g) {
    Herg out = g;
    std::set<DartId> hr_darts;
    for (const auto& h : g.halves) hr_darts.insert(h.dart);
    for (auto& v : out.vertices)
        v.rotation.erase(std::remove_if(v.rotation.begin(), v.rotation.end(),
                                        [&](const DartId& d) { return hr_darts.count(d) > 0; }),
                         v.rotation.end());
    out.halves.clear();
    return out;
}

Herg flip_vertex(const Herg& g, const std::string& vertex) {
    Herg out = g;
    VertexRecord* v = out.find_vertex(vertex);
    if (!v) throw HergError("flip: unknown vertex " + vertex);
    std::reverse(v->rotation.begin(), v->rotation.end());
    std::set<DartId> here(v->rotation.begin(), v->rotation.end());
    for (auto& e : out.edges) {
        int ends = (here.count(e.dart_a) ? 1 : 0) + (here.count(e.dart_b) ? 1 : 0);
        if (ends == 1) e.twisted = !e.twisted;
    }
    return out;
}

Herg reflect(const Herg& g) {
    Herg out = g;
    for (auto& v : out.vertices) std::reverse(v.rotation.begin(), v.rotation.end());
    return out;
}

Herg normalize_twists(const Herg& g) {
    std::map<std::string, int> vid;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) vid[g.vertices[i].name] = static_cast<int>(i);
    std::map<DartId, int> dart_vertex;
    for (const auto& v : g.vertices)
        for (const auto& d : v.rotation) dart_vertex[d] = vid[v.name];

    int nv = static_cast<int>(g.v());
    std::vector<std::vector<std::pair<int, bool>>> adj(nv);
    for (const auto& e : g.edges) {
        int u = dart_vertex.at(e.dart_a);
        int v = dart_vertex.at(e.dart_b);
        if (u == v) continue;
        adj[u].push_back({v, e.twisted});
        adj[v].push_back({u, e.twisted});
    }
    std::vector<int> parity(nv, -1);
    for (int start = 0; start < nv; ++start) {
        if (parity[start] >= 0) continue;
        parity[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, tw] : adj[u]) {
                if (parity[v] < 0) {
                    parity[v] = parity[u] ^ (tw ? 1 : 0);
                    stack.push_back(v);
                }
            }
        }
    }

    Herg out = g;
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        if (parity[i]) std::reverse(out.vertices[i].rotation.begin(), out.vertices[i].rotation.end());
    for (auto& e : out.edges) {
        int u = dart_vertex.at(e.dart_a);
        int v = dart_vertex.at(e.dart_b);
        if (u != v) e.twisted = e.twisted ^ (parity[u] != 0) ^ (parity[v] != 0);
    }
    return out;
}

}  // namespace herg

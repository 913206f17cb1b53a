#include "herg/topology.hpp"

#include <algorithm>
#include <numeric>

#include "herg/edit.hpp"
#include "herg/index.hpp"

namespace herg {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

const EdgeClassification& Classification::edge(const std::string& name) const {
    for (const auto& e : edges)
        if (e.name == name) return e;
    throw HergError("classify: unknown edge " + name);
}

FaceReport trace_boundary(const Herg& g) {
    HergIndex ix(g);
    SideSystem ss(ix);
    FaceReport rep;
    for (const RawOrbit& orb : raw_boundary(ix, ss)) {
        BoundaryOrbit b;
        if (orb.isolated_vertex >= 0) {
            b.isolated_vertex = g.vertices[orb.isolated_vertex].name;
        } else {
            for (int s : orb.sides)
                b.sides.push_back({ix.dart_token[s / 2], (s % 2 == 0) ? SideLR::Left : SideLR::Right});
            for (int hr : orb.tau_hr)
                if (hr >= 0) b.crossings.push_back(g.halves[hr].name);
        }
        for (const auto& hname : b.crossings)
            rep.hr_orbit[hname] = static_cast<int>(rep.orbits.size());
        if (b.crossings.empty())
            rep.f_int++;
        else
            rep.c_ext++;
        rep.f_ext += static_cast<int>(b.crossings.size());
        rep.orbits.push_back(std::move(b));
    }
    return rep;
}

Components components(const Herg& g) {
    HergIndex ix(g);
    Dsu dsu(static_cast<int>(g.vertices.size()));
    for (const auto& e : g.edges)
        dsu.unite(ix.dart_vertex[ix.dart_index.at(e.dart_a)],
                  ix.dart_vertex[ix.dart_index.at(e.dart_b)]);
    std::map<int, std::vector<std::string>> groups;
    for (std::size_t vi = 0; vi < g.vertices.size(); ++vi)
        groups[dsu.find(static_cast<int>(vi))].push_back(g.vertices[vi].name);
    Components out;
    for (auto& [root, names] : groups) {
        std::sort(names.begin(), names.end());
        out.parts.push_back(names);
    }
    std::sort(out.parts.begin(), out.parts.end());
    out.k = static_cast<int>(out.parts.size());
    return out;
}

std::pair<int, int> rank_nullity(const Herg& g) {
    int k = components(g).k;
    int r = static_cast<int>(g.v()) - k;
    int n = static_cast<int>(g.e()) - r;
    return {r, n};
}

bool orientable(const Herg& g) {
    // A flip assignment removing all twists exists iff twist parities are
    // consistent along every cycle; a twisted loop is immediately fatal.
    HergIndex ix(g);
    int nv = static_cast<int>(g.v());
    std::vector<int> comp(nv, -1), parity(nv, 0);
    std::vector<std::vector<std::pair<int, bool>>> adj(nv);
    for (const auto& e : g.edges) {
        int u = ix.dart_vertex[ix.dart_index.at(e.dart_a)];
        int v = ix.dart_vertex[ix.dart_index.at(e.dart_b)];
        if (u == v) {
            if (e.twisted) return false;
            continue;
        }
        adj[u].push_back({v, e.twisted});
        adj[v].push_back({u, e.twisted});
    }
    for (int start = 0; start < nv; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = start;
        parity[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, tw] : adj[u]) {
                int want = parity[u] ^ (tw ? 1 : 0);
                if (comp[v] < 0) {
                    comp[v] = start;
                    parity[v] = want;
                    stack.push_back(v);
                } else if (parity[v] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::pair<int, int> euler_genus(const Herg& g) {
    FaceReport f = trace_boundary(g);
    int k = components(g).k;
    int chi = static_cast<int>(g.v()) - static_cast<int>(g.e()) + f.f_int + f.c_ext;
    return {chi, 2 * k - chi};
}

EmbeddingSignature embedding_signature(const Herg& g) {
    FaceReport f = trace_boundary(g);
    int k = components(g).k;
    EmbeddingSignature sig;
    sig.chi = static_cast<int>(g.v()) - static_cast<int>(g.e()) + f.f_int + f.c_ext;
    sig.genus = 2 * k - sig.chi;
    sig.orientable = orientable(g);
    sig.punctures_proper = f.c_ext;
    sig.punctures_hproper = static_cast<int>(g.h());
    return sig;
}

namespace {

// A half-ribbon is internal iff it is alone in its external cycle.
bool hr_internal_in(const FaceReport& faces, const std::string& hr_name) {
    int orbit = faces.hr_orbit.at(hr_name);
    return faces.orbits[orbit].crossings.size() == 1;
}

}  // namespace

Classification classify(const Herg& g) {
    HergIndex ix(g);
    FaceReport faces = trace_boundary(g);
    Classification out;

    for (const auto& h : g.halves) {
        if (hr_internal_in(faces, h.name))
            out.hr_internal.push_back(h.name);
        else
            out.hr_external.push_back(h.name);
    }

    for (const auto& v : g.vertices) {
        bool has_hr = false;
        for (const auto& d : v.rotation)
            if (ix.dart_half[ix.dart_index.at(d)] >= 0) has_hr = true;
        (has_hr ? out.v_external : out.v_internal).push_back(v.name);
    }

    int base_k = components(g).k;
    for (const auto& e : g.edges) {
        EdgeClassification ec;
        ec.name = e.name;
        int u = ix.dart_vertex[ix.dart_index.at(e.dart_a)];
        int v = ix.dart_vertex[ix.dart_index.at(e.dart_b)];
        ec.is_loop = (u == v);
        ec.is_bridge = !ec.is_loop && components(delete_edge(g, e.name)).k > base_k;
        if (ec.is_loop) {
            ec.cls = EdgeClass::Loop;
        } else {
            Herg cut = cut_edge(g, e.name);
            FaceReport cf = trace_boundary(cut);
            // The two half-ribbons created by the cut are the last two records.
            bool a_int = hr_internal_in(cf, cut.halves[cut.halves.size() - 2].name);
            bool b_int = hr_internal_in(cf, cut.halves[cut.halves.size() - 1].name);
            if (a_int && b_int)
                ec.cls = EdgeClass::Internal;
            else if (a_int || b_int)
                ec.cls = EdgeClass::SemiInternal;
            else
                ec.cls = EdgeClass::External;
        }
        out.edges.push_back(ec);
    }
    return out;
}

}  // namespace herg

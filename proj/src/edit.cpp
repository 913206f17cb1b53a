#include "herg/edit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "herg/index.hpp"
#include "herg/topology.hpp"

namespace herg {

std::string SubgraphStats::str() const {
    std::ostringstream os;
    os << "(" << r << "," << n << "," << k << "," << f_int << "," << c_ext << "," << o << ","
       << hcount << ")";
    return os.str();
}

namespace {

const EdgeRecord& edge_or_throw(const Herg& g, const std::string& name) {
    const EdgeRecord* e = g.find_edge(name);
    if (!e) throw HergError("unknown edge " + name);
    return *e;
}

void erase_edge_record(Herg& g, const std::string& name) {
    g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(),
                                 [&](const EdgeRecord& e) { return e.name == name; }),
                  g.edges.end());
}

void erase_dart(Herg& g, const DartId& d) {
    for (auto& v : g.vertices) {
        auto it = std::find(v.rotation.begin(), v.rotation.end(), d);
        if (it != v.rotation.end()) {
            v.rotation.erase(it);
            return;
        }
    }
}

std::vector<std::string> half_names(const Herg& g) {
    std::vector<std::string> out;
    for (const auto& h : g.halves) out.push_back(h.name);
    return out;
}

}  // namespace

Herg delete_edge(const Herg& g, const std::string& edge) {
    EdgeRecord e = edge_or_throw(g, edge);
    Herg out = g;
    erase_dart(out, e.dart_a);
    erase_dart(out, e.dart_b);
    erase_edge_record(out, edge);
    return out;
}

Herg cut_edge(const Herg& g, const std::string& edge) {
    EdgeRecord e = edge_or_throw(g, edge);
    Herg out = g;
    erase_edge_record(out, edge);
    std::vector<std::string> taken = half_names(out);
    std::string h1 = fresh_label(taken, e.name + "_c1");
    taken.push_back(h1);
    std::string h2 = fresh_label(taken, e.name + "_c2");
    out.halves.push_back({h1, e.dart_a});
    out.halves.push_back({h2, e.dart_b});
    return out;
}

namespace {

// Rotation of v with d removed, starting at d's successor.
std::vector<DartId> rotation_from_successor(const std::vector<DartId>& rot, const DartId& d) {
    auto it = std::find(rot.begin(), rot.end(), d);
    std::size_t p = static_cast<std::size_t>(it - rot.begin());
    std::vector<DartId> out;
    for (std::size_t i = 1; i < rot.size(); ++i) out.push_back(rot[(p + i) % rot.size()]);
    return out;
}

void toggle_edge_end(Herg& g, const DartId& d) {
    for (auto& e : g.edges)
        if (e.dart_a == d || e.dart_b == d) {
            e.twisted = !e.twisted;
            return;
        }
}

}  // namespace

Herg contract_edge(const Herg& g, const std::string& edge) {
    EdgeRecord e = edge_or_throw(g, edge);
    HergIndex ix(g);
    int a = ix.dart_index.at(e.dart_a);
    int b = ix.dart_index.at(e.dart_b);
    int ua = ix.dart_vertex[a];
    int ub = ix.dart_vertex[b];

    if (ua != ub) {
        Herg work = g;
        if (e.twisted) {
            // Normalize by flipping one endpoint; this untwists e.
            work = flip_vertex(work, g.vertices[ub].name);
        }
        VertexRecord* vu = work.find_vertex(g.vertices[ua].name);
        VertexRecord* vv = work.find_vertex(g.vertices[ub].name);
        DartId du = e.dart_a;
        DartId dv = e.dart_b;

        std::vector<DartId> splice = rotation_from_successor(vv->rotation, dv);
        std::vector<DartId> merged;
        for (const auto& d : vu->rotation) {
            if (d == du)
                merged.insert(merged.end(), splice.begin(), splice.end());
            else
                merged.push_back(d);
        }
        vu->rotation = merged;
        std::string dead = vv->name;
        work.vertices.erase(std::remove_if(work.vertices.begin(), work.vertices.end(),
                                           [&](const VertexRecord& v) { return v.name == dead; }),
                            work.vertices.end());
        erase_edge_record(work, edge);
        return work;
    }

    // Loop at vertex ua with rotation (dart_a, A..., dart_b, B...).
    Herg out = g;
    VertexRecord* vu = out.find_vertex(g.vertices[ua].name);
    const std::vector<DartId>& rot = vu->rotation;
    std::size_t pa = static_cast<std::size_t>(
        std::find(rot.begin(), rot.end(), e.dart_a) - rot.begin());
    std::size_t pb = static_cast<std::size_t>(
        std::find(rot.begin(), rot.end(), e.dart_b) - rot.begin());
    std::vector<DartId> A, B;
    for (std::size_t i = (pa + 1) % rot.size(); i != pb; i = (i + 1) % rot.size())
        A.push_back(rot[i]);
    for (std::size_t i = (pb + 1) % rot.size(); i != pa; i = (i + 1) % rot.size())
        B.push_back(rot[i]);

    if (!e.twisted) {
        // The vertex splits in two.
        std::vector<std::string> vnames;
        for (const auto& v : out.vertices) vnames.push_back(v.name);
        std::string split = fresh_label(vnames, vu->name + "_s");
        vu->rotation = A;
        out.vertices.push_back({split, B});
    } else {
        std::vector<DartId> merged = A;
        merged.insert(merged.end(), B.rbegin(), B.rend());
        vu->rotation = merged;
        erase_edge_record(out, edge);
        for (const auto& d : B) toggle_edge_end(out, d);
        return out;
    }
    erase_edge_record(out, edge);
    return out;
}

std::vector<std::string> sorted_edge_labels(const Herg& g) {
    std::vector<std::string> labels;
    for (const auto& e : g.edges) labels.push_back(e.name);
    std::sort(labels.begin(), labels.end());
    return labels;
}

Herg materialize_subgraph(const Herg& g, const std::vector<std::string>& kept, SubgraphMode mode) {
    std::set<std::string> keep(kept.begin(), kept.end());
    Herg out = g;
    for (const auto& label : sorted_edge_labels(g)) {
        if (keep.count(label)) continue;
        out = (mode == SubgraphMode::Delete) ? delete_edge(out, label) : cut_edge(out, label);
    }
    return out;
}

SubgraphStats subgraph_stats(const Herg& g, const std::vector<std::string>& kept, SubgraphMode mode) {
    Herg sub = materialize_subgraph(g, kept, mode);
    SubgraphStats st;
    auto [r, n] = rank_nullity(sub);
    st.r = r;
    st.n = n;
    st.k = components(sub).k;
    FaceReport f = trace_boundary(sub);
    st.f_int = f.f_int;
    st.c_ext = f.c_ext;
    st.o = orientable(sub) ? 0 : 1;
    st.hcount = static_cast<int>(sub.h());
    return st;
}

void enumerate_subgraphs(const Herg& g, SubgraphMode mode,
                         const std::function<void(const SubgraphSelector&, const SubgraphStats&)>& fn) {
    require_valid(g);
    std::vector<std::string> labels = sorted_edge_labels(g);
    if (labels.size() > 62) throw HergError("enumerate_subgraphs: too many edges");
    std::uint64_t total = std::uint64_t{1} << labels.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        SubgraphSelector sel;
        sel.mode = mode;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) sel.kept.push_back(labels[i]);
        fn(sel, subgraph_stats(g, sel.kept, mode));
    }
}

}  // namespace herg

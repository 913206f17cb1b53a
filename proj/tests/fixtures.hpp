#pragma once

// Hand-built graphs used across the test suites.

#include "herg/herg.hpp"

namespace fixtures {

inline herg::Herg bare_vertex() {
    herg::Herg g;
    g.vertices.push_back({"u", {}});
    return g;
}

// n isolated vertices, the first `with_hrs` of them carrying one half-ribbon.
inline herg::Herg e_n(int n, int with_hrs = 0) {
    herg::Herg g;
    for (int i = 1; i <= n; ++i) {
        std::string name = "u" + std::to_string(i);
        if (i <= with_hrs) {
            g.vertices.push_back({name, {"d" + std::to_string(i)}});
            g.halves.push_back({"h" + std::to_string(i), "d" + std::to_string(i)});
        } else {
            g.vertices.push_back({name, {}});
        }
    }
    return g;
}

inline herg::Herg vertex_with_hrs(int m) {
    herg::Herg g;
    herg::VertexRecord u{"u", {}};
    for (int i = 1; i <= m; ++i) {
        u.rotation.push_back("d" + std::to_string(i));
        g.halves.push_back({"h" + std::to_string(i), "d" + std::to_string(i)});
    }
    g.vertices.push_back(u);
    return g;
}

inline herg::Herg bridge() {
    herg::Herg g;
    g.vertices.push_back({"u", {"d1"}});
    g.vertices.push_back({"v", {"d2"}});
    g.edges.push_back({"e", "d1", "d2", false});
    return g;
}

inline herg::Herg loop(bool twisted = false) {
    herg::Herg g;
    g.vertices.push_back({"u", {"d1", "d2"}});
    g.edges.push_back({"e", "d1", "d2", twisted});
    return g;
}

// Path with a half-ribbon: u(d1, dh) -- e -- v(d2), half h on u.
inline herg::Herg g6() {
    herg::Herg g;
    g.vertices.push_back({"u", {"d1", "dh"}});
    g.vertices.push_back({"v", {"d2"}});
    g.edges.push_back({"e", "d1", "d2", false});
    g.halves.push_back({"h", "dh"});
    return g;
}

// One vertex, one untwisted loop, one half-ribbon outside the loop: the
// geometric dual of g6 (one loop face closed).
inline herg::Herg g7() {
    herg::Herg g;
    g.vertices.push_back({"u", {"l1", "l2", "dh"}});
    g.edges.push_back({"e", "l1", "l2", false});
    g.halves.push_back({"h", "dh"});
    return g;
}

// Two vertices joined by an edge, one half-ribbon on each vertex.
inline herg::Herg two_hr_bridge() {
    herg::Herg g;
    g.vertices.push_back({"u", {"d1", "x1"}});
    g.vertices.push_back({"v", {"d2", "x2"}});
    g.edges.push_back({"e", "d1", "d2", false});
    g.halves.push_back({"h1", "x1"});
    g.halves.push_back({"h2", "x2"});
    return g;
}

// Two vertices, three parallel edges.
inline herg::Herg theta() {
    herg::Herg g;
    g.vertices.push_back({"u", {"a1", "b1", "c1"}});
    g.vertices.push_back({"v", {"a2", "b2", "c2"}});
    g.edges.push_back({"ea", "a1", "a2", false});
    g.edges.push_back({"eb", "b1", "b2", false});
    g.edges.push_back({"ec", "c1", "c2", false});
    return g;
}

// Path of two edges: u -- e1 -- v -- e2 -- w.
inline herg::Herg path2() {
    herg::Herg g;
    g.vertices.push_back({"u", {"d1"}});
    g.vertices.push_back({"v", {"d2", "d3"}});
    g.vertices.push_back({"w", {"d4"}});
    g.edges.push_back({"e1", "d1", "d2", false});
    g.edges.push_back({"e2", "d3", "d4", false});
    return g;
}

// Two vertices joined by two parallel edges, exactly one twisted.
inline herg::Herg twisted_theta2() {
    herg::Herg g;
    g.vertices.push_back({"u", {"a1", "b1"}});
    g.vertices.push_back({"v", {"a2", "b2"}});
    g.edges.push_back({"ea", "a1", "a2", false});
    g.edges.push_back({"eb", "b1", "b2", true});
    return g;
}

inline herg::Herg disjoint_union(const herg::Herg& g1, herg::Herg g2, const std::string& suffix) {
    herg::Herg out = g1;
    for (auto& v : g2.vertices) {
        v.name += suffix;
        for (auto& d : v.rotation) d += suffix;
        out.vertices.push_back(v);
    }
    for (auto& e : g2.edges) {
        e.name += suffix;
        e.dart_a += suffix;
        e.dart_b += suffix;
        out.edges.push_back(e);
    }
    for (auto& h : g2.halves) {
        h.name += suffix;
        h.dart += suffix;
        out.halves.push_back(h);
    }
    return out;
}

// A bridge e2 between v1 (carrying half h2) and v2, where a loop e1 at v2
// interlaces the bridge dart with half h1. Cutting e2 classifies differently
// depending on whether e1 is kept, so no single bridge-relation branch fits.
inline herg::Herg shielded_bridge() {
    herg::Herg g;
    g.vertices.push_back({"v1", {"e2b", "h2a"}});
    g.vertices.push_back({"v2", {"e1b", "e2a", "e1a", "h1a"}});
    g.edges.push_back({"e1", "e1a", "e1b", false});
    g.edges.push_back({"e2", "e2a", "e2b", false});
    g.halves.push_back({"h1", "h1a"});
    g.halves.push_back({"h2", "h2a"});
    return g;
}

}  // namespace fixtures

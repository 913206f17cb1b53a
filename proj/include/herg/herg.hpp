#pragma once

// Ribbon graphs with half-ribbons (HERGs), encoded as rotation systems:
// every edge owns two darts, every half-ribbon one, and each vertex carries
// the counterclockwise cyclic order of its dart attachments. Edges carry a
// twist bit for non-orientable ribbons.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace herg {

using DartId = std::string;

struct VertexRecord {
    std::string name;
    std::vector<DartId> rotation;  // cyclic; first follows last
};

struct EdgeRecord {
    std::string name;
    DartId dart_a;
    DartId dart_b;
    bool twisted = false;
};

struct HalfRibbonRecord {
    std::string name;
    DartId dart;
};

struct Herg {
    std::vector<VertexRecord> vertices;
    std::vector<EdgeRecord> edges;
    std::vector<HalfRibbonRecord> halves;

    std::size_t v() const { return vertices.size(); }
    std::size_t e() const { return edges.size(); }
    std::size_t h() const { return halves.size(); }
    std::size_t dart_count() const { return 2 * edges.size() + halves.size(); }

    const VertexRecord* find_vertex(const std::string& name) const;
    const EdgeRecord* find_edge(const std::string& name) const;
    const HalfRibbonRecord* find_half(const std::string& name) const;
    VertexRecord* find_vertex(const std::string& name);
    EdgeRecord* find_edge(const std::string& name);
};

class HergError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

ValidationReport validate(const Herg& g);

// Throws HergError when validate(g) reports violations.
void require_valid(const Herg& g);

// Fresh label: base itself if unused, else base2, base3, ...
std::string fresh_label(const std::vector<std::string>& taken, const std::string& base);

// Promotes every half-ribbon to an untwisted edge ending on a fresh leaf
// vertex. The new edge keeps the half-ribbon's name, so pruning the added
// leaves restores the original names exactly.
Herg complete(const Herg& g);

// Names of the leaf vertices complete(g) creates, in the order it creates them.
std::vector<std::string> completion_leaves(const Herg& g);

// Removes the named degree-1 vertices and downgrades their edges to
// half-ribbons. Leaves are processed one at a time in the given order;
// a vertex that is not a plain leaf with an untwisted edge is rejected.
Herg prune(const Herg& g, const std::vector<std::string>& leaves);

// Drops all half-ribbons and their darts.
Herg underlying(const Herg& g);

// Reverses one vertex's rotation and toggles the twist bit of every edge end
// attached there (a loop end toggles twice, so loops are unchanged).
Herg flip_vertex(const Herg& g, const std::string& vertex);

// Mirror image: all rotations reversed, twist bits kept.
Herg reflect(const Herg& g);

// Applies the spanning-forest flip assignment: every tree edge ends up
// untwisted, so an orientable graph comes out with no twists at all.
Herg normalize_twists(const Herg& g);

}  // namespace herg

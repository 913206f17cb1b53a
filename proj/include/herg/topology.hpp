#pragma once

// Boundary components, face taxonomy, connectivity, orientability, Euler
// characteristic and genus, and the internal/external classification of
// half-ribbons, edges and vertices.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "herg/herg.hpp"

namespace herg {

enum class SideLR { Left, Right };

struct Side {
    DartId dart;
    SideLR lr;
};

struct BoundaryOrbit {
    std::vector<Side> sides;              // cyclic, in walk order
    std::vector<std::string> crossings;   // half-ribbons crossed, in walk order
    std::string isolated_vertex;          // set on the empty orbit of a bare vertex
    bool closed() const { return crossings.empty(); }
};

struct FaceReport {
    std::vector<BoundaryOrbit> orbits;
    int f_int = 0;   // closed faces
    int f_ext = 0;   // open faces (= total crossings = |H|)
    int c_ext = 0;   // external cycles
    std::map<std::string, int> hr_orbit;  // half-ribbon name -> orbit index
};

struct Components {
    int k = 0;
    std::vector<std::vector<std::string>> parts;  // vertex names, sorted
};

struct EmbeddingSignature {
    bool orientable = true;
    int genus = 0;             // Euler genus
    int punctures_proper = 0;  // = C_ext
    int punctures_hproper = 0; // = |H|
    int chi = 0;
};

enum class EdgeClass { Internal, SemiInternal, External, Loop };

struct EdgeClassification {
    std::string name;
    EdgeClass cls = EdgeClass::Internal;
    bool is_loop = false;
    bool is_bridge = false;
};

struct Classification {
    std::vector<std::string> hr_internal;
    std::vector<std::string> hr_external;
    std::vector<EdgeClassification> edges;
    std::vector<std::string> v_internal;
    std::vector<std::string> v_external;

    int v_int() const { return static_cast<int>(v_internal.size()); }
    int v_ext() const { return static_cast<int>(v_external.size()); }
    const EdgeClassification& edge(const std::string& name) const;
};

FaceReport trace_boundary(const Herg& g);
Components components(const Herg& g);
std::pair<int, int> rank_nullity(const Herg& g);  // (r, n)
bool orientable(const Herg& g);
std::pair<int, int> euler_genus(const Herg& g);   // (chi, gamma)
EmbeddingSignature embedding_signature(const Herg& g);
Classification classify(const Herg& g);

}  // namespace herg

#pragma once

// Integer view of a Herg plus the side-permutation system used for boundary
// walks. Each dart has a left and a right side in rotation order; side
// 2*d is the left of dart d, side 2*d+1 the right. Two fixed-point-free
// pairings act on sides:
//   alpha — vertex arcs: the right side of a dart pairs with the left side
//           of its rotation successor;
//   tau   — ribbon traversals: an untwisted edge pairs each side of one dart
//           with the opposite side of its partner, a twisted edge with the
//           same side, and a half-ribbon pairs its own left and right side
//           (an external-segment crossing).
// Boundary components are the alternating alpha/tau cycles.

#include <string>
#include <unordered_map>
#include <vector>

#include "herg/herg.hpp"

namespace herg {

struct HergIndex {
    const Herg* g = nullptr;
    int dart_count = 0;
    std::vector<DartId> dart_token;                     // index -> token
    std::unordered_map<std::string, int> dart_index;    // token -> index
    std::vector<int> dart_vertex;                       // owning vertex
    std::vector<int> dart_pos;                          // position in rotation
    std::vector<int> dart_edge;                         // owning edge or -1
    std::vector<int> dart_half;                         // owning half or -1
    std::vector<int> dart_partner;                      // other edge dart or -1
    std::vector<std::vector<int>> rotations;            // vertex -> dart indices
    std::unordered_map<std::string, int> vertex_index;
    std::unordered_map<std::string, int> edge_index;
    std::unordered_map<std::string, int> half_index;

    explicit HergIndex(const Herg& graph);

    int side_count() const { return 2 * dart_count; }
    bool is_loop(int edge) const;
};

struct SideSystem {
    std::vector<int> alpha;
    std::vector<int> tau;
    std::vector<bool> crossing;  // side s: the tau link at s is an HR crossing

    explicit SideSystem(const HergIndex& ix);
};

// One boundary component: the sides in walk order (empty for the degenerate
// orbit of an isolated bare vertex) and, per tau step, the crossed half-ribbon
// (or -1 for an edge-rail traversal).
struct RawOrbit {
    std::vector<int> sides;
    std::vector<int> tau_from;   // tau steps in walk order: from-side
    std::vector<int> tau_hr;     // half index crossed at that step, or -1
    int isolated_vertex = -1;    // vertex index for a degenerate orbit
    int crossings = 0;
};

std::vector<RawOrbit> raw_boundary(const HergIndex& ix, const SideSystem& ss);

}  // namespace herg

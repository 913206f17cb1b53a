#pragma once

// Geometric dual of a HERG, built combinatorially from the boundary orbits:
// one dual vertex per orbit whose rotation is the cyclic sequence of edge-rail
// traversals and external-segment crossings along it, one dual edge per edge
// (joining its two rail traversals), one dual half-ribbon per half-ribbon.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "herg/herg.hpp"

namespace herg {

struct DualWitness {
    std::vector<std::string> face_to_vertex;        // orbit index -> dual vertex name
    std::map<std::string, std::string> edge_to_edge;
    std::map<std::string, std::string> hr_to_hr;
};

std::pair<Herg, DualWitness> dual(const Herg& g);

struct CorrespondenceReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const {
        for (const auto& [name, pass] : checks)
            if (!pass) return false;
        return true;
    }
    std::string str() const;
};

// Verifies V_int(g) = f_int(gd), f_int(g) = V_int(gd), V_ext(g) = C_ext(gd),
// C_ext(g) = V_ext(gd), e(g) = e(gd), plus |H|, genus and orientability
// preservation. Expects gd = dual(g).
CorrespondenceReport check_correspondences(const Herg& g, const Herg& gd);

// dual(dual(g)) is isomorphic to g, reflection allowed.
bool double_dual_check(const Herg& g);

}  // namespace herg

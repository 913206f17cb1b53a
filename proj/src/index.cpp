#include "herg/index.hpp"

#include <algorithm>

namespace herg {

HergIndex::HergIndex(const Herg& graph) : g(&graph) {
    require_valid(graph);
    for (std::size_t vi = 0; vi < graph.vertices.size(); ++vi) {
        vertex_index[graph.vertices[vi].name] = static_cast<int>(vi);
        rotations.emplace_back();
        for (std::size_t p = 0; p < graph.vertices[vi].rotation.size(); ++p) {
            const DartId& tok = graph.vertices[vi].rotation[p];
            int di = dart_count++;
            dart_token.push_back(tok);
            dart_index[tok] = di;
            dart_vertex.push_back(static_cast<int>(vi));
            dart_pos.push_back(static_cast<int>(p));
            dart_edge.push_back(-1);
            dart_half.push_back(-1);
            dart_partner.push_back(-1);
            rotations.back().push_back(di);
        }
    }
    for (std::size_t ei = 0; ei < graph.edges.size(); ++ei) {
        edge_index[graph.edges[ei].name] = static_cast<int>(ei);
        int a = dart_index.at(graph.edges[ei].dart_a);
        int b = dart_index.at(graph.edges[ei].dart_b);
        dart_edge[a] = dart_edge[b] = static_cast<int>(ei);
        dart_partner[a] = b;
        dart_partner[b] = a;
    }
    for (std::size_t hi = 0; hi < graph.halves.size(); ++hi) {
        half_index[graph.halves[hi].name] = static_cast<int>(hi);
        dart_half[dart_index.at(graph.halves[hi].dart)] = static_cast<int>(hi);
    }
}

bool HergIndex::is_loop(int edge) const {
    int a = dart_index.at(g->edges[edge].dart_a);
    int b = dart_index.at(g->edges[edge].dart_b);
    return dart_vertex[a] == dart_vertex[b];
}

SideSystem::SideSystem(const HergIndex& ix) {
    alpha.assign(ix.side_count(), -1);
    tau.assign(ix.side_count(), -1);
    crossing.assign(ix.side_count(), false);
    for (const auto& rot : ix.rotations) {
        int deg = static_cast<int>(rot.size());
        for (int i = 0; i < deg; ++i) {
            int d = rot[i];
            int succ = rot[(i + 1) % deg];
            alpha[2 * d + 1] = 2 * succ;
            alpha[2 * succ] = 2 * d + 1;
        }
    }
    for (std::size_t ei = 0; ei < ix.g->edges.size(); ++ei) {
        const EdgeRecord& e = ix.g->edges[ei];
        int a = ix.dart_index.at(e.dart_a);
        int b = ix.dart_index.at(e.dart_b);
        if (e.twisted) {
            tau[2 * a] = 2 * b;
            tau[2 * b] = 2 * a;
            tau[2 * a + 1] = 2 * b + 1;
            tau[2 * b + 1] = 2 * a + 1;
        } else {
            tau[2 * a] = 2 * b + 1;
            tau[2 * b + 1] = 2 * a;
            tau[2 * a + 1] = 2 * b;
            tau[2 * b] = 2 * a + 1;
        }
    }
    for (const auto& h : ix.g->halves) {
        int d = ix.dart_index.at(h.dart);
        tau[2 * d] = 2 * d + 1;
        tau[2 * d + 1] = 2 * d;
        crossing[2 * d] = crossing[2 * d + 1] = true;
    }
}

std::vector<RawOrbit> raw_boundary(const HergIndex& ix, const SideSystem& ss) {
    std::vector<RawOrbit> orbits;
    std::vector<bool> seen(ix.side_count(), false);
    for (int s0 = 0; s0 < ix.side_count(); ++s0) {
        if (seen[s0]) continue;
        RawOrbit orb;
        int s = s0;
        do {
            int arc = ss.alpha[s];
            seen[s] = seen[arc] = true;
            orb.sides.push_back(s);
            orb.sides.push_back(arc);
            orb.tau_from.push_back(arc);
            if (ss.crossing[arc]) {
                orb.tau_hr.push_back(ix.dart_half[arc / 2]);
                orb.crossings++;
            } else {
                orb.tau_hr.push_back(-1);
            }
            s = ss.tau[arc];
        } while (s != s0);
        orbits.push_back(std::move(orb));
    }
    // Isolated bare vertices contribute one zero-length orbit each.
    for (std::size_t vi = 0; vi < ix.rotations.size(); ++vi) {
        if (ix.rotations[vi].empty()) {
            RawOrbit orb;
            orb.isolated_vertex = static_cast<int>(vi);
            orbits.push_back(std::move(orb));
        }
    }
    return orbits;
}

}  // namespace herg

#include "herg/duality.hpp"

#include <algorithm>
#include <sstream>

#include "herg/index.hpp"
#include "herg/isomorphism.hpp"
#include "herg/topology.hpp"

namespace herg {

namespace {

// A tau link is identified by its smaller side.
int link_id(const SideSystem& ss, int side) { return std::min(side, ss.tau[side]); }

}  // namespace

std::pair<Herg, DualWitness> dual(const Herg& g) {
    HergIndex ix(g);
    SideSystem ss(ix);
    std::vector<RawOrbit> orbits = raw_boundary(ix, ss);

    Herg out;
    DualWitness wit;

    // Dual dart per tau link; edge rails get "<edge>_1"/"<edge>_2" (by smaller
    // side), half-ribbon crossings "<half>_1".
    std::map<int, std::string> link_dart;   // link id -> dual dart token
    std::map<int, std::string> link_left;   // link id -> L flank side (entry)
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        const EdgeRecord& e = g.edges[ei];
        int a = ix.dart_index.at(e.dart_a);
        int rails[2] = {link_id(ss, 2 * a), link_id(ss, 2 * a + 1)};
        std::sort(rails, rails + 2);
        link_dart[rails[0]] = e.name + "_1";
        link_dart[rails[1]] = e.name + "_2";
    }
    for (const auto& h : g.halves) {
        int d = ix.dart_index.at(h.dart);
        link_dart[link_id(ss, 2 * d)] = h.name + "_1";
    }

    // Dual vertices: one per orbit, rotation in walk order. The entry side of
    // each traversal is recorded as the dual dart's left flank.
    std::map<int, int> entry_side;  // link id -> from-side of its traversal
    int face = 0;
    for (const RawOrbit& orb : orbits) {
        std::string name = "f" + std::to_string(face++);
        wit.face_to_vertex.push_back(name);
        VertexRecord vr;
        vr.name = name;
        if (orb.isolated_vertex < 0) {
            for (int from : orb.tau_from) {
                int link = link_id(ss, from);
                vr.rotation.push_back(link_dart.at(link));
                entry_side[link] = from;
            }
        }
        out.vertices.push_back(std::move(vr));
    }

    // Dual edges: the two rails of a primal edge. The dual edge is twisted
    // exactly when the two entry sides lie on the same primal dart.
    for (const auto& e : g.edges) {
        int a = ix.dart_index.at(e.dart_a);
        int r1 = link_id(ss, 2 * a);
        int r2 = link_id(ss, 2 * a + 1);
        int left1 = entry_side.at(r1);
        int left2 = entry_side.at(r2);
        bool twisted = (left1 / 2) == (left2 / 2);
        out.edges.push_back({e.name, link_dart.at(r1), link_dart.at(r2), twisted});
        wit.edge_to_edge[e.name] = e.name;
    }
    for (const auto& h : g.halves) {
        int d = ix.dart_index.at(h.dart);
        out.halves.push_back({h.name, link_dart.at(link_id(ss, 2 * d))});
        wit.hr_to_hr[h.name] = h.name;
    }

    out = normalize_twists(out);
    require_valid(out);
    return {std::move(out), std::move(wit)};
}

std::string CorrespondenceReport::str() const {
    std::ostringstream os;
    for (const auto& [name, pass] : checks)
        os << (pass ? "PASS " : "FAIL ") << name << "\n";
    return os.str();
}

CorrespondenceReport check_correspondences(const Herg& g, const Herg& gd) {
    FaceReport fg = trace_boundary(g);
    FaceReport fd = trace_boundary(gd);
    Classification cg = classify(g);
    Classification cd = classify(gd);
    CorrespondenceReport rep;
    rep.checks.push_back({"V_int(G) = f_int(G*)", cg.v_int() == fd.f_int});
    rep.checks.push_back({"f_int(G) = V_int(G*)", fg.f_int == cd.v_int()});
    rep.checks.push_back({"V_ext(G) = C_ext(G*)", cg.v_ext() == fd.c_ext});
    rep.checks.push_back({"C_ext(G) = V_ext(G*)", fg.c_ext == cd.v_ext()});
    rep.checks.push_back({"e(G) = e(G*)", g.e() == gd.e()});
    rep.checks.push_back({"|H(G)| = |H(G*)|", g.h() == gd.h()});
    rep.checks.push_back({"genus preserved", euler_genus(g).second == euler_genus(gd).second});
    rep.checks.push_back({"orientability preserved", orientable(g) == orientable(gd)});
    return rep;
}

bool double_dual_check(const Herg& g) {
    Herg dd = dual(dual(g).first).first;
    return isomorphic(dd, g, /*allow_reflection=*/true).has_value();
}

}  // namespace herg

#include "herg/verify.hpp"

#include <map>

#include "herg/duality.hpp"
#include "herg/edit.hpp"
#include "herg/io.hpp"
#include "herg/isomorphism.hpp"
#include "herg/topology.hpp"

namespace herg {

std::optional<Suite> suite_from_name(const std::string& name) {
    if (name == "euler") return Suite::Euler;
    if (name == "duality") return Suite::Duality;
    if (name == "recurrence") return Suite::Recurrence;
    if (name == "dual-ops") return Suite::DualOps;
    if (name == "double-dual") return Suite::DoubleDual;
    if (name == "bridges") return Suite::Bridges;
    if (name == "one-vertex") return Suite::OneVertex;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Euler: return "euler";
        case Suite::Duality: return "duality";
        case Suite::Recurrence: return "recurrence";
        case Suite::DualOps: return "dual-ops";
        case Suite::DoubleDual: return "double-dual";
        case Suite::Bridges: return "bridges";
        case Suite::OneVertex: return "one-vertex";
        case Suite::All: return "all";
    }
    return "?";
}

namespace {

void push(std::vector<IdentityCheck>& out, const std::string& group, bool pass,
          const std::string& detail = "") {
    out.push_back({group, group, pass, pass ? "" : detail});
}

}  // namespace

std::vector<IdentityCheck> euler_checks(const Herg& g) {
    std::vector<IdentityCheck> out;
    FaceReport f = trace_boundary(g);
    push(out, "euler: f_ext = |H|", f.f_ext == static_cast<int>(g.h()));
    push(out, "euler: C_ext <= |H|", f.c_ext <= static_cast<int>(g.h()));

    std::size_t sides = 0;
    for (const auto& orb : f.orbits) sides += orb.sides.size();
    push(out, "euler: orbits partition the sides", sides == 2 * g.dart_count());

    EmbeddingSignature sig = embedding_signature(g);
    int k = components(g).k;
    bool chi_ok = sig.chi == static_cast<int>(g.v()) - static_cast<int>(g.e()) + f.f_int + f.c_ext &&
                  sig.chi == 2 * k - sig.genus && sig.genus >= 0;
    push(out, "euler: chi = v - e + f_int + C_ext = 2k - gamma", chi_ok);
    push(out, "euler: punctures_proper <= punctures_hproper",
         sig.punctures_proper <= sig.punctures_hproper);

    Herg completed = complete(g);
    FaceReport fc = trace_boundary(completed);
    auto [chi_c, gamma_c] = euler_genus(completed);
    bool completed_ok = fc.f_int == f.f_int + f.c_ext && fc.c_ext == 0 && chi_c == sig.chi &&
                        gamma_c == sig.genus;
    push(out, "euler: completed graph has f_int + C_ext closed faces", completed_ok);
    return out;
}

std::vector<IdentityCheck> correspondence_checks(const Herg& g) {
    std::vector<IdentityCheck> out;
    Herg gd = dual(g).first;
    CorrespondenceReport rep = check_correspondences(g, gd);
    push(out, "dual: correspondences (V_int, f_int, V_ext, C_ext, e, |H|, genus)", rep.ok(),
         rep.str());
    return out;
}

std::vector<IdentityCheck> recurrence_checks(const Herg& g) {
    std::vector<IdentityCheck> out;
    Poly rcut = invariant(g, InvariantKind::RCut);
    Poly rspan = invariant(g, InvariantKind::RSpan);
    Poly rec_cut = recursive_rcut(g);
    Poly rec_span = recursive_rspan(g);
    push(out, "recurrence: RCut state sum = contraction/cut recursion", rcut == rec_cut,
         rcut.str() + " != " + rec_cut.str());
    push(out, "recurrence: RSpan state sum = contraction/deletion recursion", rspan == rec_span,
         rspan.str() + " != " + rec_span.str());

    bool ref_ok = rcut == invariant_reference(g, InvariantKind::RCut) &&
                  rspan == invariant_reference(g, InvariantKind::RSpan) &&
                  invariant(g, InvariantKind::PSpan) == invariant_reference(g, InvariantKind::PSpan) &&
                  invariant(g, InvariantKind::PCut) == invariant_reference(g, InvariantKind::PCut);
    push(out, "recurrence: parallel kernel = serial reference", ref_ok);
    return out;
}

std::vector<IdentityCheck> dualops_checks(const Herg& g) {
    std::vector<IdentityCheck> out;
    if (g.e() > 5) return out;
    Herg gd = dual(g).first;
    bool del_ok = true, con_ok = true;
    std::string del_detail, con_detail;
    for (const auto& e : g.edges) {
        Herg lhs_d = dual(delete_edge(g, e.name)).first;
        Herg rhs_d = contract_edge(gd, e.name);
        if (!isomorphic(lhs_d, rhs_d, true)) {
            del_ok = false;
            del_detail += e.name + " ";
        }
        Herg lhs_c = dual(contract_edge(g, e.name)).first;
        Herg rhs_c = delete_edge(gd, e.name);
        if (!isomorphic(lhs_c, rhs_c, true)) {
            con_ok = false;
            con_detail += e.name + " ";
        }
    }
    push(out, "dual-ops: (G - e)* = G*/e", del_ok, "edges: " + del_detail);
    push(out, "dual-ops: (G/e)* = G* - e", con_ok, "edges: " + con_detail);
    return out;
}

std::vector<IdentityCheck> doubledual_checks(const Herg& g) {
    std::vector<IdentityCheck> out;
    push(out, "double-dual: (G*)* = G", double_dual_check(g));
    return out;
}

std::vector<IdentityCheck> structural_checks(const Herg& g) {
    std::vector<IdentityCheck> out;

    Herg completed = complete(g);
    Herg back = prune(completed, completion_leaves(g));
    push(out, "structural: prune(complete(G)) = G", isomorphic(back, g).has_value());

    Herg u = underlying(completed);
    push(out, "structural: underlying(complete(G)) has v+|H| vertices, e+|H| edges",
         u.v() == g.v() + g.h() && u.e() == g.e() + g.h() && u.h() == 0);

    bool round = false;
    try {
        round = isomorphic(parse(serialize(g)), g).has_value();
    } catch (const HergError&) {
        round = false;
    }
    push(out, "structural: parse(serialize(G)) = G", round);

    push(out, "structural: validate(G) ok", validate(g).ok());
    return out;
}

namespace {

void run_checks_into(std::map<std::string, SuiteLine>& acc, std::vector<std::string>& order,
                     const std::string& graph, const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks) {
        auto it = acc.find(c.group);
        if (it == acc.end()) {
            order.push_back(c.group);
            it = acc.emplace(c.group, SuiteLine{c.group, 0, {}}).first;
        }
        it->second.checked++;
        if (!c.pass) {
            std::string what = graph + " [" + c.name + "]";
            if (!c.detail.empty()) what += " " + c.detail;
            it->second.failures.push_back(what);
        }
    }
}

bool group_in(Suite s, const std::string& group) {
    switch (s) {
        case Suite::Bridges: return group.rfind("bridge", 0) == 0;
        case Suite::OneVertex: return group.rfind("one-vertex", 0) == 0;
        case Suite::Duality:
            return group.rfind("lemma", 0) == 0 || group.rfind("P self", 0) == 0 ||
                   group.rfind("duality theorem", 0) == 0 || group.rfind("M proposition", 0) == 0 ||
                   group.rfind("Pcut - M", 0) == 0;
        default: return false;
    }
}

}  // namespace

SuiteReport run_suite(Suite suite, const std::vector<NamedHerg>& graphs) {
    std::map<std::string, SuiteLine> acc;
    std::vector<std::string> order;
    bool all = suite == Suite::All;

    for (const auto& ng : graphs) {
        if (all || suite == Suite::Euler)
            run_checks_into(acc, order, ng.name, euler_checks(ng.g));
        if (all || suite == Suite::Duality)
            run_checks_into(acc, order, ng.name, correspondence_checks(ng.g));
        if (all || suite == Suite::Duality || suite == Suite::Bridges || suite == Suite::OneVertex) {
            std::vector<IdentityCheck> identity = verify_identities(ng.g);
            std::vector<IdentityCheck> wanted;
            for (const auto& c : identity)
                if (all || group_in(suite, c.group)) wanted.push_back(c);
            run_checks_into(acc, order, ng.name, wanted);
        }
        if (all || suite == Suite::Recurrence)
            run_checks_into(acc, order, ng.name, recurrence_checks(ng.g));
        if (all || suite == Suite::DualOps)
            run_checks_into(acc, order, ng.name, dualops_checks(ng.g));
        if (all || suite == Suite::DoubleDual)
            run_checks_into(acc, order, ng.name, doubledual_checks(ng.g));
        if (all)
            run_checks_into(acc, order, ng.name, structural_checks(ng.g));
    }

    SuiteReport rep;
    for (const auto& group : order) rep.lines.push_back(acc.at(group));
    return rep;
}

}  // namespace herg

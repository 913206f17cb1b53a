#include "herg/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <numeric>

#include "herg/duality.hpp"
#include "herg/index.hpp"
#include "herg/topology.hpp"

namespace herg {

const char* invariant_name(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::RCut: return "RCut";
        case InvariantKind::RSpan: return "RSpan";
        case InvariantKind::PSpan: return "PSpan";
        case InvariantKind::PCut: return "PCut";
        case InvariantKind::M: return "M";
    }
    return "?";
}

namespace {

// Mask-driven subgraph statistics without materialization. Bit i of the mask
// keeps the i-th edge in sorted label order. Thread-confined: each worker
// owns one kernel and reuses its scratch buffers across masks.
class SubgraphKernel {
public:
    SubgraphKernel(const HergIndex& ix, const std::vector<std::string>& sorted_labels)
        : ix_(ix) {
        for (const auto& l : sorted_labels) bit_edge_.push_back(ix.edge_index.at(l));
        edge_bit_.assign(ix.g->edges.size(), -1);
        for (std::size_t b = 0; b < bit_edge_.size(); ++b)
            edge_bit_[static_cast<std::size_t>(bit_edge_[b])] = static_cast<int>(b);
        int nv = static_cast<int>(ix.g->v());
        parent_.resize(nv);
        parity_.resize(nv);
        mark_.assign(static_cast<std::size_t>(ix.side_count()), 0);
    }

    SubgraphStats stats(std::uint64_t mask, SubgraphMode mode) {
        mask_ = mask;
        mode_ = mode;
        SubgraphStats st;
        int nv = static_cast<int>(ix_.g->v());
        int kept_count = 0;

        // Connectivity and orientability in one parity union-find pass.
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(parity_.begin(), parity_.end(), 0);
        bool twisted_cycle = false;
        for (std::size_t ei = 0; ei < ix_.g->edges.size(); ++ei) {
            if (!kept(static_cast<int>(ei))) continue;
            kept_count++;
            const EdgeRecord& e = ix_.g->edges[ei];
            int u = ix_.dart_vertex[ix_.dart_index.at(e.dart_a)];
            int v = ix_.dart_vertex[ix_.dart_index.at(e.dart_b)];
            if (u == v) {
                if (e.twisted) twisted_cycle = true;
                continue;
            }
            auto [ru, pu] = find(u);
            auto [rv, pv] = find(v);
            int want = pu ^ pv ^ (e.twisted ? 1 : 0);
            if (ru == rv) {
                if (want) twisted_cycle = true;
            } else {
                parent_[ru] = rv;
                parity_[ru] = want;
            }
        }
        st.k = 0;
        for (int v = 0; v < nv; ++v)
            if (find(v).first == v) st.k++;
        st.o = twisted_cycle ? 1 : 0;
        st.r = nv - st.k;
        st.n = kept_count - st.r;
        st.hcount = static_cast<int>(ix_.g->h()) +
                    (mode == SubgraphMode::Cut
                         ? 2 * (static_cast<int>(ix_.g->e()) - kept_count)
                         : 0);

        // Boundary orbits over the alive sides.
        epoch_++;
        for (int s0 = 0; s0 < ix_.side_count(); ++s0) {
            if (mark_[static_cast<std::size_t>(s0)] == epoch_ || !alive(s0 >> 1)) continue;
            int crossings = 0;
            int cur = s0;
            do {
                int arc = alpha_mask(cur);
                mark_[static_cast<std::size_t>(cur)] = epoch_;
                mark_[static_cast<std::size_t>(arc)] = epoch_;
                cur = tau_mask(arc, crossings);
            } while (cur != s0);
            if (crossings > 0)
                st.c_ext++;
            else
                st.f_int++;
        }
        // Vertices with no alive darts are bare and count one closed face each.
        for (const auto& rot : ix_.rotations) {
            bool bare = true;
            for (int d : rot)
                if (alive(d)) bare = false;
            if (bare) st.f_int++;
        }
        return st;
    }

private:
    const HergIndex& ix_;
    std::vector<int> bit_edge_;
    std::vector<int> edge_bit_;
    std::vector<int> parent_;
    std::vector<int> parity_;
    std::vector<std::uint64_t> mark_;
    std::uint64_t epoch_ = 0;
    std::uint64_t mask_ = 0;
    SubgraphMode mode_ = SubgraphMode::Delete;

    bool kept(int edge) const {
        return (mask_ >> edge_bit_[static_cast<std::size_t>(edge)]) & 1;
    }

    bool alive(int dart) const {
        int e = ix_.dart_edge[dart];
        if (e < 0) return true;
        return kept(e) || mode_ == SubgraphMode::Cut;
    }

    std::pair<int, int> find(int v) {
        int p = 0;
        int root = v;
        while (parent_[root] != root) {
            p ^= parity_[root];
            root = parent_[root];
        }
        // Path compression with parity accumulation.
        int cur = v;
        int cp = p;
        while (parent_[cur] != cur) {
            int next = parent_[cur];
            int np = cp ^ parity_[cur];
            parent_[cur] = root;
            parity_[cur] = cp;
            cur = next;
            cp = np;
        }
        return {root, p};
    }

    int alpha_mask(int side) const {
        int d = side >> 1;
        const auto& rot = ix_.rotations[ix_.dart_vertex[d]];
        int deg = static_cast<int>(rot.size());
        int i = ix_.dart_pos[d];
        if (side & 1) {  // right side -> successor's left
            do {
                i = (i + 1) % deg;
            } while (!alive(rot[i]));
            return 2 * rot[i];
        }
        do {  // left side -> predecessor's right
            i = (i - 1 + deg) % deg;
        } while (!alive(rot[i]));
        return 2 * rot[i] + 1;
    }

    int tau_mask(int side, int& crossings) const {
        int d = side >> 1;
        int e = ix_.dart_edge[d];
        if (e >= 0 && kept(e)) {
            int p = ix_.dart_partner[d];
            bool twisted = ix_.g->edges[static_cast<std::size_t>(e)].twisted;
            int bit = side & 1;
            return 2 * p + (twisted ? bit : 1 - bit);
        }
        crossings++;  // half-ribbon or cut edge: cross to the other side
        return side ^ 1;
    }
};

Poly proto_for(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::RCut:
        case InvariantKind::RSpan: return rings::r_proto();
        default: return rings::ab_proto();
    }
}

SubgraphMode mode_for(InvariantKind kind) {
    return (kind == InvariantKind::RCut || kind == InvariantKind::PCut) ? SubgraphMode::Cut
                                                                        : SubgraphMode::Delete;
}

void emit_term(Poly& acc, InvariantKind kind, int r_full, const SubgraphStats& st) {
    if (kind == InvariantKind::RCut || kind == InvariantKind::RSpan) {
        acc.add_term({r_full - st.r, st.n, st.k - st.f_int + st.n, st.c_ext, st.o, st.hcount}, 1);
    } else {
        acc.add_term({st.f_int, st.c_ext}, 1);
    }
}

Poly m_polynomial(const Herg& g) {
    // Contributions of the set {G v E(G), G}: one term when E is empty.
    Poly acc = rings::ab_proto();
    FaceReport full = trace_boundary(g);
    acc.add_term({full.f_int, full.c_ext}, 1);
    if (g.e() > 0) {
        FaceReport cut = trace_boundary(materialize_subgraph(g, {}, SubgraphMode::Cut));
        acc.add_term({cut.f_int, cut.c_ext}, 1);
    }
    return acc;
}

}  // namespace

Poly invariant(const Herg& g, InvariantKind kind) {
    require_valid(g);
    if (kind == InvariantKind::M) return m_polynomial(g);

    HergIndex ix(g);
    std::vector<std::string> labels = sorted_edge_labels(g);
    if (labels.size() > 62) throw HergError("invariant: too many edges");
    SubgraphMode mode = mode_for(kind);
    int r_full = rank_nullity(g).first;
    Poly proto = proto_for(kind);
    const std::uint64_t total = std::uint64_t{1} << labels.size();

    Poly acc = proto;
#ifdef _OPENMP
    #pragma omp parallel
    {
        SubgraphKernel kernel(ix, labels);
        Poly local = proto;
        #pragma omp for schedule(static)
        for (long long m = 0; m < static_cast<long long>(total); ++m)
            emit_term(local, kind, r_full, kernel.stats(static_cast<std::uint64_t>(m), mode));
        #pragma omp critical
        acc += local;
    }
#else
    SubgraphKernel kernel(ix, labels);
    for (std::uint64_t m = 0; m < total; ++m)
        emit_term(acc, kind, r_full, kernel.stats(m, mode));
#endif
    return acc;
}

Poly invariant_reference(const Herg& g, InvariantKind kind) {
    require_valid(g);
    if (kind == InvariantKind::M) return m_polynomial(g);
    int r_full = rank_nullity(g).first;
    Poly acc = proto_for(kind);
    enumerate_subgraphs(g, mode_for(kind),
                        [&](const SubgraphSelector&, const SubgraphStats& st) {
                            emit_term(acc, kind, r_full, st);
                        });
    return acc;
}

QuotientPoly invariant_pcut(const Herg& g) {
    return QuotientPoly(invariant(g, InvariantKind::PCut));
}

namespace {

std::string first_ordinary_edge(const Herg& g) {
    if (g.e() == 0) return "";
    HergIndex ix(g);
    int base_k = components(g).k;
    for (const auto& label : sorted_edge_labels(g)) {
        const EdgeRecord* e = g.find_edge(label);
        int u = ix.dart_vertex[ix.dart_index.at(e->dart_a)];
        int v = ix.dart_vertex[ix.dart_index.at(e->dart_b)];
        if (u == v) continue;  // loop
        if (components(delete_edge(g, label)).k > base_k) continue;  // bridge
        return label;
    }
    return "";
}

Poly recursive_eval(const Herg& g, bool cut, RecursionStats* stats) {
    std::string e = first_ordinary_edge(g);
    if (e.empty()) {
        if (stats) stats->terminal_state_sums++;
        return invariant_reference(g, cut ? InvariantKind::RCut : InvariantKind::RSpan);
    }
    if (stats) stats->splits++;
    Herg removed = cut ? cut_edge(g, e) : delete_edge(g, e);
    return recursive_eval(removed, cut, stats) + recursive_eval(contract_edge(g, e), cut, stats);
}

}  // namespace

Poly recursive_rcut(const Herg& g, RecursionStats* stats) {
    require_valid(g);
    return recursive_eval(g, true, stats);
}

Poly recursive_rspan(const Herg& g, RecursionStats* stats) {
    require_valid(g);
    return recursive_eval(g, false, stats);
}

Poly duality_subst(const Poly& r_poly) {
    using namespace rings;
    Poly ab = ab_proto();
    return r_poly.subst(ab, {
                                {1, {1, 0}},   // xm1 -> a
                                {1, {1, 0}},   // y -> a
                                {1, {-1, 0}},  // z -> a^-1
                                {1, {0, 1}},   // s -> b
                                {1, {0, 0}},   // w -> 1
                                {1, {0, 0}},   // t -> 1
                            });
}

Poly duality_subst_keep_x(const Poly& r_poly) {
    Poly xab = rings::xab_proto();
    return r_poly.subst(xab, {
                                 {1, {1, 0, 0}},   // xm1 stays
                                 {1, {0, 1, 0}},   // y -> a
                                 {1, {0, -1, 0}},  // z -> a^-1
                                 {1, {0, 0, 1}},   // s -> b
                                 {1, {0, 0, 0}},   // w -> 1
                                 {1, {0, 0, 0}},   // t -> 1
                             });
}

namespace {

// Classification of the two half-ribbons produced by cutting e in sub.
std::pair<bool, bool> cut_hr_alone(const Herg& sub, const EdgeRecord& e) {
    FaceReport f = trace_boundary(sub);
    auto alone = [&](const DartId& d) {
        for (const auto& h : sub.halves)
            if (h.dart == d)
                return f.orbits[static_cast<std::size_t>(f.hr_orbit.at(h.name))].crossings.size() == 1;
        throw HergError("cut half-ribbon not found on dart " + d);
    };
    return {alone(e.dart_a), alone(e.dart_b)};
}

}  // namespace

BridgeBranch bridge_branch(const Herg& g, const std::string& edge) {
    const EdgeRecord* e = g.find_edge(edge);
    if (!e) throw HergError("unknown edge " + edge);
    std::vector<std::string> others;
    for (const auto& l : sorted_edge_labels(g))
        if (l != edge) others.push_back(l);
    if (others.size() > 20) throw HergError("bridge_branch: too many edges");

    BridgeBranch out;
    bool first = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
        std::vector<std::string> kept;
        Herg del = g;
        for (std::size_t i = 0; i < others.size(); ++i) {
            if (mask & (std::uint64_t{1} << i))
                kept.push_back(others[i]);
            else
                del = delete_edge(del, others[i]);
        }
        auto [da, db] = cut_hr_alone(cut_edge(del, edge), *e);
        bool both_ext = !da && !db;
        auto [ca, cb] = cut_hr_alone(materialize_subgraph(g, kept, SubgraphMode::Cut), *e);
        bool both_int = ca && cb;
        if (first) {
            out.external_del = both_ext;
            out.internal_cut = both_int;
            out.uniform_del = out.uniform_cut = true;
            first = false;
        } else {
            if (out.external_del != both_ext) out.uniform_del = false;
            if (out.internal_cut != both_int) out.uniform_cut = false;
        }
    }
    return out;
}

Poly expand_x_base(const Poly& r_poly) {
    if (r_poly.arity() != 6) throw HergError("expand_x_base: expected the six-variable ring");
    Poly out({"x", "y", "z", "s", "w", "t"}, {rings::W});
    for (const auto& [exps, coeff] : r_poly.terms()) {
        int k = exps[rings::XM1];
        if (k < 0) throw HergError("expand_x_base: negative xm1 exponent");
        // (x - 1)^k = sum_j C(k,j) (-1)^{k-j} x^j
        long long binom = 1;
        for (int j = 0; j <= k; ++j) {
            Poly::Exps e = exps;
            e[rings::XM1] = j;
            long long sign = ((k - j) % 2 == 0) ? 1 : -1;
            out.add_term(std::move(e), coeff * sign * binom);
            binom = binom * (k - j) / (j + 1);
        }
    }
    return out;
}

namespace {

Poly subst_a_to_b(const Poly& ab) {
    Poly proto = rings::ab_proto();
    return ab.subst(proto, {{1, {0, 1}}, {1, {0, 1}}});
}

void push_check(std::vector<IdentityCheck>& out, const std::string& group,
                const std::string& name, const Poly& lhs, const Poly& rhs) {
    if (lhs == rhs)
        out.push_back({group, name, true, ""});
    else
        out.push_back({group, name, false, lhs.str() + " != " + rhs.str()});
}

void push_check_q(std::vector<IdentityCheck>& out, const std::string& group,
                  const std::string& name, const Poly& lhs, const Poly& rhs, int a_index = 0,
                  int b_index = 1) {
    push_check(out, group, name, reduce_quotient(lhs, a_index, b_index),
               reduce_quotient(rhs, a_index, b_index));
}

}  // namespace

std::vector<IdentityCheck> verify_identities(const Herg& g) {
    using namespace rings;
    std::vector<IdentityCheck> out;
    Poly ab = ab_proto();
    Poly xab = xab_proto();
    Poly a_ = Poly::var(ab, A);
    Poly one_ab = Poly::constant(ab, 1);
    Poly one_xab = Poly::constant(xab, 1);

    Poly p_span = invariant(g, InvariantKind::PSpan);
    Poly p_cut = invariant(g, InvariantKind::PCut);
    Poly r_span = invariant(g, InvariantKind::RSpan);
    Poly r_cut = invariant(g, InvariantKind::RCut);
    Poly m = invariant(g, InvariantKind::M);
    int c_ext = trace_boundary(g).c_ext;

    if (g.v() == 1) {
        push_check(out, "one-vertex: P = a*R(y=a,z=a^-1,s=b)", "one-vertex: P = a*R", p_span,
                   a_ * duality_subst(r_span));
        push_check(out, "one-vertex: Pcut = a*Rcut(y=a,z=a^-1,s=b)", "one-vertex: Pcut = a*Rcut",
                   p_cut, a_ * duality_subst(r_cut));
    }

    Classification cls = classify(g);
    for (const auto& ec : cls.edges) {
        if (!ec.is_bridge) continue;
        BridgeBranch br = bridge_branch(g, ec.name);
        Herg contracted = contract_edge(g, ec.name);
        bool external = ec.cls == EdgeClass::External;
        bool internal = ec.cls == EdgeClass::Internal;

        // Spanning-subgraph relations: (b+1) on an external bridge, (a+1)
        // otherwise; the R version keeps x-1 symbolic.
        if (br.uniform_del) {
            Poly p_factor = external ? Poly::var(ab, B) + one_ab : a_ + one_ab;
            push_check(out, "bridge: P relation", "bridge " + ec.name + ": P relation", p_span,
                       p_factor * invariant(contracted, InvariantKind::PSpan));
            Poly r_factor = external
                                ? Poly::monomial(xab, {1, -1, 1}) + one_xab   // xm1*a^-1*b + 1
                                : Poly::var(xab, 0) + one_xab;                // xm1 + 1
            push_check(out, "bridge: R relation", "bridge " + ec.name + ": R relation",
                       duality_subst_keep_x(r_span),
                       r_factor * duality_subst_keep_x(invariant(contracted, InvariantKind::RSpan)));
        } else {
            out.push_back({"bridge: classification varies with the subgraph (P/R branch undefined)",
                           "bridge " + ec.name + ": subset-dependent classification", true, ""});
        }

        // Cutting-subgraph relations: (a^-1 b^2 + 1) on an internal bridge,
        // (b+1) otherwise; compared in the quotient normal form.
        if (br.uniform_cut) {
            Poly pc_factor = internal ? Poly::monomial(ab, {-1, 2}) + one_ab
                                      : Poly::var(ab, B) + one_ab;
            push_check_q(out, "bridge: Pcut relation", "bridge " + ec.name + ": Pcut relation",
                         p_cut, pc_factor * invariant(contracted, InvariantKind::PCut));
            Poly rc_factor = internal ? Poly::monomial(xab, {1, -2, 2}) + one_xab
                                      : Poly::monomial(xab, {1, -1, 1}) + one_xab;
            push_check_q(out, "bridge: Rcut relation", "bridge " + ec.name + ": Rcut relation",
                         duality_subst_keep_x(r_cut),
                         rc_factor * duality_subst_keep_x(invariant(contracted, InvariantKind::RCut)),
                         1, 2);
        } else {
            out.push_back({"bridge: classification varies with the subgraph (Pcut/Rcut branch undefined)",
                           "bridge " + ec.name + ": subset-dependent cut classification", true, ""});
        }
    }

    if (c_ext > 0) {
        push_check_q(out, "lemma: Pcut(a,b) = Pcut(b,b)", "lemma: Pcut(a,b) = Pcut(b,b)", p_cut,
                     subst_a_to_b(p_cut));
        push_check_q(out, "lemma: Pcut(a,b) = P(b,b)", "lemma: Pcut(a,b) = P(b,b)", p_cut,
                     subst_a_to_b(p_span));
    }

    Herg gd = dual(g).first;
    Poly pd_span = invariant(gd, InvariantKind::PSpan);
    Poly rd_span = invariant(gd, InvariantKind::RSpan);
    Poly rd_cut = invariant(gd, InvariantKind::RCut);
    Poly md = invariant(gd, InvariantKind::M);
    Poly pd_cut = invariant(gd, InvariantKind::PCut);

    push_check(out, "P self-duality", "P self-duality", p_span, pd_span);
    push_check(out, "duality theorem, first kind", "duality theorem, first kind",
               duality_subst(r_span), duality_subst(rd_span));
    if (c_ext > 0) {
        push_check_q(out, "duality theorem, second kind", "second kind, branch C_ext > 0",
                     duality_subst(r_cut), duality_subst(rd_cut));
        push_check_q(out, "M proposition", "M proposition, C_ext > 0 (quotient)", m, md);
    } else {
        // The a-shift turning the substituted R sum into Pcut is a^{1-k}, so
        // the C_ext = 0 branch is a statement about connected graphs; the
        // a,b swap for M needs the b^|V| closed form, which an isolated bare
        // vertex breaks (its cut contribution is a, not b).
        bool bare = false;
        for (const auto& v : g.vertices)
            if (v.rotation.empty()) bare = true;
        if (components(g).k == 1)
            push_check_q(out, "duality theorem, second kind", "second kind, branch C_ext = 0",
                         a_ * duality_subst(r_cut) - m, a_ * duality_subst(rd_cut) - md);
        if (!bare)
            push_check(out, "M proposition", "M proposition, C_ext = 0 (a,b swap, raw)", m,
                       md.swap_vars(0, 1));
        push_check_q(out, "Pcut - M agreement", "Pcut - M agreement, C_ext = 0", p_cut - m,
                     pd_cut - md);
    }
    return out;
}

}  // namespace herg

#pragma once

// The four polynomial invariants plus M. State sums run over all 2^e
// spanning (cutting) subgraphs; invariant() evaluates them with an
// OpenMP-parallel kernel, invariant_reference() is the serial reference that
// materializes every subgraph through the edit/topology modules. Both return
// identical polynomials; tests and the benchmark compare them.

#include <string>
#include <vector>

#include "herg/edit.hpp"
#include "herg/herg.hpp"
#include "herg/poly.hpp"

namespace herg {

enum class InvariantKind { RCut, RSpan, PSpan, PCut, M };

const char* invariant_name(InvariantKind kind);

// RCut/RSpan are polynomials over (xm1, y, z, s, w, t); PSpan, PCut and M
// over (a, b). PCut is returned raw; reduce with QuotientPoly for the
// b^2 = ab normal form.
Poly invariant(const Herg& g, InvariantKind kind);
Poly invariant_reference(const Herg& g, InvariantKind kind);

QuotientPoly invariant_pcut(const Herg& g);

struct RecursionStats {
    long long splits = 0;
    long long terminal_state_sums = 0;
};

// Contraction/cut recursion on ordinary (non-loop, non-bridge) edges with a
// state-sum fallback once only bridges and loops remain.
Poly recursive_rcut(const Herg& g, RecursionStats* stats = nullptr);
// Contraction/deletion recursion, same shape.
Poly recursive_rspan(const Herg& g, RecursionStats* stats = nullptr);

// xm1 -> a, y -> a, z -> a^-1, s -> b, w -> 1, t -> 1.
Poly duality_subst(const Poly& r_poly);
// Same but xm1 stays symbolic: target ring (xm1, a, b).
Poly duality_subst_keep_x(const Poly& r_poly);

// Presentation option: expand the xm1 = x - 1 base, returning a polynomial
// over (x, y, z, s, w, t).
Poly expand_x_base(const Poly& r_poly);

struct IdentityCheck {
    std::string group;  // aggregation key, stable across graphs
    std::string name;   // instance label (may carry an edge name)
    bool pass = false;
    std::string detail;
};

// The bridge relations compare deleting (or cutting) a bridge against
// contracting it, with the branch picked from the bridge's classification in
// the full graph. That branch is only well defined when the classification
// of the bridge's two cut half-ribbons is the same in every spanning
// subgraph; a kept loop can shield a half-ribbon that a smaller subgraph
// exposes, and then no single branch reproduces the state sum.
struct BridgeBranch {
    bool uniform_del = false;   // delete-mode classification subset-independent
    bool external_del = false;  // both cut-HRs external (the (b+1) branch)
    bool uniform_cut = false;   // cut-mode classification subset-independent
    bool internal_cut = false;  // both cut-HRs internal (the (a^-1 b^2 + 1) branch)
};
BridgeBranch bridge_branch(const Herg& g, const std::string& edge);

// Evaluates every identity applicable to g: the one-vertex relations, the
// bridge relations per bridge (where the branch is well defined), the
// quotient-collapse lemma, both duality theorems, the M propositions and
// P self-duality.
std::vector<IdentityCheck> verify_identities(const Herg& g);

}  // namespace herg

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "herg/gen.hpp"
#include "herg/invariants.hpp"

using namespace herg;

namespace {

const std::vector<InvariantKind> kinds = {InvariantKind::RCut, InvariantKind::RSpan,
                                          InvariantKind::PSpan, InvariantKind::PCut,
                                          InvariantKind::M};

}  // namespace

TEST_CASE("the kernel matches the serial reference on the fixtures") {
    for (const Herg& g : {fixtures::loop(), fixtures::loop(true), fixtures::bridge(),
                          fixtures::g6(), fixtures::g7(), fixtures::theta(),
                          fixtures::two_hr_bridge(), fixtures::twisted_theta2(),
                          fixtures::shielded_bridge(), fixtures::e_n(3, 2),
                          fixtures::bare_vertex()}) {
        for (InvariantKind kind : kinds)
            CHECK(invariant(g, kind) == invariant_reference(g, kind));
    }
}

TEST_CASE("the kernel matches the serial reference on a corpus") {
    for (const auto& ng : corpus(47, 4)) {
        for (InvariantKind kind : kinds)
            CHECK_MESSAGE(invariant(ng.g, kind) == invariant_reference(ng.g, kind), ng.name);
    }
}

TEST_CASE("the kernel matches the reference on larger seeded graphs") {
    for (std::uint64_t seed : {1ull, 2ull}) {
        Herg g = gen(5, 10, 2, seed, true);
        CHECK(invariant(g, InvariantKind::RCut) == invariant_reference(g, InvariantKind::RCut));
        CHECK(invariant(g, InvariantKind::PSpan) == invariant_reference(g, InvariantKind::PSpan));
    }
}

TEST_CASE("parallel evaluation is deterministic") {
    Herg g = gen(4, 9, 1, 5, true);
    Poly first = invariant(g, InvariantKind::RCut);
    for (int i = 0; i < 3; ++i) CHECK(invariant(g, InvariantKind::RCut) == first);
}

TEST_CASE("recursive evaluators agree with the kernel on seeded graphs") {
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        Herg g = gen(3, 6, 1, seed, true);
        CHECK(recursive_rcut(g) == invariant(g, InvariantKind::RCut));
        CHECK(recursive_rspan(g) == invariant(g, InvariantKind::RSpan));
    }
}

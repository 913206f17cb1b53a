#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "herg/duality.hpp"
#include "herg/edit.hpp"
#include "herg/gen.hpp"
#include "herg/isomorphism.hpp"
#include "herg/topology.hpp"

using namespace herg;

TEST_CASE("loop and bridge are dual to each other") {
    CHECK(isomorphic(dual(fixtures::loop()).first, fixtures::bridge()).has_value());
    CHECK(isomorphic(dual(fixtures::bridge()).first, fixtures::loop()).has_value());
}

TEST_CASE("the dual of g6 is g7") {
    auto [gd, wit] = dual(fixtures::g6());
    CHECK(gd.v() == 1);
    CHECK(gd.e() == 1);
    CHECK(gd.h() == 1);
    CHECK(isomorphic(gd, fixtures::g7()).has_value());
    CHECK(wit.face_to_vertex.size() == 1);
    CHECK(wit.edge_to_edge.at("e") == "e");
    CHECK(wit.hr_to_hr.at("h") == "h");
}

TEST_CASE("a single half-ribbon vertex is self-dual") {
    Herg g = fixtures::vertex_with_hrs(1);
    CHECK(isomorphic(dual(g).first, g).has_value());
}

TEST_CASE("E_n is self-dual, with and without half-ribbons") {
    for (int n = 1; n <= 3; ++n) {
        for (int hrs = 0; hrs <= n; ++hrs) {
            Herg g = fixtures::e_n(n, hrs);
            CHECK(isomorphic(dual(g).first, g).has_value());
        }
    }
}

TEST_CASE("the twisted loop is self-dual") {
    CHECK(isomorphic(dual(fixtures::loop(true)).first, fixtures::loop(true)).has_value());
}

TEST_CASE("dual vertex count equals the face count") {
    for (const Herg& g : {fixtures::g6(), fixtures::theta(), fixtures::two_hr_bridge(),
                          fixtures::loop(true)}) {
        FaceReport f = trace_boundary(g);
        Herg gd = dual(g).first;
        CHECK(static_cast<int>(gd.v()) == f.f_int + f.c_ext);
        CHECK(gd.e() == g.e());
        CHECK(gd.h() == g.h());
    }
}

TEST_CASE("correspondences hold on the fixtures") {
    for (const Herg& g : {fixtures::loop(), fixtures::bridge(), fixtures::g6(), fixtures::g7(),
                          fixtures::theta(), fixtures::two_hr_bridge(), fixtures::e_n(3, 2),
                          fixtures::loop(true), fixtures::shielded_bridge()}) {
        Herg gd = dual(g).first;
        CorrespondenceReport rep = check_correspondences(g, gd);
        CHECK_MESSAGE(rep.ok(), rep.str());
    }
}

TEST_CASE("g6/g7 correspondence counts") {
    FaceReport f6 = trace_boundary(fixtures::g6());
    Classification c7 = classify(fixtures::g7());
    FaceReport f7 = trace_boundary(fixtures::g7());
    Classification c6 = classify(fixtures::g6());
    CHECK(c6.v_int() == f7.f_int);
    CHECK(f6.f_int == c7.v_int());
    CHECK(c6.v_ext() == f7.c_ext);
    CHECK(f6.c_ext == c7.v_ext());
}

TEST_CASE("double dual is the identity up to isomorphism") {
    for (const Herg& g : {fixtures::loop(), fixtures::g6(), fixtures::e_n(3, 1),
                          fixtures::loop(true), fixtures::twisted_theta2(),
                          fixtures::shielded_bridge()})
        CHECK(double_dual_check(g));
    for (const auto& ng : corpus(31, 3)) CHECK(double_dual_check(ng.g));
}

TEST_CASE("deletion and contraction swap under duality") {
    for (const Herg& g : {fixtures::theta(), fixtures::g6(), fixtures::loop(),
                          fixtures::twisted_theta2(), fixtures::shielded_bridge()}) {
        Herg gd = dual(g).first;
        for (const auto& e : g.edges) {
            CHECK(isomorphic(dual(delete_edge(g, e.name)).first, contract_edge(gd, e.name), true)
                      .has_value());
            CHECK(isomorphic(dual(contract_edge(g, e.name)).first, delete_edge(gd, e.name), true)
                      .has_value());
        }
    }
}

TEST_CASE("duality preserves genus and orientability on a corpus") {
    for (const auto& ng : corpus(37, 3)) {
        Herg gd = dual(ng.g).first;
        CHECK(euler_genus(gd) == euler_genus(ng.g));
        CHECK(orientable(gd) == orientable(ng.g));
        CHECK(components(gd).k == components(ng.g).k);
    }
}

TEST_CASE("dual of a bare vertex is a bare vertex") {
    Herg gd = dual(fixtures::bare_vertex()).first;
    CHECK(gd.v() == 1);
    CHECK(gd.dart_count() == 0);
}

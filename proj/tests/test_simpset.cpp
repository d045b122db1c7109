#include "doctest.h"

#include "waldkit/sconstruct.hpp"
#include "waldkit/simpset.hpp"

using namespace waldkit;

namespace {

SimplicialSet circle_sset(int cap) {
    auto C = lattice_category(chain_poset(1), "chain2");
    return s_simplicial_set(C, simplicial_circle(cap), cap).sset;
}

}  // namespace

TEST_SUITE("simpset") {

TEST_CASE("validation") {
    CHECK(validate(point(3)).ok());
    auto X = circle_sset(3);
    CHECK(validate(X).ok());
    X.faces[2][1][2] = X.faces[2][1][1] == 0 ? 1 : 0;
    auto rep = validate(X);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has_kind("identity.dd") + rep.has_kind("identity.ds") > 0);
}

TEST_CASE("smash and product sizes") {
    auto X = circle_sset(3);
    auto P = point(3);
    auto XP = smash(X, P);
    auto PX = smash(P, X);
    for (int n = 0; n <= 3; ++n) {
        CHECK(XP.sizes[n] == 1);
        CHECK(PX.sizes[n] == 1);
    }
    auto XX = smash(X, X);
    for (int n = 0; n <= 3; ++n)
        CHECK(XX.sizes[n] == (X.sizes[n] - 1) * (X.sizes[n] - 1) + 1);
    CHECK(validate(XX).ok());

    auto Pr = product(X, X);
    for (int n = 0; n <= 3; ++n)
        CHECK(Pr.sizes[n] == X.sizes[n] * X.sizes[n]);
    CHECK(validate(Pr).ok());
    auto XtP = product(X, P);
    CHECK(XtP.sizes == X.sizes);
    CHECK(XtP.faces == X.faces);
    CHECK_THROWS_AS(smash(X, point(2)), ConstructionError);
}

TEST_CASE("product of maps is functorial") {
    auto X = circle_sset(3);
    auto C = lattice_category(chain_poset(1));
    auto S = s_simplicial_set(C, simplicial_circle(3), 3);
    LevelMap collapse;
    for (int n = 0; n <= 3; ++n)
        collapse.emplace_back(n, n, std::vector<int>(n + 1, 0));
    auto c = map_from_ord(C, S, S, collapse);
    auto id = identity_map(X);
    auto Pr = product(X, X);
    auto a = product_map(compose_maps(c, id), compose_maps(id, c), X);
    auto b = compose_maps(product_map(c, id, X), product_map(id, c, X));
    CHECK(a.maps == b.maps);
    CHECK(validate_map(Pr, Pr, a).ok());
}

TEST_CASE("diagonal of a vertically constant grid") {
    auto X = circle_sset(3);
    BisimplicialSet B;
    B.cap_h = B.cap_v = 3;
    B.sizes.assign(4, std::vector<int>(4));
    B.hface.resize(4);
    B.hdeg.resize(4);
    B.vface.resize(4);
    B.vdeg.resize(4);
    B.basepoint.assign(4, std::vector<int>(4, 0));
    for (int n = 0; n <= 3; ++n) {
        B.hface[n].resize(4);
        B.hdeg[n].resize(4);
        B.vface[n].resize(4);
        B.vdeg[n].resize(4);
        for (int m = 0; m <= 3; ++m) {
            B.sizes[n][m] = X.sizes[n];
            if (n > 0)
                B.hface[n][m] = X.faces[n];
            if (n < 3)
                B.hdeg[n][m] = X.degeneracies[n];
            if (m > 0)
                B.vface[n][m].assign(m + 1, identity_fn(X.sizes[n]));
            if (m < 3)
                B.vdeg[n][m].assign(m + 1, identity_fn(X.sizes[n]));
            B.basepoint[n][m] = X.basepoint[n];
        }
    }
    CHECK(validate(B).ok());
    auto D = diagonal(B, 3);
    CHECK(D.sizes == X.sizes);
    CHECK(D.faces == X.faces);
    CHECK(D.degeneracies == X.degeneracies);
    CHECK_THROWS_AS(diagonal(B, 4), ConstructionError);
}

TEST_CASE("nondegenerate simplices") {
    auto P = point(3);
    CHECK(nondegenerate(P, 0) == std::vector<int>{0});
    CHECK(nondegenerate(P, 2).empty());
    auto X = circle_sset(3);
    CHECK(nondegenerate(X, 1).size() == 1);
    CHECK(nondegenerate(X, 0).size() == 1);
    CHECK_THROWS_AS(nondegenerate(X, 4), ConstructionError);
}

TEST_CASE("dump is deterministic") {
    auto X = circle_sset(2);
    CHECK(dump(X) == dump(circle_sset(2)));
    CHECK(dump(X).find("level 1") != std::string::npos);
}

}

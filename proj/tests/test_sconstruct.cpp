#include "doctest.h"

#include "waldkit/sconstruct.hpp"

using namespace waldkit;

namespace {

MorId mor(const FinCofCategory& C, const std::string& name) {
    auto f = C.base.find_morphism(name);
    REQUIRE(f.has_value());
    return *f;
}

}  // namespace

TEST_SUITE("sconstruct") {

TEST_CASE("enumeration sizes") {
    auto C2 = lattice_category(chain_poset(1));
    auto C3 = lattice_category(chain_poset(2));
    CHECK(enumerate_s_objects(C2, 0).size() == 1);
    CHECK(enumerate_s_objects(C3, 0).size() == 1);
    CHECK(enumerate_s_objects(C2, 1).size() == 2);
    CHECK(enumerate_s_objects(C3, 1).size() == 3);
    CHECK(enumerate_s_objects(C2, 2).size() == 3);
    CHECK(enumerate_s_objects(C3, 3).size() == 10);
    auto objs = enumerate_s_objects(C3, 2);
    CHECK(objs[0].chain == std::vector<MorId>(2, C3.base.identity(C3.base.zero())));
}

TEST_CASE("canonical grids") {
    auto C3 = lattice_category(chain_poset(2));
    auto x0 = canonical_quotients(C3, {});
    CHECK(x0.at(0, 0) == C3.base.zero());

    auto x1 = canonical_quotients(C3, {mor(C3, "i[bot,a]")});
    CHECK(x1.at(0, 1) == *C3.base.find_object("a"));
    CHECK(x1.at(1, 1) == C3.base.zero());

    auto x = canonical_quotients(C3, {mor(C3, "i[bot,a]"), mor(C3, "i[a,b]")});
    CHECK(x.at(1, 2) == C3.base.zero());
    CHECK(x.at(0, 2) == *C3.base.find_object("b"));
    CHECK(x.cof(0, 1, 2) == mor(C3, "i[a,b]"));
    CHECK_THROWS_AS(canonical_quotients(C3, {mor(C3, "i[a,b]")}), ConstructionError);
    CHECK_THROWS_AS(canonical_quotients(C3, {mor(C3, "0[a,a]")}), ConstructionError);
}

TEST_CASE("induced maps: composition and identity insertion") {
    auto C3 = lattice_category(chain_poset(2));
    const MorId a0 = mor(C3, "i[bot,a]"), a1 = mor(C3, "i[a,b]");
    auto x = canonical_quotients(C3, {a0, a1});
    auto y = apply_ord_map(C3, x, OrdMap(2, 1, {0, 1, 1}));
    CHECK(y.chain == std::vector<MorId>{C3.base.compose(a1, a0)});

    auto z = apply_ord_map(C3, canonical_quotients(C3, {a0}), OrdMap(1, 2, {0, 2}));
    CHECK(z.chain == std::vector<MorId>{a0, mor(C3, "id[a]")});

    CHECK(apply_ord_map(C3, x, OrdMap::identity(2)) == x);
    CHECK_THROWS_AS(apply_ord_map(C3, x, OrdMap(1, 1, {0, 1})), StructuralError);
}

TEST_CASE("a face that forgets the basepoint side quotients") {
    auto C3 = lattice_category(chain_poset(2));
    const MorId a0 = mor(C3, "i[bot,a]"), a1 = mor(C3, "i[a,b]");
    auto x = canonical_quotients(C3, {a0, a1});
    // (0,1,0): the top element is absorbed, leaving (A_2/A_1) = (bot)
    auto y = apply_ord_map(C3, x, OrdMap(2, 1, {0, 1, 0}));
    CHECK(y.objects == std::vector<ObjId>{C3.base.zero(), C3.base.zero()});
    auto z = apply_ord_map(C3, canonical_quotients(C3, {C3.base.identity(0), mor(C3, "i[bot,b]")}),
                           OrdMap(2, 1, {0, 1, 0}));
    CHECK(z.objects.back() == *C3.base.find_object("b"));
}

TEST_CASE("functoriality on small maps") {
    auto C = lattice_category(chain_poset(2));
    for (int n = 0; n <= 3; ++n) {
        auto objs = enumerate_s_objects(C, n);
        for (int m = 0; m <= 3; ++m)
            for (int k = 0; k <= 2; ++k)
                for (const auto& f : all_ord_maps(n, m))
                    for (const auto& g : all_ord_maps(m, k))
                        for (const auto& x : objs)
                            REQUIRE(apply_ord_map(C, x, compose_ord(g, f)) ==
                                    apply_ord_map(C, apply_ord_map(C, x, f), g));
    }
}

TEST_CASE("S-sets over builtin Y") {
    auto C2 = lattice_category(chain_poset(1), "chain2");
    auto S = s_simplicial_set(C2, simplicial_circle(4), 4);
    for (int m = 0; m <= 4; ++m)
        CHECK(S.sset.sizes[m] == m + 1);
    CHECK(validate(S.sset).ok());

    auto T = s_simplicial_set(C2, constant_point(3), 3);
    for (int m = 0; m <= 3; ++m)
        CHECK(T.sset.sizes[m] == 1);

    auto P = s_simplicial_set(trivial_category(), simplicial_circle(3), 3);
    for (int m = 0; m <= 3; ++m)
        CHECK(P.sset.sizes[m] == 1);

    auto C3 = lattice_category(chain_poset(2), "chain3");
    CHECK(validate(s_simplicial_set(C3, simplicial_circle(4), 4).sset).ok());
    CHECK(validate(s_simplicial_set(C3, interval_plus(3), 3).sset).ok());
    auto D = lattice_category(diamond_poset(), "diamond");
    CHECK(validate(s_simplicial_set(D, simplicial_circle(3), 3).sset).ok());
}

TEST_CASE("S-categories and their functors") {
    auto C2 = lattice_category(chain_poset(1));
    auto S1 = s_category(C2, 1);
    CHECK(S1.cat.num_objects() == 2);
    CHECK(S1.cat.num_morphisms() == 5);
    for (int m = 0; m <= 3; ++m)
        CHECK(validate_category(s_category(C2, m).cat).ok());

    auto C3 = lattice_category(chain_poset(2));
    std::vector<SCategory> cats;
    for (int m = 0; m <= 3; ++m)
        cats.push_back(s_category(C3, m));
    auto check_functor = [&](const SCategory& A, const SCategory& B, const CatMap& F) {
        for (MorId f = 0; f < A.cat.num_morphisms(); ++f) {
            REQUIRE(B.cat.src(F.on_morphisms[f]) == F.on_objects[A.cat.src(f)]);
            for (MorId g : A.cat.out(A.cat.dst(f)))
                REQUIRE(F.on_morphisms[A.cat.compose(g, f)] ==
                        B.cat.compose(F.on_morphisms[g], F.on_morphisms[f]));
        }
        for (ObjId a = 0; a < A.cat.num_objects(); ++a)
            REQUIRE(F.on_morphisms[A.cat.identity(a)] == B.cat.identity(F.on_objects[a]));
    };
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const auto& phi : all_ord_maps(n, m)) {
                auto F = s_functor(C3, cats[n], cats[m], phi);
                check_functor(cats[n], cats[m], F);
                for (int k = 0; k <= 2; ++k)
                    for (const auto& psi : all_ord_maps(m, k)) {
                        auto G = s_functor(C3, cats[m], cats[k], psi);
                        auto GF = s_functor(C3, cats[n], cats[k], compose_ord(psi, phi));
                        for (std::size_t f = 0; f < F.on_morphisms.size(); ++f)
                            REQUIRE(GF.on_morphisms[f] == G.on_morphisms[F.on_morphisms[f]]);
                    }
            }
}

TEST_CASE("maps and homotopies from Ord*") {
    auto C2 = lattice_category(chain_poset(1));
    auto Y = simplicial_circle(3);
    auto X = s_simplicial_set(C2, Y, 3);
    auto id = map_from_ord(C2, X, X, identity_level_map(Y));
    CHECK(id.maps == identity_map(X.sset).maps);

    auto inst = vertex_homotopy(3);
    auto A = s_simplicial_set(C2, inst.Y, 3);
    auto B = s_simplicial_set(C2, inst.Y2, 3);
    auto f = map_from_ord(C2, A, B, inst.f);
    auto g = map_from_ord(C2, A, B, inst.g);
    auto H = homotopy_from_ord(C2, A, B, inst.f, inst.g, inst.H);
    CHECK(validate_map(A.sset, B.sset, f).ok());
    CHECK(validate_homotopy(A.sset, B.sset, f, g, H).ok());

    auto Hc = homotopy_from_ord(C2, X, X, identity_level_map(Y), identity_level_map(Y),
                                constant_homotopy(Y, Y, identity_level_map(Y)));
    CHECK(validate_homotopy(X.sset, X.sset, id, id, Hc).ok());

    auto bad = inst.H;
    bad.h[1][1] = OrdMap(1, 4, {0, 1});
    CHECK_THROWS_AS(homotopy_from_ord(C2, A, B, inst.f, inst.g, bad), ConstructionError);

    auto P = s_simplicial_set(C2, constant_point(3), 3);
    LevelMap to_point;
    for (int n = 0; n <= 3; ++n)
        to_point.emplace_back(n, 0, std::vector<int>(n + 1, 0));
    auto c = map_from_ord(C2, X, P, to_point);
    CHECK(validate_map(X.sset, P.sset, c).ok());
}

}

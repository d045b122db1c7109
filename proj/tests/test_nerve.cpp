#include "doctest.h"

#include "waldkit/nerve.hpp"

using namespace waldkit;

TEST_SUITE("nerve") {

TEST_CASE("cyclic nerve of small categories") {
    auto T = cyclic_nerve(trivial_category().base, 3);
    for (int n = 0; n <= 3; ++n)
        CHECK(T.cs.X.sizes[n] == 1);

    auto C2 = lattice_category(chain_poset(1));
    auto N = cyclic_nerve(C2.base, 3);
    CHECK(N.cs.X.sizes[0] == 3);
    CHECK(N.cs.X.sizes[1] == 7);
    CHECK(validate_cyclic(N.cs).ok());
    const LevelFn& t = N.cs.t[2];
    CHECK(compose_fn(t, compose_fn(t, t)) == identity_fn(N.cs.X.sizes[2]));
    CHECK(t != identity_fn(N.cs.X.sizes[2]));

    auto D = lattice_category(diamond_poset());
    CHECK(validate_cyclic(cyclic_nerve(D.base, 3).cs).ok());
}

TEST_CASE("broken cyclic operator is named") {
    auto N = cyclic_nerve(lattice_category(chain_poset(1)).base, 2);
    auto cs = N.cs;
    cs.t[1] = identity_fn(cs.X.sizes[1]);
    auto rep = validate_cyclic(cs);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has_kind("cyclic.face"));
}

TEST_CASE("grids over trivial input are points") {
    auto G = cn_bisimplicial(trivial_category(), simplicial_circle(3), 3, 3);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            CHECK(G.grid.sizes[n][m] == 1);
    auto H = cn_bisimplicial(lattice_category(chain_poset(1)), constant_point(3), 3, 3);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            CHECK(H.grid.sizes[n][m] == 1);
}

TEST_CASE("chain2 over the circle: grid sizes") {
    // independent enumeration, tests/oracle/oracle.py
    const int pinned[4][4] = {{1, 3, 5, 7}, {1, 7, 17, 31}, {1, 18, 68, 169}, {1, 47, 277, 935}};
    auto C2 = lattice_category(chain_poset(1), "chain2");
    auto G = cn_bisimplicial(C2, simplicial_circle(3), 3, 3);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            CHECK(G.grid.sizes[n][m] == pinned[n][m]);
    CHECK(validate(G.grid).ok());
    CHECK(validate_cyclic_rows(G.grid).ok());
    auto Dg = diagonal(G.grid, 3);
    CHECK(validate(Dg).ok());
    CHECK(nondegenerate(Dg, 1).size() == 6);
    CHECK(nondegenerate(Dg, 2).size() == 55);
    CHECK(nondegenerate(Dg, 3).size() == 751);
    CHECK(dump(G).find("n=1: 1 7 17 31") != std::string::npos);
}

TEST_CASE("other builtins give valid grids") {
    auto C3 = lattice_category(chain_poset(2), "chain3");
    CHECK(validate(cn_bisimplicial(C3, simplicial_circle(2), 2, 2).grid).ok());
    auto C2 = lattice_category(chain_poset(1), "chain2");
    CHECK(validate(cn_bisimplicial(C2, interval_plus(2), 2, 2).grid).ok());
    CHECK(validate(cn_bisimplicial(C2, point_plus(3), 3, 3).grid).ok());
}

TEST_CASE("maps induced from Ord*") {
    auto C2 = lattice_category(chain_poset(1), "chain2");
    auto Y = simplicial_circle(2);
    auto G = cn_bisimplicial(C2, Y, 2, 2);
    auto id = cn_map_from_ord(C2, G, G, identity_level_map(Y));
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            CHECK(id.maps[n][m] == identity_fn(G.grid.sizes[n][m]));

    auto inst = vertex_homotopy(2);
    auto A = cn_bisimplicial(C2, inst.Y, 2, 2);
    auto B = cn_bisimplicial(C2, inst.Y2, 2, 2);
    auto f = cn_map_from_ord(C2, A, B, inst.f);
    CHECK(validate_map(A.grid, B.grid, f).ok());
    auto bad = inst.f;
    bad[1] = OrdMap(1, 3, {0, 2});
    CHECK_THROWS_AS(cn_map_from_ord(C2, A, B, bad), ConstructionError);
}

TEST_CASE("bifunctor images on product grids") {
    auto C = std::make_shared<const FinCofCategory>(lattice_category(chain_poset(1), "chain2"));
    auto Y = point_plus(2);
    auto G = cn_bisimplicial(*C, Y, 2, 2);
    auto meet = cn_of_bifunctor(meet_bifunctor(C), G, G, G);
    CHECK(validate_map(product(G.grid, G.grid), G.grid, meet).ok());

    auto zero = cn_of_bifunctor(zero_bifunctor(C, C, C), G, G, G);
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            for (int v : zero.maps[n][m])
                CHECK(v == G.grid.basepoint[n][m]);

    auto T = std::make_shared<const FinCofCategory>(trivial_category());
    auto GT = cn_bisimplicial(*T, Y, 2, 2);
    auto idt = cn_of_bifunctor(meet_bifunctor(T), GT, GT, GT);
    CHECK(idt.maps[2][2] == LevelFn{0});

    CHECK_THROWS_AS(cn_of_bifunctor(join_bifunctor(C), G, G, G), ConstructionError);
    auto Gc = cn_bisimplicial(*C, simplicial_circle(2), 2, 2);
    CHECK_THROWS_AS(cn_of_bifunctor(meet_bifunctor(C), Gc, Gc, Gc), ConstructionError);
}

}

TEST_CASE("total-degree truncated grid") {
    auto C2 = lattice_category(chain_poset(1), "chain2");
    auto G = cn_bisimplicial(C2, simplicial_circle(5), 5, 5, 5);
    CHECK(G.grid.has(2, 3));
    CHECK_FALSE(G.grid.has(3, 3));
    CHECK(G.grid.sizes[3][2] == 277);
    CHECK(G.grid.sizes[5][0] == 1);
    CHECK(validate(G.grid).ok());
    CHECK_THROWS_AS(diagonal(G.grid, 3), ConstructionError);
    CHECK(diagonal(G.grid, 2).sizes[2] == 68);
}

#include "doctest.h"

#include "waldkit/invariants.hpp"

using namespace waldkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<int> dims(const InvariantReport& R) {
    std::vector<int> out;
    for (const auto& v : R.values)
        out.push_back(v.dim);
    return out;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("k0 on the corpus") {
    auto Y = simplicial_circle(3);
    auto t = k0(trivial_category(), Y, 2);
    CHECK(t.abelian.trivial());
    CHECK(t.report.pins_match());

    auto c2 = k0(lattice_category(chain_poset(1), "chain2"), Y, 3);
    CHECK(c2.abelian.to_string() == "Z");
    CHECK(c2.h1_dim == 1);
    CHECK(c2.report.checks.ok());
    CHECK(c2.report.pins.size() == 1);
    CHECK(c2.report.pins_match());

    auto c3 = k0(lattice_category(chain_poset(2), "chain3"), Y, 2);
    CHECK(c3.abelian.to_string() == "Z");
    CHECK(c3.presentation.generators.size() == 2);
    CHECK(c3.simplified.generators.size() == 1);

    auto d = k0(lattice_category(diamond_poset(), "diamond"), Y, 2);
    CHECK(d.abelian.rank == d.h1_dim);

    CHECK_THROWS_AS(k0(trivial_category(), Y, 1), ConstructionError);
    CHECK_THROWS_AS(k0(trivial_category(), point_plus(3), 2), ConstructionError);
}

TEST_CASE("reports refuse values outside the reliable range") {
    InvariantReport R;
    R.invariant = "HH^Y";
    R.reliable_hi = 1;
    R.add_value(1, 0, "0");
    CHECK_THROWS_AS(R.add_value(2, 0, "0"), ConstructionError);
}

TEST_CASE("hh on trivial inputs vanishes") {
    auto Y = simplicial_circle(5);
    for (auto k : {Q, FieldSpec::prime(2)}) {
        CHECK(dims(hh(trivial_category(), Y, 0, 3, k)) == std::vector<int>{0, 0, 0, 0});
    }
    auto C = lattice_category(chain_poset(1), "chain2");
    CHECK(dims(hh(C, constant_point(4), 0, 2, Q)) == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(hh(C, simplicial_circle(2), 0, 1, Q), ConstructionError);
}

TEST_CASE("hh on chain2 over the circle") {
    auto R = hh(lattice_category(chain_poset(1), "chain2"), simplicial_circle(3), 0, 1, Q, true);
    CHECK(dims(R) == std::vector<int>{1, 0});
    CHECK(R.checks.ok());
    CHECK(R.pins.size() == 2);
    CHECK(R.pins_match());
    CHECK(R.reliable_hi == 1);
}

TEST_CASE("hc follows the shifted ground-field pattern on the point grid") {
    for (auto Y : {simplicial_circle(5), constant_point(5)})
        for (auto k : {Q, FieldSpec::prime(2)}) {
            auto R = hc(trivial_category(), Y, 0, 3, k);
            CHECK(dims(R) == std::vector<int>{0, 1, 0, 1});
            CHECK(R.checks.ok());
        }
}

TEST_CASE("hc on chain2 over the circle") {
    auto R = hc(lattice_category(chain_poset(1), "chain2"), simplicial_circle(5), 0, 3, Q);
    // regression values, consistent with SBI exactness below
    CHECK(dims(R) == std::vector<int>{1, 1, 1, 1});
    CHECK(R.pins_match());
}

TEST_CASE("sbi exactness and the mis-shifted control") {
    auto Y = simplicial_circle(5);
    for (const auto& C : {trivial_category(), lattice_category(chain_poset(1), "chain2")}) {
        auto S = sbi_check(C, Y, Q, 3);
        CHECK(S.exactness.ok());
        CHECK(S.aligned.ok());
        CHECK(S.control.has_kind("sbi.dimensions"));
    }
    CHECK(sbi_dimension_sequence({1, 0}, {1, 0, 1}, 1) == std::vector<int>{0, 0, 0, 1, 1, 0});
}

TEST_CASE("dennis trace") {
    auto Y = simplicial_circle(3);
    auto T = dennis_trace(trivial_category(), Y, 1, Q);
    CHECK(T.simpliciality.ok());
    for (const auto& m : T.matrices)
        for (const auto& row : m)
            for (const auto& x : row)
                CHECK(x == 0);

    auto C = lattice_category(chain_poset(1), "chain2");
    auto D = dennis_trace(C, Y, 1, Q);
    CHECK(D.simpliciality.ok());
    REQUIRE(D.k0_composite.has_value());
    CHECK(D.k0_generators.size() == 1);
    // the oracle finds (id_a, id_a) nonzero in H_1 of the diagonal; in the
    // deterministic basis it is the basis class itself
    CHECK(*D.k0_composite == QMatrix{{mpq_class(1)}});
    CHECK(D.report.pins_match());
    CHECK(D.matrices[0] == QMatrix{{mpq_class(1)}});

    auto P = dennis_trace(C, point_plus(3), 1, Q);
    CHECK_FALSE(P.k0_composite.has_value());
}

TEST_CASE("trace map lands on identity tuples") {
    auto C = lattice_category(chain_poset(1), "chain2");
    auto Y = simplicial_circle(2);
    auto S = s_simplicial_set(C, Y, 2);
    auto G = cn_bisimplicial(C, Y, 2, 2);
    auto D = trace_map(S, G, 2);
    for (int m = 0; m <= 2; ++m)
        for (int x = 0; x < S.sset.sizes[m]; ++x) {
            const auto& t = G.element(m, m, D(m, x));
            CHECK(t.size() == static_cast<std::size_t>(m + 1));
            for (MorId f : t)
                CHECK(f == t[0]);
        }
    CHECK(D(2, 0) == G.grid.basepoint[2][2]);
}

TEST_CASE("product_k_map") {
    auto C = std::make_shared<const FinCofCategory>(lattice_category(chain_poset(1), "chain2"));
    auto P = product_k_map(meet_bifunctor(C), point_plus(3), 3);
    CHECK(P.report.ok());
    CHECK(validate_map(P.source, P.target, P.map).ok());
    for (int n = 0; n <= 3; ++n)
        CHECK(P.map(n, 0) == P.target.basepoint[n]);

    auto Z = product_k_map(zero_bifunctor(C, C, C), point_plus(2), 2);
    for (int n = 0; n <= 2; ++n)
        for (int x : Z.map.maps[n])
            CHECK(x == Z.target.basepoint[n]);

    CHECK_THROWS_AS(product_k_map(join_bifunctor(C), point_plus(2), 2), ConstructionError);
    CHECK_THROWS_AS(product_k_map(meet_bifunctor(C), simplicial_circle(2), 2), ConstructionError);
}

TEST_CASE("product_hh degree and bilinearity") {
    auto C = std::make_shared<const FinCofCategory>(lattice_category(chain_poset(1), "chain2"));
    auto R = product_hh(meet_bifunctor(C), point_plus(4), 0, 0, Q);
    CHECK(R.degree == 1);
    CHECK(R.pairing.a + R.pairing.b == R.degree + 1);
    CHECK(R.report.checks.ok());
    CHECK(R.pairing.bilinearity.ok());

    auto T = std::make_shared<const FinCofCategory>(trivial_category());
    auto Z = product_hh(meet_bifunctor(T), point_plus(3), 0, 0, Q);
    CHECK(Z.pairing.dim_a == 0);
    CHECK(Z.pairing.table.empty());
    CHECK_THROWS_AS(product_hh(meet_bifunctor(C), simplicial_circle(3), 0, 0, Q), ConstructionError);
}

TEST_CASE("homology pairing in degree zero is nonzero and bilinear") {
    auto C = std::make_shared<const FinCofCategory>(lattice_category(chain_poset(1), "chain2"));
    const int cap = 2;
    auto G = cn_bisimplicial(*C, point_plus(cap), cap, cap);
    auto f = diagonal_map(cn_of_bifunctor(meet_bifunctor(C), G, G, G), cap);
    auto D = diagonal(G.grid, cap);
    for (auto k : {Q, FieldSpec::prime(3)}) {
        auto P = homology_pairing(D, D, D, f, 0, 0, k);
        CHECK(P.dim_a >= 1);
        CHECK(P.bilinearity.ok());
        bool nonzero = false;
        for (const auto& m : P.table)
            nonzero = nonzero || rank(m, k) > 0;
        CHECK(nonzero);
    }
}

TEST_CASE("homotopy invariance") {
    auto C = lattice_category(chain_poset(1), "chain2");
    auto V = vertex_homotopy(3);
    auto rep = homotopy_invariance(C, V, Q, 2);
    CHECK(rep.ok());
    CHECK(rep.notes().back().rfind("certified", 0) == 0);

    auto Y = simplicial_circle(3);
    auto id = identity_level_map(Y);
    HomotopyInstance K{Y, Y, id, id, constant_homotopy(Y, Y, id)};
    CHECK(homotopy_invariance(C, K, Q, 2).ok());

    auto bad = V;
    bad.H.h[1][0] = OrdMap(1, 4, {0, 0});
    auto r = homotopy_invariance(C, bad, Q, 2);
    CHECK(r.has_kind("homotopy.rejected"));
    for (const auto& n : r.notes())
        CHECK(n.find("certified") == std::string::npos);
}

}

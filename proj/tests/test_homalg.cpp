#include "doctest.h"

#include <numeric>
#include <random>

#include "waldkit/homalg.hpp"
#include "waldkit/nerve.hpp"

using namespace waldkit;

namespace {

SimplicialSet circle_sset(int cap) {
    return s_simplicial_set(lattice_category(chain_poset(1), "chain2"), simplicial_circle(cap), cap).sset;
}

std::vector<int> betti(const ChainComplex& CC, FieldSpec k) {
    std::vector<int> out;
    for (int p = 0; p < CC.top; ++p)
        out.push_back(homology(CC, p, k).dim);
    return out;
}

// invariant factors from gcds of k×k minors
mpz_class det(std::vector<std::vector<mpz_class>> a) {
    const int n = static_cast<int>(a.size());
    mpq_class d = 1;
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = a[i][j];
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            const mpq_class f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return d.get_num();
}

std::vector<mpz_class> minors_oracle(const std::vector<std::vector<mpz_class>>& a) {
    const int R = static_cast<int>(a.size()), C = static_cast<int>(a[0].size());
    std::vector<mpz_class> dk{1}, out;
    for (int k = 1; k <= std::min(R, C); ++k) {
        mpz_class g = 0;
        for (int rm = 0; rm < (1 << R); ++rm) {
            if (__builtin_popcount(rm) != k)
                continue;
            for (int cm = 0; cm < (1 << C); ++cm) {
                if (__builtin_popcount(cm) != k)
                    continue;
                std::vector<std::vector<mpz_class>> sub;
                for (int i = 0; i < R; ++i) {
                    if (!(rm >> i & 1))
                        continue;
                    std::vector<mpz_class> row;
                    for (int j = 0; j < C; ++j)
                        if (cm >> j & 1)
                            row.push_back(a[i][j]);
                    sub.push_back(row);
                }
                mpz_class d = det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        }
        if (g == 0)
            break;
        dk.push_back(g);
        out.push_back(dk[k] / dk[k - 1]);
    }
    return out;
}

}  // namespace

TEST_SUITE("homalg") {

TEST_CASE("field specs") {
    CHECK(parse_field("q").is_rational());
    CHECK(parse_field("fp:7").p == 7);
    CHECK_THROWS_AS(parse_field("fp:9"), StructuralError);
    CHECK_THROWS_AS(parse_field("r"), StructuralError);
}

TEST_CASE("point and circle homology") {
    auto P = normalized_chains(point(3));
    CHECK(P.dims == std::vector<int>{1, 0, 0, 0});
    CHECK(betti(P, FieldSpec::rationals()) == std::vector<int>{1, 0, 0});

    auto X = circle_sset(3);
    auto CX = normalized_chains(X);
    CHECK(CX.dims[1] == 1);
    CHECK(CX.boundary[1].is_zero());
    // independent chain computation, tests/oracle/oracle.py
    CHECK(betti(CX, FieldSpec::rationals()) == std::vector<int>{1, 1, 0});
    CHECK(betti(CX, FieldSpec::prime(2)) == std::vector<int>{1, 1, 0});
    CHECK_THROWS_AS(homology(CX, 3, FieldSpec::rationals()), ConstructionError);
}

TEST_CASE("boundary squared check rejects a perturbed complex") {
    ChainComplex CC;
    CC.name = "bad";
    CC.top = 2;
    CC.dims = {1, 2, 1};
    CC.boundary = {SparseMatrix(0, 1), SparseMatrix(1, 2), SparseMatrix(2, 1)};
    CC.boundary[1].add(0, 0, 1);
    CC.boundary[1].add(0, 1, -1);
    CC.boundary[2].add(0, 0, 1);
    CC.boundary[2].add(1, 0, 2);
    CHECK(CC.check().has_kind("chain.dd"));
}

TEST_CASE("homology over F_2 sees torsion") {
    // RP^2-like cell complex: one cell per degree, ∂_2 = 2
    ChainComplex CC;
    CC.name = "rp2";
    CC.top = 3;
    CC.dims = {1, 1, 1, 0};
    CC.boundary = {SparseMatrix(0, 1), SparseMatrix(1, 1), SparseMatrix(1, 1), SparseMatrix(1, 0)};
    CC.boundary[2].add(0, 0, 2);
    CHECK(betti(CC, FieldSpec::rationals()) == std::vector<int>{1, 0, 0});
    CHECK(betti(CC, FieldSpec::prime(2)) == std::vector<int>{1, 1, 1});
}

TEST_CASE("coordinates and induced maps") {
    auto X = circle_sset(3);
    auto id = identity_map(X);
    auto M = induced_on_homology(X, X, id, FieldSpec::rationals(), 1);
    REQUIRE(M.size() == 1);
    CHECK(M[0][0] == 1);

    auto C = lattice_category(chain_poset(1));
    auto S = s_simplicial_set(C, simplicial_circle(3), 3);
    LevelMap collapse;
    for (int n = 0; n <= 3; ++n)
        collapse.emplace_back(n, n, std::vector<int>(n + 1, 0));
    auto c = map_from_ord(C, S, S, collapse);
    auto Z = induced_on_homology(X, X, c, FieldSpec::rationals(), 1);
    CHECK(Z[0][0] == 0);
    auto Z0 = induced_on_homology(X, X, c, FieldSpec::rationals(), 0);
    CHECK(Z0[0][0] == 1);

    auto H = homology(normalized_chains(X), 1, FieldSpec::rationals());
    CHECK_THROWS_AS(H.coordinates(QVector{{0, mpq_class(1)}, {1, mpq_class(5)}}), std::exception);
}

TEST_CASE("edge-path groups") {
    auto P = pi1_edge_path(point(2));
    CHECK(P.generators.empty());
    CHECK(abelianize(P).trivial());

    auto G = pi1_edge_path(circle_sset(2));
    CHECK(G.generators.size() == 1);
    CHECK(G.relators.empty());
    CHECK(abelianize(G).to_string() == "Z");

    auto C3 = lattice_category(chain_poset(2), "chain3");
    auto X3 = s_simplicial_set(C3, simplicial_circle(2), 2).sset;
    auto G3 = pi1_edge_path(X3);
    CHECK(G3.generators.size() == 2);
    CHECK_FALSE(G3.relators.empty());
    CHECK(abelianize(G3).to_string() == "Z");
    CHECK(simplify(G3).generators.size() == 1);

    auto I = s_simplicial_set(lattice_category(chain_poset(1)), interval_plus(2), 2).sset;
    CHECK_THROWS_AS(pi1_edge_path(I), ConstructionError);
}

TEST_CASE("abelianization and Smith normal form") {
    FPGroup x2{{"x"}, {{1, 1}}};
    CHECK(abelianize(x2).to_string() == "Z/2");
    FPGroup f1{{"x"}, {}};
    CHECK(abelianize(f1).to_string() == "Z");
    FPGroup comm{{"x", "y"}, {{1, 2, -1, -2}}};
    CHECK(abelianize(comm).to_string() == "Z^2");
    CHECK(simplify(FPGroup{{"x", "y"}, {{1, 2, 2}}}).generators.size() == 1);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const int R = 1 + trial % 3, C = 1 + (trial / 3) % 3;
        std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
        for (auto& row : a)
            for (auto& x : row)
                x = entry(rng);
        REQUIRE(smith_diagonal(a) == minors_oracle(a));
    }
}

TEST_CASE("shuffle map is a chain map") {
    auto X = circle_sset(3);
    CHECK(check_shuffle(X, X, 3).ok());
    auto P = product(X, X);
    auto sh = shuffle_map(X, X, P, 0, 0);
    CHECK(sh.cols == 1);
    CHECK(sh.col[0] == SparseColumn{{0, 1}});
    auto I = s_simplicial_set(lattice_category(chain_poset(1)), interval_plus(3), 3).sset;
    CHECK(check_shuffle(I, X, 3).ok());
}

TEST_CASE("total complex agrees with the diagonal") {
    auto G = cn_bisimplicial(lattice_category(chain_poset(1), "chain2"), simplicial_circle(3), 3, 3);
    auto T = total_complex(G.grid);
    auto D = normalized_chains(diagonal(G.grid, 3));
    const auto q = FieldSpec::rationals();
    CHECK(betti(T.cc, q) == betti(D, q));
    CHECK(betti(D, q) == std::vector<int>{1, 1, 0});
}

TEST_CASE("mixed complex of the point grid") {
    auto G = cn_bisimplicial(trivial_category(), simplicial_circle(5), 5, 5, 5);
    auto M = mixed_from_cyclic(G.grid);
    CHECK(M.check().ok());
    CHECK(M.dims == std::vector<int>{1, 0, 0, 0, 0, 0});
    for (int q : {FieldSpec::rationals().p, 2}) {
        auto k = q ? FieldSpec::prime(q) : FieldSpec::rationals();
        auto H = cyclic_homology(M, k);
        CHECK(H.reliable_top == 4);
        CHECK(H.hh[0].dim == 1);
        for (int d = 0; d <= 4; ++d)
            CHECK(H.hc[d].dim == (d % 2 == 0 ? 1 : 0));
        CHECK(H.I[0] == QMatrix{{mpq_class(1)}});
        CHECK(rank(H.S[2], k) == 1);
        CHECK(sbi_exactness(H, 4).ok());
    }
}

TEST_CASE("mixed complex on chain2 over the circle") {
    auto G = cn_bisimplicial(lattice_category(chain_poset(1), "chain2"), simplicial_circle(4), 4, 4, 4);
    auto M = mixed_from_cyclic(G.grid);
    CHECK(M.check().ok());
    auto H = cyclic_homology(M, FieldSpec::rationals());
    CHECK(sbi_exactness(H, 3).ok());
    // B corrupted: the checker names the failing identity
    auto bad = M;
    bad.B[1].add(0, 0, 1);
    CHECK_FALSE(bad.check().ok());
}

TEST_CASE("exact dimension sequences") {
    CHECK(exact_dimensions_feasible({1, 1}));
    CHECK(exact_dimensions_feasible({0, 1, 1, 0, 0}));
    CHECK_FALSE(exact_dimensions_feasible({0, 1}));
    CHECK_FALSE(exact_dimensions_feasible({0, 2, 1}));
}

}

#include "doctest.h"

#include "waldkit/fincat.hpp"

using namespace waldkit;

namespace {

CategoryPtr share(FinCofCategory C) { return std::make_shared<const FinCofCategory>(std::move(C)); }

MorId mor(const FinCofCategory& C, const std::string& name) {
    auto f = C.base.find_morphism(name);
    REQUIRE(f.has_value());
    return *f;
}

ObjId obj(const FinCofCategory& C, const std::string& name) {
    auto a = C.base.find_object(name);
    REQUIRE(a.has_value());
    return *a;
}

}  // namespace

TEST_SUITE("fincat") {

TEST_CASE("trivial category is valid") {
    auto C = trivial_category();
    CHECK(C.base.num_objects() == 1);
    CHECK(C.base.num_morphisms() == 1);
    CHECK(validate_category(C.base).ok());
    CHECK(validate_cofibrations(C).ok());
}

TEST_CASE("corrupted identity entry is named") {
    FinCategory C;
    C.add_object("x");
    C.add_object("0");
    MorId idx = C.add_morphism("idx", 0, 0);
    MorId e = C.add_morphism("e", 0, 0);
    MorId id0 = C.add_morphism("id0", 1, 1);
    MorId p = C.add_morphism("p", 0, 1);
    MorId i = C.add_morphism("i", 1, 0);
    C.set_identity(0, idx);
    C.set_identity(1, id0);
    C.set_zero(1);
    // e is the zero endomorphism of x
    for (MorId f : {idx, e, id0, p, i})
        for (MorId g : C.out(C.dst(f))) {
            MorId r;
            if (f == C.identity(C.src(f)))
                r = g;
            else if (g == C.identity(C.dst(g)))
                r = f;
            else if (C.src(f) == 0 && C.dst(g) == 0)
                r = e;
            else if (C.src(f) == 0)
                r = p;
            else if (C.dst(g) == 0)
                r = i;
            else
                r = id0;
            C.set_composite(g, f, r);
        }
    CHECK(validate_category(C).ok());
    C.set_composite(idx, e, idx);  // identity law broken
    auto rep = validate_category(C);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.has_kind("identity"));
    CHECK(rep.to_string().find("(idx, e)") != std::string::npos);
}

TEST_CASE("chain lattice {bot < a} has five morphisms") {
    auto C = lattice_category(chain_poset(1), "chain2");
    CHECK(C.base.num_objects() == 2);
    CHECK(C.base.num_morphisms() == 5);
    CHECK(validate_category(C.base).ok());
}

TEST_CASE("lattice categories pass every law") {
    for (const auto& P : {chain_poset(1), chain_poset(2), diamond_poset()}) {
        auto C = lattice_category(P);
        CHECK(validate_category(C.base).ok());
    }
}

TEST_CASE("Cof2 on a lattice fails only at missing coproducts") {
    auto C = lattice_category(chain_poset(1), "chain2");
    auto rep = validate_cofibrations(C);
    CHECK(rep.count("cof2.no-pushout") == 1);
    CHECK(rep.violations().size() == 1);
    CHECK(rep.violations()[0].detail.find("(i[bot,a], i[bot,a])") != std::string::npos);
    CHECK(s_admissible(rep));

    auto D = lattice_category(diamond_poset(), "diamond");
    auto rd = validate_cofibrations(D);
    // spans bot ↣ y, bot → w with y, w nonzero: 3 x 3
    CHECK(rd.count("cof2.no-pushout") == 9);
    CHECK(s_admissible(rd));
}

TEST_CASE("witnesses supplied by the generator are genuine pushouts") {
    auto C = lattice_category(chain_poset(2));
    for (const auto& [key, w] : C.witnesses) {
        std::string why;
        CHECK_MESSAGE(is_pushout(C.base, key.first, key.second, w, &why), why);
    }
}

TEST_CASE("mutations are rejected with the offending item named") {
    auto base = lattice_category(chain_poset(1), "chain2");
    const MorId ida = mor(base, "id[a]");
    const MorId za0 = mor(base, "0[a,bot]");
    SUBCASE("removed witness") {
        auto C = base;
        C.witnesses.erase({ida, za0});
        auto rep = validate_cofibrations(C);
        CHECK(rep.has_kind("cof2.witness-missing"));
        CHECK(rep.to_string().find("(id[a], 0[a,bot])") != std::string::npos);
        CHECK_FALSE(s_admissible(rep));
    }
    SUBCASE("corrupted square") {
        auto C = base;
        C.witnesses[{ida, ida}].inc_cof = mor(C, "0[a,a]");
        auto rep = validate_cofibrations(C);
        CHECK(rep.has_kind("cof2.witness-invalid"));
        CHECK(rep.to_string().find("(id[a], id[a])") != std::string::npos);
    }
    SUBCASE("inc_C not a cofibration") {
        // Along 0[a,a] the witness is (a, 0[a,a], id[a]); swapping the legs
        // puts the non-cofibration 0[a,a] in the inc_C slot.
        auto C = base;
        const MorId zaa = mor(C, "0[a,a]");
        C.witnesses[{ida, zaa}] = PushoutWitness{obj(C, "a"), ida, zaa};
        auto rep = validate_cofibrations(C);
        CHECK(rep.has_kind("cof2.inc-not-cofibration"));
        CHECK(rep.to_string().find("(id[a], 0[a,a]): inc 0[a,a]") != std::string::npos);
    }
}

TEST_CASE("quotients") {
    auto C2 = lattice_category(chain_poset(1));
    auto q = quotient(C2, mor(C2, "id[a]"));
    CHECK(q.obj == C2.base.zero());
    auto qa = quotient(C2, mor(C2, "i[bot,a]"));
    CHECK(qa.obj == obj(C2, "a"));
    CHECK(C2.base.is_iso(qa.map));

    auto C3 = lattice_category(chain_poset(2));
    CHECK(quotient(C3, mor(C3, "i[a,b]")).obj == C3.base.zero());
    CHECK_THROWS_AS(quotient(C3, mor(C3, "0[a,b]")), ConstructionError);
}

TEST_CASE("exact functors") {
    auto L = share(lattice_category(chain_poset(2)));
    CHECK(is_exact(identity_functor(L)).ok());
    CHECK(is_exact(zero_functor(L, L)).ok());
    for (ObjId m = 0; m < L->base.num_objects(); ++m)
        CHECK(is_exact(meet_with(L, m)).ok());
}

TEST_CASE("bi-exactness of meet and join") {
    auto L = share(lattice_category(chain_poset(1), "chain2"));
    auto meet = meet_bifunctor(L);
    CHECK(validate_bifunctor(meet).ok());
    CHECK(is_biexact(meet).ok());
    auto join = join_bifunctor(L);
    auto rep = is_biexact(join);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has_kind("exact.zero"));
    CHECK(rep.to_string().find("F(a, -)") != std::string::npos);
    // zero morphisms factor through bot, which join cannot respect
    CHECK(rep.has_kind("functor.composition"));
    CHECK(is_biexact(zero_bifunctor(L, L, L)).ok());
}

TEST_CASE("bi-exact implies partial functors exact") {
    auto L = share(lattice_category(chain_poset(2)));
    auto F = meet_bifunctor(L);
    REQUIRE(is_biexact(F).ok());
    for (ObjId a = 0; a < L->base.num_objects(); ++a) {
        CHECK(is_exact(F.partial_left(a)).ok());
        CHECK(is_exact(F.partial_right(a)).ok());
    }
}

TEST_CASE("non-semilattice input is rejected") {
    CHECK_THROWS_AS(lattice_category(Poset{{"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}}}), StructuralError);
    CHECK_THROWS_AS(lattice_category(Poset{{"a", "b"}, {}}), StructuralError);
    CHECK_THROWS_AS(lattice_category(Poset{{"a", "b"}, {{"a", "b"}, {"b", "a"}}}), StructuralError);
}

}

#include "waldkit/fincat.hpp"

#include <algorithm>
#include <map>

namespace waldkit {

namespace {

struct Order {
    int n = 0;
    std::vector<char> le;  // le[x*n+y]
    int bottom = -1;
    bool leq(int x, int y) const { return le[static_cast<std::size_t>(x) * n + y] != 0; }
};

Order close_order(const Poset& L) {
    Order o;
    o.n = static_cast<int>(L.elements.size());
    if (o.n == 0)
        throw StructuralError("empty poset");
    std::map<std::string, int> idx;
    for (int i = 0; i < o.n; ++i)
        if (!idx.emplace(L.elements[i], i).second)
            throw StructuralError("duplicate poset element '" + L.elements[i] + "'");
    o.le.assign(static_cast<std::size_t>(o.n) * o.n, 0);
    for (int i = 0; i < o.n; ++i)
        o.le[static_cast<std::size_t>(i) * o.n + i] = 1;
    for (const auto& [a, b] : L.relations) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end())
            throw StructuralError("relation names unknown element: " + a + " <= " + b);
        o.le[static_cast<std::size_t>(ia->second) * o.n + ib->second] = 1;
    }
    for (int k = 0; k < o.n; ++k)
        for (int i = 0; i < o.n; ++i)
            for (int j = 0; j < o.n; ++j)
                if (o.leq(i, k) && o.leq(k, j))
                    o.le[static_cast<std::size_t>(i) * o.n + j] = 1;
    for (int i = 0; i < o.n; ++i)
        for (int j = i + 1; j < o.n; ++j)
            if (o.leq(i, j) && o.leq(j, i))
                throw StructuralError("relation is not antisymmetric: " + L.elements[i] + ", " +
                                      L.elements[j]);
    for (int i = 0; i < o.n && o.bottom < 0; ++i) {
        bool below_all = true;
        for (int j = 0; j < o.n; ++j)
            below_all = below_all && o.leq(i, j);
        if (below_all)
            o.bottom = i;
    }
    if (o.bottom < 0)
        throw StructuralError("poset has no bottom element");
    for (int i = 0; i < o.n; ++i)
        for (int j = 0; j < o.n; ++j) {
            int lub = -1;
            for (int k = 0; k < o.n; ++k) {
                if (!o.leq(i, k) || !o.leq(j, k))
                    continue;
                bool least = true;
                for (int m = 0; m < o.n; ++m)
                    if (o.leq(i, m) && o.leq(j, m) && !o.leq(k, m))
                        least = false;
                if (least)
                    lub = k;
            }
            if (lub < 0)
                throw StructuralError("no join for " + L.elements[i] + " and " + L.elements[j]);
        }
    return o;
}

int order_join(const FinCofCategory& C, int x, int y) {
    const int n = C.base.num_objects();
    for (int k = 0; k < n; ++k) {
        if (!lattice_leq(C, x, k) || !lattice_leq(C, y, k))
            continue;
        bool least = true;
        for (int m = 0; m < n && least; ++m)
            if (lattice_leq(C, x, m) && lattice_leq(C, y, m) && !lattice_leq(C, k, m))
                least = false;
        if (least)
            return k;
    }
    throw ConstructionError("join does not exist");
}

int order_meet(const FinCofCategory& C, int x, int y) {
    const int n = C.base.num_objects();
    for (int k = 0; k < n; ++k) {
        if (!lattice_leq(C, k, x) || !lattice_leq(C, k, y))
            continue;
        bool greatest = true;
        for (int m = 0; m < n && greatest; ++m)
            if (lattice_leq(C, m, x) && lattice_leq(C, m, y) && !lattice_leq(C, m, k))
                greatest = false;
        if (greatest)
            return k;
    }
    throw ConstructionError("meet does not exist");
}

// The inclusion x → y (x ≤ y), i.e. the unique cofibration between them.
MorId inclusion(const FinCofCategory& C, ObjId x, ObjId y) {
    for (MorId f : C.base.hom(x, y))
        if (C.is_cofibration(f))
            return f;
    throw ConstructionError("no inclusion " + C.base.object_name(x) + " -> " + C.base.object_name(y));
}

template <class ObjFn>
BiFunctor lattice_bifunctor(const CategoryPtr& L, ObjFn op) {
    BiFunctor F{L, L, L, {}, {}};
    const FinCategory& C = L->base;
    for (ObjId a = 0; a < C.num_objects(); ++a)
        for (ObjId b = 0; b < C.num_objects(); ++b)
            F.on_objects.push_back(op(a, b));
    for (MorId f = 0; f < C.num_morphisms(); ++f)
        for (MorId g = 0; g < C.num_morphisms(); ++g) {
            ObjId s = op(C.src(f), C.src(g)), t = op(C.dst(f), C.dst(g));
            bool incl = L->is_cofibration(f) && L->is_cofibration(g);
            F.on_morphisms.push_back(incl ? inclusion(*L, s, t) : C.zero_morphism(s, t));
        }
    return F;
}

}  // namespace

bool lattice_leq(const FinCofCategory& C, ObjId x, ObjId y) {
    for (MorId f : C.base.hom(x, y))
        if (C.is_cofibration(f))
            return true;
    return false;
}

FinCofCategory trivial_category() {
    return lattice_category(Poset{{"0"}, {}}, "trivial");
}

FinCofCategory lattice_category(const Poset& L, std::string name) {
    const Order o = close_order(L);
    const int n = o.n;
    FinCofCategory CC;
    CC.name = std::move(name);
    FinCategory& C = CC.base;
    for (const auto& e : L.elements)
        C.add_object(e);
    const int bot = o.bottom;
    const auto& nm = L.elements;

    // incl[x][y]: i_{xy} (x ≤ y); zero[x][y]: z_{xy}, equal to incl when x = ⊥.
    std::vector<std::vector<MorId>> incl(n, std::vector<MorId>(n, kNone));
    std::vector<std::vector<MorId>> zero(n, std::vector<MorId>(n, kNone));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (o.leq(x, y)) {
                std::string label = x == y ? "id[" + nm[x] + "]" : "i[" + nm[x] + "," + nm[y] + "]";
                incl[x][y] = C.add_morphism(label, x, y);
            }
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == bot)
                zero[x][y] = incl[x][y];
            else
                zero[x][y] = C.add_morphism("0[" + nm[x] + "," + nm[y] + "]", x, y);
        }
    for (int x = 0; x < n; ++x)
        C.set_identity(x, incl[x][x]);
    C.set_zero(bot);
    CC.cofibration.assign(C.num_morphisms(), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (incl[x][y] != kNone)
                CC.cofibration[incl[x][y]] = 1;

    for (MorId f = 0; f < C.num_morphisms(); ++f)
        for (MorId g : C.out(C.dst(f))) {
            const int x = C.src(f), z = C.dst(g);
            const bool both_incl = CC.is_cofibration(f) && CC.is_cofibration(g);
            C.set_composite(g, f, both_incl ? incl[x][z] : zero[x][z]);
        }

    // Witnesses: joins along inclusions, the target itself along zero legs.
    // Spans ⊥ ↣ y, ⊥ → w with y, w ≠ ⊥ would need y ⊔ w and are left out.
    auto join = [&](int a, int b) {
        for (int k = 0; k < n; ++k) {
            if (!o.leq(a, k) || !o.leq(b, k))
                continue;
            bool least = true;
            for (int m = 0; m < n; ++m)
                if (o.leq(a, m) && o.leq(b, m) && !o.leq(k, m))
                    least = false;
            if (least)
                return k;
        }
        return -1;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const MorId c = incl[x][y];
            if (c == kNone)
                continue;
            for (MorId f : C.out(x)) {
                const int w = C.dst(f);
                if (CC.is_cofibration(f)) {
                    if (x == bot && y != bot && w != bot)
                        continue;
                    const int p = join(y, w);
                    CC.add_witness(c, f, {p, incl[y][p], incl[w][p]});
                } else {
                    CC.add_witness(c, f, {w, zero[y][w], incl[w][w]});
                }
            }
        }
    return CC;
}

Poset chain_poset(int length) {
    Poset P;
    P.elements.push_back("bot");
    for (int i = 0; i < length; ++i) {
        P.elements.push_back(std::string(1, static_cast<char>('a' + i)));
        P.relations.emplace_back(P.elements[i], P.elements[i + 1]);
    }
    return P;
}

Poset diamond_poset() {
    return Poset{{"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}}};
}

Functor identity_functor(const CategoryPtr& C) {
    Functor F{C, C, {}, {}};
    for (ObjId a = 0; a < C->base.num_objects(); ++a)
        F.on_objects.push_back(a);
    for (MorId f = 0; f < C->base.num_morphisms(); ++f)
        F.on_morphisms.push_back(f);
    return F;
}

Functor zero_functor(const CategoryPtr& C, const CategoryPtr& D) {
    Functor F{C, D, {}, {}};
    const ObjId z = D->base.zero();
    F.on_objects.assign(C->base.num_objects(), z);
    F.on_morphisms.assign(C->base.num_morphisms(), D->base.identity(z));
    return F;
}

Functor meet_with(const CategoryPtr& L, ObjId m) {
    Functor F{L, L, {}, {}};
    const FinCategory& C = L->base;
    for (ObjId a = 0; a < C.num_objects(); ++a)
        F.on_objects.push_back(order_meet(*L, a, m));
    for (MorId f = 0; f < C.num_morphisms(); ++f) {
        ObjId s = F.obj(C.src(f)), t = F.obj(C.dst(f));
        F.on_morphisms.push_back(L->is_cofibration(f) ? inclusion(*L, s, t) : C.zero_morphism(s, t));
    }
    return F;
}

BiFunctor meet_bifunctor(const CategoryPtr& L) {
    return lattice_bifunctor(L, [&](ObjId a, ObjId b) { return order_meet(*L, a, b); });
}

BiFunctor join_bifunctor(const CategoryPtr& L) {
    return lattice_bifunctor(L, [&](ObjId a, ObjId b) { return order_join(*L, a, b); });
}

BiFunctor zero_bifunctor(const CategoryPtr& C, const CategoryPtr& D, const CategoryPtr& E) {
    BiFunctor F{C, D, E, {}, {}};
    const ObjId z = E->base.zero();
    F.on_objects.assign(static_cast<std::size_t>(C->base.num_objects()) * D->base.num_objects(), z);
    F.on_morphisms.assign(static_cast<std::size_t>(C->base.num_morphisms()) * D->base.num_morphisms(),
                          E->base.identity(z));
    return F;
}

}  // namespace waldkit

#include "waldkit/nerve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace waldkit {

std::size_t TupleHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v)
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

ValidationReport validate_cyclic(const CyclicSet& C) {
    const SimplicialSet& X = C.X;
    ValidationReport rep = validate(X);
    if (static_cast<int>(C.t.size()) != X.cap + 1) {
        rep.add("cyclic.shape", "need one cyclic operator per level");
        return rep;
    }
    auto at = [](int n) { return " at level " + std::to_string(n); };
    for (int n = 0; n <= X.cap; ++n) {
        const LevelFn& t = C.t[n];
        if (static_cast<int>(t.size()) != X.sizes[n]) {
            rep.add("cyclic.shape", "operator size" + at(n));
            continue;
        }
        LevelFn p = t;
        for (int k = 1; k <= n; ++k)
            p = compose_fn(t, p);
        if (p != identity_fn(X.sizes[n]))
            rep.add("cyclic.order", "t^{n+1} != 1" + at(n));
        if (n > 0) {
            if (compose_fn(X.faces[n][0], t) != X.faces[n][n])
                rep.add("cyclic.face", "d_0 t = d_n" + at(n));
            for (int i = 1; i <= n; ++i)
                if (compose_fn(X.faces[n][i], t) != compose_fn(C.t[n - 1], X.faces[n][i - 1]))
                    rep.add("cyclic.face", "d_i t = t d_{i-1}, i=" + std::to_string(i) + at(n));
        }
        if (n < X.cap) {
            const LevelFn& t1 = C.t[n + 1];
            if (compose_fn(X.degeneracies[n][0], t) != compose_fn(t1, compose_fn(t1, X.degeneracies[n][n])))
                rep.add("cyclic.degeneracy", "s_0 t = t^2 s_n" + at(n));
            for (int i = 1; i <= n; ++i)
                if (compose_fn(X.degeneracies[n][i], t) != compose_fn(t1, X.degeneracies[n][i - 1]))
                    rep.add("cyclic.degeneracy", "s_i t = t s_{i-1}, i=" + std::to_string(i) + at(n));
        }
    }
    return rep;
}

int CyclicNerve::find(int n, const CNTuple& f) const {
    auto it = index[n].find(f);
    if (it == index[n].end())
        throw ConstructionError("tuple not in cyclic nerve level " + std::to_string(n));
    return it->second;
}

std::vector<ObjId> cn_objects(const FinCategory& A, const CNTuple& f) {
    std::vector<ObjId> out;
    for (MorId g : f)
        out.push_back(A.dst(g));
    return out;
}

CyclicNerve cyclic_nerve(const FinCategory& A, int cap) {
    CyclicNerve N;
    N.elements.resize(cap + 1);
    N.index.resize(cap + 1);
    std::vector<std::vector<MorId>> incoming(A.num_objects());
    for (MorId f = 0; f < A.num_morphisms(); ++f)
        incoming[A.dst(f)].push_back(f);

    for (int n = 0; n <= cap; ++n) {
        auto& level = N.elements[n];
        CNTuple cur;
        auto rec = [&](auto&& self, int k) -> void {
            if (k == n) {
                const ObjId a0 = n == 0 ? kNone : A.dst(cur[0]);
                const ObjId an = n == 0 ? kNone : A.src(cur[n - 1]);
                if (n == 0) {
                    for (ObjId a = 0; a < A.num_objects(); ++a)
                        for (MorId f : A.hom(a, a)) {
                            level.push_back({f});
                        }
                    return;
                }
                for (MorId f : A.hom(a0, an)) {
                    cur.push_back(f);
                    level.push_back(cur);
                    cur.pop_back();
                }
                return;
            }
            const std::vector<MorId>* cands = nullptr;
            std::vector<MorId> all;
            if (k == 0) {
                for (MorId f = 0; f < A.num_morphisms(); ++f)
                    all.push_back(f);
                cands = &all;
            } else {
                cands = &incoming[A.src(cur[k - 1])];
            }
            for (MorId f : *cands) {
                cur.push_back(f);
                self(self, k + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        if (n == 0)
            std::sort(level.begin(), level.end());
        for (int k = 0; k < static_cast<int>(level.size()); ++k)
            N.index[n].emplace(level[k], k);
    }

    SimplicialSet& X = N.cs.X;
    X.name = "CN";
    X.cap = cap;
    X.faces.resize(cap + 1);
    X.degeneracies.resize(cap);
    X.labels.resize(cap + 1);
    const MorId z = A.identity(A.zero());
    for (int n = 0; n <= cap; ++n) {
        const auto& level = N.elements[n];
        X.sizes.push_back(static_cast<int>(level.size()));
        X.basepoint.push_back(N.find(n, CNTuple(n + 1, z)));
        for (const auto& f : level) {
            std::string lab = "(";
            for (std::size_t k = 0; k < f.size(); ++k)
                lab += (k ? "," : "") + A.morphism_name(f[k]);
            X.labels[n].push_back(lab + ")");
        }
        for (int i = 0; n > 0 && i <= n; ++i) {
            LevelFn d;
            for (const auto& f : level) {
                CNTuple g;
                if (i < n) {
                    g.assign(f.begin(), f.begin() + i);
                    g.push_back(A.compose(f[i], f[i + 1]));
                    g.insert(g.end(), f.begin() + i + 2, f.end());
                } else {
                    g.push_back(A.compose(f[n], f[0]));
                    g.insert(g.end(), f.begin() + 1, f.begin() + n);
                }
                d.push_back(N.find(n - 1, g));
            }
            X.faces[n].push_back(std::move(d));
        }
        for (int i = 0; n < cap && i <= n; ++i) {
            LevelFn s;
            for (const auto& f : level) {
                CNTuple g(f.begin(), f.begin() + i + 1);
                g.push_back(A.identity(i < n ? A.src(f[i]) : A.dst(f[0])));
                g.insert(g.end(), f.begin() + i + 1, f.end());
                s.push_back(N.find(n + 1, g));
            }
            X.degeneracies[n].push_back(std::move(s));
        }
        LevelFn t;
        for (const auto& f : level) {
            CNTuple g{f[n]};
            g.insert(g.end(), f.begin(), f.begin() + n);
            t.push_back(N.find(n, g));
        }
        N.cs.t.push_back(std::move(t));
    }
    auto rep = validate_cyclic(N.cs);
    if (!rep.ok())
        throw ConstructionError("cyclic nerve relations fail:\n" + rep.to_string());
    return N;
}

CNTuple apply_to_tuple(const CatMap& F, const CNTuple& f) {
    CNTuple out;
    out.reserve(f.size());
    for (MorId g : f)
        out.push_back(F.on_morphisms[g]);
    return out;
}

namespace {

using Grid3 = std::vector<std::vector<std::vector<LevelFn>>>;

LevelFn push_tuples(const CyclicNerve& from, const CyclicNerve& to, int n, const CatMap& F) {
    LevelFn out;
    out.reserve(from.elements[n].size());
    for (const auto& f : from.elements[n])
        out.push_back(to.find(n, apply_to_tuple(F, f)));
    return out;
}

}  // namespace

CNGrid cn_bisimplicial(const FinCofCategory& C, const SimplicialOrd& Y, int cap_h, int cap_v, int total) {
    if (cap_v > Y.cap)
        throw ConstructionError("vertical cap " + std::to_string(cap_v) + " exceeds cap of " + Y.name);
    CNGrid G;
    G.Y = truncate(Y, cap_v);
    BisimplicialSet& B = G.grid;
    B.name = "CN(S^" + Y.name + "(" + C.name + "))";
    B.cap_h = cap_h;
    B.cap_v = cap_v;
    B.total = total;
    if (total >= 0 && total < cap_v)
        throw ConstructionError("total degree bound below vertical cap");

    std::map<int, std::shared_ptr<const SCategory>> cache;
    std::map<std::pair<int, int>, int> nerve_of;
    G.columns.reserve(cap_v + 1);
    for (int m = 0; m <= cap_v; ++m) {
        const int sz = Y.levels[m];
        auto& c = cache[sz];
        if (!c)
            c = std::make_shared<const SCategory>(s_category(C, sz));
        G.cats.push_back(c);
        const std::pair<int, int> key{sz, B.hcap(m)};
        if (auto it = nerve_of.find(key); it != nerve_of.end()) {
            G.columns.push_back(G.columns[it->second]);
        } else {
            nerve_of[key] = m;
            G.columns.push_back(cyclic_nerve(c->cat, B.hcap(m)));
        }
    }

    B.sizes.assign(cap_h + 1, std::vector<int>(cap_v + 1));
    B.basepoint = B.sizes;
    B.cyclic.assign(cap_h + 1, std::vector<LevelFn>(cap_v + 1));
    auto grid3 = [&] { return Grid3(cap_h + 1, std::vector<std::vector<LevelFn>>(cap_v + 1)); };
    B.hface = grid3();
    B.hdeg = grid3();
    B.vface = grid3();
    B.vdeg = grid3();
    for (int m = 0; m <= cap_v; ++m) {
        const SimplicialSet& X = G.columns[m].cs.X;
        for (int n = 0; n <= B.hcap(m); ++n) {
            B.sizes[n][m] = X.sizes[n];
            B.basepoint[n][m] = X.basepoint[n];
            B.hface[n][m] = X.faces[n];
            if (n < B.hcap(m))
                B.hdeg[n][m] = X.degeneracies[n];
            B.cyclic[n][m] = G.columns[m].cs.t[n];
        }
    }
    for (int m = 0; m <= cap_v; ++m) {
        for (int i = 0; m > 0 && i <= m; ++i) {
            const CatMap F = s_functor(C, *G.cats[m], *G.cats[m - 1], G.Y.d(m, i));
            for (int n = 0; n <= B.hcap(m); ++n)
                B.vface[n][m].push_back(push_tuples(G.columns[m], G.columns[m - 1], n, F));
        }
        for (int i = 0; m < cap_v && i <= m; ++i) {
            const CatMap F = s_functor(C, *G.cats[m], *G.cats[m + 1], G.Y.s(m, i));
            for (int n = 0; n <= B.hcap(m + 1); ++n)
                B.vdeg[n][m].push_back(push_tuples(G.columns[m], G.columns[m + 1], n, F));
        }
    }
    auto rep = validate(B);
    rep.merge(validate_cyclic_rows(B), "");
    if (!rep.ok())
        throw ConstructionError(B.name + " fails bisimplicial checks:\n" + rep.to_string());
    return G;
}

ValidationReport validate_cyclic_rows(const BisimplicialSet& B) {
    ValidationReport rep;
    if (!B.is_cyclic()) {
        rep.add("cyclic.shape", "grid carries no cyclic operators");
        return rep;
    }
    for (int m = 0; m <= B.cap_v; ++m) {
        const int H = B.hcap(m);
        if (H < 0)
            continue;
        CyclicSet C;
        C.X.cap = H;
        C.X.faces.resize(H + 1);
        C.X.degeneracies.resize(H);
        for (int n = 0; n <= H; ++n) {
            C.X.sizes.push_back(B.sizes[n][m]);
            C.X.basepoint.push_back(B.basepoint[n][m]);
            C.X.faces[n] = B.hface[n][m];
            if (n < H)
                C.X.degeneracies[n] = B.hdeg[n][m];
            C.t.push_back(B.cyclic[n][m]);
        }
        rep.merge(validate_cyclic(C), "column m=" + std::to_string(m));
    }
    return rep;
}

BisimplicialMap cn_map_from_ord(const FinCofCategory& C, const CNGrid& X, const CNGrid& Z, const LevelMap& f) {
    auto rep = validate_level_map(X.Y, Z.Y, f);
    if (!rep.ok())
        throw ConstructionError("level map is not simplicial:\n" + rep.to_string());
    if (X.grid.cap_h != Z.grid.cap_h || X.grid.cap_v != Z.grid.cap_v || X.grid.total != Z.grid.total)
        throw ConstructionError("grid cap mismatch");
    BisimplicialMap out{X.grid.cap_h, X.grid.cap_v, {}};
    out.maps.assign(out.cap_h + 1, std::vector<LevelFn>(out.cap_v + 1));
    for (int m = 0; m <= out.cap_v; ++m) {
        const CatMap F = s_functor(C, *X.cats[m], *Z.cats[m], f[m]);
        for (int n = 0; n <= X.grid.hcap(m); ++n)
            out.maps[n][m] = push_tuples(X.columns[m], Z.columns[m], n, F);
    }
    return out;
}

CatMap s_bifunctor_level(const BiFunctor& F, const SCategory& SC, const SCategory& SD, const SCategory& SE) {
    CatMap out;
    const int nd = SD.level.size();
    const int md = SD.cat.num_morphisms();
    for (int x = 0; x < SC.level.size(); ++x)
        for (int y = 0; y < nd; ++y) {
            const auto& a = SC.level[x].chain;
            const auto& b = SD.level[y].chain;
            std::vector<MorId> c;
            for (std::size_t i = 0; i < a.size(); ++i)
                c.push_back(F.mor(a[i], b[i]));
            out.on_objects.push_back(SE.level.index_of(c));
        }
    out.on_morphisms.resize(static_cast<std::size_t>(SC.cat.num_morphisms()) * md);
    for (MorId f = 0; f < SC.cat.num_morphisms(); ++f)
        for (MorId g = 0; g < md; ++g) {
            std::vector<MorId> comps;
            for (std::size_t j = 0; j < SC.ladders[f].size(); ++j)
                comps.push_back(F.mor(SC.ladders[f][j], SD.ladders[g][j]));
            const int src = out.on_objects[SC.cat.src(f) * nd + SD.cat.src(g)];
            const int dst = out.on_objects[SC.cat.dst(f) * nd + SD.cat.dst(g)];
            out.on_morphisms[static_cast<std::size_t>(f) * md + g] = SE.find_ladder(src, dst, comps);
        }
    return out;
}

BisimplicialMap cn_of_bifunctor(const BiFunctor& F, const CNGrid& X, const CNGrid& Z, const CNGrid& W) {
    auto ex = is_biexact(F);
    if (!ex.ok())
        throw ConstructionError("functor is not bi-exact:\n" + ex.to_string());
    if (X.Y.levels != Z.Y.levels || X.Y.levels != W.Y.levels)
        throw ConstructionError("grids are built over different Y");
    const int H = X.grid.cap_h, V = X.grid.cap_v;
    if (Z.grid.cap_h != H || W.grid.cap_h != H || Z.grid.cap_v != V || W.grid.cap_v != V ||
        Z.grid.total != X.grid.total || W.grid.total != X.grid.total)
        throw ConstructionError("grid cap mismatch");
    BisimplicialMap out{H, V, {}};
    out.maps.assign(H + 1, std::vector<LevelFn>(V + 1));
    for (int m = 0; m <= V; ++m) {
        const CatMap L = s_bifunctor_level(F, *X.cats[m], *Z.cats[m], *W.cats[m]);
        const int md = Z.cats[m]->cat.num_morphisms();
        for (int n = 0; n <= X.grid.hcap(m); ++n) {
            const auto& xs = X.columns[m].elements[n];
            const auto& zs = Z.columns[m].elements[n];
            LevelFn& fn = out.maps[n][m];
            fn.resize(xs.size() * zs.size());
            CNTuple img(n + 1);
            for (std::size_t a = 0; a < xs.size(); ++a)
                for (std::size_t b = 0; b < zs.size(); ++b) {
                    for (int k = 0; k <= n; ++k)
                        img[k] = L.on_morphisms[static_cast<std::size_t>(xs[a][k]) * md + zs[b][k]];
                    fn[product_index(static_cast<int>(a), static_cast<int>(b), static_cast<int>(zs.size()))] =
                        W.columns[m].find(n, img);
                }
        }
    }
    auto rep = validate_map(product(X.grid, Z.grid), W.grid, out);
    if (!rep.ok())
        throw ConstructionError("F-image map is not bisimplicial over " + X.Y.name + ":\n" + rep.to_string());
    return out;
}

std::string dump(const CNGrid& G, int samples) {
    std::ostringstream os;
    os << G.grid.name << " caps (" << G.grid.cap_h << "," << G.grid.cap_v << ")\n";
    for (int n = 0; n <= G.grid.cap_h; ++n) {
        os << "n=" << n << ":";
        for (int m = 0; m <= G.grid.vcap(n); ++m)
            os << ' ' << G.grid.sizes[n][m];
        os << '\n';
    }
    for (int m = 0; m <= G.grid.cap_v; ++m)
        for (int n = 0; n <= G.grid.hcap(m); ++n) {
            const auto& X = G.columns[m].cs.X;
            for (int k = 0; k < std::min(samples, X.sizes[n]); ++k)
                os << "  (" << n << "," << m << ")#" << k << " " << X.label(n, k) << '\n';
        }
    return os.str();
}

}  // namespace waldkit

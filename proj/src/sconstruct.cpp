#include "waldkit/sconstruct.hpp"

#include <sstream>

namespace waldkit {

std::string SObject::to_string(const FinCategory& C) const {
    std::ostringstream os;
    os << "(";
    for (int j = 0; j <= degree; ++j)
        os << (j ? "<" : "") << C.object_name(objects[j]);
    os << ")";
    return os.str();
}

SObject canonical_quotients(const FinCofCategory& CC, const std::vector<MorId>& chain, bool verify) {
    const FinCategory& C = CC.base;
    SObject x;
    const int n = static_cast<int>(chain.size());
    x.degree = n;
    x.chain = chain;
    x.objects.push_back(C.zero());
    for (int j = 0; j < n; ++j) {
        const MorId a = chain[j];
        if (C.src(a) != x.objects.back())
            throw ConstructionError("chain is not composable at position " + std::to_string(j));
        if (!CC.is_cofibration(a))
            throw ConstructionError("chain entry " + C.morphism_name(a) + " is not a cofibration");
        x.objects.push_back(C.dst(a));
    }
    const std::size_t w = n + 1;
    x.grid.assign(w * w, kNone);
    x.quot.assign(w * w, kNone);
    x.structural.assign(w * w * w, kNone);

    // c[j][k]: A_j → A_k, the composite of the chain (identity when j = k)
    std::vector<std::vector<MorId>> c(w, std::vector<MorId>(w, kNone));
    for (int j = 0; j <= n; ++j) {
        c[j][j] = C.identity(x.objects[j]);
        for (int k = j + 1; k <= n; ++k)
            c[j][k] = C.compose(chain[k - 1], c[j][k - 1]);
    }
    for (int j = 0; j <= n; ++j) {
        x.grid[x.idx(0, j)] = x.objects[j];
        x.quot[x.idx(0, j)] = C.identity(x.objects[j]);
    }
    for (int i = 1; i <= n; ++i) {
        x.grid[x.idx(i, i)] = C.zero();
        x.quot[x.idx(i, i)] = C.zero_morphism(x.objects[i], C.zero());
        for (int j = i + 1; j <= n; ++j) {
            Quotient qt = quotient(CC, c[i][j]);
            x.grid[x.idx(i, j)] = qt.obj;
            x.quot[x.idx(i, j)] = qt.map;
        }
    }
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) {
                const MorId target = C.compose(x.q(i, k), c[j][k]);
                MorId found = kNone;
                int count = 0;
                for (MorId m : C.hom(x.at(i, j), x.at(i, k)))
                    if (C.compose(m, x.q(i, j)) == target) {
                        found = m;
                        ++count;
                    }
                if (count != 1)
                    throw ConstructionError(std::string(count ? "non-unique" : "no") +
                                            " structural map A_{" + std::to_string(i) + std::to_string(j) +
                                            "} -> A_{" + std::to_string(i) + std::to_string(k) + "} for " +
                                            x.to_string(C));
                x.structural[x.idx(i, j) * w + k] = found;
            }
    if (verify) {
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int k = j; k <= n; ++k) {
                    const MorId m = x.cof(i, j, k);
                    if (!CC.is_cofibration(m))
                        throw ConstructionError("structural map is not a cofibration in " + x.to_string(C));
                    // p: A_{ik} → A_{jk} with p∘q_{ik} = q_{jk}
                    MorId p = kNone;
                    int count = 0;
                    for (MorId cand : C.hom(x.at(i, k), x.at(j, k)))
                        if (C.compose(cand, x.q(i, k)) == x.q(j, k)) {
                            p = cand;
                            ++count;
                        }
                    if (count != 1)
                        throw ConstructionError("no unique quotient map A_{ik} -> A_{jk} in " + x.to_string(C));
                    const MorId to0 = C.zero_morphism(x.at(i, j), C.zero());
                    const PushoutWitness sq{x.at(j, k), p, C.zero_morphism(C.zero(), x.at(j, k))};
                    std::string why;
                    if (!is_pushout(C, m, to0, sq, &why))
                        throw ConstructionError("A_{" + std::to_string(i) + std::to_string(j) + "} -> A_{" +
                                                std::to_string(i) + std::to_string(k) + "} -> A_{" +
                                                std::to_string(j) + std::to_string(k) +
                                                "} is not a cofibration sequence in " + x.to_string(C) + ": " + why);
                }
    }
    return x;
}

std::vector<SObject> enumerate_s_objects(const FinCofCategory& CC, int n) {
    const FinCategory& C = CC.base;
    std::vector<std::vector<MorId>> chains;
    std::vector<MorId> cur;
    auto rec = [&](auto&& self, ObjId at) -> void {
        if (static_cast<int>(cur.size()) == n) {
            chains.push_back(cur);
            return;
        }
        for (MorId a : C.out(at)) {
            if (!CC.is_cofibration(a))
                continue;
            cur.push_back(a);
            self(self, C.dst(a));
            cur.pop_back();
        }
    };
    rec(rec, C.zero());
    const std::vector<MorId> zero_chain(n, C.identity(C.zero()));
    std::vector<SObject> out;
    out.push_back(canonical_quotients(CC, zero_chain));
    for (const auto& ch : chains)
        if (ch != zero_chain)
            out.push_back(canonical_quotients(CC, ch));
    return out;
}

std::vector<int> chain_index(const OrdMap& phi) {
    const int n = phi.source(), m = phi.target();
    const auto lifted = phi.lift();
    std::vector<int> nu(m + 1, 0);
    for (int j = 0; j <= m; ++j)
        for (int e = 1; e <= n; ++e)
            if (lifted[e] > m - j)
                ++nu[j];
    return nu;
}

std::vector<MorId> induced_chain(const SObject& x, const OrdMap& phi) {
    if (phi.source() != x.degree)
        throw StructuralError("OrdMap " + phi.to_string() + " does not start at [" + std::to_string(x.degree) + "]");
    if (!phi.admissible())
        throw StructuralError("OrdMap " + phi.to_string() + " is not admissible");
    const auto nu = chain_index(phi);
    std::vector<MorId> out;
    for (int j = 0; j < phi.target(); ++j)
        out.push_back(x.cof(nu[0], nu[j], nu[j + 1]));
    return out;
}

SObject apply_ord_map(const FinCofCategory& C, const SObject& x, const OrdMap& phi) {
    return canonical_quotients(C, induced_chain(x, phi));
}

SLevel::SLevel(const FinCofCategory& C, int n) : degree_(n), objects_(enumerate_s_objects(C, n)) {
    for (int k = 0; k < size(); ++k)
        index_.emplace(objects_[k].chain, k);
}

int SLevel::index_of(const std::vector<MorId>& chain) const {
    auto it = index_.find(chain);
    if (it == index_.end())
        throw ConstructionError("chain not found in S-level " + std::to_string(degree_));
    return it->second;
}

SLevel s_level(const FinCofCategory& C, OrdSet Z) {
    return SLevel(C, Z.size);
}

MorId SCategory::find_ladder(int x, int y, const std::vector<MorId>& comps) const {
    auto it = ladder_index.find({{x, y}, comps});
    if (it == ladder_index.end())
        throw ConstructionError("ladder not found in S-category");
    return it->second;
}

SCategory s_category(const FinCofCategory& CC, int m) {
    const FinCategory& C = CC.base;
    SCategory S;
    S.level = SLevel(CC, m);
    const int no = S.level.size();
    for (int k = 0; k < no; ++k)
        S.cat.add_object("x" + std::to_string(k));
    std::vector<MorId> comps;
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            const SObject& x = S.level[a];
            const SObject& y = S.level[b];
            comps.assign(1, C.identity(C.zero()));
            auto rec = [&](auto&& self, int j) -> void {
                if (j > m) {
                    const MorId id = S.cat.add_morphism(
                        "L" + std::to_string(S.ladders.size()) + ":" + std::to_string(a) + "->" + std::to_string(b), a, b);
                    S.ladders.push_back(comps);
                    S.ladder_index.emplace(std::make_pair(std::make_pair(a, b), comps), id);
                    return;
                }
                for (MorId f : C.hom(x.objects[j], y.objects[j])) {
                    if (C.compose(y.chain[j - 1], comps[j - 1]) != C.compose(f, x.chain[j - 1]))
                        continue;
                    comps.push_back(f);
                    self(self, j + 1);
                    comps.pop_back();
                }
            };
            rec(rec, 1);
        }
    for (int a = 0; a < no; ++a) {
        std::vector<MorId> ids;
        for (ObjId o : S.level[a].objects)
            ids.push_back(C.identity(o));
        S.cat.set_identity(a, S.find_ladder(a, a, ids));
    }
    S.cat.set_zero(0);
    for (MorId f = 0; f < S.cat.num_morphisms(); ++f)
        for (MorId g : S.cat.out(S.cat.dst(f))) {
            std::vector<MorId> gf(m + 1);
            for (int j = 0; j <= m; ++j)
                gf[j] = C.compose(S.ladders[g][j], S.ladders[f][j]);
            S.cat.set_composite(g, f, S.find_ladder(S.cat.src(f), S.cat.dst(g), gf));
        }
    return S;
}

CatMap s_functor(const FinCofCategory& CC, const SCategory& from, const SCategory& to, const OrdMap& phi) {
    const FinCategory& C = CC.base;
    if (phi.source() != from.level.degree() || phi.target() != to.level.degree())
        throw StructuralError("OrdMap " + phi.to_string() + " does not match the S-categories");
    const auto nu = chain_index(phi);
    const int m = phi.target();
    CatMap F;
    for (const SObject& x : from.level.objects())
        F.on_objects.push_back(to.level.index_of(induced_chain(x, phi)));
    for (MorId f = 0; f < from.cat.num_morphisms(); ++f) {
        const SObject& x = from.level[from.cat.src(f)];
        const SObject& y = from.level[from.cat.dst(f)];
        const auto& comp = from.ladders[f];
        std::vector<MorId> out(m + 1);
        for (int j = 0; j <= m; ++j) {
            const int i = nu[0], k = nu[j];
            if (i == 0) {
                out[j] = comp[k];
                continue;
            }
            const MorId target = C.compose(y.q(i, k), comp[k]);
            int count = 0;
            for (MorId cand : C.hom(x.at(i, k), y.at(i, k)))
                if (C.compose(cand, x.q(i, k)) == target) {
                    out[j] = cand;
                    ++count;
                }
            if (count != 1)
                throw ConstructionError("transport of ladder " + from.cat.morphism_name(f) + " along " +
                                        phi.to_string() + " is not unique (" + std::to_string(count) +
                                        " candidates)");
        }
        F.on_morphisms.push_back(to.find_ladder(F.on_objects[from.cat.src(f)], F.on_objects[from.cat.dst(f)], out));
    }
    return F;
}

SConstruction s_simplicial_set(const FinCofCategory& C, const SimplicialOrd& Y, int cap) {
    if (cap > Y.cap)
        throw ConstructionError("requested cap " + std::to_string(cap) + " exceeds the cap of " + Y.name);
    SConstruction S;
    S.Y = truncate(Y, cap);
    SimplicialSet& X = S.sset;
    X.name = "S^" + Y.name + "(" + C.name + ")";
    X.cap = cap;
    for (int n = 0; n <= cap; ++n) {
        S.levels.emplace_back(C, Y.levels[n]);
        X.sizes.push_back(S.levels[n].size());
        X.basepoint.push_back(0);
        X.labels.emplace_back();
        for (const SObject& x : S.levels[n].objects())
            X.labels[n].push_back(x.to_string(C.base));
    }
    auto level_fn = [&](int from, int to, const OrdMap& phi) {
        LevelFn out;
        for (const SObject& x : S.levels[from].objects())
            out.push_back(S.levels[to].index_of(induced_chain(x, phi)));
        return out;
    };
    X.faces.resize(cap + 1);
    X.degeneracies.resize(cap);
    for (int n = 0; n <= cap; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i)
            X.faces[n].push_back(level_fn(n, n - 1, Y.d(n, i)));
        for (int i = 0; n < cap && i <= n; ++i)
            X.degeneracies[n].push_back(level_fn(n, n + 1, Y.s(n, i)));
    }
    return S;
}

}  // namespace waldkit

namespace waldkit {

namespace {

LevelFn transport_level(const SLevel& from, const SLevel& to, const OrdMap& phi) {
    LevelFn out;
    for (const SObject& x : from.objects())
        out.push_back(to.index_of(induced_chain(x, phi)));
    return out;
}

}  // namespace

SimplicialMap map_from_ord(const FinCofCategory&, const SConstruction& X, const SConstruction& Z,
                           const LevelMap& f) {
    ValidationReport rep = validate_level_map(X.Y, Z.Y, f);
    if (!rep.ok())
        throw ConstructionError("level map is not simplicial:\n" + rep.to_string());
    SimplicialMap out{std::min(X.sset.cap, Z.sset.cap), {}};
    for (int n = 0; n <= out.cap; ++n)
        out.maps.push_back(transport_level(X.levels[n], Z.levels[n], f[n]));
    return out;
}

SimplicialHomotopy homotopy_from_ord(const FinCofCategory&, const SConstruction& X, const SConstruction& Z,
                                     const LevelMap& f, const LevelMap& g, const OrdHomotopy& H) {
    ValidationReport rep = validate_homotopy(X.Y, Z.Y, f, g, H);
    if (!rep.ok())
        throw ConstructionError("homotopy data is invalid:\n" + rep.to_string());
    SimplicialHomotopy out;
    const int N = std::min(X.sset.cap, Z.sset.cap);
    for (int n = 0; n < N; ++n) {
        out.h.emplace_back();
        for (int i = 0; i <= n; ++i)
            out.h[n].push_back(transport_level(X.levels[n], Z.levels[n + 1], H.at(n, i)));
    }
    return out;
}

}  // namespace waldkit

#include "waldkit/simpset.hpp"

#include <algorithm>
#include <sstream>

#include "waldkit/detail/identities.hpp"

namespace waldkit {

std::string SimplicialSet::label(int n, int x) const {
    if (n < static_cast<int>(labels.size()) && x < static_cast<int>(labels[n].size()))
        return labels[n][x];
    return "#" + std::to_string(x);
}

LevelFn compose_fn(const LevelFn& g, const LevelFn& f) {
    LevelFn out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        out[x] = g[f[x]];
    return out;
}

LevelFn identity_fn(int size) {
    LevelFn out(size);
    for (int x = 0; x < size; ++x)
        out[x] = x;
    return out;
}

namespace {

bool fn_ok(const LevelFn& f, int from, int to) {
    if (static_cast<int>(f.size()) != from)
        return false;
    for (int v : f)
        if (v < 0 || v >= to)
            return false;
    return true;
}

}  // namespace

ValidationReport validate(const SimplicialSet& X) {
    ValidationReport rep;
    const int N = X.cap;
    if (static_cast<int>(X.sizes.size()) != N + 1 || static_cast<int>(X.faces.size()) != N + 1 ||
        static_cast<int>(X.degeneracies.size()) != N || static_cast<int>(X.basepoint.size()) != N + 1) {
        rep.add("shape", "tables do not match the cap");
        return rep;
    }
    for (int n = 0; n <= N; ++n) {
        if (static_cast<int>(X.faces[n].size()) != (n ? n + 1 : 0) ||
            (n < N && static_cast<int>(X.degeneracies[n].size()) != n + 1)) {
            rep.add("shape", "wrong number of structure maps at level " + std::to_string(n));
            return rep;
        }
        for (int i = 0; n > 0 && i <= n; ++i)
            if (!fn_ok(X.faces[n][i], X.sizes[n], X.sizes[n - 1])) {
                rep.add("shape", "d_" + std::to_string(i) + " at level " + std::to_string(n) + " is malformed");
                return rep;
            }
        for (int i = 0; n < N && i <= n; ++i)
            if (!fn_ok(X.degeneracies[n][i], X.sizes[n], X.sizes[n + 1])) {
                rep.add("shape", "s_" + std::to_string(i) + " at level " + std::to_string(n) + " is malformed");
                return rep;
            }
    }
    detail::check_simplicial_identities(
        N, [&](int n, int i) -> const LevelFn& { return X.faces[n][i]; },
        [&](int n, int i) -> const LevelFn& { return X.degeneracies[n][i]; },
        [&](int n) { return identity_fn(X.sizes[n]); }, compose_fn, rep);
    for (int n = 0; n <= N; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i)
            if (X.d(n, i, X.basepoint[n]) != X.basepoint[n - 1])
                rep.add("basepoint", "d_" + std::to_string(i) + " moves the basepoint at level " +
                                         std::to_string(n));
        for (int i = 0; n < N && i <= n; ++i)
            if (X.s(n, i, X.basepoint[n]) != X.basepoint[n + 1])
                rep.add("basepoint", "s_" + std::to_string(i) + " moves the basepoint at level " +
                                         std::to_string(n));
    }
    return rep;
}

ValidationReport validate_map(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialMap& f) {
    ValidationReport rep;
    const int N = std::min(X.cap, Z.cap);
    if (static_cast<int>(f.maps.size()) < N + 1) {
        rep.add("shape", "map is shorter than the cap");
        return rep;
    }
    for (int n = 0; n <= N; ++n)
        if (!fn_ok(f.maps[n], X.sizes[n], Z.sizes[n])) {
            rep.add("shape", "level " + std::to_string(n) + " of the map is malformed");
            return rep;
        }
    for (int n = 0; n <= N; ++n) {
        if (f(n, X.basepoint[n]) != Z.basepoint[n])
            rep.add("basepoint", "basepoint not preserved at level " + std::to_string(n));
        for (int i = 0; n > 0 && i <= n; ++i)
            if (compose_fn(Z.faces[n][i], f.maps[n]) != compose_fn(f.maps[n - 1], X.faces[n][i]))
                rep.add("commute", "map does not commute with d_" + std::to_string(i) + " at level " +
                                       std::to_string(n));
        for (int i = 0; n < N && i <= n; ++i)
            if (compose_fn(Z.degeneracies[n][i], f.maps[n]) != compose_fn(f.maps[n + 1], X.degeneracies[n][i]))
                rep.add("commute", "map does not commute with s_" + std::to_string(i) + " at level " +
                                       std::to_string(n));
    }
    return rep;
}

ValidationReport validate_homotopy(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialMap& f,
                                   const SimplicialMap& g, const SimplicialHomotopy& H) {
    ValidationReport rep;
    rep.merge(validate_map(X, Z, f), "f");
    rep.merge(validate_map(X, Z, g), "g");
    if (!rep.ok())
        return rep;
    const int N = std::min(X.cap, Z.cap);
    if (static_cast<int>(H.h.size()) < N) {
        rep.add("shape", "homotopy is shorter than the cap");
        return rep;
    }
    for (int n = 0; n < N; ++n) {
        if (static_cast<int>(H.h[n].size()) != n + 1) {
            rep.add("shape", "wrong number of homotopy maps at level " + std::to_string(n));
            return rep;
        }
        for (const auto& h : H.h[n])
            if (!fn_ok(h, X.sizes[n], Z.sizes[n + 1])) {
                rep.add("shape", "homotopy map at level " + std::to_string(n) + " is malformed");
                return rep;
            }
    }
    detail::check_homotopy_identities(
        N, [&](int n, int i) -> const LevelFn& { return H.h[n][i]; },
        [&](int n) -> const LevelFn& { return f.maps[n]; }, [&](int n) -> const LevelFn& { return g.maps[n]; },
        [&](int n, int i) -> const LevelFn& { return X.faces[n][i]; },
        [&](int n, int i) -> const LevelFn& { return X.degeneracies[n][i]; },
        [&](int n, int i) -> const LevelFn& { return Z.faces[n][i]; },
        [&](int n, int i) -> const LevelFn& { return Z.degeneracies[n][i]; }, compose_fn, rep);
    return rep;
}

ValidationReport validate(const BisimplicialSet& B) {
    ValidationReport rep;
    const int H = B.cap_h, V = B.cap_v;
    // rows (fixed m) and columns (fixed n)
    for (int m = 0; m <= V; ++m) {
        if (B.hcap(m) < 0)
            continue;
        ValidationReport row;
        detail::check_simplicial_identities(
            B.hcap(m), [&](int n, int i) -> const LevelFn& { return B.hface[n][m][i]; },
            [&](int n, int i) -> const LevelFn& { return B.hdeg[n][m][i]; },
            [&](int n) { return identity_fn(B.sizes[n][m]); }, compose_fn, row);
        rep.merge(row, "horizontal, m=" + std::to_string(m));
    }
    for (int n = 0; n <= H; ++n) {
        if (B.vcap(n) < 0)
            continue;
        ValidationReport col;
        detail::check_simplicial_identities(
            B.vcap(n), [&](int m, int i) -> const LevelFn& { return B.vface[n][m][i]; },
            [&](int m, int i) -> const LevelFn& { return B.vdeg[n][m][i]; },
            [&](int m) { return identity_fn(B.sizes[n][m]); }, compose_fn, col);
        rep.merge(col, "vertical, n=" + std::to_string(n));
    }
    auto tag = [](const char* what, int n, int m, int i, int j) {
        return std::string(what) + " at (" + std::to_string(n) + "," + std::to_string(m) + "), i=" +
               std::to_string(i) + ", j=" + std::to_string(j);
    };
    for (int n = 0; n <= H; ++n)
        for (int m = 0; m <= V; ++m) {
            if (!B.has(n, m))
                continue;
            const bool up = B.has(n, m + 1), right = B.has(n + 1, m);
            for (int i = 0; n > 0 && i <= n; ++i) {
                for (int j = 0; m > 0 && j <= m; ++j)
                    if (compose_fn(B.hface[n][m - 1][i], B.vface[n][m][j]) !=
                        compose_fn(B.vface[n - 1][m][j], B.hface[n][m][i]))
                        rep.add("commute", tag("horizontal/vertical faces", n, m, i, j));
                for (int j = 0; up && j <= m; ++j)
                    if (compose_fn(B.hface[n][m + 1][i], B.vdeg[n][m][j]) !=
                        compose_fn(B.vdeg[n - 1][m][j], B.hface[n][m][i]))
                        rep.add("commute", tag("horizontal face/vertical degeneracy", n, m, i, j));
            }
            for (int i = 0; right && i <= n; ++i) {
                for (int j = 0; m > 0 && j <= m; ++j)
                    if (compose_fn(B.hdeg[n][m - 1][i], B.vface[n][m][j]) !=
                        compose_fn(B.vface[n + 1][m][j], B.hdeg[n][m][i]))
                        rep.add("commute", tag("horizontal degeneracy/vertical face", n, m, i, j));
                for (int j = 0; up && B.has(n + 1, m + 1) && j <= m; ++j)
                    if (compose_fn(B.hdeg[n][m + 1][i], B.vdeg[n][m][j]) !=
                        compose_fn(B.vdeg[n + 1][m][j], B.hdeg[n][m][i]))
                        rep.add("commute", tag("degeneracies", n, m, i, j));
            }
            if (B.is_cyclic()) {
                const LevelFn& t = B.cyclic[n][m];
                for (int j = 0; m > 0 && j <= m; ++j)
                    if (compose_fn(B.cyclic[n][m - 1], B.vface[n][m][j]) != compose_fn(B.vface[n][m][j], t))
                        rep.add("commute", tag("cyclic operator/vertical face", n, m, 0, j));
                for (int j = 0; up && j <= m; ++j)
                    if (compose_fn(B.cyclic[n][m + 1], B.vdeg[n][m][j]) != compose_fn(B.vdeg[n][m][j], t))
                        rep.add("commute", tag("cyclic operator/vertical degeneracy", n, m, 0, j));
            }
        }
    return rep;
}

SimplicialSet point(int cap) {
    SimplicialSet X;
    X.name = "point";
    X.cap = cap;
    X.sizes.assign(cap + 1, 1);
    X.basepoint.assign(cap + 1, 0);
    X.faces.resize(cap + 1);
    X.degeneracies.resize(cap);
    for (int n = 0; n <= cap; ++n) {
        if (n > 0)
            X.faces[n].assign(n + 1, LevelFn{0});
        if (n < cap)
            X.degeneracies[n].assign(n + 1, LevelFn{0});
    }
    return X;
}

SimplicialSet truncate(const SimplicialSet& X, int cap) {
    if (cap > X.cap)
        throw ConstructionError("cannot truncate " + X.name + " above its cap");
    SimplicialSet out = X;
    out.cap = cap;
    out.sizes.resize(cap + 1);
    out.faces.resize(cap + 1);
    out.degeneracies.resize(cap);
    out.basepoint.resize(cap + 1);
    if (out.labels.size() > static_cast<std::size_t>(cap + 1))
        out.labels.resize(cap + 1);
    return out;
}

namespace {

// Level-wise pairing used by smash and product.  index(n, x, z) gives the
// target simplex for a pair; size(n) the level size.
template <class Index, class Size>
SimplicialSet pair_construction(const SimplicialSet& X, const SimplicialSet& Z, std::string name, Index index,
                                Size size) {
    if (X.cap != Z.cap)
        throw ConstructionError("cap mismatch: " + std::to_string(X.cap) + " vs " + std::to_string(Z.cap));
    SimplicialSet P;
    P.name = std::move(name);
    P.cap = X.cap;
    P.faces.resize(P.cap + 1);
    P.degeneracies.resize(P.cap);
    for (int n = 0; n <= P.cap; ++n) {
        P.sizes.push_back(size(n));
        P.basepoint.push_back(index(n, X.basepoint[n], Z.basepoint[n]));
    }
    auto fill = [&](int n, int to, const LevelFn& fx, const LevelFn& fz) {
        LevelFn out(P.sizes[n], -1);
        for (int x = 0; x < X.sizes[n]; ++x)
            for (int z = 0; z < Z.sizes[n]; ++z)
                out[index(n, x, z)] = index(to, fx[x], fz[z]);
        return out;
    };
    for (int n = 0; n <= P.cap; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i)
            P.faces[n].push_back(fill(n, n - 1, X.faces[n][i], Z.faces[n][i]));
        for (int i = 0; n < P.cap && i <= n; ++i)
            P.degeneracies[n].push_back(fill(n, n + 1, X.degeneracies[n][i], Z.degeneracies[n][i]));
    }
    return P;
}

}  // namespace

SimplicialSet smash(const SimplicialSet& X, const SimplicialSet& Z) {
    // Pairs off both basepoint slices are numbered from 1; everything else is 0.
    auto index = [&](int n, int x, int z) {
        const int bx = X.basepoint[n], bz = Z.basepoint[n];
        if (x == bx || z == bz)
            return 0;
        const int xr = x < bx ? x : x - 1;
        const int zr = z < bz ? z : z - 1;
        return 1 + xr * (Z.sizes[n] - 1) + zr;
    };
    auto size = [&](int n) { return (X.sizes[n] - 1) * (Z.sizes[n] - 1) + 1; };
    return pair_construction(X, Z, X.name + "^" + Z.name, index, size);
}

SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Z) {
    auto index = [&](int n, int x, int z) { return product_index(x, z, Z.sizes[n]); };
    auto size = [&](int n) { return X.sizes[n] * Z.sizes[n]; };
    return pair_construction(X, Z, X.name + "x" + Z.name, index, size);
}

SimplicialSet diagonal(const BisimplicialSet& B, int cap) {
    if (!B.has(cap, cap))
        throw ConstructionError("diagonal cap " + std::to_string(cap) + " exceeds grid caps (" +
                                std::to_string(B.cap_h) + "," + std::to_string(B.cap_v) + ")");
    SimplicialSet X;
    X.name = "diag(" + B.name + ")";
    X.cap = cap;
    X.faces.resize(cap + 1);
    X.degeneracies.resize(cap);
    for (int n = 0; n <= cap; ++n) {
        X.sizes.push_back(B.sizes[n][n]);
        X.basepoint.push_back(B.basepoint[n][n]);
        for (int i = 0; n > 0 && i <= n; ++i)
            X.faces[n].push_back(compose_fn(B.hface[n][n - 1][i], B.vface[n][n][i]));
        for (int i = 0; n < cap && i <= n; ++i)
            X.degeneracies[n].push_back(compose_fn(B.hdeg[n][n + 1][i], B.vdeg[n][n][i]));
    }
    return X;
}

BisimplicialSet product(const BisimplicialSet& X, const BisimplicialSet& Z) {
    if (X.cap_h != Z.cap_h || X.cap_v != Z.cap_v)
        throw ConstructionError("grid cap mismatch");
    BisimplicialSet P;
    P.name = X.name + "x" + Z.name;
    P.cap_h = X.cap_h;
    P.cap_v = X.cap_v;
    P.total = X.total < 0 ? Z.total : Z.total < 0 ? X.total : std::min(X.total, Z.total);
    const int H = P.cap_h, V = P.cap_v;
    auto pair = [&](const LevelFn& fx, const LevelFn& fz, int zto) {
        const int zs = static_cast<int>(fz.size());
        LevelFn out(fx.size() * zs);
        for (std::size_t x = 0; x < fx.size(); ++x)
            for (int z = 0; z < zs; ++z)
                out[product_index(static_cast<int>(x), z, zs)] = product_index(fx[x], fz[z], zto);
        return out;
    };
    auto grid3 = [&] { return std::vector<std::vector<std::vector<LevelFn>>>(H + 1, std::vector<std::vector<LevelFn>>(V + 1)); };
    P.sizes.assign(H + 1, std::vector<int>(V + 1));
    P.basepoint = P.sizes;
    P.hface = grid3();
    P.hdeg = grid3();
    P.vface = grid3();
    P.vdeg = grid3();
    const bool cyc = X.is_cyclic() && Z.is_cyclic();
    if (cyc)
        P.cyclic.assign(H + 1, std::vector<LevelFn>(V + 1));
    for (int n = 0; n <= H; ++n)
        for (int m = 0; m <= V; ++m) {
            if (!P.has(n, m))
                continue;
            P.sizes[n][m] = X.sizes[n][m] * Z.sizes[n][m];
            P.basepoint[n][m] = product_index(X.basepoint[n][m], Z.basepoint[n][m], Z.sizes[n][m]);
            for (int i = 0; n > 0 && i <= n; ++i)
                P.hface[n][m].push_back(pair(X.hface[n][m][i], Z.hface[n][m][i], Z.sizes[n - 1][m]));
            for (int i = 0; P.has(n + 1, m) && i <= n; ++i)
                P.hdeg[n][m].push_back(pair(X.hdeg[n][m][i], Z.hdeg[n][m][i], Z.sizes[n + 1][m]));
            for (int i = 0; m > 0 && i <= m; ++i)
                P.vface[n][m].push_back(pair(X.vface[n][m][i], Z.vface[n][m][i], Z.sizes[n][m - 1]));
            for (int i = 0; P.has(n, m + 1) && i <= m; ++i)
                P.vdeg[n][m].push_back(pair(X.vdeg[n][m][i], Z.vdeg[n][m][i], Z.sizes[n][m + 1]));
            if (cyc)
                P.cyclic[n][m] = pair(X.cyclic[n][m], Z.cyclic[n][m], Z.sizes[n][m]);
        }
    return P;
}

ValidationReport validate_map(const BisimplicialSet& X, const BisimplicialSet& Z, const BisimplicialMap& f) {
    ValidationReport rep;
    const int H = std::min(X.cap_h, Z.cap_h), V = std::min(X.cap_v, Z.cap_v);
    if (f.cap_h < H || f.cap_v < V) {
        rep.add("map.shape", "map caps below grid caps");
        return rep;
    }
    auto at = [](int n, int m) { return " at (" + std::to_string(n) + "," + std::to_string(m) + ")"; };
    auto has = [&](int n, int m) { return X.has(n, m) && Z.has(n, m); };
    for (int n = 0; n <= H; ++n)
        for (int m = 0; m <= V; ++m) {
            if (!has(n, m))
                continue;
            const LevelFn& F = f.maps[n][m];
            if (static_cast<int>(F.size()) != X.sizes[n][m]) {
                rep.add("map.shape", "level size" + at(n, m));
                continue;
            }
            bool range = true;
            for (int y : F)
                range = range && y >= 0 && y < Z.sizes[n][m];
            if (!range) {
                rep.add("map.shape", "image out of range" + at(n, m));
                continue;
            }
            if (F[X.basepoint[n][m]] != Z.basepoint[n][m])
                rep.add("map.basepoint", "basepoint not preserved" + at(n, m));
        }
    if (!rep.ok())
        return rep;
    for (int n = 0; n <= H; ++n)
        for (int m = 0; m <= V; ++m) {
            if (!has(n, m))
                continue;
            const LevelFn& F = f.maps[n][m];
            for (int i = 0; n > 0 && i <= n; ++i)
                if (compose_fn(Z.hface[n][m][i], F) != compose_fn(f.maps[n - 1][m], X.hface[n][m][i]))
                    rep.add("map.face", "horizontal d_" + std::to_string(i) + at(n, m));
            for (int i = 0; has(n + 1, m) && i <= n; ++i)
                if (compose_fn(Z.hdeg[n][m][i], F) != compose_fn(f.maps[n + 1][m], X.hdeg[n][m][i]))
                    rep.add("map.degeneracy", "horizontal s_" + std::to_string(i) + at(n, m));
            for (int i = 0; m > 0 && i <= m; ++i)
                if (compose_fn(Z.vface[n][m][i], F) != compose_fn(f.maps[n][m - 1], X.vface[n][m][i]))
                    rep.add("map.face", "vertical d_" + std::to_string(i) + at(n, m));
            for (int i = 0; has(n, m + 1) && i <= m; ++i)
                if (compose_fn(Z.vdeg[n][m][i], F) != compose_fn(f.maps[n][m + 1], X.vdeg[n][m][i]))
                    rep.add("map.degeneracy", "vertical s_" + std::to_string(i) + at(n, m));
            if (X.is_cyclic() && Z.is_cyclic() && compose_fn(Z.cyclic[n][m], F) != compose_fn(F, X.cyclic[n][m]))
                rep.add("map.cyclic", "cyclic operator" + at(n, m));
        }
    return rep;
}

SimplicialMap diagonal_map(const BisimplicialMap& f, int cap) {
    if (cap > f.cap_h || cap > f.cap_v)
        throw ConstructionError("diagonal cap " + std::to_string(cap) + " exceeds map caps");
    SimplicialMap out{cap, {}};
    for (int n = 0; n <= cap; ++n)
        out.maps.push_back(f.maps[n][n]);
    return out;
}

SimplicialMap identity_map(const SimplicialSet& X) {
    SimplicialMap f{X.cap, {}};
    for (int n = 0; n <= X.cap; ++n)
        f.maps.push_back(identity_fn(X.sizes[n]));
    return f;
}

SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap out{std::min(f.cap, g.cap), {}};
    for (int n = 0; n <= out.cap; ++n)
        out.maps.push_back(compose_fn(g.maps[n], f.maps[n]));
    return out;
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const SimplicialSet& Z2) {
    SimplicialMap out{std::min(f.cap, g.cap), {}};
    for (int n = 0; n <= out.cap; ++n) {
        const int zs = static_cast<int>(g.maps[n].size());
        LevelFn m(f.maps[n].size() * zs);
        for (std::size_t x = 0; x < f.maps[n].size(); ++x)
            for (int z = 0; z < zs; ++z)
                m[product_index(static_cast<int>(x), z, zs)] = product_index(f.maps[n][x], g.maps[n][z], Z2.sizes[n]);
        out.maps.push_back(std::move(m));
    }
    return out;
}

std::vector<char> degenerate_mask(const SimplicialSet& X, int n) {
    if (n < 0 || n > X.cap)
        throw ConstructionError("degree " + std::to_string(n) + " outside cap " + std::to_string(X.cap) +
                                " of " + X.name);
    std::vector<char> mask(X.sizes[n], 0);
    for (int i = 0; n > 0 && i < n; ++i)
        for (int y : X.degeneracies[n - 1][i])
            mask[y] = 1;
    return mask;
}

std::vector<int> nondegenerate(const SimplicialSet& X, int n) {
    const auto mask = degenerate_mask(X, n);
    std::vector<int> out;
    for (int x = 0; x < X.sizes[n]; ++x)
        if (!mask[x])
            out.push_back(x);
    return out;
}

std::string dump(const SimplicialSet& X) {
    std::ostringstream os;
    os << "simplicial set " << X.name << " cap " << X.cap << "\n";
    for (int n = 0; n <= X.cap; ++n) {
        os << "level " << n << ": " << X.sizes[n] << " simplices, basepoint " << X.label(n, X.basepoint[n]) << "\n";
        for (int x = 0; x < X.sizes[n]; ++x) {
            os << "  " << X.label(n, x);
            if (n > 0) {
                os << "  d:";
                for (int i = 0; i <= n; ++i)
                    os << " " << X.label(n - 1, X.d(n, i, x));
            }
            if (n < X.cap) {
                os << "  s:";
                for (int i = 0; i <= n; ++i)
                    os << " " << X.label(n + 1, X.s(n, i, x));
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace waldkit

#include <algorithm>
#include <sstream>

#include "waldkit/homalg.hpp"

namespace waldkit {

namespace {

// Position of each element in the nondegenerate basis, -1 if degenerate.
std::vector<int> positions(const std::vector<int>& nd, int size) {
    std::vector<int> pos(size, -1);
    for (int k = 0; k < static_cast<int>(nd.size()); ++k)
        pos[nd[k]] = k;
    return pos;
}

long long sign(int i) { return i % 2 ? -1 : 1; }

}  // namespace

ChainComplex normalized_chains(const SimplicialSet& X, int cap) {
    if (cap > X.cap)
        throw ConstructionError("chains of " + X.name + " requested to degree " + std::to_string(cap) +
                                " beyond its cap " + std::to_string(X.cap));
    ChainComplex CC;
    CC.name = "C(" + X.name + ")";
    CC.top = cap;
    std::vector<std::vector<int>> nd, pos;
    for (int n = 0; n <= cap; ++n) {
        nd.push_back(nondegenerate(X, n));
        pos.push_back(positions(nd[n], X.sizes[n]));
        CC.dims.push_back(static_cast<int>(nd[n].size()));
        std::vector<std::string> lab;
        for (int x : nd[n])
            lab.push_back(X.label(n, x));
        CC.labels.push_back(std::move(lab));
    }
    CC.boundary.emplace_back(0, CC.dims[0]);
    for (int n = 1; n <= cap; ++n) {
        SparseMatrix d(CC.dims[n - 1], CC.dims[n]);
        for (int c = 0; c < CC.dims[n]; ++c)
            for (int i = 0; i <= n; ++i) {
                const int y = pos[n - 1][X.d(n, i, nd[n][c])];
                if (y >= 0)
                    d.add(y, c, sign(i));
            }
        CC.boundary.push_back(std::move(d));
    }
    auto rep = CC.check();
    if (!rep.ok())
        throw ConstructionError(rep.to_string());
    return CC;
}

ChainComplex normalized_chains(const SimplicialSet& X) { return normalized_chains(X, X.cap); }

SparseMatrix chain_map(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialMap& f, int n) {
    const auto ndx = nondegenerate(X, n);
    const auto ndz = nondegenerate(Z, n);
    const auto pos = positions(ndz, Z.sizes[n]);
    SparseMatrix m(static_cast<int>(ndz.size()), static_cast<int>(ndx.size()));
    for (int c = 0; c < m.cols; ++c) {
        const int y = pos[f(n, ndx[c])];
        if (y >= 0)
            m.add(y, c, 1);
    }
    return m;
}

QMatrix induced_on_homology(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialMap& f, FieldSpec k,
                            int p) {
    const auto hx = homology(normalized_chains(X, p + 1), p, k);
    const auto hz = homology(normalized_chains(Z, p + 1), p, k);
    return induced_matrix(hx, chain_map(X, Z, f, p), hz);
}

SparseMatrix shuffle_map(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialSet& XZ, int p, int q) {
    const int n = p + q;
    if (n > XZ.cap)
        throw ConstructionError("shuffle degree " + std::to_string(n) + " beyond cap");
    const auto ndx = nondegenerate(X, p), ndz = nondegenerate(Z, q), ndp = nondegenerate(XZ, n);
    const auto pos = positions(ndp, XZ.sizes[n]);
    const int zs = static_cast<int>(ndz.size());
    SparseMatrix m(static_cast<int>(ndp.size()), static_cast<int>(ndx.size()) * zs);
    // shuffles: choose which p of the n slots form μ
    std::vector<char> in_mu(n, 0);
    std::fill(in_mu.begin(), in_mu.begin() + p, 1);
    std::sort(in_mu.begin(), in_mu.end());
    do {
        std::vector<int> mu, nu;
        for (int k = 0; k < n; ++k)
            (in_mu[k] ? mu : nu).push_back(k);
        long long sgn = 1;
        for (int i = 0; i < p; ++i)
            sgn *= sign(mu[i] - i);
        for (int a = 0; a < static_cast<int>(ndx.size()); ++a) {
            int x = ndx[a], lx = p;
            for (int k : nu)
                x = X.s(lx++, k, x);
            for (int b = 0; b < zs; ++b) {
                int z = ndz[b], lz = q;
                for (int k : mu)
                    z = Z.s(lz++, k, z);
                const int y = pos[product_index(x, z, Z.sizes[n])];
                if (y >= 0)
                    m.add(y, a * zs + b, sgn);
            }
        }
    } while (std::next_permutation(in_mu.begin(), in_mu.end()));
    return m;
}

namespace {

// ∂ ⊗ 1 or 1 ⊗ ∂ on tensor bases.
SparseMatrix tensor_left(const SparseMatrix& d, int zdim) {
    SparseMatrix m(d.rows * zdim, d.cols * zdim);
    for (int a = 0; a < d.cols; ++a)
        for (auto [r, v] : d.col[a])
            for (int b = 0; b < zdim; ++b)
                m.add(r * zdim + b, a * zdim + b, v);
    return m;
}

SparseMatrix tensor_right(int xdim, const SparseMatrix& d) {
    SparseMatrix m(xdim * d.rows, xdim * d.cols);
    for (int a = 0; a < xdim; ++a)
        for (int b = 0; b < d.cols; ++b)
            for (auto [r, v] : d.col[b])
                m.add(a * d.rows + r, a * d.cols + b, v);
    return m;
}

}  // namespace

ValidationReport check_shuffle(const SimplicialSet& X, const SimplicialSet& Z, int cap) {
    ValidationReport rep;
    const auto P = product(X, Z);
    const auto CX = normalized_chains(X, cap), CZ = normalized_chains(Z, cap), CP = normalized_chains(P, cap);
    for (int n = 1; n <= cap; ++n)
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            const auto lhs = multiply(CP.boundary[n], shuffle_map(X, Z, P, p, q));
            SparseMatrix rhs(lhs.rows, lhs.cols);
            if (p > 0)
                rhs = add(rhs, multiply(shuffle_map(X, Z, P, p - 1, q), tensor_left(CX.boundary[p], CZ.dims[q])));
            if (q > 0)
                rhs = add(rhs, scale(multiply(shuffle_map(X, Z, P, p, q - 1), tensor_right(CX.dims[p], CZ.boundary[q])),
                                     sign(p)));
            if (!add(lhs, scale(rhs, -1)).is_zero())
                rep.add("shuffle.chain-map", "(" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    return rep;
}

TotalComplex total_complex(const BisimplicialSet& B) {
    TotalComplex T;
    int top = std::min(B.cap_h, B.cap_v);
    if (B.total >= 0)
        top = std::min(top, B.total);
    const int H = B.cap_h, V = B.cap_v;
    std::vector<std::vector<std::vector<int>>> pos(H + 1, std::vector<std::vector<int>>(V + 1));
    T.basis.assign(H + 1, std::vector<std::vector<int>>(V + 1));
    for (int n = 0; n <= H; ++n)
        for (int m = 0; m <= V; ++m) {
            if (!B.has(n, m) || n + m > top)
                continue;
            std::vector<char> deg(B.sizes[n][m], 0);
            for (int i = 0; n > 0 && i < n; ++i)
                for (int x : B.hdeg[n - 1][m][i])
                    deg[x] = 1;
            for (int j = 0; m > 0 && j < m; ++j)
                for (int x : B.vdeg[n][m - 1][j])
                    deg[x] = 1;
            for (int x = 0; x < B.sizes[n][m]; ++x)
                if (!deg[x])
                    T.basis[n][m].push_back(x);
            pos[n][m] = positions(T.basis[n][m], B.sizes[n][m]);
        }
    ChainComplex& CC = T.cc;
    CC.name = "Tot(" + B.name + ")";
    CC.top = top;
    T.offset.assign(top + 1, std::vector<int>(top + 1, 0));
    for (int d = 0; d <= top; ++d) {
        int off = 0;
        std::vector<std::string> lab;
        for (int n = 0; n <= d; ++n) {
            T.offset[d][n] = off;
            off += static_cast<int>(T.basis[n][d - n].size());
            for (int x : T.basis[n][d - n])
                lab.push_back("(" + std::to_string(n) + "," + std::to_string(d - n) + ")#" + std::to_string(x));
        }
        CC.dims.push_back(off);
        CC.labels.push_back(std::move(lab));
    }
    CC.boundary.emplace_back(0, CC.dims[0]);
    for (int d = 1; d <= top; ++d) {
        SparseMatrix D(CC.dims[d - 1], CC.dims[d]);
        for (int n = 0; n <= d; ++n) {
            const int m = d - n;
            const auto& basis = T.basis[n][m];
            for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
                const int c = T.offset[d][n] + k;
                const int x = basis[k];
                for (int i = 0; n > 0 && i <= n; ++i) {
                    const int y = pos[n - 1][m][B.hface[n][m][i][x]];
                    if (y >= 0)
                        D.add(T.offset[d - 1][n - 1] + y, c, sign(i));
                }
                for (int j = 0; m > 0 && j <= m; ++j) {
                    const int y = pos[n][m - 1][B.vface[n][m][j][x]];
                    if (y >= 0)
                        D.add(T.offset[d - 1][n] + y, c, sign(n) * sign(j));
                }
            }
        }
        CC.boundary.push_back(std::move(D));
    }
    auto rep = CC.check();
    if (!rep.ok())
        throw ConstructionError(rep.to_string());
    return T;
}

ChainComplex MixedComplex::hochschild() const {
    ChainComplex CC;
    CC.name = "b-complex(" + name + ")";
    CC.top = top;
    CC.dims = dims;
    CC.boundary = b;
    return CC;
}

ValidationReport MixedComplex::check() const {
    ValidationReport rep;
    const std::string at = " in degree ";
    for (int n = 2; n <= top; ++n)
        if (!multiply(b[n - 1], b[n]).is_zero())
            rep.add("mixed.bb", "b^2 != 0" + at + std::to_string(n));
    for (int n = 0; n + 2 <= top; ++n)
        if (!multiply(B[n + 1], B[n]).is_zero())
            rep.add("mixed.BB", "B^2 != 0" + at + std::to_string(n));
    for (int n = 0; n + 1 <= top; ++n) {
        // on M_n: b_{n+1} B_n + B_{n-1} b_n
        SparseMatrix s = multiply(b[n + 1], B[n]);
        if (n > 0)
            s = add(s, multiply(B[n - 1], b[n]));
        if (!s.is_zero())
            rep.add("mixed.bB", "bB + Bb != 0" + at + std::to_string(n));
    }
    return rep;
}

MixedComplex mixed_from_cyclic(const BisimplicialSet& B) {
    if (!B.is_cyclic())
        throw ConstructionError(B.name + " carries no cyclic operators");
    const TotalComplex T = total_complex(B);
    MixedComplex M;
    M.name = B.name;
    M.top = T.cc.top;
    M.dims = T.cc.dims;
    M.b = T.cc.boundary;
    for (int d = 0; d < M.top; ++d) {
        SparseMatrix Bd(M.dims[d + 1], M.dims[d]);
        for (int n = 0; n <= d; ++n) {
            const int m = d - n;
            const auto& src = T.basis[n][m];
            const auto& dst = T.basis[n + 1][m];
            const auto pos = positions(dst, B.sizes[n + 1][m]);
            const LevelFn& t = B.cyclic[n][m];
            const LevelFn& t1 = B.cyclic[n + 1][m];
            const LevelFn& sn = B.hdeg[n][m][n];
            for (int k = 0; k < static_cast<int>(src.size()); ++k) {
                int y = src[k];
                for (int r = 0; r <= n; ++r) {
                    const int img = pos[t1[sn[y]]];
                    if (img >= 0)
                        Bd.add(T.offset[d + 1][n + 1] + img, T.offset[d][n] + k, sign(n * r));
                    y = t[y];
                }
            }
        }
        M.B.push_back(std::move(Bd));
    }
    auto rep = M.check();
    if (!rep.ok())
        throw ConstructionError("mixed complex identities fail:\n" + rep.to_string());
    return M;
}

ChainComplex bicomplex(const MixedComplex& M) {
    ChainComplex CC;
    CC.name = "bicomplex(" + M.name + ")";
    CC.top = M.top;
    std::vector<std::vector<int>> off(M.top + 1);
    for (int d = 0; d <= M.top; ++d) {
        int o = 0;
        std::vector<std::string> lab;
        for (int j = 0; 2 * j <= d; ++j) {
            off[d].push_back(o);
            o += M.dims[d - 2 * j];
            for (int x = 0; x < M.dims[d - 2 * j]; ++x)
                lab.push_back("u^" + std::to_string(j) + "#" + std::to_string(x));
        }
        CC.dims.push_back(o);
        CC.labels.push_back(std::move(lab));
    }
    CC.boundary.emplace_back(0, CC.dims[0]);
    for (int d = 1; d <= M.top; ++d) {
        SparseMatrix D(CC.dims[d - 1], CC.dims[d]);
        for (int j = 0; 2 * j <= d; ++j) {
            const int k = d - 2 * j;
            if (k >= 1)
                for (int c = 0; c < M.dims[k]; ++c)
                    for (auto [r, v] : M.b[k].col[c])
                        D.add(off[d - 1][j] + r, off[d][j] + c, v);
            if (j >= 1)
                for (int c = 0; c < M.dims[k]; ++c)
                    for (auto [r, v] : M.B[k].col[c])
                        D.add(off[d - 1][j - 1] + r, off[d][j] + c, v);
        }
        CC.boundary.push_back(std::move(D));
    }
    auto rep = CC.check();
    if (!rep.ok())
        throw ConstructionError(rep.to_string());
    return CC;
}

CyclicHomology cyclic_homology(const MixedComplex& M, FieldSpec k) {
    CyclicHomology H;
    H.field = k;
    H.reliable_top = M.top - 1;
    if (H.reliable_top < 0)
        throw ConstructionError("mixed complex too short for any reliable degree");
    const ChainComplex hoch = M.hochschild();
    const ChainComplex tot = bicomplex(M);
    for (int d = 0; d <= H.reliable_top; ++d) {
        H.hh.push_back(homology(hoch, d, k));
        H.hc.push_back(homology(tot, d, k));
    }
    for (int d = 0; d <= H.reliable_top; ++d) {
        SparseMatrix inc(tot.dims[d], M.dims[d]);
        for (int c = 0; c < M.dims[d]; ++c)
            inc.add(c, c, 1);
        H.I.push_back(induced_matrix(H.hh[d], inc, H.hc[d]));
        if (d >= 2) {
            SparseMatrix shift(tot.dims[d - 2], tot.dims[d]);
            for (int r = 0; r < tot.dims[d - 2]; ++r)
                shift.add(r, M.dims[d] + r, 1);
            H.S.push_back(induced_matrix(H.hc[d], shift, H.hc[d - 2]));
        } else {
            H.S.emplace_back();
        }
        if (d + 1 <= H.reliable_top) {
            SparseMatrix conn(M.dims[d + 1], tot.dims[d]);
            for (int c = 0; c < M.dims[d]; ++c)
                for (auto [r, v] : M.B[d].col[c])
                    conn.add(r, c, v);
            H.Bc.push_back(induced_matrix(H.hc[d], conn, H.hh[d + 1]));
        }
    }
    return H;
}

namespace {

QMatrix product(const QMatrix& a, const QMatrix& b, int inner) {
    const int rows = static_cast<int>(a.size());
    const int cols = b.empty() ? 0 : static_cast<int>(b[0].size());
    QMatrix out(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < inner; ++k)
            if (sgn(a[i][k]) != 0)
                for (int j = 0; j < cols; ++j)
                    out[i][j] += a[i][k] * b[k][j];
    return out;
}

bool vanishes(const QMatrix& m, FieldSpec k) { return rank(m, k) == 0; }

int rk(const QMatrix& m, FieldSpec k) { return m.empty() ? 0 : rank(m, k); }

}  // namespace

ValidationReport sbi_exactness(const CyclicHomology& H, int top) {
    ValidationReport rep;
    const FieldSpec k = H.field;
    if (top > H.reliable_top)
        throw ConstructionError("SBI range " + std::to_string(top) + " exceeds reliable degree " +
                                std::to_string(H.reliable_top));
    auto node = [](const char* g, int d) { return std::string(g) + "_" + std::to_string(d); };
    for (int d = 0; d <= top; ++d) {
        const int hh = H.hh[d].dim, hc = H.hc[d].dim;
        const int rI = rk(H.I[d], k);
        const int rS = d >= 2 ? rk(H.S[d], k) : 0;
        // node HH_d: image of B from HC_{d-1} equals kernel of I
        const int rB = d >= 1 ? rk(H.Bc[d - 1], k) : 0;
        if (d >= 1 && hh > 0 && H.hc[d - 1].dim > 0 && hc > 0 &&
            !vanishes(product(H.I[d], H.Bc[d - 1], hh), k))
            rep.add("sbi.composite", "I o B != 0 at " + node("HH", d));
        if (rB != hh - rI)
            rep.add("sbi.exact", "at " + node("HH", d) + ": rank B = " + std::to_string(rB) + ", dim = " +
                                     std::to_string(hh) + ", rank I = " + std::to_string(rI));
        // node HC_d after I
        if (d >= 2 && hc > 0 && hh > 0 && H.hc[d - 2].dim > 0 && !vanishes(product(H.S[d], H.I[d], hc), k))
            rep.add("sbi.composite", "S o I != 0 at " + node("HC", d));
        if (rI != hc - rS)
            rep.add("sbi.exact", "at " + node("HC", d) + ": rank I = " + std::to_string(rI) + ", dim = " +
                                     std::to_string(hc) + ", rank S = " + std::to_string(rS));
        // node HC_{d-2} after S
        if (d >= 2 && d - 1 <= H.reliable_top) {
            const int e = d - 2, he = H.hc[e].dim;
            const int rBe = rk(H.Bc[e], k);
            if (he > 0 && hc > 0 && H.hh[e + 1].dim > 0 && !vanishes(product(H.Bc[e], H.S[d], he), k))
                rep.add("sbi.composite", "B o S != 0 at " + node("HC", e));
            if (rS != he - rBe)
                rep.add("sbi.exact", "at " + node("HC", e) + " (after S): rank S = " + std::to_string(rS) +
                                         ", dim = " + std::to_string(he) + ", rank B = " + std::to_string(rBe));
        }
        rep.note(node("HH", d) + " dim " + std::to_string(hh) + ", " + node("HC", d) + " dim " + std::to_string(hc) +
                 ", rank I " + std::to_string(rI) + ", rank S " + std::to_string(rS) + ", rank B into " +
                 node("HH", d) + " " + std::to_string(rB));
    }
    return rep;
}

bool exact_dimensions_feasible(const std::vector<int>& dims) {
    // dims[0] → dims[1] → ... → dims.back() → 0; r = rank of the outgoing map
    int r = 0;
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        const int incoming = dims[i] - r;
        if (incoming < 0)
            return false;
        if (i > 0 && incoming > dims[i - 1])
            return false;
        r = incoming;
    }
    return true;
}

}  // namespace waldkit

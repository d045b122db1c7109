#include "waldkit/invariants.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

namespace waldkit {

namespace {

std::string instance_name(const FinCofCategory& C, const SimplicialOrd& Y) { return C.name + " / " + Y.name; }

std::string range_text(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

// Frozen values for the corpus instances over Q.
struct Pin {
    const char* id;
    const char* category;
    const char* y;
    const char* invariant;
    int degree;
    const char* value;
};

constexpr Pin kPins[] = {
    {"oracle.k0.trivial", "trivial", "circle", "K0^Y", 0, "0"},
    {"oracle.k0.chain2.circle", "chain2", "circle", "K0^Y", 0, "Z"},
    {"oracle.k0.chain3.circle", "chain3", "circle", "K0^Y", 0, "Z"},
    {"oracle.h.chain2.circle.0", "chain2", "circle", "H(S^Y)", 0, "Q"},
    {"oracle.h.chain2.circle.1", "chain2", "circle", "H(S^Y)", 1, "Q"},
    {"oracle.h.chain2.circle.2", "chain2", "circle", "H(S^Y)", 2, "0"},
    {"oracle.h.chain2.circle.3", "chain2", "circle", "H(S^Y)", 3, "0"},
    {"oracle.hh.chain2.circle.0", "chain2", "circle", "HH^Y", 0, "Q"},
    {"oracle.hh.chain2.circle.1", "chain2", "circle", "HH^Y", 1, "0"},
    {"bicomplex.hc.trivial.0", "trivial", "circle", "HC^Y", 0, "0"},
    {"bicomplex.hc.trivial.1", "trivial", "circle", "HC^Y", 1, "Q"},
    {"bicomplex.hc.trivial.2", "trivial", "circle", "HC^Y", 2, "0"},
    {"bicomplex.hc.trivial.3", "trivial", "circle", "HC^Y", 3, "Q"},
    {"regression.hc.chain2.circle.0", "chain2", "circle", "HC^Y", 0, "Q"},
    {"regression.hc.chain2.circle.1", "chain2", "circle", "HC^Y", 1, "Q"},
    {"regression.hc.chain2.circle.2", "chain2", "circle", "HC^Y", 2, "Q"},
    {"regression.hc.chain2.circle.3", "chain2", "circle", "HC^Y", 3, "Q"},
    {"oracle.trace.chain2.circle.k0", "chain2", "circle", "D^Y", 0, "nonzero"},
};

void attach_pins(InvariantReport& R, const FinCofCategory& C, const SimplicialOrd& Y) {
    if (R.field != "Q" && R.invariant != "K0^Y")
        return;
    for (const Pin& pin : kPins) {
        if (C.name != pin.category || Y.name != pin.y || R.invariant != pin.invariant)
            continue;
        for (const auto& v : R.values)
            if (v.degree == pin.degree)
                R.pins.push_back(std::string(pin.id) + ": expected " + pin.value + ", got " + v.text +
                                 (v.text == pin.value ? " (match)" : " (MISMATCH)"));
    }
}

bool same_in(const FieldSpec& k, const mpq_class& a, const mpq_class& b) {
    if (k.is_rational())
        return a == b;
    const mpq_class d = a - b;
    return mpz_divisible_ui_p(d.get_num().get_mpz_t(), static_cast<unsigned long>(k.p)) != 0;
}

QVector combine(const std::vector<QVector>& basis, const std::vector<mpq_class>& coeff) {
    std::map<int, mpq_class> acc;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [r, x] : basis[i])
            acc[r] += coeff[i] * x;
    QVector out;
    for (auto& [r, x] : acc)
        if (sgn(x) != 0)
            out.emplace_back(r, x);
    return out;
}

QVector tensor(const QVector& x, const QVector& z, int zdim) {
    QVector out;
    for (const auto& [r, a] : x)
        for (const auto& [s, b] : z)
            out.emplace_back(r * zdim + s, a * b);
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
}

int rank_of(const QMatrix& m, FieldSpec k) { return m.empty() || m[0].empty() ? 0 : rank(m, k); }

std::string matrix_text(const QMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m[i].size(); ++j)
            s += (j ? " " : "") + m[i][j].get_str();
    }
    return s + "]";
}

LevelMap truncate_levels(const LevelMap& f, int cap) {
    if (static_cast<int>(f.size()) < cap + 1)
        throw ConstructionError("level map shorter than cap " + std::to_string(cap));
    return LevelMap(f.begin(), f.begin() + cap + 1);
}

OrdHomotopy truncate_homotopy(const OrdHomotopy& H, int cap) {
    if (static_cast<int>(H.h.size()) < cap)
        throw ConstructionError("homotopy shorter than cap " + std::to_string(cap));
    return OrdHomotopy{{H.h.begin(), H.h.begin() + cap}};
}

// Integer row vector of an edge in the abelianized edge-path group.
std::vector<mpz_class> edge_vector(const SimplicialSet& X, int e) {
    const auto nd = nondegenerate(X, 1);
    std::vector<mpz_class> v(nd.size());
    auto it = std::find(nd.begin(), nd.end(), e);
    if (it != nd.end())
        v[it - nd.begin()] = 1;
    return v;
}

mpz_class lattice_volume(const std::vector<std::vector<mpz_class>>& rows, std::size_t& rk) {
    if (rows.empty()) {
        rk = 0;
        return 1;
    }
    const auto d = smith_diagonal(rows);
    rk = d.size();
    mpz_class v = 1;
    for (const auto& x : d)
        v *= x;
    return v;
}

// Whether v lies in the integer row span of R.
bool in_row_lattice(const std::vector<std::vector<mpz_class>>& R, const std::vector<mpz_class>& v) {
    if (std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; }))
        return true;
    std::size_t r1 = 0, r2 = 0;
    const mpz_class a = lattice_volume(R, r1);
    auto R2 = R;
    R2.push_back(v);
    const mpz_class b = lattice_volume(R2, r2);
    return r1 == r2 && a == b;
}

}  // namespace

void InvariantReport::add_value(int degree, int dim, std::string text) {
    if (degree < reliable_lo || degree > reliable_hi)
        throw ConstructionError(invariant + " in degree " + std::to_string(degree) + " is outside the reliable range " +
                                range_text(reliable_lo, reliable_hi));
    values.push_back({degree, dim, std::move(text)});
}

bool InvariantReport::pins_match() const {
    return std::none_of(pins.begin(), pins.end(),
                        [](const std::string& p) { return p.find("MISMATCH") != std::string::npos; });
}

std::string InvariantReport::text() const {
    std::ostringstream os;
    os << "invariant: " << invariant << '\n';
    os << "description: " << description << '\n';
    os << "instance: " << instance << '\n';
    os << "field: " << field << '\n';
    os << "caps: " << caps << '\n';
    os << "reliable degrees: " << range_text(reliable_lo, reliable_hi) << '\n';
    for (const auto& v : values)
        os << "degree " << v.degree << ": " << v.text << '\n';
    for (const auto& p : pins)
        os << "pin " << p << '\n';
    for (const auto& n : notes)
        os << "note: " << n << '\n';
    os << "checks: " << (checks.ok() ? "ok" : "FAILED") << '\n';
    for (const auto& v : checks.violations())
        os << "  violation [" << v.kind << "] " << v.detail << '\n';
    for (const auto& n : checks.notes())
        os << "  " << n << '\n';
    return os.str();
}

std::string dim_text(const FieldSpec& k, int dim) {
    if (dim == 0)
        return "0";
    return k.to_string() + (dim > 1 ? "^" + std::to_string(dim) : "");
}

K0Result k0(const FinCofCategory& C, const SimplicialOrd& Y, int cap) {
    if (cap < 2)
        throw ConstructionError("K0 needs cap >= 2 (2-simplices carry the relations), got " + std::to_string(cap));
    if (!Y.reduced())
        throw ConstructionError(Y.name + " is not reduced (Y_0 = [" + std::to_string(Y.levels.at(0)) +
                                "]): K0 is read off pi_1 at the canonical basepoint, which needs a single vertex");
    const SConstruction S = s_simplicial_set(C, Y, cap);
    K0Result out;
    out.presentation = pi1_edge_path(S.sset);
    out.simplified = simplify(out.presentation);
    out.abelian = abelianize(out.presentation);
    out.h1_dim = homology(normalized_chains(S.sset, 2), 1, FieldSpec::rationals()).dim;

    InvariantReport& R = out.report;
    R.invariant = "K0^Y";
    R.description = "pi_1 |S^Y(C)| by edge paths over the 2-skeleton, with its abelianization";
    R.instance = instance_name(C, Y);
    R.field = "Z";
    R.caps = "cap " + std::to_string(cap) + " (2-skeleton suffices)";
    R.reliable_lo = R.reliable_hi = 0;
    R.add_value(0, -1, out.abelian.to_string());
    R.notes.push_back("presentation " + out.presentation.to_string());
    R.notes.push_back("simplified " + out.simplified.to_string());
    R.notes.push_back("dim H_1(S^Y(C); Q) = " + std::to_string(out.h1_dim));
    if (out.abelian.rank != out.h1_dim)
        R.checks.add("k0.hurewicz", "abelianization rank " + std::to_string(out.abelian.rank) +
                                        " differs from dim H_1 " + std::to_string(out.h1_dim));
    attach_pins(R, C, Y);
    return out;
}

InvariantReport s_homology(const FinCofCategory& C, const SimplicialOrd& Y, int hi, FieldSpec k) {
    const int cap = hi + 1;
    const SConstruction S = s_simplicial_set(C, Y, cap);
    const ChainComplex CC = normalized_chains(S.sset);
    InvariantReport R;
    R.invariant = "H(S^Y)";
    R.description = "homology of |S^Y(C)| from normalized chains";
    R.instance = instance_name(C, Y);
    R.field = k.to_string();
    R.caps = "cap " + std::to_string(cap) + " for degrees <= " + std::to_string(hi);
    R.reliable_hi = hi;
    for (int q = 0; q <= hi; ++q) {
        const int d = homology(CC, q, k).dim;
        R.add_value(q, d, dim_text(k, d));
    }
    attach_pins(R, C, Y);
    return R;
}

InvariantReport hh(const FinCofCategory& C, const SimplicialOrd& Y, int lo, int hi, FieldSpec k, bool crosscheck) {
    if (lo < 0 || hi < lo)
        throw StructuralError("bad degree range " + range_text(lo, hi));
    const int cap = hi + 2;
    if (Y.cap < cap)
        throw ConstructionError("HH^Y_" + std::to_string(hi) + " needs " + Y.name + " up to level " +
                                std::to_string(cap) + ", its cap is " + std::to_string(Y.cap));
    const CNGrid G = cn_bisimplicial(C, Y, cap, cap);
    const SimplicialSet D = diagonal(G.grid, cap);
    const ChainComplex CC = normalized_chains(D);
    InvariantReport R;
    R.invariant = "HH^Y";
    R.description = "HH_p^Y(C) = H_{p+1}(diag CN(S^Y(C)))";
    R.instance = instance_name(C, Y);
    R.field = k.to_string();
    R.caps = "grid caps (" + std::to_string(cap) + "," + std::to_string(cap) + "), diagonal cap " +
             std::to_string(cap);
    R.reliable_lo = 0;
    R.reliable_hi = cap - 2;
    std::optional<ChainComplex> tot;
    if (crosscheck)
        tot = total_complex(G.grid).cc;
    for (int p = lo; p <= hi; ++p) {
        const int d = homology(CC, p + 1, k).dim;
        R.add_value(p, d, dim_text(k, d));
        if (tot) {
            const int t = homology(*tot, p + 1, k).dim;
            if (t != d)
                R.checks.add("hh.crosscheck", "degree " + std::to_string(p) + ": diagonal " + std::to_string(d) +
                                                  ", total complex " + std::to_string(t));
            else
                R.checks.note("total complex agrees in degree " + std::to_string(p));
        }
    }
    attach_pins(R, C, Y);
    return R;
}

MixedComplex cn_mixed_complex(const FinCofCategory& C, const SimplicialOrd& Y, int hi) {
    const int top = hi + 2;
    if (Y.cap < top)
        throw ConstructionError("the mixed complex up to degree " + std::to_string(top) + " needs " + Y.name +
                                " up to level " + std::to_string(top) + ", its cap is " + std::to_string(Y.cap));
    const CNGrid G = cn_bisimplicial(C, Y, top, top, top);
    return mixed_from_cyclic(G.grid);
}

InvariantReport hc(const FinCofCategory& C, const SimplicialOrd& Y, int lo, int hi, FieldSpec k) {
    if (lo < 0 || hi < lo)
        throw StructuralError("bad degree range " + range_text(lo, hi));
    const MixedComplex M = cn_mixed_complex(C, Y, hi);
    const CyclicHomology H = cyclic_homology(M, k);
    InvariantReport R;
    R.invariant = "HC^Y";
    R.description = "HC_p^Y(C) = HC_{p+1} of the mixed complex of CN(S^Y(C)), via the (b,B)-bicomplex";
    R.instance = instance_name(C, Y);
    R.field = k.to_string();
    R.caps = "grid truncated at total degree " + std::to_string(M.top);
    R.reliable_lo = 0;
    R.reliable_hi = H.reliable_top - 1;
    R.checks.merge(M.check());
    for (int p = lo; p <= hi; ++p) {
        const int d = H.hc[p + 1].dim;
        R.add_value(p, d, dim_text(k, d));
    }
    attach_pins(R, C, Y);
    return R;
}

std::vector<int> sbi_dimension_sequence(const std::vector<int>& hh, const std::vector<int>& hc, int top) {
    std::vector<int> seq;
    auto at = [](const std::vector<int>& v, int d) { return d < 0 ? 0 : v.at(d); };
    for (int d = top; d >= 0; --d) {
        seq.push_back(at(hh, d));
        seq.push_back(at(hc, d));
        seq.push_back(at(hc, d - 2));
    }
    return seq;
}

SBIResult sbi_check(const FinCofCategory& C, const SimplicialOrd& Y, FieldSpec k, int hi) {
    const MixedComplex M = cn_mixed_complex(C, Y, hi);
    SBIResult out;
    out.homology = cyclic_homology(M, k);
    const CyclicHomology& H = out.homology;
    out.exactness.merge(M.check());
    out.exactness.merge(sbi_exactness(H, hi + 1));

    std::vector<int> hh, hc;
    for (const auto& h : H.hh)
        hh.push_back(h.dim);
    for (const auto& h : H.hc)
        hc.push_back(h.dim);
    // true alignment: HH^Y_p = HH_{p+1}, HC^Y_p = HC_{p+1}, whole sequence in M-degrees
    const auto good = sbi_dimension_sequence(hh, hc, hi + 1);
    if (!exact_dimensions_feasible(good))
        out.aligned.add("sbi.dimensions", "aligned dimensions admit no exact sequence");
    // mis-shifted: HH^Y_p against HC_p(M)
    std::vector<int> hh_y(hh.begin() + 1, hh.begin() + hi + 2);
    std::vector<int> hc_m(hc.begin(), hc.begin() + hi + 1);
    const auto bad = sbi_dimension_sequence(hh_y, hc_m, hi);
    std::string s;
    for (int x : bad)
        s += std::to_string(x) + " ";
    out.control.note("mis-shifted dimensions " + s);
    if (!exact_dimensions_feasible(bad))
        out.control.add("sbi.dimensions", "HH^Y_p paired with unshifted HC_p admits no exact sequence");
    return out;
}

SimplicialMap trace_map(const SConstruction& S, const CNGrid& G, int cap) {
    if (!G.grid.has(cap, cap) || S.sset.cap < cap)
        throw ConstructionError("trace map needs S^Y and the grid diagonal up to " + std::to_string(cap));
    SimplicialMap D{cap, {}};
    for (int m = 0; m <= cap; ++m) {
        const SCategory& SC = *G.cats[m];
        LevelFn fn;
        for (const SObject& x : S.levels[m].objects()) {
            const int o = SC.level.index_of(x.chain);
            fn.push_back(G.columns[m].find(m, CNTuple(m + 1, SC.cat.identity(o))));
        }
        D.maps.push_back(std::move(fn));
    }
    return D;
}

TraceResult dennis_trace(const FinCofCategory& C, const SimplicialOrd& Y, int hi, FieldSpec k) {
    const int cap = hi + 2;
    const SConstruction S = s_simplicial_set(C, Y, cap);
    const CNGrid G = cn_bisimplicial(C, Y, cap, cap);
    const SimplicialSet diag = diagonal(G.grid, cap);
    TraceResult out;
    out.map = trace_map(S, G, cap);
    out.simpliciality = validate_map(S.sset, diag, out.map);
    if (!out.simpliciality.ok())
        throw ConstructionError("trace map is not simplicial:\n" + out.simpliciality.to_string());
    out.simpliciality.note("x -> (id_x,...,id_x) commutes with all faces and degeneracies up to level " +
                           std::to_string(cap));

    const ChainComplex CS = normalized_chains(S.sset), CD = normalized_chains(diag);
    InvariantReport& R = out.report;
    R.invariant = "D^Y";
    R.description = "Dennis trace H_{p+1}(S^Y(C)) -> H_{p+1}(diag CN(S^Y(C))) = HH_p^Y(C)";
    R.instance = instance_name(C, Y);
    R.field = k.to_string();
    R.caps = "cap " + std::to_string(cap) + " on both sides";
    R.reliable_hi = hi;
    R.checks.merge(out.simpliciality);
    for (int p = 0; p <= hi; ++p) {
        const HomologyBasis hs = homology(CS, p + 1, k), hd = homology(CD, p + 1, k);
        const QMatrix m = induced_matrix(hs, chain_map(S.sset, diag, out.map, p + 1), hd);
        out.degrees.push_back(p);
        out.matrices.push_back(m);
        const int r = rank_of(m, k);
        R.notes.push_back("p=" + std::to_string(p) + " matrix " + matrix_text(m));
        if (p != 0 || !Y.reduced())
            R.add_value(p, r, "rank " + std::to_string(r) + " (" + dim_text(k, hs.dim) + " -> " +
                                  dim_text(k, hd.dim) + ")");
        if (p == 0 && Y.reduced()) {
            const auto edges = nondegenerate(S.sset, 1);
            const SparseMatrix cm = chain_map(S.sset, diag, out.map, 1);
            QMatrix comp(hd.dim, std::vector<mpq_class>(edges.size()));
            for (std::size_t g = 0; g < edges.size(); ++g) {
                out.k0_generators.push_back(S.sset.label(1, edges[g]));
                const auto c = hd.coordinates(waldkit::apply(cm, QVector{{static_cast<int>(g), mpq_class(1)}}));
                for (int i = 0; i < hd.dim; ++i)
                    comp[i][g] = c[i];
            }
            bool nonzero = false;
            for (const auto& row : comp)
                for (const auto& x : row)
                    nonzero = nonzero || !same_in(k, x, 0);
            out.k0_composite = comp;
            out.k0_abelian = abelianize(pi1_edge_path(S.sset));
            R.add_value(0, r, nonzero ? "nonzero" : "0");
            std::string gens;
            for (const auto& g : out.k0_generators)
                gens += " " + g;
            R.notes.push_back("K0 = " + out.k0_abelian->to_string() + " generated by" + gens +
                              "; composite K0 -> H_1 -> HH_0 on generators " + matrix_text(comp));
        }
    }
    attach_pins(R, C, Y);
    return out;
}

ProductKMap product_k_map(const BiFunctor& F, const SimplicialOrd& Y, int cap) {
    const ValidationReport be = is_biexact(F);
    if (!be.ok())
        throw ConstructionError("functor is not bi-exact:\n" + be.to_string());
    const FinCofCategory &C = *F.left, &D = *F.right, &E = *F.target;
    for (int a = 0; a < C.base.num_objects(); ++a)
        if (F.obj(a, D.base.zero()) != E.base.zero())
            throw ConstructionError("F(" + C.base.object_name(a) + ", 0) is not the zero object");
    for (int b = 0; b < D.base.num_objects(); ++b)
        if (F.obj(C.base.zero(), b) != E.base.zero())
            throw ConstructionError("F(0, " + D.base.object_name(b) + ") is not the zero object");

    const SConstruction SX = s_simplicial_set(C, Y, cap), SZ = s_simplicial_set(D, Y, cap),
                        SW = s_simplicial_set(E, Y, cap);
    ProductKMap out;
    out.source = smash(SX.sset, SZ.sset);
    out.target = SW.sset;
    out.map.cap = cap;
    for (int n = 0; n <= cap; ++n) {
        const SLevel &lx = SX.levels[n], &lz = SZ.levels[n];
        LevelFn fn(out.source.sizes[n], SW.sset.basepoint[n]);
        int k = 1;
        for (int x = 0; x < lx.size(); ++x) {
            if (x == SX.sset.basepoint[n])
                continue;
            for (int z = 0; z < lz.size(); ++z) {
                if (z == SZ.sset.basepoint[n])
                    continue;
                std::vector<MorId> chain;
                for (std::size_t j = 0; j < lx[x].chain.size(); ++j)
                    chain.push_back(F.mor(lx[x].chain[j], lz[z].chain[j]));
                fn[k++] = SW.levels[n].index_of(chain);
            }
        }
        out.map.maps.push_back(std::move(fn));
    }
    out.report = validate_map(out.source, out.target, out.map);
    if (!out.report.ok())
        throw ConstructionError("levelwise F-images do not form a simplicial map on " + Y.name + ":\n" +
                                out.report.to_string());
    out.report.note("F^" + Y.name + " validated as a simplicial map up to level " + std::to_string(cap));
    return out;
}

Pairing homology_pairing(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialSet& W,
                         const SimplicialMap& f, int a, int b, FieldSpec k) {
    if (X.cap != Z.cap || X.cap != W.cap)
        throw ConstructionError("pairing needs equal caps");
    if (a + b + 1 > W.cap)
        throw ConstructionError("pairing into degree " + std::to_string(a + b) + " needs cap " +
                                std::to_string(a + b + 1) + ", have " + std::to_string(W.cap));
    const SimplicialSet P = product(X, Z);
    const ValidationReport fr = validate_map(P, W, f);
    if (!fr.ok())
        throw ConstructionError("pairing map is not simplicial:\n" + fr.to_string());
    const ChainComplex CX = normalized_chains(X), CZ = normalized_chains(Z), CW = normalized_chains(W);
    const HomologyBasis hx = homology(CX, a, k), hz = homology(CZ, b, k), hw = homology(CW, a + b, k);
    const SparseMatrix sh = shuffle_map(X, Z, P, a, b);
    const SparseMatrix fm = chain_map(P, W, f, a + b);
    const int zdim = CZ.dims[b];
    auto image = [&](const QVector& x, const QVector& z) {
        return hw.coordinates(waldkit::apply(fm, waldkit::apply(sh, tensor(x, z, zdim))));
    };

    Pairing out;
    out.a = a;
    out.b = b;
    out.dim_a = hx.dim;
    out.dim_b = hz.dim;
    out.dim_out = hw.dim;
    out.table.assign(hw.dim, QMatrix(hx.dim, std::vector<mpq_class>(hz.dim)));
    for (int i = 0; i < hx.dim; ++i)
        for (int j = 0; j < hz.dim; ++j) {
            const auto c = image(hx.reps[i], hz.reps[j]);
            for (int r = 0; r < hw.dim; ++r)
                out.table[r][i][j] = c[r];
        }

    // chain-level images of random combinations against the table
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<mpq_class> u(hx.dim), v(hz.dim);
        for (auto& x : u)
            x = coef(rng);
        for (auto& x : v)
            x = coef(rng);
        const auto c = image(combine(hx.reps, u), combine(hz.reps, v));
        for (int r = 0; r < hw.dim; ++r) {
            mpq_class expect = 0;
            for (int i = 0; i < hx.dim; ++i)
                for (int j = 0; j < hz.dim; ++j)
                    expect += u[i] * v[j] * out.table[r][i][j];
            if (!same_in(k, expect, c[r]))
                out.bilinearity.add("product.bilinear", "trial " + std::to_string(trial) + ", coordinate " +
                                                            std::to_string(r));
        }
    }
    out.bilinearity.note("bilinear on 4 random pairs of classes, H_" + std::to_string(a) + " x H_" +
                         std::to_string(b) + " -> H_" + std::to_string(a + b));
    return out;
}

ProductHH product_hh(const BiFunctor& F, const SimplicialOrd& Y, int p, int q, FieldSpec k) {
    if (p < 0 || q < 0)
        throw StructuralError("negative degree");
    const int cap = p + q + 3;
    if (Y.cap < cap)
        throw ConstructionError("product into HH_" + std::to_string(p + q + 1) + " needs " + Y.name +
                                " up to level " + std::to_string(cap));
    const CNGrid X = cn_bisimplicial(*F.left, Y, cap, cap);
    const CNGrid Z = cn_bisimplicial(*F.right, Y, cap, cap);
    const CNGrid W = cn_bisimplicial(*F.target, Y, cap, cap);
    const BisimplicialMap fm = cn_of_bifunctor(F, X, Z, W);
    const SimplicialMap dm = diagonal_map(fm, cap);

    ProductHH out;
    out.p = p;
    out.q = q;
    out.degree = p + q + 1;
    out.pairing = homology_pairing(diagonal(X.grid, cap), diagonal(Z.grid, cap), diagonal(W.grid, cap), dm, p + 1,
                                   q + 1, k);
    InvariantReport& R = out.report;
    R.invariant = "HH^Y product";
    R.description = "HH_p^Y(C) x HH_q^Y(D) -> HH_{p+q+1}^Y(E): shuffle map, then diag CN(S^Y F)";
    R.instance = F.left->name + " x " + F.right->name + " -> " + F.target->name + " / " + Y.name;
    R.field = k.to_string();
    R.caps = "grid caps (" + std::to_string(cap) + "," + std::to_string(cap) + ")";
    R.reliable_lo = R.reliable_hi = out.degree;
    int nz = 0;
    for (const auto& m : out.pairing.table)
        nz += rank_of(m, k) > 0;
    R.add_value(out.degree, out.pairing.dim_out,
                dim_text(k, out.pairing.dim_a) + " x " + dim_text(k, out.pairing.dim_b) + " -> " +
                    dim_text(k, out.pairing.dim_out) + (nz ? ", nonzero" : ", zero pairing"));
    R.checks.merge(out.pairing.bilinearity);
    if (out.pairing.a + out.pairing.b != out.degree + 1)
        R.checks.add("product.degree", "pairing lands in chain degree " +
                                           std::to_string(out.pairing.a + out.pairing.b));
    else
        R.checks.note("(p+1)+(q+1) = " + std::to_string(out.degree + 1) + ", i.e. HH degree p+q+1 = " +
                      std::to_string(out.degree));
    for (std::size_t r = 0; r < out.pairing.table.size(); ++r)
        R.notes.push_back("coordinate " + std::to_string(r) + ": " + matrix_text(out.pairing.table[r]));
    return out;
}

ValidationReport homotopy_invariance(const FinCofCategory& C, const HomotopyInstance& inst, FieldSpec k,
                                     int max_degree) {
    ValidationReport rep;
    const int cap = max_degree + 1;
    const SimplicialOrd Y = truncate(inst.Y, cap), Y2 = truncate(inst.Y2, cap);
    const LevelMap f = truncate_levels(inst.f, cap), g = truncate_levels(inst.g, cap);
    const OrdHomotopy H = truncate_homotopy(inst.H, cap);
    const ValidationReport hr = validate_homotopy(Y, Y2, f, g, H);
    if (!hr.ok()) {
        rep.merge(hr, "homotopy");
        rep.add("homotopy.rejected", "the homotopy fails its identities; no invariance is certified");
        return rep;
    }

    const SConstruction SX = s_simplicial_set(C, Y, cap), SZ = s_simplicial_set(C, Y2, cap);
    const SimplicialMap Sf = map_from_ord(C, SX, SZ, f), Sg = map_from_ord(C, SX, SZ, g);
    const SimplicialHomotopy SH = homotopy_from_ord(C, SX, SZ, f, g, H);
    rep.merge(validate_homotopy(SX.sset, SZ.sset, Sf, Sg, SH), "S-level homotopy");

    auto compare = [&](const std::string& what, const QMatrix& a, const QMatrix& b) {
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
            for (std::size_t j = 0; same && j < a[i].size(); ++j)
                same = same_in(k, a[i][j], b[i][j]);
        if (!same)
            rep.add("homotopy.matrices", what + ": " + matrix_text(a) + " vs " + matrix_text(b));
        else
            rep.note(what + ": both maps induce " + matrix_text(a));
    };
    for (int q = 0; q <= max_degree; ++q)
        compare("H_" + std::to_string(q) + "(S^Y)", induced_on_homology(SX.sset, SZ.sset, Sf, k, q),
                induced_on_homology(SX.sset, SZ.sset, Sg, k, q));

    const CNGrid GX = cn_bisimplicial(C, Y, cap, cap), GZ = cn_bisimplicial(C, Y2, cap, cap);
    const SimplicialSet DX = diagonal(GX.grid, cap), DZ = diagonal(GZ.grid, cap);
    const SimplicialMap Cf = diagonal_map(cn_map_from_ord(C, GX, GZ, f), cap);
    const SimplicialMap Cg = diagonal_map(cn_map_from_ord(C, GX, GZ, g), cap);
    for (int q = 0; q <= max_degree; ++q)
        compare("H_" + std::to_string(q) + "(diag CN)" + (q ? " = HH^Y_" + std::to_string(q - 1) : ""),
                induced_on_homology(DX, DZ, Cf, k, q), induced_on_homology(DX, DZ, Cg, k, q));

    // the trace is natural in Y
    const SimplicialMap TX = trace_map(SX, GX, cap), TZ = trace_map(SZ, GZ, cap);
    for (const auto& [name, a, b] : {std::tuple{"f", &Sf, &Cf}, std::tuple{"g", &Sg, &Cg}}) {
        if (compose_maps(TZ, *a).maps != compose_maps(*b, TX).maps)
            rep.add("trace.naturality", std::string("trace o S^") + name + " differs from CN^" + name + " o trace");
        else
            rep.note(std::string("trace o S^") + name + " = CN^" + name + " o trace");
    }

    if (Y.reduced() && Y2.reduced() && cap >= 2) {
        const FPGroup GZp = pi1_edge_path(SZ.sset);
        std::vector<std::vector<mpz_class>> rel;
        const int ngen = static_cast<int>(GZp.generators.size());
        for (const auto& r : GZp.relators) {
            std::vector<mpz_class> row(ngen);
            for (int x : r)
                row[std::abs(x) - 1] += x > 0 ? 1 : -1;
            rel.push_back(std::move(row));
        }
        int same = 0, abel = 0;
        for (int e : nondegenerate(SX.sset, 1)) {
            const int ef = Sf(1, e), eg = Sg(1, e);
            if (ef == eg) {
                ++same;
                continue;
            }
            auto vf = edge_vector(SZ.sset, ef), vg = edge_vector(SZ.sset, eg);
            for (int i = 0; i < ngen; ++i)
                vf[i] -= vg[i];
            if (in_row_lattice(rel, vf))
                ++abel;
            else
                rep.add("homotopy.pi1", "generator " + SX.sset.label(1, e) + " has different images");
        }
        rep.note("pi_1 generators: " + std::to_string(same) + " with equal images, " + std::to_string(abel) +
                 " equal after abelianization");
    } else {
        rep.note("pi_1 comparison skipped: Y or Y' is not reduced");
    }
    if (rep.ok())
        rep.note("certified: S^f and S^g agree on H_q and on diag CN homology for q <= " +
                 std::to_string(max_degree));
    return rep;
}

}  // namespace waldkit

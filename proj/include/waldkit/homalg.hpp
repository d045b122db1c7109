#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "waldkit/report.hpp"
#include "waldkit/simpset.hpp"

namespace waldkit {

// Coefficients: the rationals (p = 0) or the prime field F_p.
struct FieldSpec {
    int p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(int p);
    bool is_rational() const { return p == 0; }
    std::string to_string() const;
};

// "q" or "fp:P".
FieldSpec parse_field(const std::string& text);

using SparseColumn = std::vector<std::pair<int, long long>>;

// Integer matrix stored by sorted columns.
struct SparseMatrix {
    int rows = 0, cols = 0;
    std::vector<SparseColumn> col;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
    // Adds v at (r, c); columns are kept sorted with no zero entries.
    void add(int r, int c, long long v);
    bool is_zero() const;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);  // a·b
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scale(const SparseMatrix& a, long long s);

// Chains in degrees 0..top with boundaries ∂_n: C_n → C_{n-1}.
struct ChainComplex {
    std::string name;
    int top = 0;
    std::vector<int> dims;
    std::vector<std::vector<std::string>> labels;
    std::vector<SparseMatrix> boundary;  // boundary[0] is the zero map to C_{-1} = 0

    // ∂∂ = 0 over the integers.
    ValidationReport check() const;
};

using QVector = std::vector<std::pair<int, mpq_class>>;  // sparse, sorted
using QMatrix = std::vector<std::vector<mpq_class>>;     // dense, row-major

namespace detail {
struct Reducer;
}

// H_p with representative cycles.  Coordinates of a cycle are taken in the
// basis of reps, modulo boundaries.
struct HomologyBasis {
    FieldSpec field;
    int degree = 0;
    int dim = 0;
    int cycles = 0;          // dim ker ∂_p
    int boundary_rank = 0;   // rank ∂_{p+1}
    std::vector<QVector> reps;
    std::shared_ptr<const detail::Reducer> reducer;

    // Throws ConstructionError if z is not a cycle.
    std::vector<mpq_class> coordinates(const QVector& z) const;
};

// Exact rank of a boundary matrix over the field.
int rank(const SparseMatrix& m, FieldSpec k);
int rank(const QMatrix& m, FieldSpec k);

// H_p(CC); p + 1 must not exceed CC.top.
HomologyBasis homology(const ChainComplex& CC, int p, FieldSpec k);

// Basis = nondegenerate simplices; boundary = alternating face sum with
// degenerate faces dropped.  Throws ConstructionError if ∂∂ ≠ 0.
ChainComplex normalized_chains(const SimplicialSet& X, int cap);
ChainComplex normalized_chains(const SimplicialSet& X);

// The chain map of f on normalized chains in degree n.
SparseMatrix chain_map(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialMap& f, int n);

QVector apply(const SparseMatrix& m, const QVector& v);
// Matrix of a chain map (given in degree p) on homology: dst.dim × src.dim.
QMatrix induced_matrix(const HomologyBasis& src, const SparseMatrix& m, const HomologyBasis& dst);
QMatrix induced_on_homology(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialMap& f, FieldSpec k,
                            int p);

// Finitely presented groups.  A word is a list of signed generator indices:
// +(g+1) for g, -(g+1) for g^{-1}.
struct FPGroup {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;

    std::string to_string() const;
};

struct AbelianGroup {
    int rank = 0;
    std::vector<mpz_class> torsion;  // divisibility order, each > 1

    bool trivial() const { return rank == 0 && torsion.empty(); }
    std::string to_string() const;  // "0", "Z", "Z^2 + Z/2", ...
};

// Edge-path presentation of π_1 of a reduced simplicial set.
FPGroup pi1_edge_path(const SimplicialSet& X);
// Free and cyclic reduction, then removal of generators that occur exactly
// once in some relator.
FPGroup simplify(const FPGroup& G);
AbelianGroup abelianize(const FPGroup& G);
// Invariant factors of an integer matrix; returns the nonzero diagonal.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);

// Eilenberg–Zilber shuffle map C_p(X) ⊗ C_q(Z) → C_{p+q}(X × Z) on
// normalized bases; column index a·|NZ_q| + b.
SparseMatrix shuffle_map(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialSet& XZ, int p, int q);
// ∂∘sh = sh∘(∂ ⊗ 1 + (-1)^p 1 ⊗ ∂) for all p + q ≤ cap.
ValidationReport check_shuffle(const SimplicialSet& X, const SimplicialSet& Z, int cap);

// Normalized double complex (degenerate in either direction killed),
// totalized with d = ∂^h + (-1)^n ∂^v on entry (n, m).
struct TotalComplex {
    ChainComplex cc;
    // block[d]: for each n, the offset of entry (n, d - n) and its basis
    std::vector<std::vector<int>> offset;
    std::vector<std::vector<std::vector<int>>> basis;  // [n][m] -> element ids
};

TotalComplex total_complex(const BisimplicialSet& B);

struct MixedComplex {
    std::string name;
    int top = 0;
    std::vector<int> dims;
    std::vector<SparseMatrix> b;  // b[n]: M_n → M_{n-1}
    std::vector<SparseMatrix> B;  // B[n]: M_n → M_{n+1}, n < top

    ChainComplex hochschild() const;
    // b² = 0, B² = 0, bB + Bb = 0 over the integers.
    ValidationReport check() const;
};

// b = ∂^h + (-1)^n ∂^v on the normalized total complex of a cyclic ×
// simplicial grid; B = s_{-1} N horizontally with s_{-1} = t_{n+1} s_n and
// N = Σ_k (-1)^{nk} t^k.  Throws ConstructionError if an identity fails.
MixedComplex mixed_from_cyclic(const BisimplicialSet& B);

// The (b, B)-bicomplex: Tot_d = ⊕_j M_{d-2j}, column j.
ChainComplex bicomplex(const MixedComplex& M);

struct CyclicHomology {
    FieldSpec field;
    int reliable_top = 0;             // HH_d and HC_d are exact for d ≤ reliable_top
    std::vector<HomologyBasis> hh;    // per degree
    std::vector<HomologyBasis> hc;
    std::vector<QMatrix> I;           // I[d]: HH_d → HC_d
    std::vector<QMatrix> S;           // S[d]: HC_d → HC_{d-2} (empty for d < 2)
    std::vector<QMatrix> Bc;          // Bc[d]: HC_d → HH_{d+1}, d + 1 ≤ reliable_top
};

CyclicHomology cyclic_homology(const MixedComplex& M, FieldSpec k);

// Exactness of ... → HH_d → HC_d → HC_{d-2} → HH_{d-1} → ... for d ≤ top,
// reported with the ranks of each map.
ValidationReport sbi_exactness(const CyclicHomology& H, int top);

// Whether a sequence of dimensions, ending in zeros at its right end, can be
// the dimensions of an exact sequence.  Used as the rank-level test when no
// maps are available.
bool exact_dimensions_feasible(const std::vector<int>& dims);

std::string dump(const ChainComplex& CC);
std::string dump(const HomologyBasis& H, const ChainComplex& CC);

}  // namespace waldkit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waldkit/fincat.hpp"
#include "waldkit/homalg.hpp"
#include "waldkit/nerve.hpp"
#include "waldkit/ordstar.hpp"
#include "waldkit/sconstruct.hpp"

namespace waldkit {

struct InvariantValue {
    int degree = 0;
    int dim = -1;        // vector-space dimension, -1 for group-valued entries
    std::string text;    // "Q^2", "0", "Z", ...
};

// Values are only accepted inside [reliable_lo, reliable_hi].
struct InvariantReport {
    std::string invariant;    // "K0^Y", "HH^Y", ...
    std::string description;  // what order-Y construction was computed
    std::string instance;     // "chain2 / circle"
    std::string field;
    std::string caps;         // where the truncation came from
    int reliable_lo = 0, reliable_hi = -1;
    std::vector<InvariantValue> values;
    std::vector<std::string> pins;   // "id: expected X, got Y (match)"
    std::vector<std::string> notes;
    ValidationReport checks;

    void add_value(int degree, int dim, std::string text);
    bool pins_match() const;
    std::string text() const;
};

std::string dim_text(const FieldSpec& k, int dim);

struct K0Result {
    FPGroup presentation;   // edge-path presentation
    FPGroup simplified;
    AbelianGroup abelian;
    int h1_dim = 0;         // dim H_1(S^Y(C); Q), for the Hurewicz comparison
    InvariantReport report;
};

// π_1 |S^Y(C)| by edge paths; Y must be reduced and cap ≥ 2.
K0Result k0(const FinCofCategory& C, const SimplicialOrd& Y, int cap);

// H_q(S^Y(C)) for q ≤ hi.
InvariantReport s_homology(const FinCofCategory& C, const SimplicialOrd& Y, int hi, FieldSpec k);

// HH_p^Y = H_{p+1}(diag CN(S^Y(C))) for lo ≤ p ≤ hi, from the square grid
// with caps hi+2.  With crosscheck the total complex is compared in every
// degree.
InvariantReport hh(const FinCofCategory& C, const SimplicialOrd& Y, int lo, int hi, FieldSpec k,
                   bool crosscheck = false);

// Mixed complex of CN(S^Y(C)) truncated at total degree hi+2.
MixedComplex cn_mixed_complex(const FinCofCategory& C, const SimplicialOrd& Y, int hi);

// HC_p^Y = HC_{p+1}(M), lo ≤ p ≤ hi.
InvariantReport hc(const FinCofCategory& C, const SimplicialOrd& Y, int lo, int hi, FieldSpec k);

struct SBIResult {
    ValidationReport exactness;  // at every node up to HH^Y_hi
    ValidationReport control;    // HH^Y_p against unshifted HC_p(M); expected to fail
    ValidationReport aligned;    // same dimension test with the true alignment; expected to pass
    CyclicHomology homology;
};

SBIResult sbi_check(const FinCofCategory& C, const SimplicialOrd& Y, FieldSpec k, int hi);

// Dimensions along ... → HH_d → HC_d → HC_{d-2} → HH_{d-1} → ... → HH_0 → HC_0,
// starting at HH_top.
std::vector<int> sbi_dimension_sequence(const std::vector<int>& hh, const std::vector<int>& hc, int top);

// x ↦ (id_x, ..., id_x) from S^Y(C) into diag CN(S^Y(C)).
SimplicialMap trace_map(const SConstruction& S, const CNGrid& G, int cap);

struct TraceResult {
    SimplicialMap map;
    ValidationReport simpliciality;
    std::vector<int> degrees;          // p values
    std::vector<QMatrix> matrices;     // H_{p+1}(S^Y) → H_{p+1}(diag CN)
    // p = 0 composite on K_0 generators (columns) into HH_0^Y coordinates;
    // empty when Y is not reduced.
    std::vector<std::string> k0_generators;
    std::optional<QMatrix> k0_composite;
    std::optional<AbelianGroup> k0_abelian;
    InvariantReport report;
};

// Throws ConstructionError if the map is not simplicial.
TraceResult dennis_trace(const FinCofCategory& C, const SimplicialOrd& Y, int hi, FieldSpec k);

struct ProductKMap {
    SimplicialSet source;  // S^Y(C) ∧ S^Y(D)
    SimplicialSet target;  // S^Y(E)
    SimplicialMap map;
    ValidationReport report;
};

// Throws ConstructionError if F is not bi-exact, F(A,0) or F(0,B) is not the
// zero object, or the levelwise images fail to form a simplicial map.
ProductKMap product_k_map(const BiFunctor& F, const SimplicialOrd& Y, int cap);

// table[c][i][j]: coordinate c of the product of class i of H_a(X) and class
// j of H_b(Z), through the shuffle map into X × Z and then f: X × Z → W.
struct Pairing {
    int a = 0, b = 0;
    int dim_a = 0, dim_b = 0, dim_out = 0;
    std::vector<QMatrix> table;
    ValidationReport bilinearity;
};

Pairing homology_pairing(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialSet& W,
                         const SimplicialMap& f, int a, int b, FieldSpec k);

struct ProductHH {
    int p = 0, q = 0, degree = 0;  // degree = p + q + 1
    Pairing pairing;
    InvariantReport report;
};

ProductHH product_hh(const BiFunctor& F, const SimplicialOrd& Y, int p, int q, FieldSpec k);

// Certifies that S^f and S^g (and their CN images) agree on H_q and HH for
// q ≤ max_degree.  A homotopy rejected by the checker gives a report with a
// "homotopy.rejected" violation and no certification note.
ValidationReport homotopy_invariance(const FinCofCategory& C, const HomotopyInstance& inst, FieldSpec k,
                                     int max_degree);

}  // namespace waldkit

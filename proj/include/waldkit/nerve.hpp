#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "waldkit/fincat.hpp"
#include "waldkit/ordstar.hpp"
#include "waldkit/sconstruct.hpp"
#include "waldkit/simpset.hpp"

namespace waldkit {

// (f_0, ..., f_n) with f_k: A_{k+1} → A_k and f_n: A_0 → A_n.
using CNTuple = std::vector<MorId>;

struct TupleHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
};

struct CyclicSet {
    SimplicialSet X;
    std::vector<LevelFn> t;  // t[n]: X_n → X_n
};

// Checks t^{n+1} = 1 and the relations of t with faces and degeneracies.
ValidationReport validate_cyclic(const CyclicSet& X);

struct CyclicNerve {
    CyclicSet cs;
    std::vector<std::vector<CNTuple>> elements;  // per level
    std::vector<std::unordered_map<CNTuple, int, TupleHash>> index;

    int find(int n, const CNTuple& f) const;
};

// The cyclic nerve truncated at cap.  Throws ConstructionError when the
// cyclic relations fail.  The basepoint is the identity loop on the zero object.
CyclicNerve cyclic_nerve(const FinCategory& A, int cap);

// Objects of a tuple: A_k = target of f_k.
std::vector<ObjId> cn_objects(const FinCategory& A, const CNTuple& f);

// CN(S^Y(C)): column m is the cyclic nerve of S(C)(Y_m).
struct CNGrid {
    SimplicialOrd Y;
    std::vector<std::shared_ptr<const SCategory>> cats;  // per column m
    std::vector<CyclicNerve> columns;                   // per column m, truncated at grid.hcap(m)
    BisimplicialSet grid;

    const CNTuple& element(int n, int m, int k) const { return columns[m].elements[n][k]; }
};

// With total ≥ 0 only entries with n + m ≤ total are built.
CNGrid cn_bisimplicial(const FinCofCategory& C, const SimplicialOrd& Y, int cap_h, int cap_v, int total = -1);

// Per-column cyclic relations of a grid.
ValidationReport validate_cyclic_rows(const BisimplicialSet& B);

// Action of a functor on cyclic nerve tuples.
CNTuple apply_to_tuple(const CatMap& F, const CNTuple& f);

// The bisimplicial map CN(S^Y(C)) → CN(S^{Y'}(C)) induced by a levelwise map
// f: Y → Y'.  Throws if f is not simplicial.
BisimplicialMap cn_map_from_ord(const FinCofCategory& C, const CNGrid& X, const CNGrid& Z, const LevelMap& f);

// F acting on S-level categories: chains (a_i), (b_i) ↦ (F(a_i, b_i)).
CatMap s_bifunctor_level(const BiFunctor& F, const SCategory& SC, const SCategory& SD, const SCategory& SE);

// The elementwise map from the levelwise product of CN(S^Y(C)) and CN(S^Y(D))
// to CN(S^Y(E)).  Throws ConstructionError if F is not bi-exact or the map is
// not bisimplicial.
BisimplicialMap cn_of_bifunctor(const BiFunctor& F, const CNGrid& X, const CNGrid& Z, const CNGrid& W);

// Debug dump of grid sizes with a few sample elements.
std::string dump(const CNGrid& G, int samples = 2);

}  // namespace waldkit

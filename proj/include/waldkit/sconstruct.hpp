#pragma once

#include <map>
#include <string>
#include <vector>

#include "waldkit/fincat.hpp"
#include "waldkit/ordstar.hpp"
#include "waldkit/simpset.hpp"

namespace waldkit {

// A chain 0 = A_0 ↣ A_1 ↣ ... ↣ A_n with its canonical quotient grid.
struct SObject {
    int degree = 0;
    std::vector<MorId> chain;     // a_0..a_{n-1}
    std::vector<ObjId> objects;   // A_0..A_n
    std::vector<ObjId> grid;      // A_{ij}, i ≤ j
    std::vector<MorId> quot;      // q_{ij}: A_j → A_{ij}
    std::vector<MorId> structural;// A_{ij} ↣ A_{ik}, i ≤ j ≤ k

    ObjId at(int i, int j) const { return grid[idx(i, j)]; }
    MorId q(int i, int j) const { return quot[idx(i, j)]; }
    MorId cof(int i, int j, int k) const {
        return structural[static_cast<std::size_t>(idx(i, j)) * (degree + 1) + k];
    }

    friend bool operator==(const SObject& a, const SObject& b) {
        return a.degree == b.degree && a.chain == b.chain;
    }

    std::string to_string(const FinCategory& C) const;
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * (degree + 1) + j; }
};

// Completes a chain of cofibrations starting at the zero object.  With verify
// set, every A_{ij} ↣ A_{ik} ↠ A_{jk} is checked to be a cofibration sequence.
SObject canonical_quotients(const FinCofCategory& C, const std::vector<MorId>& chain,
                            bool verify = true);

// All chains of n cofibrations from 0; the zero chain comes first, the rest
// in lexicographic order of morphism ids.
std::vector<SObject> enumerate_s_objects(const FinCofCategory& C, int n);

// ν(j) = #{e ∈ 1..n : lift(φ)(e) > m - j}, j = 0..m.
std::vector<int> chain_index(const OrdMap& phi);

// The chain of S(C)(φ)(x): B_j = A_{ν(0), ν(j)}.
std::vector<MorId> induced_chain(const SObject& x, const OrdMap& phi);
SObject apply_ord_map(const FinCofCategory& C, const SObject& x, const OrdMap& phi);

// Object set of S(C)([n]) with a lookup by chain.
class SLevel {
public:
    SLevel() = default;
    SLevel(const FinCofCategory& C, int n);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(objects_.size()); }
    const SObject& operator[](int k) const { return objects_[k]; }
    const std::vector<SObject>& objects() const { return objects_; }
    int index_of(const std::vector<MorId>& chain) const;

private:
    int degree_ = 0;
    std::vector<SObject> objects_;
    std::map<std::vector<MorId>, int> index_;
};

SLevel s_level(const FinCofCategory& C, OrdSet Z);

// S(C)([m]) as a category: morphisms are ladders f_j: A_j → A'_j commuting
// with the chain cofibrations.  Object 0 is the zero chain.
struct SCategory {
    SLevel level;
    FinCategory cat;
    std::vector<std::vector<MorId>> ladders;  // components f_0..f_m
    std::map<std::pair<std::pair<int, int>, std::vector<MorId>>, MorId> ladder_index;

    MorId find_ladder(int x, int y, const std::vector<MorId>& comps) const;
};

SCategory s_category(const FinCofCategory& C, int m);

// A functor given by its object and morphism tables.
struct CatMap {
    std::vector<int> on_objects;
    std::vector<int> on_morphisms;
};

// S(C)(φ) on S(C)([n]) → S(C)([m]).  Morphisms are transported through the
// induced quotient maps, which must be unique.
CatMap s_functor(const FinCofCategory& C, const SCategory& from, const SCategory& to, const OrdMap& phi);

struct SConstruction {
    SimplicialOrd Y;
    std::vector<SLevel> levels;
    SimplicialSet sset;
};

SConstruction s_simplicial_set(const FinCofCategory& C, const SimplicialOrd& Y, int cap);

// S^f(C) for a levelwise map f: Y → Y'.  Throws if f is not simplicial.
SimplicialMap map_from_ord(const FinCofCategory& C, const SConstruction& X, const SConstruction& Z,
                           const LevelMap& f);
// S-level images of a homotopy of Ord*-maps.  Throws if H does not validate.
SimplicialHomotopy homotopy_from_ord(const FinCofCategory& C, const SConstruction& X, const SConstruction& Z,
                                     const LevelMap& f, const LevelMap& g, const OrdHomotopy& H);

}  // namespace waldkit

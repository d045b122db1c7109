#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "waldkit/report.hpp"

namespace waldkit {

using LevelFn = std::vector<int>;

// A pointed simplicial set truncated at a cap, stored with all simplices
// (degenerate ones included).
struct SimplicialSet {
    std::string name;
    int cap = 0;
    std::vector<int> sizes;
    std::vector<std::vector<LevelFn>> faces;         // faces[n][i]: X_n → X_{n-1}
    std::vector<std::vector<LevelFn>> degeneracies;  // degeneracies[n][i]: X_n → X_{n+1}, n < cap
    std::vector<int> basepoint;                      // per level
    std::vector<std::vector<std::string>> labels;    // optional

    int d(int n, int i, int x) const { return faces[n][i][x]; }
    int s(int n, int i, int x) const { return degeneracies[n][i][x]; }
    std::string label(int n, int x) const;
};

struct SimplicialMap {
    int cap = 0;
    std::vector<LevelFn> maps;  // maps[n]: X_n → Z_n
    int operator()(int n, int x) const { return maps[n][x]; }
};

// h[n][i]: X_n → Z_{n+1}, 0 ≤ i ≤ n < cap (same conventions as OrdHomotopy).
struct SimplicialHomotopy {
    std::vector<std::vector<LevelFn>> h;
};

// Entries (n, m) exist for n ≤ cap_h, m ≤ cap_v and, when total ≥ 0,
// n + m ≤ total.  Missing entries have size 0 and no structure maps.
struct BisimplicialSet {
    std::string name;
    int cap_h = 0, cap_v = 0;
    int total = -1;
    std::vector<std::vector<int>> sizes;  // sizes[n][m]
    // [n][m][i]
    std::vector<std::vector<std::vector<LevelFn>>> hface, hdeg, vface, vdeg;
    // cyclic operators in the horizontal direction, [n][m]; empty if none
    std::vector<std::vector<LevelFn>> cyclic;
    std::vector<std::vector<int>> basepoint;

    bool is_cyclic() const { return !cyclic.empty(); }
    bool has(int n, int m) const {
        return n >= 0 && m >= 0 && n <= cap_h && m <= cap_v && (total < 0 || n + m <= total);
    }
    int hcap(int m) const { return total < 0 ? cap_h : std::min(cap_h, total - m); }
    int vcap(int n) const { return total < 0 ? cap_v : std::min(cap_v, total - n); }
};

struct BisimplicialMap {
    int cap_h = 0, cap_v = 0;
    std::vector<std::vector<LevelFn>> maps;  // [n][m]
};

LevelFn compose_fn(const LevelFn& g, const LevelFn& f);
LevelFn identity_fn(int size);

ValidationReport validate(const SimplicialSet& X);
ValidationReport validate_map(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialMap& f);
ValidationReport validate_homotopy(const SimplicialSet& X, const SimplicialSet& Z, const SimplicialMap& f,
                                   const SimplicialMap& g, const SimplicialHomotopy& H);
ValidationReport validate(const BisimplicialSet& B);

SimplicialSet point(int cap);
SimplicialSet truncate(const SimplicialSet& X, int cap);
SimplicialSet smash(const SimplicialSet& X, const SimplicialSet& Z);
SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Z);
// Index of (x, z) in product(X, Z) at any level with |Z_n| = zsize.
inline int product_index(int x, int z, int zsize) { return x * zsize + z; }
SimplicialSet diagonal(const BisimplicialSet& B, int cap);

// Levelwise product grid, index product_index(x, z, |Z_{n,m}|).  Cyclic
// operators are paired when both factors carry them.
BisimplicialSet product(const BisimplicialSet& X, const BisimplicialSet& Z);
ValidationReport validate_map(const BisimplicialSet& X, const BisimplicialSet& Z, const BisimplicialMap& f);
SimplicialMap diagonal_map(const BisimplicialMap& f, int cap);

SimplicialMap identity_map(const SimplicialSet& X);
SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const SimplicialSet& Z2);

std::vector<char> degenerate_mask(const SimplicialSet& X, int n);
std::vector<int> nondegenerate(const SimplicialSet& X, int n);

// Per-level simplex tables with face and degeneracy images.
std::string dump(const SimplicialSet& X);

}  // namespace waldkit

#pragma once

#include <string>
#include <vector>

#include "waldkit/report.hpp"

namespace waldkit {

// [n] = {0 < 1 < ... < n}, basepoint 0.
struct OrdSet {
    int size = 0;
    friend bool operator==(OrdSet, OrdSet) = default;
};

// A pointed map [n] → [m] given by its images.
//
// Besides monotone maps, the basepoint may also absorb a final run of
// elements: the images read 0...0, then a weakly increasing run of nonzero
// values, then 0...0.  Sending the trailing zeros to a second copy m+1 of the
// basepoint turns such a map into a monotone map [n] → [m+1] fixing 0 (the
// lift).  These maps are closed under composition, and the monotone ones are
// exactly those without a trailing run.
class OrdMap {
public:
    OrdMap() = default;
    OrdMap(int source, int target, std::vector<int> images);

    static OrdMap identity(int n);

    int source() const { return source_; }
    int target() const { return target_; }
    const std::vector<int>& images() const { return images_; }
    int operator()(int i) const { return images_.at(i); }

    // Shape and value constraints described above.
    bool admissible() const;
    bool is_monotone() const;
    // Images with trailing basepoint elements sent to target()+1.
    std::vector<int> lift() const;

    friend bool operator==(const OrdMap&, const OrdMap&) = default;
    friend auto operator<=>(const OrdMap&, const OrdMap&) = default;

    std::string to_string() const;

private:
    int source_ = 0;
    int target_ = 0;
    std::vector<int> images_{0};
};

OrdMap compose_ord(const OrdMap& g, const OrdMap& f);

// All admissible maps [n] → [m], or only the monotone ones.
std::vector<OrdMap> all_ord_maps(int n, int m, bool monotone_only = false);

// A simplicial object of Ord* truncated at a cap N.
struct SimplicialOrd {
    std::string name;
    int cap = 0;
    std::vector<int> levels;                       // Y_n = [levels[n]]
    std::vector<std::vector<OrdMap>> faces;        // faces[n][i]: Y_n → Y_{n-1}, n ≥ 1
    std::vector<std::vector<OrdMap>> degeneracies; // degeneracies[n][i]: Y_n → Y_{n+1}, n < cap

    const OrdMap& d(int n, int i) const { return faces.at(n).at(i); }
    const OrdMap& s(int n, int i) const { return degeneracies.at(n).at(i); }
    bool reduced() const { return levels.at(0) == 0; }
};

ValidationReport validate_Y(const SimplicialOrd& Y);

SimplicialOrd simplicial_circle(int cap);
SimplicialOrd constant_point(int cap);  // every level [0]
SimplicialOrd point_plus(int cap);      // Δ[0] with a disjoint basepoint: every level [1]
SimplicialOrd interval_plus(int cap);   // Δ[1] with a disjoint basepoint: Y_n = [n+2]
SimplicialOrd truncate(const SimplicialOrd& Y, int cap);

// Levelwise maps f_n: Y_n → Y'_n for n ≤ cap.
using LevelMap = std::vector<OrdMap>;

ValidationReport validate_level_map(const SimplicialOrd& Y, const SimplicialOrd& Y2, const LevelMap& f);
LevelMap identity_level_map(const SimplicialOrd& Y);

// h[n][i]: Y_n → Y'_{n+1}, 0 ≤ i ≤ n, n < cap.  Conventions:
//   d_0 h_0 = f,  d_{n+1} h_n = g,
//   d_i h_j = h_{j-1} d_i (i < j),  d_{j+1} h_{j+1} = d_{j+1} h_j,  d_i h_j = h_j d_{i-1} (i > j+1),
//   s_i h_j = h_{j+1} s_i (i ≤ j),  s_i h_j = h_j s_{i-1} (i > j).
struct OrdHomotopy {
    std::vector<std::vector<OrdMap>> h;
    const OrdMap& at(int n, int i) const { return h.at(n).at(i); }
};

ValidationReport validate_homotopy(const SimplicialOrd& Y, const SimplicialOrd& Y2, const LevelMap& f,
                                   const LevelMap& g, const OrdHomotopy& H);
OrdHomotopy constant_homotopy(const SimplicialOrd& Y, const SimplicialOrd& Y2, const LevelMap& f);

// A worked example: the two vertex inclusions point_plus → interval_plus and
// the homotopy between them.
struct HomotopyInstance {
    SimplicialOrd Y, Y2;
    LevelMap f, g;
    OrdHomotopy H;
};
HomotopyInstance vertex_homotopy(int cap);

}  // namespace waldkit

#pragma once

#include <string>

#include "waldkit/report.hpp"

namespace waldkit::detail {

// Scans the simplicial identities of a cap-truncated simplicial object whose
// structure maps are values of some map type M.
//   d(n, i): level n → n-1,  s(n, i): level n → n+1,  id(n),  comp(g, f) = g∘f.
template <class D, class S, class Id, class Comp>
void check_simplicial_identities(int cap, D d, S s, Id id, Comp comp, ValidationReport& rep) {
    auto tag = [](const char* what, int n, int i, int j) {
        return std::string(what) + " at level " + std::to_string(n) + ", i=" + std::to_string(i) +
               ", j=" + std::to_string(j);
    };
    for (int n = 2; n <= cap; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!(comp(d(n - 1, i), d(n, j)) == comp(d(n - 1, j - 1), d(n, i))))
                    rep.add("identity.dd", tag("d_i d_j = d_{j-1} d_i", n, i, j));
    for (int n = 0; n < cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const auto lhs = comp(d(n + 1, i), s(n, j));
                if (i == j || i == j + 1) {
                    if (!(lhs == id(n)))
                        rep.add("identity.ds", tag("d_j s_j = d_{j+1} s_j = id", n, i, j));
                } else if (i < j) {
                    if (n >= 1 && !(lhs == comp(s(n - 1, j - 1), d(n, i))))
                        rep.add("identity.ds", tag("d_i s_j = s_{j-1} d_i", n, i, j));
                } else if (n >= 1 && !(lhs == comp(s(n - 1, j), d(n, i - 1)))) {
                    rep.add("identity.ds", tag("d_i s_j = s_j d_{i-1}", n, i, j));
                }
            }
    for (int n = 0; n + 1 < cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (!(comp(s(n + 1, i), s(n, j)) == comp(s(n + 1, j + 1), s(n, i))))
                    rep.add("identity.ss", tag("s_i s_j = s_{j+1} s_i", n, i, j));
}

// Scans the homotopy identities for h(n, i): X_n → Z_{n+1}.
// dX/sX are the source structure maps, dZ/sZ the target ones.
template <class H, class F, class G, class DX, class SX, class DZ, class SZ, class Comp>
void check_homotopy_identities(int cap, H h, F f, G g, DX dX, SX sX, DZ dZ, SZ sZ, Comp comp,
                               ValidationReport& rep) {
    auto tag = [](const char* what, int n, int i, int j) {
        return std::string(what) + " at level " + std::to_string(n) + ", i=" + std::to_string(i) +
               ", j=" + std::to_string(j);
    };
    for (int n = 0; n < cap; ++n) {
        if (!(comp(dZ(n + 1, 0), h(n, 0)) == f(n)))
            rep.add("homotopy.boundary", tag("d_0 h_0 = f", n, 0, 0));
        if (!(comp(dZ(n + 1, n + 1), h(n, n)) == g(n)))
            rep.add("homotopy.boundary", tag("d_{n+1} h_n = g", n, n + 1, n));
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const auto lhs = comp(dZ(n + 1, i), h(n, j));
                if (i < j) {
                    if (!(lhs == comp(h(n - 1, j - 1), dX(n, i))))
                        rep.add("homotopy.face", tag("d_i h_j = h_{j-1} d_i", n, i, j));
                } else if (i == j) {
                    if (j > 0 && !(lhs == comp(dZ(n + 1, i), h(n, j - 1))))
                        rep.add("homotopy.face", tag("d_j h_j = d_j h_{j-1}", n, i, j));
                } else if (i > j + 1) {
                    if (!(lhs == comp(h(n - 1, j), dX(n, i - 1))))
                        rep.add("homotopy.face", tag("d_i h_j = h_j d_{i-1}", n, i, j));
                }
            }
        if (n + 1 < cap) {
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    const auto lhs = comp(sZ(n + 1, i), h(n, j));
                    if (i <= j) {
                        if (!(lhs == comp(h(n + 1, j + 1), sX(n, i))))
                            rep.add("homotopy.degeneracy", tag("s_i h_j = h_{j+1} s_i", n, i, j));
                    } else if (!(lhs == comp(h(n + 1, j), sX(n, i - 1)))) {
                        rep.add("homotopy.degeneracy", tag("s_i h_j = h_j s_{i-1}", n, i, j));
                    }
                }
        }
    }
}

}  // namespace waldkit::detail

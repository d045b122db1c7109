#include "waldkit/ordstar.hpp"

#include <sstream>

#include "waldkit/detail/identities.hpp"

namespace waldkit {

OrdMap::OrdMap(int source, int target, std::vector<int> images)
    : source_(source), target_(target), images_(std::move(images)) {
    if (source_ < 0 || target_ < 0)
        throw StructuralError("negative OrdSet size");
    if (static_cast<int>(images_.size()) != source_ + 1)
        throw StructuralError("OrdMap image count " + std::to_string(images_.size()) +
                              " does not match source [" + std::to_string(source_) + "]");
    for (int v : images_)
        if (v < 0 || v > target_)
            throw StructuralError("OrdMap image " + std::to_string(v) + " outside [" +
                                  std::to_string(target_) + "]");
}

OrdMap OrdMap::identity(int n) {
    std::vector<int> im(n + 1);
    for (int i = 0; i <= n; ++i)
        im[i] = i;
    return OrdMap(n, n, std::move(im));
}

bool OrdMap::admissible() const {
    if (images_[0] != 0)
        return false;
    // phase 0: leading zeros, 1: nonzero run, 2: trailing zeros
    int phase = 0, last = 0;
    for (int i = 1; i <= source_; ++i) {
        const int v = images_[i];
        if (v == 0) {
            if (phase == 1)
                phase = 2;
        } else {
            if (phase == 2 || v < last)
                return false;
            phase = 1;
            last = v;
        }
    }
    return true;
}

bool OrdMap::is_monotone() const {
    if (images_[0] != 0)
        return false;
    for (int i = 1; i <= source_; ++i)
        if (images_[i] < images_[i - 1])
            return false;
    return true;
}

std::vector<int> OrdMap::lift() const {
    std::vector<int> out = images_;
    int last_nonzero = 0;
    for (int i = 1; i <= source_; ++i)
        if (images_[i] != 0)
            last_nonzero = i;
    if (last_nonzero > 0)
        for (int i = last_nonzero + 1; i <= source_; ++i)
            out[i] = target_ + 1;
    return out;
}

std::string OrdMap::to_string() const {
    std::ostringstream os;
    os << "[" << source_ << "]->[" << target_ << "](";
    for (int i = 0; i <= source_; ++i)
        os << (i ? "," : "") << images_[i];
    os << ")";
    return os.str();
}

OrdMap compose_ord(const OrdMap& g, const OrdMap& f) {
    if (f.target() != g.source())
        throw StructuralError("compose_ord size mismatch: " + g.to_string() + " after " + f.to_string());
    std::vector<int> im(f.source() + 1);
    for (int i = 0; i <= f.source(); ++i)
        im[i] = g(f(i));
    return OrdMap(f.source(), g.target(), std::move(im));
}

std::vector<OrdMap> all_ord_maps(int n, int m, bool monotone_only) {
    std::vector<OrdMap> out;
    std::vector<int> im(n + 1, 0);
    // odometer over [m]^n for positions 1..n
    while (true) {
        OrdMap f(n, m, im);
        if (monotone_only ? f.is_monotone() : f.admissible())
            out.push_back(f);
        int pos = n;
        while (pos >= 1 && im[pos] == m)
            im[pos--] = 0;
        if (pos < 1)
            break;
        ++im[pos];
    }
    return out;
}

ValidationReport validate_Y(const SimplicialOrd& Y) {
    ValidationReport rep;
    const int N = Y.cap;
    if (N < 0 || static_cast<int>(Y.levels.size()) != N + 1 ||
        static_cast<int>(Y.faces.size()) != N + 1 || static_cast<int>(Y.degeneracies.size()) != N) {
        rep.add("shape", "level, face or degeneracy tables do not match the cap");
        return rep;
    }
    bool shape_ok = true;
    auto check_map = [&](const OrdMap& f, int from, int to, const std::string& label) {
        if (f.source() != Y.levels[from] || f.target() != Y.levels[to]) {
            rep.add("shape", label + " has wrong source or target");
            shape_ok = false;
        } else if (!f.admissible()) {
            rep.add("map", label + " = " + f.to_string() + " is not an admissible pointed map");
        }
    };
    for (int n = 0; n <= N; ++n) {
        if (static_cast<int>(Y.faces[n].size()) != (n == 0 ? 0 : n + 1)) {
            rep.add("shape", "level " + std::to_string(n) + " has the wrong number of faces");
            return rep;
        }
        for (int i = 0; n > 0 && i <= n; ++i)
            check_map(Y.faces[n][i], n, n - 1, "d_" + std::to_string(i) + " at level " + std::to_string(n));
        if (n < N) {
            if (static_cast<int>(Y.degeneracies[n].size()) != n + 1) {
                rep.add("shape", "level " + std::to_string(n) + " has the wrong number of degeneracies");
                return rep;
            }
            for (int i = 0; i <= n; ++i)
                check_map(Y.degeneracies[n][i], n, n + 1,
                          "s_" + std::to_string(i) + " at level " + std::to_string(n));
        }
    }
    if (!shape_ok)
        return rep;
    detail::check_simplicial_identities(
        N, [&](int n, int i) -> const OrdMap& { return Y.d(n, i); },
        [&](int n, int i) -> const OrdMap& { return Y.s(n, i); },
        [&](int n) { return OrdMap::identity(Y.levels[n]); }, compose_ord, rep);
    return rep;
}

namespace {

// Build a Y from element-level formulas.  size(n) gives Y_n = [size(n)]; face
// and degeneracy formulas take (n, i, element) with element ≥ 1 and return an
// element of the target, 0 meaning the basepoint.
template <class Size, class Face, class Degen>
SimplicialOrd build_Y(std::string name, int cap, Size size, Face face, Degen degen) {
    SimplicialOrd Y;
    Y.name = std::move(name);
    Y.cap = cap;
    for (int n = 0; n <= cap; ++n)
        Y.levels.push_back(size(n));
    Y.faces.resize(cap + 1);
    Y.degeneracies.resize(cap);
    for (int n = 0; n <= cap; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i) {
            std::vector<int> im(Y.levels[n] + 1, 0);
            for (int e = 1; e <= Y.levels[n]; ++e)
                im[e] = face(n, i, e);
            Y.faces[n].emplace_back(Y.levels[n], Y.levels[n - 1], std::move(im));
        }
        for (int i = 0; n < cap && i <= n; ++i) {
            std::vector<int> im(Y.levels[n] + 1, 0);
            for (int e = 1; e <= Y.levels[n]; ++e)
                im[e] = degen(n, i, e);
            Y.degeneracies[n].emplace_back(Y.levels[n], Y.levels[n + 1], std::move(im));
        }
    }
    return Y;
}

}  // namespace

// Δ[1]/∂Δ[1].  An n-simplex of Δ[1] is a jump position k ∈ 0..n+1; the
// nondegenerate-boundary ones k = 0, n+1 are the basepoint.  Element e of
// [n] stands for k = n+1-e.
SimplicialOrd simplicial_circle(int cap) {
    if (cap < 1)
        throw StructuralError("simplicial_circle needs cap >= 1");
    return build_Y(
        "circle", cap, [](int n) { return n; },
        [](int n, int i, int e) {
            const int k = n + 1 - e;
            const int k2 = k <= i ? k : k - 1;
            return (k2 == 0 || k2 == n) ? 0 : n - k2;
        },
        [](int n, int i, int e) {
            const int k = n + 1 - e;
            const int k2 = k <= i ? k : k + 1;
            return n + 2 - k2;
        });
}

SimplicialOrd constant_point(int cap) {
    return build_Y(
        "const0", cap, [](int) { return 0; }, [](int, int, int) { return 0; },
        [](int, int, int) { return 0; });
}

SimplicialOrd point_plus(int cap) {
    return build_Y(
        "point_plus", cap, [](int) { return 1; }, [](int, int, int) { return 1; },
        [](int, int, int) { return 1; });
}

// Element e = k+1 for the jump position k ∈ 0..n+1.
SimplicialOrd interval_plus(int cap) {
    return build_Y(
        "interval_plus", cap, [](int n) { return n + 2; },
        [](int, int i, int e) {
            const int k = e - 1;
            return (k <= i ? k : k - 1) + 1;
        },
        [](int, int i, int e) {
            const int k = e - 1;
            return (k <= i ? k : k + 1) + 1;
        });
}

SimplicialOrd truncate(const SimplicialOrd& Y, int cap) {
    if (cap > Y.cap)
        throw ConstructionError("cannot truncate " + Y.name + " above its cap");
    SimplicialOrd out;
    out.name = Y.name;
    out.cap = cap;
    out.levels.assign(Y.levels.begin(), Y.levels.begin() + cap + 1);
    out.faces.assign(Y.faces.begin(), Y.faces.begin() + cap + 1);
    out.degeneracies.assign(Y.degeneracies.begin(), Y.degeneracies.begin() + cap);
    return out;
}

ValidationReport validate_level_map(const SimplicialOrd& Y, const SimplicialOrd& Y2, const LevelMap& f) {
    ValidationReport rep;
    const int N = std::min(Y.cap, Y2.cap);
    if (static_cast<int>(f.size()) < N + 1) {
        rep.add("shape", "level map is shorter than the cap");
        return rep;
    }
    for (int n = 0; n <= N; ++n) {
        if (f[n].source() != Y.levels[n] || f[n].target() != Y2.levels[n]) {
            rep.add("shape", "f_" + std::to_string(n) + " has wrong source or target");
            return rep;
        }
        if (!f[n].admissible())
            rep.add("map", "f_" + std::to_string(n) + " is not admissible");
    }
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            if (compose_ord(Y2.d(n, i), f[n]) != compose_ord(f[n - 1], Y.d(n, i)))
                rep.add("commute", "f does not commute with d_" + std::to_string(i) + " at level " +
                                       std::to_string(n));
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i)
            if (compose_ord(Y2.s(n, i), f[n]) != compose_ord(f[n + 1], Y.s(n, i)))
                rep.add("commute", "f does not commute with s_" + std::to_string(i) + " at level " +
                                       std::to_string(n));
    return rep;
}

LevelMap identity_level_map(const SimplicialOrd& Y) {
    LevelMap f;
    for (int n = 0; n <= Y.cap; ++n)
        f.push_back(OrdMap::identity(Y.levels[n]));
    return f;
}

ValidationReport validate_homotopy(const SimplicialOrd& Y, const SimplicialOrd& Y2, const LevelMap& f,
                                   const LevelMap& g, const OrdHomotopy& H) {
    ValidationReport rep;
    rep.merge(validate_level_map(Y, Y2, f), "f");
    rep.merge(validate_level_map(Y, Y2, g), "g");
    if (!rep.ok())
        return rep;
    const int N = std::min(Y.cap, Y2.cap);
    if (static_cast<int>(H.h.size()) < N)
        throw StructuralError("homotopy has " + std::to_string(H.h.size()) + " levels, need " +
                              std::to_string(N));
    for (int n = 0; n < N; ++n) {
        if (static_cast<int>(H.h[n].size()) != n + 1)
            throw StructuralError("homotopy level " + std::to_string(n) + " needs " +
                                  std::to_string(n + 1) + " maps");
        for (int i = 0; i <= n; ++i) {
            const OrdMap& h = H.h[n][i];
            if (h.source() != Y.levels[n] || h.target() != Y2.levels[n + 1])
                throw StructuralError("h_{" + std::to_string(i) + "," + std::to_string(n) +
                                      "} has wrong source or target");
            if (!h.admissible())
                rep.add("map", "h_{" + std::to_string(i) + "," + std::to_string(n) +
                                   "} is not admissible");
        }
    }
    detail::check_homotopy_identities(
        N, [&](int n, int i) -> const OrdMap& { return H.at(n, i); },
        [&](int n) -> const OrdMap& { return f[n]; }, [&](int n) -> const OrdMap& { return g[n]; },
        [&](int n, int i) -> const OrdMap& { return Y.d(n, i); },
        [&](int n, int i) -> const OrdMap& { return Y.s(n, i); },
        [&](int n, int i) -> const OrdMap& { return Y2.d(n, i); },
        [&](int n, int i) -> const OrdMap& { return Y2.s(n, i); }, compose_ord, rep);
    return rep;
}

OrdHomotopy constant_homotopy(const SimplicialOrd& Y, const SimplicialOrd& Y2, const LevelMap& f) {
    OrdHomotopy H;
    const int N = std::min(Y.cap, Y2.cap);
    for (int n = 0; n < N; ++n) {
        H.h.emplace_back();
        for (int i = 0; i <= n; ++i)
            H.h[n].push_back(compose_ord(Y2.s(n, i), f[n]));
    }
    return H;
}

HomotopyInstance vertex_homotopy(int cap) {
    HomotopyInstance inst{point_plus(cap), interval_plus(cap), {}, {}, {}};
    for (int n = 0; n <= cap; ++n) {
        inst.f.emplace_back(1, n + 2, std::vector<int>{0, 1});
        inst.g.emplace_back(1, n + 2, std::vector<int>{0, n + 2});
    }
    for (int n = 0; n < cap; ++n) {
        inst.H.h.emplace_back();
        for (int i = 0; i <= n; ++i)
            inst.H.h[n].emplace_back(1, n + 3, std::vector<int>{0, i + 2});
    }
    return inst;
}

}  // namespace waldkit

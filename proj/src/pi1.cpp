#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "waldkit/homalg.hpp"

namespace waldkit {

namespace {

using Word = std::vector<int>;

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out)
        x = -x;
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    std::size_t a = 0, b = w.size();
    while (b - a >= 2 && w[a] == -w[b - 1]) {
        ++a;
        --b;
    }
    return Word(w.begin() + a, w.begin() + b);
}

std::string word_string(const Word& w, const std::vector<std::string>& gens) {
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k)
            s += ' ';
        s += gens[std::abs(w[k]) - 1];
        if (w[k] < 0)
            s += "^-1";
    }
    return s;
}

}  // namespace

std::string FPGroup::to_string() const {
    std::string s = "<";
    for (std::size_t k = 0; k < generators.size(); ++k)
        s += (k ? ", " : "") + generators[k];
    s += " |";
    for (std::size_t k = 0; k < relators.size(); ++k)
        s += (k ? ", " : " ") + word_string(relators[k], generators);
    return s + ">";
}

std::string AbelianGroup::to_string() const {
    if (trivial())
        return "0";
    std::vector<std::string> parts;
    if (rank == 1)
        parts.push_back("Z");
    else if (rank > 1)
        parts.push_back("Z^" + std::to_string(rank));
    for (const auto& t : torsion)
        parts.push_back("Z/" + t.get_str());
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k)
        s += (k ? " + " : "") + parts[k];
    return s;
}

FPGroup pi1_edge_path(const SimplicialSet& X) {
    if (X.cap < 2)
        throw ConstructionError("edge-path group of " + X.name + " needs cap >= 2");
    if (X.sizes[0] != 1)
        throw ConstructionError(X.name + " is not reduced: level 0 has " + std::to_string(X.sizes[0]) +
                                " vertices (Y_0 must be [0] so the realization is connected with one vertex)");
    FPGroup G;
    const auto edges = nondegenerate(X, 1);
    std::vector<int> gen(X.sizes[1], 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        gen[edges[k]] = static_cast<int>(k) + 1;
        G.generators.push_back(X.label(1, edges[k]));
    }
    for (int s : nondegenerate(X, 2)) {
        Word w;
        auto push = [&](int e, bool inv) {
            if (gen[e])
                w.push_back(inv ? -gen[e] : gen[e]);
        };
        push(X.d(2, 2, s), false);
        push(X.d(2, 0, s), false);
        push(X.d(2, 1, s), true);
        w = free_reduce(w);
        if (!w.empty())
            G.relators.push_back(std::move(w));
    }
    return G;
}

FPGroup simplify(const FPGroup& in) {
    FPGroup G = in;
    for (bool changed = true; changed;) {
        changed = false;
        std::set<Word> seen;
        std::vector<Word> rels;
        for (const auto& r : G.relators) {
            Word w = cyclic_reduce(r);
            if (!w.empty() && seen.insert(w).second && !seen.count(inverse(w)))
                rels.push_back(std::move(w));
        }
        G.relators = std::move(rels);
        // a generator occurring exactly once in some relator can be solved for
        for (std::size_t ri = 0; ri < G.relators.size() && !changed; ++ri) {
            const Word& r = G.relators[ri];
            for (std::size_t pos = 0; pos < r.size(); ++pos) {
                const int g = std::abs(r[pos]);
                if (std::count_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == g; }) != 1)
                    continue;
                // r = u g^e v  ⇒  g^e = u^{-1} v^{-1}
                Word u(r.begin(), r.begin() + pos), v(r.begin() + pos + 1, r.end());
                Word rhs = inverse(u);
                const Word vi = inverse(v);
                rhs.insert(rhs.end(), vi.begin(), vi.end());
                const Word value = r[pos] > 0 ? rhs : inverse(rhs);
                std::vector<Word> rels;
                for (std::size_t rj = 0; rj < G.relators.size(); ++rj) {
                    if (rj == ri)
                        continue;
                    Word w;
                    for (int x : G.relators[rj]) {
                        if (std::abs(x) != g) {
                            w.push_back(x);
                        } else {
                            const Word& sub = x > 0 ? value : inverse(value);
                            w.insert(w.end(), sub.begin(), sub.end());
                        }
                    }
                    rels.push_back(std::move(w));
                }
                // renumber generators above g
                for (auto& w : rels)
                    for (int& x : w)
                        if (std::abs(x) > g)
                            x += x > 0 ? -1 : 1;
                G.generators.erase(G.generators.begin() + (g - 1));
                G.relators = std::move(rels);
                changed = true;
                break;
            }
        }
    }
    return G;
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<mpz_class> diag;
    for (int t = 0; t < std::min(rows, cols); ++t) {
        // pivot: smallest nonzero absolute value in the remaining block
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                const mpz_class q = a[i][t] / a[t][t];
                for (int j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                const mpz_class q = a[t][j] / a[t][t];
                for (int i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // divisibility: fold a row whose entries the pivot does not divide
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            for (int j = t; j < cols; ++j)
                a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

AbelianGroup abelianize(const FPGroup& G) {
    const int n = static_cast<int>(G.generators.size());
    std::vector<std::vector<mpz_class>> m;
    for (const auto& r : G.relators) {
        std::vector<mpz_class> row(n);
        for (int x : r)
            row[std::abs(x) - 1] += x > 0 ? 1 : -1;
        m.push_back(std::move(row));
    }
    AbelianGroup A;
    const auto d = m.empty() ? std::vector<mpz_class>{} : smith_diagonal(std::move(m));
    A.rank = n - static_cast<int>(d.size());
    for (const auto& x : d)
        if (x > 1)
            A.torsion.push_back(x);
    return A;
}

}  // namespace waldkit

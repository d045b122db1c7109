#include <algorithm>
#include <map>
#include <sstream>

#include "linalg_detail.hpp"

namespace waldkit {

using detail::Echelon;
using detail::PField;
using detail::QField;
using detail::SVec;

FieldSpec FieldSpec::prime(int p) {
    if (p < 2)
        throw StructuralError("field characteristic " + std::to_string(p) + " is not prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw StructuralError("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

std::string FieldSpec::to_string() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

FieldSpec parse_field(const std::string& text) {
    if (text == "q" || text == "Q")
        return FieldSpec::rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.size() > 9 || !std::all_of(num.begin(), num.end(), ::isdigit))
            throw StructuralError("bad field spec '" + text + "'");
        return FieldSpec::prime(std::stoi(num));
    }
    throw StructuralError("bad field spec '" + text + "' (expected q or fp:P)");
}

void SparseMatrix::add(int r, int c, long long v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw StructuralError("matrix index out of range");
    if (v == 0)
        return;
    auto& column = col[c];
    auto it = std::lower_bound(column.begin(), column.end(), r,
                               [](const std::pair<int, long long>& e, int row) { return e.first < row; });
    if (it != column.end() && it->first == r) {
        it->second += v;
        if (it->second == 0)
            column.erase(it);
    } else {
        column.insert(it, {r, v});
    }
}

bool SparseMatrix::is_zero() const {
    return std::all_of(col.begin(), col.end(), [](const SparseColumn& c) { return c.empty(); });
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows)
        throw StructuralError("matrix shape mismatch");
    SparseMatrix out(a.rows, b.cols);
    std::map<int, long long> acc;
    for (int c = 0; c < b.cols; ++c) {
        acc.clear();
        for (auto [k, v] : b.col[c])
            for (auto [r, w] : a.col[k])
                acc[r] += v * w;
        for (auto [r, v] : acc)
            if (v != 0)
                out.col[c].emplace_back(r, v);
    }
    return out;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw StructuralError("matrix shape mismatch");
    SparseMatrix out = a;
    for (int c = 0; c < b.cols; ++c)
        for (auto [r, v] : b.col[c])
            out.add(r, c, v);
    return out;
}

SparseMatrix scale(const SparseMatrix& a, long long s) {
    SparseMatrix out(a.rows, a.cols);
    if (s == 0)
        return out;
    for (int c = 0; c < a.cols; ++c)
        for (auto [r, v] : a.col[c])
            out.col[c].emplace_back(r, v * s);
    return out;
}

ValidationReport ChainComplex::check() const {
    ValidationReport rep;
    for (int n = 2; n <= top; ++n)
        if (!multiply(boundary[n - 1], boundary[n]).is_zero())
            rep.add("chain.dd", name + ": boundary squared nonzero in degree " + std::to_string(n));
    return rep;
}

namespace detail {

PField::T PField::from_q(const mpq_class& q) const {
    const mpz_class mod(static_cast<long>(p));
    mpz_class num = q.get_num() % mod, den = q.get_den() % mod;
    if (num < 0)
        num += mod;
    if (den == 0)
        throw ConstructionError("denominator vanishes mod " + std::to_string(p));
    return mul(num.get_si(), inv(den.get_si()));
}

PField::T PField::inv(T a) const {
    if (a == 0)
        throw ConstructionError("division by zero in F_" + std::to_string(p));
    T r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace detail

namespace {

template <class F>
SVec<F> column_vec(const F& f, const SparseColumn& c) {
    SVec<F> v;
    for (auto [r, x] : c) {
        auto y = f.from_int(x);
        if (!F::is_zero(y))
            v.emplace_back(r, std::move(y));
    }
    return v;
}

template <class F>
SVec<F> qvec(const F& f, const QVector& q) {
    SVec<F> v;
    for (const auto& [r, x] : q) {
        auto y = f.from_q(x);
        if (!F::is_zero(y))
            v.emplace_back(r, std::move(y));
    }
    return v;
}

template <class F>
QVector to_qvec(const F& f, const SVec<F>& v) {
    QVector q;
    for (const auto& [r, x] : v)
        q.emplace_back(r, f.to_q(x));
    return q;
}

template <class F>
int rank_impl(const F& f, const SparseMatrix& m) {
    Echelon<F> E(f);
    for (int c = 0; c < m.cols; ++c) {
        auto v = column_vec(f, m.col[c]);
        E.reduce(v, nullptr);
        if (!v.empty())
            E.insert(std::move(v), {});
    }
    return E.size();
}

template <class F>
class ReducerImpl : public detail::Reducer {
public:
    ReducerImpl(Echelon<F> E, int dim) : E_(std::move(E)), dim_(dim) {}
    std::vector<mpq_class> coords(const QVector& z) const override {
        const F& f = E_.field();
        auto v = qvec(f, z);
        SVec<F> tag;
        E_.reduce(v, &tag);
        if (!v.empty())
            throw ConstructionError("vector is not a cycle");
        std::vector<mpq_class> out(dim_);
        for (const auto& [k, x] : tag)
            out[k] = f.to_q(f.neg(x));
        return out;
    }

private:
    Echelon<F> E_;
    int dim_;
};

template <class F>
HomologyBasis homology_impl(const F& f, const ChainComplex& CC, int p, FieldSpec k) {
    HomologyBasis H;
    H.field = k;
    H.degree = p;
    // cycles: kernel of ∂_p with tracked combinations
    std::vector<SVec<F>> kernel;
    {
        Echelon<F> E(f);
        const SparseMatrix& d = CC.boundary[p];
        for (int c = 0; c < d.cols; ++c) {
            auto v = column_vec(f, d.col[c]);
            SVec<F> tag{{c, f.from_int(1)}};
            E.reduce(v, &tag);
            // v = ∂(tag) throughout
            if (v.empty()) {
                kernel.push_back(std::move(tag));
            } else {
                E.insert(std::move(v), std::move(tag));
            }
        }
    }
    H.cycles = static_cast<int>(kernel.size());
    Echelon<F> E(f);
    {
        const SparseMatrix& d = CC.boundary[p + 1];
        for (int c = 0; c < d.cols; ++c) {
            auto v = column_vec(f, d.col[c]);
            E.reduce(v, nullptr);
            if (!v.empty())
                E.insert(std::move(v), {});
        }
    }
    H.boundary_rank = E.size();
    for (auto& z : kernel) {
        auto v = z;
        const int r = static_cast<int>(H.reps.size());
        SVec<F> tag{{r, f.from_int(1)}};
        E.reduce(v, &tag);
        if (v.empty())
            continue;
        // v = z - Σ c·e and tag = e_r - Σ c·tag(e)
        E.insert(std::move(v), std::move(tag));
        H.reps.push_back(to_qvec(f, z));
    }
    H.dim = static_cast<int>(H.reps.size());
    if (H.dim != H.cycles - H.boundary_rank)
        throw ConstructionError("homology bookkeeping mismatch in degree " + std::to_string(p));
    H.reducer = std::make_shared<ReducerImpl<F>>(std::move(E), H.dim);
    return H;
}

template <class F>
int dense_rank(const F& f, const QMatrix& m) {
    std::vector<std::vector<typename F::T>> a;
    for (const auto& row : m) {
        std::vector<typename F::T> r;
        for (const auto& x : row)
            r.push_back(f.from_q(x));
        a.push_back(std::move(r));
    }
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int piv = -1;
        for (int r = rk; r < rows; ++r)
            if (!F::is_zero(a[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[rk], a[piv]);
        const auto inv = f.inv(a[rk][c]);
        for (int r = 0; r < rows; ++r) {
            if (r == rk || F::is_zero(a[r][c]))
                continue;
            const auto fac = f.mul(a[r][c], inv);
            for (int k = c; k < cols; ++k)
                a[r][k] = f.sub(a[r][k], f.mul(fac, a[rk][k]));
        }
        ++rk;
    }
    return rk;
}

}  // namespace

std::vector<mpq_class> HomologyBasis::coordinates(const QVector& z) const { return reducer->coords(z); }

int rank(const SparseMatrix& m, FieldSpec k) {
    if (k.is_rational())
        return rank_impl(QField{}, m);
    return rank_impl(PField{k.p}, m);
}

int rank(const QMatrix& m, FieldSpec k) {
    if (k.is_rational())
        return dense_rank(QField{}, m);
    return dense_rank(PField{k.p}, m);
}

HomologyBasis homology(const ChainComplex& CC, int p, FieldSpec k) {
    if (p < 0)
        throw ConstructionError("negative degree");
    if (p + 1 > CC.top)
        throw ConstructionError("H_" + std::to_string(p) + " of " + CC.name + " needs chains in degree " +
                                std::to_string(p + 1) + " but the cap is " + std::to_string(CC.top));
    if (k.is_rational())
        return homology_impl(QField{}, CC, p, k);
    return homology_impl(PField{k.p}, CC, p, k);
}

QVector apply(const SparseMatrix& m, const QVector& v) {
    std::map<int, mpq_class> acc;
    for (const auto& [c, x] : v)
        for (auto [r, w] : m.col.at(c))
            acc[r] += x * static_cast<long>(w);
    QVector out;
    for (auto& [r, x] : acc)
        if (sgn(x) != 0)
            out.emplace_back(r, std::move(x));
    return out;
}

QMatrix induced_matrix(const HomologyBasis& src, const SparseMatrix& m, const HomologyBasis& dst) {
    QMatrix out(dst.dim, std::vector<mpq_class>(src.dim));
    for (int j = 0; j < src.dim; ++j) {
        auto c = dst.coordinates(apply(m, src.reps[j]));
        for (int i = 0; i < dst.dim; ++i)
            out[i][j] = c[i];
    }
    return out;
}

std::string dump(const ChainComplex& CC) {
    std::ostringstream os;
    os << CC.name << " top " << CC.top << '\n';
    for (int n = 0; n <= CC.top; ++n) {
        os << "degree " << n << ": dim " << CC.dims[n];
        if (n > 0) {
            std::size_t nnz = 0;
            for (const auto& c : CC.boundary[n].col)
                nnz += c.size();
            os << ", boundary nonzeros " << nnz;
        }
        os << '\n';
    }
    return os.str();
}

std::string dump(const HomologyBasis& H, const ChainComplex& CC) {
    std::ostringstream os;
    os << "H_" << H.degree << " over " << H.field.to_string() << ": dim " << H.dim << " (cycles " << H.cycles
       << ", boundaries " << H.boundary_rank << ")\n";
    for (int k = 0; k < H.dim; ++k) {
        os << "  rep " << k << ":";
        for (const auto& [r, x] : H.reps[k]) {
            const bool lab = H.degree < static_cast<int>(CC.labels.size()) &&
                             r < static_cast<int>(CC.labels[H.degree].size());
            os << ' ' << x.get_str() << '*' << (lab ? CC.labels[H.degree][r] : "#" + std::to_string(r));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace waldkit

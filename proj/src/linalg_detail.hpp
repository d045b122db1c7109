#pragma once

#include <gmpxx.h>

#include <unordered_map>
#include <utility>
#include <vector>

#include "waldkit/homalg.hpp"

namespace waldkit::detail {

struct QField {
    using T = mpq_class;
    T from_int(long long v) const { return T(static_cast<long>(v)); }
    T from_q(const mpq_class& q) const { return q; }
    mpq_class to_q(const T& t) const { return t; }
    static bool is_zero(const T& t) { return sgn(t) == 0; }
    T inv(const T& t) const { return T(1) / t; }
    T mul(const T& a, const T& b) const { return a * b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T add(const T& a, const T& b) const { return a + b; }
    T neg(const T& a) const { return -a; }
};

struct PField {
    long long p;
    using T = long long;
    T from_int(long long v) const { return ((v % p) + p) % p; }
    T from_q(const mpq_class& q) const;
    mpq_class to_q(const T& t) const { return mpq_class(static_cast<long>(t)); }
    static bool is_zero(const T& t) { return t == 0; }
    T inv(T a) const;
    T mul(T a, T b) const { return a * b % p; }
    T sub(T a, T b) const { return (a - b + p) % p; }
    T add(T a, T b) const { return (a + b) % p; }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
};

template <class F>
using SVec = std::vector<std::pair<int, typename F::T>>;

// r ← r - c·v
template <class F>
void axpy(const F& f, SVec<F>& r, const typename F::T& c, const SVec<F>& v) {
    SVec<F> out;
    out.reserve(r.size() + v.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < v.size()) {
        if (j == v.size() || (i < r.size() && r[i].first < v[j].first)) {
            out.push_back(std::move(r[i++]));
        } else if (i == r.size() || v[j].first < r[i].first) {
            out.emplace_back(v[j].first, f.neg(f.mul(c, v[j].second)));
            ++j;
        } else {
            auto x = f.sub(r[i].second, f.mul(c, v[j].second));
            if (!F::is_zero(x))
                out.emplace_back(r[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

// Row echelon by leading (smallest) index, with an optional tag vector
// carried along every row operation.
template <class F>
class Echelon {
public:
    explicit Echelon(F f) : f_(std::move(f)) {}

    // Reduces v (and tag alongside) until its leading index is not a pivot.
    void reduce(SVec<F>& v, SVec<F>* tag) const {
        while (!v.empty()) {
            auto it = pivot_.find(v.front().first);
            if (it == pivot_.end())
                return;
            const auto& e = rows_[it->second];
            const auto c = f_.mul(v.front().second, f_.inv(e.front().second));
            axpy(f_, v, c, e);
            if (tag)
                axpy(f_, *tag, c, tags_[it->second]);
        }
    }
    void insert(SVec<F> v, SVec<F> tag) {
        pivot_.emplace(v.front().first, static_cast<int>(rows_.size()));
        rows_.push_back(std::move(v));
        tags_.push_back(std::move(tag));
    }
    int size() const { return static_cast<int>(rows_.size()); }
    const F& field() const { return f_; }

private:
    F f_;
    std::vector<SVec<F>> rows_;
    std::vector<SVec<F>> tags_;
    std::unordered_map<int, int> pivot_;
};

struct Reducer {
    virtual ~Reducer() = default;
    virtual std::vector<mpq_class> coords(const QVector& z) const = 0;
};

}  // namespace waldkit::detail

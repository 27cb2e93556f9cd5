#pragma once

// Dense matrices with polynomial entries, the nilpotent exponential, and
// principal minors. Minor determinants use fraction-free Bareiss elimination
// (all intermediate divisions are exact in the polynomial ring) to keep
// coefficient growth polynomial; small minors use cofactor expansion.

#include <stdexcept>
#include <utility>
#include <vector>

#include "flagberg/poly.hpp"

namespace flagberg {

class PolyMatrix {
public:
    PolyMatrix() : nv_(0), dim_(0) {}
    PolyMatrix(int nvars, int dim)
        : nv_(nvars), dim_(dim), e_(static_cast<std::size_t>(dim) * dim, Poly(nvars)) {
        if (dim < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
    }

    static PolyMatrix identity(int nvars, int dim) {
        PolyMatrix m(nvars, dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Poly::one(nvars);
        return m;
    }

    int nvars() const { return nv_; }
    int dim() const { return dim_; }

    Poly& at(int i, int j) { return e_[idx(i, j)]; }
    const Poly& at(int i, int j) const { return e_[idx(i, j)]; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    PolyMatrix transpose() const {
        PolyMatrix m(nv_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    PolyMatrix conj_swap() const {
        PolyMatrix m(nv_, dim_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].conj_swap();
        return m;
    }

    PolyMatrix& operator+=(const PolyMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        a.check_same(b);
        PolyMatrix r(a.nv_, a.dim_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const Poly& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.dim_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += aik * b.at(k, j);
                }
            }
        return r;
    }

    PolyMatrix& scale(const GaussRat& c) {
        for (auto& p : e_) p.scale(c);
        return *this;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.dim_ == b.dim_ && a.nv_ == b.nv_ && a.e_ == b.e_;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
            throw std::out_of_range("PolyMatrix: index out of range");
        return static_cast<std::size_t>(i) * dim_ + j;
    }
    void check_same(const PolyMatrix& o) const {
        if (dim_ != o.dim_ || nv_ != o.nv_)
            throw std::invalid_argument("PolyMatrix: shape mismatch");
    }

    int nv_, dim_;
    std::vector<Poly> e_;
};

// exp(M) = sum M^k / k! for nilpotent M; throws if M^dim != 0.
inline PolyMatrix nilpotent_exp(const PolyMatrix& m) {
    const int dim = m.dim();
    PolyMatrix acc = PolyMatrix::identity(m.nvars(), dim);
    PolyMatrix term = PolyMatrix::identity(m.nvars(), dim);
    for (int k = 1; k <= dim; ++k) {
        term = term * m;
        term.scale(GaussRat(make_rat(1, k)));
        if (term.is_zero()) return acc;
        if (k == dim)
            throw std::invalid_argument("nilpotent_exp: matrix is not nilpotent");
        acc += term;
    }
    return acc;
}

namespace detail {

inline Poly det_cofactor(const PolyMatrix& a, std::vector<int>& cols, int row) {
    if (cols.size() == 1) return a.at(row, cols[0]);
    Poly acc(a.nvars());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Poly& piv = a.at(row, cols[k]);
        if (piv.is_zero()) continue;
        int c = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        Poly sub = det_cofactor(a, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), c);
        if (k % 2)
            acc -= piv * sub;
        else
            acc += piv * sub;
    }
    return acc;
}

inline Poly det_bareiss(const PolyMatrix& a, int k) {
    std::vector<Poly> b;
    b.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) b.push_back(a.at(i, j));
    auto at = [&](int i, int j) -> Poly& { return b[static_cast<std::size_t>(i) * k + j]; };

    Poly prev = Poly::one(a.nvars());
    bool neg = false;
    for (int c = 0; c + 1 < k; ++c) {
        int p = c;
        while (p < k && at(p, c).is_zero()) ++p;
        if (p == k) return Poly(a.nvars());  // singular
        if (p != c) {
            for (int j = 0; j < k; ++j) std::swap(at(p, j), at(c, j));
            neg = !neg;
        }
        for (int i = c + 1; i < k; ++i)
            for (int j = c + 1; j < k; ++j) {
                Poly num = at(c, c) * at(i, j) - at(i, c) * at(c, j);
                auto q = exact_div(num, prev);
                if (!q)
                    throw std::logic_error("det_bareiss: exact division failed");
                at(i, j) = std::move(*q);
            }
        prev = at(c, c);
    }
    Poly det = at(k - 1, k - 1);
    if (neg) det = -det;
    return det;
}

}  // namespace detail

// Determinant of the leading k x k block of a.
inline Poly principal_minor(const PolyMatrix& a, int k) {
    if (k < 1 || k > a.dim())
        throw std::invalid_argument("principal_minor: order out of range");
    if (k <= 4) {
        std::vector<int> cols;
        for (int j = 0; j < k; ++j) cols.push_back(j);
        return detail::det_cofactor(a, cols, 0);
    }
    return detail::det_bareiss(a, k);
}

inline Poly det(const PolyMatrix& a) { return principal_minor(a, a.dim()); }

}  // namespace flagberg

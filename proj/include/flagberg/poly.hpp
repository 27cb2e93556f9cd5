#pragma once

// Sparse multivariate polynomials and rational functions over Q(i).
//
// A Poly in n "holomorphic" variables z_1..z_n carries formal conjugates
// w_1..w_n as independent slots, so a polynomial has 2n exponent slots:
// slot i   (0-based, i < n)  = z_{i+1}
// slot n+i                   = w_{i+1}
// conj_swap exchanges the two groups and conjugates coefficients; it is the
// algebraic stand-in for pointwise complex conjugation on the diagonal
// w = conj(z).

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagberg/rational.hpp"

namespace flagberg {

using Mono = std::vector<std::uint16_t>;

class Poly {
public:
    Poly() : nv_(0) {}
    explicit Poly(int nvars) : nv_(nvars) {
        if (nvars < 0) throw std::invalid_argument("Poly: negative variable count");
    }

    static Poly constant(int nvars, GaussRat c) {
        Poly p(nvars);
        if (!c.is_zero()) p.t_.emplace(Mono(2 * nvars, 0), std::move(c));
        return p;
    }
    static Poly one(int nvars) { return constant(nvars, GaussRat(1)); }
    static Poly z(int nvars, int i) { return variable(nvars, i, false); }
    static Poly w(int nvars, int i) { return variable(nvars, i, true); }

    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Mono, GaussRat>& terms() const { return t_; }

    GaussRat coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? GaussRat(0) : it->second;
    }
    GaussRat constant_term() const { return coeff(Mono(2 * nv_, 0)); }

    void add_term(const Mono& m, const GaussRat& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(m.size()) != 2 * nv_)
            throw std::invalid_argument("Poly::add_term: monomial width mismatch");
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_same(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_same(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r(nv_);
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.nv_);
        Mono m(2 * a.nv_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                for (std::size_t k = 0; k < m.size(); ++k)
                    m[k] = static_cast<std::uint16_t>(ma[k] + mb[k]);
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const GaussRat& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, v] : t_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly p, const GaussRat& c) { return p.scale(c); }
    friend Poly operator*(const GaussRat& c, Poly p) { return p.scale(c); }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nv_ == b.nv_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly acc = one(nv_), b = *this;
        for (unsigned k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= b;
            if (k > 1) b *= b;
        }
        return acc;
    }

    // Formal partial derivative with respect to exponent slot `slot`
    // (0..n-1 are z variables, n..2n-1 are w variables).
    Poly diff(int slot) const {
        check_slot(slot);
        Poly r(nv_);
        for (const auto& [m, c] : t_) {
            if (m[slot] == 0) continue;
            Mono d = m;
            d[slot] -= 1;
            r.add_term(d, c * GaussRat(Rat(static_cast<long>(m[slot]))));
        }
        return r;
    }
    Poly diff_z(int i) const { return diff(i); }
    Poly diff_w(int i) const { return diff(nv_ + i); }

    // Swaps z_i <-> w_i and conjugates all coefficients.
    Poly conj_swap() const {
        Poly r(nv_);
        Mono m(2 * nv_);
        for (const auto& [mo, c] : t_) {
            for (int i = 0; i < nv_; ++i) {
                m[i] = mo[nv_ + i];
                m[nv_ + i] = mo[i];
            }
            r.t_.emplace(m, c.conj());
        }
        return r;
    }
    bool self_conjugate() const { return conj_swap() == *this; }

    GaussRat eval(const std::vector<GaussRat>& zs, const std::vector<GaussRat>& ws) const {
        if (static_cast<int>(zs.size()) != nv_ || static_cast<int>(ws.size()) != nv_)
            throw std::invalid_argument("Poly::eval: point dimension mismatch");
        GaussRat acc(0);
        for (const auto& [m, c] : t_) {
            GaussRat term = c;
            for (int i = 0; i < nv_; ++i) {
                if (m[i]) term *= zs[i].pow(m[i]);
                if (m[nv_ + i]) term *= ws[i].pow(m[nv_ + i]);
            }
            acc += term;
        }
        return acc;
    }

    // Substitutes z_i = a_i * t, w_i = conj(a_i) * tbar along a ray direction a;
    // the result is a Poly in one holomorphic variable t (slot 0) with formal
    // conjugate tbar (slot 1).
    Poly restrict_ray(const std::vector<GaussRat>& a) const {
        if (static_cast<int>(a.size()) != nv_)
            throw std::invalid_argument("Poly::restrict_ray: direction dimension mismatch");
        Poly r(1);
        Mono m(2);
        for (const auto& [mo, c] : t_) {
            GaussRat coeff = c;
            unsigned dz = 0, dw = 0;
            for (int i = 0; i < nv_; ++i) {
                if (mo[i]) {
                    coeff *= a[i].pow(mo[i]);
                    dz += mo[i];
                }
                if (mo[nv_ + i]) {
                    coeff *= a[i].conj().pow(mo[nv_ + i]);
                    dw += mo[nv_ + i];
                }
            }
            m[0] = static_cast<std::uint16_t>(dz);
            m[1] = static_cast<std::uint16_t>(dw);
            r.add_term(m, coeff);
        }
        return r;
    }

    int total_degree() const {
        int deg = 0;
        for (const auto& [m, c] : t_) {
            int d = 0;
            for (auto e : m) d += e;
            if (d > deg) deg = d;
        }
        return deg;
    }

    static int z_degree(const Mono& m, int nvars) {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += m[i];
        return d;
    }
    static int w_degree(const Mono& m, int nvars) {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += m[nvars + i];
        return d;
    }

    std::string mono_str(const Mono& m) const {
        std::string s;
        auto app = [&](const char* base, int idx, int e) {
            if (!e) return;
            if (!s.empty()) s += "*";
            s += base + std::to_string(idx + 1);
            if (e > 1) s += "^" + std::to_string(e);
        };
        for (int i = 0; i < nv_; ++i) app("z", i, m[i]);
        for (int i = 0; i < nv_; ++i) app("w", i, m[nv_ + i]);
        return s;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            std::string ms = mono_str(m);
            if (ms.empty())
                s += c.str();
            else if (c == GaussRat(1))
                s += ms;
            else
                s += "(" + c.str() + ")*" + ms;
        }
        return s;
    }

    // Leading term in lexicographic monomial order.
    std::pair<Mono, GaussRat> leading() const {
        if (t_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
        auto it = t_.rbegin();
        return {it->first, it->second};
    }

private:
    static Poly variable(int nvars, int i, bool conjugate) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("Poly: variable index out of range");
        Poly p(nvars);
        Mono m(2 * nvars, 0);
        m[conjugate ? nvars + i : i] = 1;
        p.t_.emplace(std::move(m), GaussRat(1));
        return p;
    }
    void check_same(const Poly& o) const {
        if (nv_ != o.nv_) throw std::invalid_argument("Poly: mixed variable counts");
    }
    void check_slot(int slot) const {
        if (slot < 0 || slot >= 2 * nv_) throw std::invalid_argument("Poly: bad slot");
    }

    int nv_;
    std::map<Mono, GaussRat> t_;
};

// Exact multivariate division: returns p / q when q divides p exactly,
// std::nullopt otherwise. Leading-term division in lex order; when p = q*h
// this always succeeds and returns h.
inline std::optional<Poly> exact_div(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (p.nvars() != q.nvars()) throw std::invalid_argument("exact_div: mixed variable counts");
    Poly r = p, quot(p.nvars());
    auto [mq, cq] = q.leading();
    while (!r.is_zero()) {
        auto [mr, cr] = r.leading();
        Mono t(mr.size());
        for (std::size_t k = 0; k < mr.size(); ++k) {
            if (mr[k] < mq[k]) return std::nullopt;
            t[k] = static_cast<std::uint16_t>(mr[k] - mq[k]);
        }
        Poly step(p.nvars());
        step.add_term(t, cr / cq);
        quot += step;
        r -= q * step;
    }
    return quot;
}

// Quotient of polynomials. Kept in unreduced form except for opportunistic
// exact-divisibility cancellation; equality is by cross multiplication.
struct RatFunc {
    Poly num, den;

    RatFunc() = default;
    explicit RatFunc(Poly n) : num(std::move(n)), den(Poly::one(num.nvars())) {}
    RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        reduce();
    }

    int nvars() const { return num.nvars(); }
    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (num.is_zero()) {
            den = Poly::one(den.nvars());
            return;
        }
        if (auto q = exact_div(num, den)) {
            num = *q;
            den = Poly::one(den.nvars());
        }
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den == b.den) return RatFunc(a.num - b.num, a.den);
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.num.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num = -r.num;
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num * b.den == b.num * a.den;
    }

    // Quotient rule, with the single cancellation that matters in practice:
    // (n/d)' = (n'd - nd')/d^2, and when d | (n'd - nd') the result keeps
    // denominator d instead of d^2.
    RatFunc diff(int slot) const {
        Poly top = num.diff(slot) * den - num * den.diff(slot);
        if (auto q = exact_div(top, den)) return RatFunc(std::move(*q), den);
        return RatFunc(std::move(top), den * den);
    }
    RatFunc diff_z(int i) const { return diff(i); }
    RatFunc diff_w(int i) const { return diff(num.nvars() + i); }

    GaussRat eval(const std::vector<GaussRat>& zs, const std::vector<GaussRat>& ws) const {
        GaussRat d = den.eval(zs, ws);
        if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole at evaluation point");
        return num.eval(zs, ws) / d;
    }
};

inline std::vector<GaussRat> conj_point(const std::vector<GaussRat>& zs) {
    std::vector<GaussRat> ws;
    ws.reserve(zs.size());
    for (const auto& z : zs) ws.push_back(z.conj());
    return ws;
}

}  // namespace flagberg

#pragma once

// Exact scalar layer: arbitrary-precision rationals (GMP) and Gaussian
// rationals Q(i), the coefficient field for all symbolic computations.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagberg {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(p, q) does not canonicalize on its own; route all fraction
// construction through here.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational literal '" + s + "'");
    if (r.get_den() == 0)  // set_str accepts "1/0"; canonicalize would divide by zero
        throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
        return 1 / rat_pow(base, -e);
    }
    Rat acc = 1, b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= b;
        if (k > 1) b *= b;
    }
    return acc;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int acc = 1;
    if (k > n - k) k = n - k;
    for (long i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1;  // exact at every step
    }
    return acc;
}

// Element of Q(i). Real and imaginary parts are exact rationals.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}  // NOLINT: implicit by design
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        Rat n = o.norm();
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    GaussRat pow(unsigned long e) const {
        GaussRat acc(1), b = *this;
        for (unsigned long k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= b;
            if (k > 1) b *= b;
        }
        return acc;
    }

    std::string str() const {
        if (im == 0) return rat_str(re);
        std::string s;
        if (re != 0) s += rat_str(re);
        if (sgn(im) >= 0 && re != 0) s += "+";
        if (im == -1)
            s += "-";
        else if (im != 1)
            s += rat_str(im);
        s += "i";
        return s;
    }
};

}  // namespace flagberg

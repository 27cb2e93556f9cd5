#pragma once

// Classical root systems A, B, C, D in the e-basis, their canonical simple
// bases, and explicit root-vector matrices in the defining representations:
//
//   su(d)      trace-free d x d,           E_{e_i-e_j} = E_ij
//   sp(d)      2d x 2d, blocks [[Z1,Z2],[Z3,-Z1^T]] with Z2, Z3 symmetric
//   so(2d)     same block shape with Z2, Z3 skew, split quadratic form
//   so(2d+1)   (2d+1) x (2d+1), split form 2(z_1 z_{d+1}+...+z_d z_{2d}) + z_{2d+1}^2
//
// check_root_relations verifies the whole table against the abstract root
// system: Cartan action, closure of brackets onto single root spaces, and
// nondegenerate pairing of opposite root vectors.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagberg/linalg.hpp"
#include "flagberg/rational.hpp"

namespace flagberg {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    throw std::logic_error("family_letter: bad family");
}

struct RootVec {
    std::vector<int> e;

    RootVec() = default;
    explicit RootVec(std::vector<int> v) : e(std::move(v)) {}

    int dim() const { return static_cast<int>(e.size()); }
    bool is_zero() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    RootVec operator-() const {
        RootVec r = *this;
        for (int& x : r.e) x = -x;
        return r;
    }
    friend RootVec operator+(const RootVec& a, const RootVec& b) {
        if (a.dim() != b.dim()) throw std::invalid_argument("RootVec: dimension mismatch");
        RootVec r = a;
        for (int i = 0; i < b.dim(); ++i) r.e[i] += b.e[i];
        return r;
    }
    long dot(const RootVec& o) const {
        if (dim() != o.dim()) throw std::invalid_argument("RootVec: dimension mismatch");
        long s = 0;
        for (int i = 0; i < dim(); ++i) s += static_cast<long>(e[i]) * o.e[i];
        return s;
    }
    long norm2() const { return dot(*this); }

    friend bool operator==(const RootVec& a, const RootVec& b) { return a.e == b.e; }
    friend bool operator!=(const RootVec& a, const RootVec& b) { return a.e != b.e; }
    friend bool operator<(const RootVec& a, const RootVec& b) { return a.e < b.e; }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        return s + ")";
    }
};

// Integer matrices for Lie-algebra elements of the defining representations.
struct IntMat {
    int n = 0;
    std::vector<long long> a;

    IntMat() = default;
    explicit IntMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}

    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
    }
    long long trace() const {
        long long t = 0;
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }
    IntMat transpose() const {
        IntMat r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        if (x.n != y.n) throw std::invalid_argument("IntMat: dimension mismatch");
        IntMat r(x.n);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                long long v = x.at(i, k);
                if (!v) continue;
                for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }
    friend IntMat operator+(IntMat x, const IntMat& y) {
        if (x.n != y.n) throw std::invalid_argument("IntMat: dimension mismatch");
        for (std::size_t k = 0; k < x.a.size(); ++k) x.a[k] += y.a[k];
        return x;
    }
    friend IntMat operator-(IntMat x, const IntMat& y) {
        if (x.n != y.n) throw std::invalid_argument("IntMat: dimension mismatch");
        for (std::size_t k = 0; k < x.a.size(); ++k) x.a[k] -= y.a[k];
        return x;
    }
    IntMat scaled(long long c) const {
        IntMat r = *this;
        for (auto& v : r.a) v *= c;
        return r;
    }
    friend bool operator==(const IntMat& x, const IntMat& y) { return x.n == y.n && x.a == y.a; }
};

inline IntMat bracket(const IntMat& x, const IntMat& y) { return x * y - y * x; }

struct ClassicalAlgebra {
    Family family;
    int d;            // the parameter of SU(d), SO(2d+1), Sp(d), SO(2d)
    int matrix_dim;   // size of the defining representation
    long killing_scale;  // B(X, Y) = killing_scale * tr(XY)
};

inline ClassicalAlgebra make_algebra(Family f, int d) {
    switch (f) {
        case Family::A:
            if (d < 2) throw std::invalid_argument("family A requires d >= 2");
            return {f, d, d, 2L * d};
        case Family::B:
            if (d < 1) throw std::invalid_argument("family B requires d >= 1");
            return {f, d, 2 * d + 1, 2L * d - 1};
        case Family::C:
            if (d < 1) throw std::invalid_argument("family C requires d >= 1");
            return {f, d, 2 * d, 2L * (d + 1)};
        case Family::D:
            if (d < 2) throw std::invalid_argument("family D requires d >= 2");
            return {f, d, 2 * d, 2L * (d - 1)};
    }
    throw std::logic_error("make_algebra: bad family");
}

inline long root_count_closed_form(Family f, int d) {
    switch (f) {
        case Family::A: return static_cast<long>(d) * (d - 1);
        case Family::B: return 2L * d * d;
        case Family::C: return 2L * d * d;
        case Family::D: return 2L * d * (d - 1);
    }
    throw std::logic_error("root_count_closed_form: bad family");
}

struct RootDatum {
    ClassicalAlgebra alg;
    std::vector<RootVec> roots;   // sorted lexicographically
    std::vector<RootVec> simple;  // canonical basis alpha_1..alpha_rank

    int rank() const { return static_cast<int>(simple.size()); }
    // For family A the e-coordinate rank is d but the root lattice spans the
    // trace-zero hyperplane; rank = d-1 there.

    bool contains(const RootVec& r) const {
        return std::binary_search(roots.begin(), roots.end(), r);
    }

    // Exact coordinates of r in the simple basis; throws if r is outside the span.
    std::vector<Rat> simple_coords(const RootVec& r) const {
        const int d = alg.d, rk = rank();
        // Solve sum_s c_s alpha_s = r by elimination on the d x rk system.
        RatMatrix m(d, std::vector<Rat>(rk + 1, Rat(0)));
        for (int s = 0; s < rk; ++s)
            for (int i = 0; i < d; ++i) m[i][s] = simple[s].e[i];
        for (int i = 0; i < d; ++i) m[i][rk] = r.e[i];

        std::vector<int> pivot_row(rk, -1);
        int row = 0;
        for (int c = 0; c < rk && row < d; ++c) {
            int p = row;
            while (p < d && m[p][c] == 0) ++p;
            if (p == d) continue;
            std::swap(m[p], m[row]);
            for (int q = 0; q < d; ++q) {
                if (q == row || m[q][c] == 0) continue;
                Rat f = m[q][c] / m[row][c];
                for (int j = c; j <= rk; ++j) m[q][j] -= f * m[row][j];
            }
            pivot_row[c] = row;
            ++row;
        }
        std::vector<Rat> coords(rk, Rat(0));
        for (int c = 0; c < rk; ++c) {
            if (pivot_row[c] < 0) throw std::domain_error("simple_coords: deficient basis");
            coords[c] = m[pivot_row[c]][rk] / m[pivot_row[c]][c];
        }
        // Consistency: rows without pivots must have zero rhs.
        for (int q = row; q < d; ++q)
            if (m[q][rk] != 0) throw std::domain_error("simple_coords: vector outside span");
        return coords;
    }

    bool is_positive(const RootVec& r) const {
        auto c = simple_coords(r);
        bool nonneg = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; });
        return nonneg && !r.is_zero();
    }

    std::vector<RootVec> positive_roots() const {
        std::vector<RootVec> pos;
        for (const auto& r : roots)
            if (is_positive(r)) pos.push_back(r);
        return pos;
    }
};

inline RootDatum build_root_system(Family f, int d) {
    RootDatum rd;
    rd.alg = make_algebra(f, d);
    auto unit = [&](int i) {
        std::vector<int> v(d, 0);
        v[i] = 1;
        return RootVec(std::move(v));
    };
    auto add = [&](const RootVec& r) { rd.roots.push_back(r); };

    if (f == Family::A) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (i != j) add(unit(i) + -unit(j));
        for (int i = 0; i + 1 < d; ++i) rd.simple.push_back(unit(i) + -unit(i + 1));
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                RootVec diff = unit(i) + -unit(j), sum = unit(i) + unit(j);
                add(diff);
                add(-diff);
                add(sum);
                add(-sum);
            }
        if (f == Family::B)
            for (int i = 0; i < d; ++i) {
                add(unit(i));
                add(-unit(i));
            }
        if (f == Family::C)
            for (int i = 0; i < d; ++i) {
                add(unit(i) + unit(i));
                add(-(unit(i) + unit(i)));
            }
        for (int i = 0; i + 1 < d; ++i) rd.simple.push_back(unit(i) + -unit(i + 1));
        if (f == Family::B) rd.simple.push_back(unit(d - 1));
        if (f == Family::C) rd.simple.push_back(unit(d - 1) + unit(d - 1));
        if (f == Family::D) rd.simple.push_back(unit(d - 2) + unit(d - 1));
        if (f == Family::B && d == 1) rd.simple = {unit(0)};
        if (f == Family::C && d == 1) rd.simple = {unit(0) + unit(0)};
    }
    std::sort(rd.roots.begin(), rd.roots.end());
    if (static_cast<long>(rd.roots.size()) != root_count_closed_form(f, d))
        throw std::logic_error("build_root_system: root count mismatch");
    return rd;
}

// The explicit matrix attached to a root in the defining representation.
inline IntMat root_vector_matrix(const ClassicalAlgebra& alg, const RootVec& root) {
    const int d = alg.d, n = alg.matrix_dim;
    if (root.dim() != d) throw std::invalid_argument("root_vector_matrix: wrong dimension");
    IntMat m(n);

    std::vector<int> pos, neg;  // indices with +,- entries
    int plus2 = -1, minus2 = -1;
    for (int i = 0; i < d; ++i) {
        switch (root.e[i]) {
            case 0: break;
            case 1: pos.push_back(i); break;
            case -1: neg.push_back(i); break;
            case 2: plus2 = i; break;
            case -2: minus2 = i; break;
            default: throw std::invalid_argument("root_vector_matrix: not a classical root");
        }
    }

    auto bad = [&]() -> IntMat {
        throw std::invalid_argument("root_vector_matrix: pattern not a root of this family: " +
                                    root.str());
    };

    if (alg.family == Family::A) {
        if (pos.size() == 1 && neg.size() == 1 && plus2 < 0 && minus2 < 0) {
            m.at(pos[0], neg[0]) = 1;  // E_{e_i - e_j} = E_ij
            return m;
        }
        return bad();
    }

    // Shared e_i - e_j pattern for B, C, D: diag(E_ij, -E_ji) in the split blocks.
    if (pos.size() == 1 && neg.size() == 1 && plus2 < 0 && minus2 < 0) {
        int i = pos[0], j = neg[0];
        m.at(i, j) = 1;
        m.at(d + j, d + i) = -1;
        return m;
    }

    if (alg.family == Family::C) {
        if (pos.size() == 2 && neg.empty() && plus2 < 0 && minus2 < 0) {
            int i = pos[0], j = pos[1];
            m.at(i, d + j) = 1;
            m.at(j, d + i) = 1;
            return m;
        }
        if (plus2 >= 0 && pos.empty() && neg.empty() && minus2 < 0) {
            m.at(plus2, d + plus2) = 2;
            return m;
        }
        if (neg.size() == 2 && pos.empty() && plus2 < 0 && minus2 < 0) {
            int i = neg[0], j = neg[1];
            m.at(d + i, j) = 1;
            m.at(d + j, i) = 1;
            return m;
        }
        if (minus2 >= 0 && pos.empty() && neg.empty() && plus2 < 0) {
            m.at(d + minus2, minus2) = 2;
            return m;
        }
        return bad();
    }

    // B and D share the skew e_i + e_j blocks.
    if (pos.size() == 2 && neg.empty() && plus2 < 0 && minus2 < 0) {
        int i = pos[0], j = pos[1];  // i < j
        m.at(i, d + j) = 1;
        m.at(j, d + i) = -1;
        return m;
    }
    if (neg.size() == 2 && pos.empty() && plus2 < 0 && minus2 < 0) {
        int i = neg[0], j = neg[1];  // i < j
        m.at(d + i, j) = 1;
        m.at(d + j, i) = -1;
        return m;
    }
    if (alg.family == Family::B && pos.size() == 1 && neg.empty() && plus2 < 0 && minus2 < 0) {
        int i = pos[0];
        m.at(i, 2 * d) = 1;
        m.at(2 * d, d + i) = -1;
        return m;
    }
    if (alg.family == Family::B && neg.size() == 1 && pos.empty() && plus2 < 0 && minus2 < 0) {
        int i = neg[0];
        m.at(d + i, 2 * d) = 1;
        m.at(2 * d, i) = -1;
        return m;
    }
    return bad();
}

// Diagonal Cartan basis used by the relation checks.
inline std::vector<IntMat> cartan_basis(const ClassicalAlgebra& alg) {
    std::vector<IntMat> hs;
    const int d = alg.d, n = alg.matrix_dim;
    if (alg.family == Family::A) {
        for (int k = 0; k + 1 < d; ++k) {
            IntMat h(n);
            h.at(k, k) = 1;
            h.at(k + 1, k + 1) = -1;
            hs.push_back(h);
        }
    } else {
        for (int k = 0; k < d; ++k) {
            IntMat h(n);
            h.at(k, k) = 1;
            h.at(d + k, d + k) = -1;
            hs.push_back(h);
        }
    }
    return hs;
}

// alpha(H_k) for the cartan_basis element H_k.
inline long root_on_cartan(const ClassicalAlgebra& alg, const RootVec& root, int k) {
    if (alg.family == Family::A) return root.e[k] - root.e[k + 1];
    return root.e[k];
}

// Defining-form membership: trace zero for su; X^T J + J X = 0 for sp with
// the standard symplectic J; X^T S + S X = 0 for so with the split form S.
inline bool matrix_in_algebra(const ClassicalAlgebra& alg, const IntMat& x) {
    const int d = alg.d;
    if (alg.family == Family::A) return x.trace() == 0;
    IntMat s(alg.matrix_dim);
    for (int i = 0; i < d; ++i) {
        s.at(i, d + i) = 1;
        s.at(d + i, i) = alg.family == Family::C ? -1 : 1;
    }
    if (alg.family == Family::B) s.at(2 * d, 2 * d) = 1;
    return (x.transpose() * s + s * x).is_zero();
}

struct RelationReport {
    std::vector<std::string> violations;
    long brackets_checked = 0;
    std::vector<long long> pairing_traces;  // tr(E_alpha E_{-alpha}) per positive-index root
    bool ok() const { return violations.empty(); }
};

// Verifies, over all roots alpha, beta of the datum:
//   (i)   [H, E_alpha] = alpha(H) E_alpha for the diagonal Cartan basis,
//   (ii)  [E_alpha, E_beta] = c E_{alpha+beta} with integer c != 0 when
//         alpha + beta is a root, and zero when alpha + beta is neither a
//         root nor zero,
//   (iii) tr(E_alpha E_{-alpha}) != 0 (nondegenerate opposite pairing),
//   (iv)  every E_alpha lies in the defining matrix algebra.
inline RelationReport check_root_relations(const RootDatum& rd) {
    RelationReport rep;
    const auto& alg = rd.alg;
    auto tag = [&](const RootVec& r) { return r.str(); };

    std::vector<IntMat> mats;
    mats.reserve(rd.roots.size());
    for (const auto& r : rd.roots) mats.push_back(root_vector_matrix(alg, r));

    const auto hs = cartan_basis(alg);
    for (std::size_t ai = 0; ai < rd.roots.size(); ++ai) {
        const auto& a = rd.roots[ai];
        if (!matrix_in_algebra(alg, mats[ai]))
            rep.violations.push_back("membership failed for E_" + tag(a));
        for (std::size_t k = 0; k < hs.size(); ++k) {
            IntMat lhs = bracket(hs[k], mats[ai]);
            IntMat rhs = mats[ai].scaled(root_on_cartan(alg, a, static_cast<int>(k)));
            if (!(lhs == rhs))
                rep.violations.push_back("Cartan action failed on E_" + tag(a) + " for H_" +
                                         std::to_string(k + 1));
        }
    }

    for (std::size_t ai = 0; ai < rd.roots.size(); ++ai) {
        for (std::size_t bi = 0; bi < rd.roots.size(); ++bi) {
            const auto& a = rd.roots[ai];
            const auto& b = rd.roots[bi];
            RootVec sum = a + b;
            IntMat br = bracket(mats[ai], mats[bi]);
            ++rep.brackets_checked;
            if (sum.is_zero()) {
                long long t = (mats[ai] * mats[bi]).trace();
                if (ai < bi) rep.pairing_traces.push_back(t);
                if (t == 0)
                    rep.violations.push_back("degenerate pairing tr(E_a E_-a) = 0 for a=" + tag(a));
                continue;
            }
            if (rd.contains(sum)) {
                auto it = std::lower_bound(rd.roots.begin(), rd.roots.end(), sum);
                const IntMat& target = mats[static_cast<std::size_t>(it - rd.roots.begin())];
                // Solve br = c * target for integer c from any nonzero target entry.
                long long c = 0;
                for (std::size_t k = 0; k < target.a.size(); ++k)
                    if (target.a[k] != 0) {
                        if (br.a[k] % target.a[k] != 0) {
                            c = 0;
                        } else {
                            c = br.a[k] / target.a[k];
                        }
                        break;
                    }
                if (c == 0 || !(target.scaled(c) == br))
                    rep.violations.push_back("[E_" + tag(a) + ", E_" + tag(b) +
                                             "] is not a nonzero integer multiple of E_" +
                                             tag(sum));
            } else if (!br.is_zero()) {
                rep.violations.push_back("[E_" + tag(a) + ", E_" + tag(b) +
                                         "] nonzero but " + tag(sum) + " is not a root");
            }
        }
    }
    return rep;
}

inline Rat weight_inner(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight_inner: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<Rat> to_rat_vec(const RootVec& r) {
    std::vector<Rat> v(r.e.size());
    for (std::size_t i = 0; i < r.e.size(); ++i) v[i] = r.e[i];
    return v;
}

}  // namespace flagberg

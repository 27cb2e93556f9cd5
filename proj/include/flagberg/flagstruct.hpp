#pragma once

// Painted Dynkin diagrams and the combinatorial data of the associated flag
// manifold M = G/K: the splitting of roots into K-roots and M-roots, the
// admissible positivity choices Q for the M-roots, fundamental weights of the
// painted nodes, the coefficients that make the metric Einstein, and the
// principal-minor indices used by the explicit potential.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagberg/linalg.hpp"
#include "flagberg/rational.hpp"
#include "flagberg/rootsystems.hpp"

namespace flagberg {

struct PaintedDiagram {
    Family family;
    int d;
    std::vector<int> black;  // 1-based simple-root positions, strictly increasing
};

inline void validate_painting(const RootDatum& rd, const std::vector<int>& black) {
    if (black.empty()) throw std::invalid_argument("painting: need at least one black node");
    for (std::size_t j = 0; j < black.size(); ++j) {
        if (black[j] < 1 || black[j] > rd.rank())
            throw std::invalid_argument("painting: node " + std::to_string(black[j]) +
                                        " outside 1.." + std::to_string(rd.rank()));
        if (j && black[j] <= black[j - 1])
            throw std::invalid_argument("painting: nodes must be strictly increasing");
    }
}

// Does the root have a nonzero coefficient on some painted simple root?
inline bool touches_black(const RootDatum& rd, const std::vector<int>& black, const RootVec& r) {
    auto coords = rd.simple_coords(r);
    for (int k : black)
        if (coords[static_cast<std::size_t>(k - 1)] != 0) return true;
    return false;
}

struct RootSplit {
    std::vector<RootVec> r_k;  // roots of the isotropy subgroup K
    std::vector<RootVec> r_m;  // complementary roots spanning the tangent space
};

inline RootSplit split_roots(const RootDatum& rd, const std::vector<int>& black) {
    RootSplit s;
    for (const auto& r : rd.roots)
        (touches_black(rd, black, r) ? s.r_m : s.r_k).push_back(r);
    return s;
}

struct FlagManifold {
    RootDatum rd;
    std::vector<int> black;
    std::vector<RootVec> r_k;
    std::vector<RootVec> r_m;
    std::vector<RootVec> q;  // canonical positivity choice inside r_m, lex sorted

    int n() const { return static_cast<int>(q.size()); }
    std::string name() const {
        std::string s = family_letter(rd.alg.family) + std::to_string(rd.rank()) + " black={";
        for (std::size_t j = 0; j < black.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(black[j]);
        }
        return s + "}";
    }
};

inline FlagManifold build_flag(Family f, int d, std::vector<int> black) {
    FlagManifold fm;
    fm.rd = build_root_system(f, d);
    validate_painting(fm.rd, black);
    fm.black = std::move(black);
    auto s = split_roots(fm.rd, fm.black);
    fm.r_k = std::move(s.r_k);
    fm.r_m = std::move(s.r_m);
    for (const auto& r : fm.r_m)
        if (fm.rd.is_positive(r)) fm.q.push_back(r);
    std::sort(fm.q.begin(), fm.q.end());
    return fm;
}

struct QReport {
    bool splits_m_roots = false;      // Q and -Q partition the M-roots
    bool closed_under_sum = false;    // (Q + Q) cap R subset Q
    bool closed_under_k = false;      // (Q + R_K) cap R subset Q
    std::vector<std::string> violations;
    bool ok() const { return splits_m_roots && closed_under_sum && closed_under_k; }
};

inline QReport validate_Q(const FlagManifold& fm, const std::vector<RootVec>& q) {
    QReport rep;
    std::vector<RootVec> sorted_q = q;
    std::sort(sorted_q.begin(), sorted_q.end());
    auto in_q = [&](const RootVec& r) {
        return std::binary_search(sorted_q.begin(), sorted_q.end(), r);
    };

    rep.splits_m_roots = true;
    if (2 * q.size() != fm.r_m.size()) rep.splits_m_roots = false;
    for (const auto& a : sorted_q) {
        bool is_m = std::binary_search(fm.r_m.begin(), fm.r_m.end(), a) ||
                    std::find(fm.r_m.begin(), fm.r_m.end(), a) != fm.r_m.end();
        if (!is_m) {
            rep.splits_m_roots = false;
            rep.violations.push_back(a.str() + " is not an M-root");
        }
        if (in_q(-a)) {
            rep.splits_m_roots = false;
            rep.violations.push_back(a.str() + " and its negative both chosen");
        }
    }
    for (const auto& m : fm.r_m)
        if (!in_q(m) && !in_q(-m)) {
            rep.splits_m_roots = false;
            rep.violations.push_back("M-root " + m.str() + " missed by Q and -Q");
        }

    rep.closed_under_sum = true;
    for (const auto& a : sorted_q)
        for (const auto& b : sorted_q) {
            RootVec s = a + b;
            if (fm.rd.contains(s) && !in_q(s)) {
                rep.closed_under_sum = false;
                rep.violations.push_back("sum " + a.str() + " + " + b.str() + " escapes Q");
            }
        }

    rep.closed_under_k = true;
    for (const auto& a : sorted_q)
        for (const auto& k : fm.r_k) {
            RootVec s = a + k;
            if (fm.rd.contains(s) && !in_q(s)) {
                rep.closed_under_k = false;
                rep.violations.push_back("K-translate " + a.str() + " + " + k.str() +
                                         " escapes Q");
            }
        }
    return rep;
}

// All valid positivity choices Q, found by picking one root from each
// opposite pair of M-roots and keeping the closed ones. Conditions are
// symmetric in the pair, so this search is exhaustive.
inline std::vector<std::vector<RootVec>> enumerate_Q(const FlagManifold& fm,
                                                     std::size_t max_m_roots = 30) {
    if (fm.r_m.size() > max_m_roots)
        throw std::invalid_argument("enumerate_Q: too many M-roots (" +
                                    std::to_string(fm.r_m.size()) + " > " +
                                    std::to_string(max_m_roots) + ")");
    std::vector<RootVec> reps;  // lexicographically larger member of each pair
    for (const auto& r : fm.r_m)
        if (-r < r) reps.push_back(r);
    const std::size_t p = reps.size();
    std::vector<std::vector<RootVec>> found;
    for (std::uint64_t mask = 0; mask < (1ULL << p); ++mask) {
        std::vector<RootVec> cand;
        cand.reserve(p);
        for (std::size_t i = 0; i < p; ++i)
            cand.push_back((mask >> i) & 1 ? reps[i] : -reps[i]);
        std::sort(cand.begin(), cand.end());
        if (validate_Q(fm, cand).ok()) found.push_back(std::move(cand));
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a < b; });
    return found;
}

// Fundamental weight of simple node k (1-based): the vector w with
// 2 <w, alpha_j> / <alpha_j, alpha_j> = delta_{kj} over all simple roots.
// For family A the e-coordinates are pinned by the trace-zero gauge.
inline std::vector<Rat> fundamental_weight(const RootDatum& rd, int k) {
    if (k < 1 || k > rd.rank()) throw std::invalid_argument("fundamental_weight: bad node");
    const int d = rd.alg.d;
    RatMatrix m;
    std::vector<Rat> rhs;
    for (int j = 0; j < rd.rank(); ++j) {
        std::vector<Rat> row(d);
        for (int i = 0; i < d; ++i) row[i] = rd.simple[j].e[i];
        m.push_back(std::move(row));
        rhs.push_back(j + 1 == k ? Rat(rd.simple[j].norm2()) / 2 : Rat(0));
    }
    if (rd.alg.family == Family::A) {
        m.push_back(std::vector<Rat>(d, Rat(1)));
        rhs.push_back(Rat(0));
    }
    return solve_square(m, rhs);
}

struct KEData {
    std::vector<Rat> coeffs;  // one per painted node, in black order
    std::vector<Rat> sigma;   // sum of the Q roots, e-basis
};

// Coefficients c_j with sum_{alpha in Q} alpha = sum_j c_j wbar_{k_j}; these
// are the exponents that make the explicit metric Einstein. Verifies that the
// sum pairs to zero with every unpainted simple root and that the expansion
// is exact.
inline KEData ke_coeffs(const FlagManifold& fm) {
    KEData out;
    const int d = fm.rd.alg.d;
    out.sigma.assign(d, Rat(0));
    for (const auto& a : fm.q)
        for (int i = 0; i < d; ++i) out.sigma[i] += a.e[i];

    for (int j = 1; j <= fm.rd.rank(); ++j) {
        bool is_black = std::find(fm.black.begin(), fm.black.end(), j) != fm.black.end();
        Rat pair = weight_inner(out.sigma, to_rat_vec(fm.rd.simple[j - 1]));
        if (!is_black && pair != 0)
            throw std::logic_error("ke_coeffs: sum of Q pairs nontrivially with white node " +
                                   std::to_string(j));
        if (is_black) out.coeffs.push_back(2 * pair / fm.rd.simple[j - 1].norm2());
    }

    std::vector<Rat> recon(d, Rat(0));
    for (std::size_t j = 0; j < fm.black.size(); ++j) {
        auto w = fundamental_weight(fm.rd, fm.black[j]);
        for (int i = 0; i < d; ++i) recon[i] += out.coeffs[j] * w[i];
    }
    if (recon != out.sigma)
        throw std::logic_error("ke_coeffs: expansion in fundamental weights is not exact");
    return out;
}

// Indices of the leading principal minors whose logarithms build the
// potential: the painted node positions k_1 < ... < k_m.
inline std::vector<int> admissible_minor_indices(const FlagManifold& fm) { return fm.black; }

// The weight xi = sum_j coeffs[j] * wbar_{k_j} in e-coordinates.
inline std::vector<Rat> xi_vector(const FlagManifold& fm, const std::vector<Rat>& coeffs) {
    if (coeffs.size() != fm.black.size())
        throw std::invalid_argument("xi_vector: need one coefficient per painted node");
    std::vector<Rat> xi(fm.rd.alg.d, Rat(0));
    for (std::size_t j = 0; j < fm.black.size(); ++j) {
        auto w = fundamental_weight(fm.rd, fm.black[j]);
        for (int i = 0; i < fm.rd.alg.d; ++i) xi[i] += coeffs[j] * w[i];
    }
    return xi;
}

// x_alpha = 2 <xi, alpha> / <alpha, alpha> for each alpha in Q, in Q order.
inline std::vector<Rat> omega_coefficients(const FlagManifold& fm, const std::vector<Rat>& xi) {
    std::vector<Rat> xs;
    xs.reserve(fm.q.size());
    for (const auto& a : fm.q)
        xs.push_back(2 * weight_inner(xi, to_rat_vec(a)) / a.norm2());
    return xs;
}

}  // namespace flagberg

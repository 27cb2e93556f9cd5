#pragma once

// The explicit Kähler potential of a flag manifold in its dense coordinate
// chart: variables attached to the negatives of the chosen positivity set Q,
// the nilpotent coordinate matrix Z, the Gram matrix A = conj(expZ)^T expZ
// (with formal conjugates), its leading principal minors at the painted
// positions, and the structural checks — unipotent block structure, absence
// of pure-type monomials (the diastasis property), and blow-up along rays.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagberg/flagstruct.hpp"
#include "flagberg/poly.hpp"
#include "flagberg/polymatrix.hpp"
#include "flagberg/rational.hpp"
#include "flagberg/rootsystems.hpp"

namespace flagberg {

struct CoordChart {
    FlagManifold flag;
    std::vector<RootVec> var_order;  // var_order[i] is the root attached to z_{i+1}

    int n() const { return static_cast<int>(var_order.size()); }
};

// Deterministic chart: z-variables enumerate -Q in lexicographic order.
inline CoordChart make_chart(const FlagManifold& fm) {
    CoordChart c;
    c.flag = fm;
    for (const auto& a : fm.q) c.var_order.push_back(-a);
    std::sort(c.var_order.begin(), c.var_order.end());
    return c;
}

// Z(z) = sum_i z_i * E_{beta_i} over the chart roots; nilpotency is implied
// by all beta_i lying on one side of a hyperplane and is re-verified by the
// exponential below.
inline PolyMatrix build_Z(const CoordChart& chart) {
    const auto& alg = chart.flag.rd.alg;
    const int n = chart.n();
    PolyMatrix z(n, alg.matrix_dim);
    for (int v = 0; v < n; ++v) {
        IntMat m = root_vector_matrix(alg, chart.var_order[v]);
        Poly zv = Poly::z(n, v);
        for (int i = 0; i < alg.matrix_dim; ++i)
            for (int j = 0; j < alg.matrix_dim; ++j)
                if (m.at(i, j) != 0) {
                    Poly t = zv;
                    t.scale(GaussRat(Rat(static_cast<long>(m.at(i, j)))));
                    z.at(i, j) += t;
                }
    }
    return z;
}

struct PotentialData {
    CoordChart chart;
    PolyMatrix expZ;
    PolyMatrix gram;             // conj(expZ)^T * expZ with formal conjugates
    std::vector<int> minor_indices;
    std::vector<Poly> minors;    // P_j = leading principal minor at minor_indices[j]
    std::vector<Rat> coeffs;     // exponents c_j; the potential is sum c_j log P_j
};

// Assembles the potential data for given exponents (one per painted node).
// Enforces the Hermitian-reality and normalization invariants of the minors.
inline PotentialData build_potential(const CoordChart& chart, const std::vector<Rat>& coeffs) {
    if (coeffs.size() != chart.flag.black.size())
        throw std::invalid_argument("build_potential: need one coefficient per painted node");
    PotentialData pd;
    pd.chart = chart;
    pd.expZ = nilpotent_exp(build_Z(chart));
    pd.gram = pd.expZ.transpose().conj_swap() * pd.expZ;
    pd.minor_indices = admissible_minor_indices(chart.flag);
    pd.coeffs = coeffs;
    for (int k : pd.minor_indices) {
        Poly p = principal_minor(pd.gram, k);
        if (!p.self_conjugate())
            throw std::logic_error("build_potential: minor at index " + std::to_string(k) +
                                   " is not conjugation-invariant");
        if (!(p.constant_term() == GaussRat(1)))
            throw std::logic_error("build_potential: minor at index " + std::to_string(k) +
                                   " has constant term != 1");
        pd.minors.push_back(std::move(p));
    }
    return pd;
}

inline PotentialData build_potential(const FlagManifold& fm, const std::vector<Rat>& coeffs) {
    return build_potential(make_chart(fm), coeffs);
}

// Potential with the distinguished exponents that make the metric Einstein.
inline PotentialData build_potential_ke(const FlagManifold& fm) {
    return build_potential(fm, ke_coeffs(fm).coeffs);
}

// Structure of the exponential on the top-left d x d block: unit diagonal,
// and every nonzero off-diagonal entry of exp(Z) sits where Z itself is
// already nonzero.
inline bool check_exp_structure(const CoordChart& chart) {
    const int d = chart.flag.rd.alg.d;
    PolyMatrix z = build_Z(chart);
    PolyMatrix e = nilpotent_exp(z);
    for (int i = 0; i < d; ++i) {
        if (!(e.at(i, i) == Poly::one(chart.n()))) return false;
        for (int j = 0; j < d; ++j)
            if (i != j && !e.at(i, j).is_zero() && z.at(i, j).is_zero()) return false;
    }
    return true;
}

struct DiastasisReport {
    bool ok = true;
    std::vector<std::string> offending;  // minor index and monomial for each violation
};

// Exhaustive scan of each minor's finite support: the constant term must be
// 1 and no purely holomorphic (w-degree 0) or purely antiholomorphic
// (z-degree 0) monomial may appear. This pins the potential as the diastasis.
inline DiastasisReport check_diastasis(const PotentialData& pd) {
    DiastasisReport rep;
    const int n = pd.chart.n();
    for (std::size_t j = 0; j < pd.minors.size(); ++j) {
        const Poly& p = pd.minors[j];
        std::string where = "minor k=" + std::to_string(pd.minor_indices[j]);
        if (!(p.constant_term() == GaussRat(1))) {
            rep.ok = false;
            rep.offending.push_back(where + ": constant term " + p.constant_term().str());
        }
        for (const auto& [mono, coeff] : p.terms()) {
            int zdeg = Poly::z_degree(mono, n), wdeg = Poly::w_degree(mono, n);
            if (zdeg + wdeg == 0) continue;
            if (zdeg == 0 || wdeg == 0) {
                rep.ok = false;
                rep.offending.push_back(where + ": pure-type monomial " + p.mono_str(mono) +
                                        " with coefficient " + coeff.str());
            }
        }
    }
    return rep;
}

// Restricting to the complex ray z = a*t, the potential must be unbounded:
// some minor restricts to a non-constant polynomial in (t, conj t).
inline bool check_blowup(const PotentialData& pd, const std::vector<GaussRat>& direction) {
    if (static_cast<int>(direction.size()) != pd.chart.n())
        throw std::invalid_argument("check_blowup: direction has wrong length");
    if (std::all_of(direction.begin(), direction.end(),
                    [](const GaussRat& g) { return g.is_zero(); }))
        throw std::invalid_argument("check_blowup: zero direction");
    for (const auto& p : pd.minors)
        if (p.restrict_ray(direction).total_degree() > 0) return true;
    return false;
}

}  // namespace flagberg

#pragma once

// Shared test fixtures: the seven reference flags exercised throughout the
// suite, plus seeded random rational points for property checks.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "flagberg/flagberg.hpp"

namespace fbt {

using namespace flagberg;

struct CatalogEntry {
    std::string label;
    Family family;
    int d;
    std::vector<int> black;
    std::vector<long> ke;  // expected distinguished coefficients
    long w0;               // expected W at the origin
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        {"P1", Family::A, 2, {1}, {2}, 2},
        {"P2", Family::A, 3, {1}, {3}, 9},
        {"F3", Family::A, 3, {1, 2}, {2, 2}, 16},
        {"Gr24", Family::A, 4, {2}, {4}, 256},
        {"LG2", Family::C, 2, {1}, {4}, 256},
        {"Q3", Family::B, 2, {1}, {3}, 27},
        {"Q5", Family::B, 3, {1}, {5}, 3125},
    };
    return entries;
}

inline FlagManifold build(const CatalogEntry& e) { return build_flag(e.family, e.d, e.black); }

inline Rat rnd_rat(std::mt19937_64& rng, int num_abs = 3, int den_lo = 2, int den_hi = 5) {
    std::uniform_int_distribution<int> num(-num_abs, num_abs);
    std::uniform_int_distribution<int> den(den_lo, den_hi);
    return make_rat(num(rng), den(rng));
}

inline GaussRat rnd_gauss(std::mt19937_64& rng, int num_abs = 3) {
    return GaussRat(rnd_rat(rng, num_abs), rnd_rat(rng, num_abs));
}

// A point with ws = conj(zs), where every real-analytic quantity is real.
inline std::pair<GaussVec, GaussVec> conj_point(std::mt19937_64& rng, int n) {
    GaussVec zs(n), ws(n);
    for (int i = 0; i < n; ++i) {
        zs[i] = rnd_gauss(rng);
        ws[i] = zs[i].conj();
    }
    return {zs, ws};
}

// Independent z and w values (holomorphic and antiholomorphic slots free).
inline std::pair<GaussVec, GaussVec> free_point(std::mt19937_64& rng, int n) {
    GaussVec zs(n), ws(n);
    for (int i = 0; i < n; ++i) {
        zs[i] = rnd_gauss(rng);
        ws[i] = rnd_gauss(rng);
    }
    return {zs, ws};
}

}  // namespace fbt

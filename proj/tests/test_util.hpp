// Shared helpers for the test suites: deterministic random generators for
// polynomials, monomials and monomial ideals.
#pragma once

#include "eqmod/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace eqmod::testutil {

using Rng = std::mt19937_64;

// Platform-independent draw in [0, n).
inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return rng() % n; }

inline long draw_int(Rng& rng, long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline Expvec random_monomial(Rng& rng, size_t nvars, int max_deg) {
    Expvec m(nvars, 0);
    int deg = static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_deg + 1)));
    for (int i = 0; i < deg; ++i) m[draw(rng, nvars)]++;
    return m;
}

inline Expvec random_monomial_of_degree(Rng& rng, size_t nvars, int deg) {
    Expvec m(nvars, 0);
    for (int i = 0; i < deg; ++i) m[draw(rng, nvars)]++;
    return m;
}

inline Polynomial random_poly(Rng& rng, const RingPtr& ring, int max_terms, int max_deg) {
    Polynomial p = Polynomial::zero(ring);
    int nt = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_terms)));
    for (int i = 0; i < nt; ++i) {
        long c = draw_int(rng, -5, 5);
        if (c == 0) c = 1;
        p = p + Polynomial::term(ring, random_monomial(rng, ring->nvars(), max_deg), Coeff(c));
    }
    return p;
}

inline Polynomial random_homogeneous_poly(Rng& rng, const RingPtr& ring, int max_terms, int deg) {
    Polynomial p = Polynomial::zero(ring);
    int nt = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_terms)));
    for (int i = 0; i < nt; ++i) {
        long c = draw_int(rng, -5, 5);
        if (c == 0) c = 1;
        p = p + Polynomial::term(ring, random_monomial_of_degree(rng, ring->nvars(), deg), Coeff(c));
    }
    return p;
}

// Height-2 perfect monomial ideals with generator degrees <= 2: m-primary
// ideals in two of the variables, the coordinate-triangle ideal, and the
// (x^2, y^2) complete intersection.  Hilbert-Burch gives F_1(I) = I for
// exactly this class, which the direct-sum Fitting suites rely on.
inline std::vector<Polynomial> random_perfect_ht2_monomial_ideal(Rng& rng, const RingPtr& ring) {
    size_t nv = ring->nvars();
    size_t a = draw(rng, nv);
    size_t b = draw(rng, nv - 1);
    if (b >= a) ++b;
    auto mono2 = [&](int ea, int eb) {
        Expvec m(nv, 0);
        m[a] = static_cast<std::uint16_t>(ea);
        m[b] = static_cast<std::uint16_t>(eb);
        return Polynomial::term(ring, m, Coeff(1));
    };
    switch (draw(rng, 6)) {
        case 0: return {mono2(1, 0), mono2(0, 1)};
        case 1: return {mono2(2, 0), mono2(0, 1)};
        case 2: return {mono2(1, 0), mono2(0, 2)};
        case 3: return {mono2(2, 0), mono2(1, 1), mono2(0, 2)};
        case 4: return {mono2(2, 0), mono2(0, 2)};
        default: {
            if (nv < 3) return {mono2(2, 0), mono2(0, 2)};
            size_t c = 0;
            while (c == a || c == b) ++c;
            auto tri = [&](size_t u, size_t v) {
                Expvec m(nv, 0);
                m[u] = 1;
                m[v] = 1;
                return Polynomial::term(ring, m, Coeff(1));
            };
            return {tri(a, b), tri(a, c), tri(b, c)};
        }
    }
}

}  // namespace eqmod::testutil

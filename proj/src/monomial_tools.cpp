#include "eqmod/monomial_tools.hpp"

#include "eqmod/errors.hpp"

#include <algorithm>

namespace eqmod {

bool is_monomial(Ideal& ideal) {
    for (const auto& g : ensure_gb(ideal))
        if (g.num_terms() != 1) return false;
    return true;
}

std::vector<Ideal> minimal_primes_monomial(Ideal& ideal) {
    if (!is_monomial(ideal)) throw std::invalid_argument("minimal_primes_monomial: non-monomial ideal");
    const RingPtr& ring = ideal.ring;
    const size_t nv = ring->nvars();
    if (nv > 20) throw bound_exceeded_error("minimal_primes_monomial: more than 20 variables");

    const auto& gb = ensure_gb(ideal);
    std::vector<std::uint32_t> supports;
    for (const auto& g : gb) {
        const Expvec& m = g.terms().begin()->first;
        if (exp_is_one(m)) return {};  // unit ideal, empty variety
        std::uint32_t s = 0;
        for (size_t i = 0; i < nv; ++i)
            if (m[i] > 0) s |= (1u << i);
        supports.push_back(s);
    }

    // Minimal covers: subsets of variables meeting every support, pruned by
    // inclusion; masks visited in increasing popcount.
    std::vector<std::uint32_t> masks;
    for (std::uint32_t t = 0; t < (1u << nv); ++t) masks.push_back(t);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::vector<std::uint32_t> covers;
    for (std::uint32_t t : masks) {
        bool dominated = false;
        for (std::uint32_t c : covers)
            if ((c & ~t) == 0) { dominated = true; break; }
        if (dominated) continue;
        bool is_cover = true;
        for (std::uint32_t s : supports)
            if ((s & t) == 0) { is_cover = false; break; }
        if (is_cover) covers.push_back(t);
    }

    std::vector<Ideal> primes;
    for (std::uint32_t c : covers) {
        std::vector<Polynomial> gens;
        for (size_t i = 0; i < nv; ++i)
            if (c & (1u << i)) gens.push_back(Polynomial::variable(ring, i));
        primes.emplace_back(ring, std::move(gens));
    }
    return primes;
}

bool is_m_primary(Ideal& ideal) { return dimension(ideal) == 0; }

}  // namespace eqmod

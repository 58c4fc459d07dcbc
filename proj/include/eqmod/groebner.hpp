// Buchberger Groebner bases for ideals, normal forms, elimination,
// dimension/height via independent variable sets, and radical membership.
//
// Everything is deterministic for a fixed input and order: pair selection is
// by (lcm, i, j), divisor search is by basis index, and reduced bases are
// sorted by leading monomial.
#pragma once

#include "eqmod/polynomial.hpp"

#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace eqmod {

inline constexpr int kInfiniteHeight = std::numeric_limits<int>::max();

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;
    // Reduced basis for the order it was computed under; write-once.
    std::optional<std::pair<MonomialOrder, std::vector<Polynomial>>> cached_gb;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)), gens(std::move(g)) {}

    static Ideal zero(RingPtr r) { return Ideal(std::move(r), {}); }
};

// Reduced Groebner basis of the ideal generated by `gens` (monic, minimal,
// tail-reduced, sorted by leading monomial ascending).
std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord);

// Returns the ideal with its reduced basis cached for `ord`.
Ideal groebner(Ideal ideal, const MonomialOrder& ord);

// Cached basis, computing it (under grevlex by default) when absent.
const std::vector<Polynomial>& ensure_gb(Ideal& ideal, const MonomialOrder& ord = MonomialOrder::grevlex());

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, Ideal& ideal);
bool membership(const Polynomial& f, Ideal& ideal);

bool is_unit_ideal(Ideal& ideal);
bool is_zero_ideal(Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
bool ideal_contains(Ideal& big, const Ideal& small);  // small ⊆ big
bool ideal_equal(Ideal& a, Ideal& b);

// I ∩ k[vars outside `block`]; returned in the same ring with generators free
// of the block variables.
Ideal elimination(const Ideal& ideal, const std::vector<std::string>& block);

// Krull dimension of R/I (unit ideal: -1); height = nvars - dim (unit: +inf).
int dimension(Ideal& ideal);
int height(Ideal& ideal);

// f ∈ √I, via the support test for monomial ideals and the auxiliary-variable
// trick 1 ∈ I + (1 - z f) otherwise.
bool radical_membership(const Polynomial& f, Ideal& ideal);

// --- internals shared with the module engine -------------------------------

// A polynomial as a term vector sorted strictly descending under an order.
using TermVec = std::vector<std::pair<Expvec, Coeff>>;

TermVec to_ordered(const Polynomial& p, const MonomialOrder& ord);
Polynomial from_ordered(const RingPtr& ring, const TermVec& v);

// a - c * x^m * b, inputs sorted under `ord`.
TermVec ordered_sub_mul(const TermVec& a, const Coeff& c, const Expvec& m, const TermVec& b,
                        const Field& field, const MonomialOrder& ord);

// Scales to a canonical representative: primitive with positive leading
// coefficient over Q, monic over Fp.
void normalize_representative(TermVec& v, const Field& field);

// Largest independent-set size among variable supports: max |T| over subsets
// T of the variables such that no support is contained in T.
int max_independent_set(const std::vector<std::vector<bool>>& supports, size_t nvars);

}  // namespace eqmod

// Combinatorial fast paths for monomial ideals: minimal primes by minimal
// vertex covers of the generator supports, dimension-zero tests.
#pragma once

#include "eqmod/groebner.hpp"

#include <vector>

namespace eqmod {

// True iff some generating set consists of monomials (checked on a reduced
// basis, so (x + y, y) qualifies).
bool is_monomial(Ideal& ideal);

// Complete irredundant list of minimal primes of a monomial ideal, each
// generated by variables; rejects non-monomial input.
std::vector<Ideal> minimal_primes_monomial(Ideal& ideal);

// dim R/I == 0.
bool is_m_primary(Ideal& ideal);

}  // namespace eqmod

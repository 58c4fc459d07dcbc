// Rees algebra of a module E ⊆ R^e: kernel presentation by elimination,
// fiber-cone ideal and analytic spread, Rees powers E^n in the canonical
// degree-n basis of R[t]_n, and the linear-type test.
#pragma once

#include "eqmod/groebner.hpp"
#include "eqmod/module_invariants.hpp"

#include <map>
#include <string>
#include <vector>

namespace eqmod {

struct ReesData {
    RingPtr base_ring;          // k[x]
    RingPtr presentation_ring;  // k[x, y_1..y_n], y_j ↦ Σ_i ψ_ij t_i
    RingPtr fiber_ring;         // k[y]
    std::vector<std::string> t_names;
    std::vector<std::string> y_names;
    Ideal kernel;  // J ⊆ k[x, y]
    Ideal fiber;   // J̄ ⊆ k[y]
    int analytic_spread = 0;
};

ReesData rees_kernel(const ModuleSpec& e);

// dim k[y]/J̄ over the graded-local surrogate; homogeneous input only.
int analytic_spread(const ModuleSpec& e);

// E^n ⊆ R^{binom(n+e-1, e-1)} in the canonical graded-lex basis of degree-n
// t-monomials; generators are the n-fold products of the generator forms in
// multiset order.  Parallel and serial paths produce identical output.
Submodule rees_power(const ModuleSpec& e, int n, bool parallel = true);

// R(E) = Sym(E): the kernel equals the ideal of its y-linear part, which is
// generated by the syzygies of ψ.
bool is_linear_type(const ModuleSpec& e);

size_t rees_power_ambient_rank(size_t ambient_rank, int n);

namespace rees_detail {

// Homogeneous t-forms with polynomial coefficients: exponent over t-block
// mapped to a coefficient in k[x].
using TForm = std::map<Expvec, Polynomial>;

std::vector<Expvec> t_basis(size_t e, int n);  // degree-n exponents, graded-lex descending
TForm form_mul(const TForm& a, const TForm& b, const RingPtr& ring);
std::vector<TForm> generator_forms(const ModuleSpec& e);
std::vector<TForm> power_forms(const ModuleSpec& e, int n, bool parallel);
VectorElement form_to_vector(const RingPtr& ring, const TForm& f, const std::vector<Expvec>& basis);

}  // namespace rees_detail

}  // namespace eqmod

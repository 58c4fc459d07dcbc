// Groebner bases for submodules of free modules R^s, vector normal forms,
// membership, equality, and syzygy computation by component elimination.
#pragma once

#include "eqmod/groebner.hpp"
#include "eqmod/polynomial.hpp"

#include <optional>
#include <vector>

namespace eqmod {

struct VectorElement {
    RingPtr ring;
    std::vector<Polynomial> comps;  // length = ambient rank

    VectorElement() = default;
    VectorElement(RingPtr r, size_t ambient)
        : ring(r), comps(ambient, Polynomial::zero(r)) {}
    VectorElement(RingPtr r, std::vector<Polynomial> c) : ring(std::move(r)), comps(std::move(c)) {}

    size_t ambient() const { return comps.size(); }
    bool is_zero() const;
    bool operator==(const VectorElement& o) const { return comps == o.comps; }

    VectorElement operator+(const VectorElement& o) const;
    VectorElement operator-(const VectorElement& o) const;
    VectorElement scaled(const Coeff& c) const;
    VectorElement times(const Polynomial& f) const;

    // The common total degree of a homogeneous vector under generator twists
    // (degree of entry i plus twists[i]); nullopt if not homogeneous.
    std::optional<int> homogeneous_degree(const std::vector<int>& twists) const;
    std::optional<int> homogeneous_degree() const;
};

struct Submodule {
    RingPtr ring;
    size_t ambient_rank = 0;
    std::vector<VectorElement> gens;
    std::optional<std::pair<ModuleOrder, std::vector<VectorElement>>> cached_gb;

    Submodule() = default;
    Submodule(RingPtr r, size_t ambient, std::vector<VectorElement> g)
        : ring(std::move(r)), ambient_rank(ambient), gens(std::move(g)) {}
};

inline ModuleOrder default_module_order() { return ModuleOrder::top(MonomialOrder::grevlex()); }

std::vector<VectorElement> module_groebner_basis(const RingPtr& ring, size_t ambient,
                                                 const std::vector<VectorElement>& gens,
                                                 const ModuleOrder& ord);

Submodule module_groebner(Submodule m, const ModuleOrder& ord);
const std::vector<VectorElement>& ensure_module_gb(Submodule& m);

VectorElement module_normal_form(const VectorElement& v, const std::vector<VectorElement>& basis,
                                 const ModuleOrder& ord);
bool vector_membership(const VectorElement& v, Submodule& m);
bool submodule_contains(Submodule& big, const Submodule& small);
bool submodule_equal(Submodule& a, Submodule& b);

// Generators of the kernel of R^n -> R^s, sending e_j to columns[j].
std::vector<VectorElement> syzygies(const RingPtr& ring, size_t ambient,
                                    const std::vector<VectorElement>& columns);

}  // namespace eqmod

// Presentations, Fitting ideals, rank, minimal generator counts, and the
// embedded ideal-module tests for a module E ⊆ R^e given by a generator
// matrix.
#pragma once

#include "eqmod/groebner.hpp"
#include "eqmod/module_gb.hpp"

#include <map>
#include <memory>
#include <optional>

namespace eqmod {

// E ⊆ R^e presented by the columns of an e×n matrix ψ.
struct ModuleSpec {
    RingPtr ring;
    size_t ambient_rank = 0;
    std::vector<VectorElement> columns;

    ModuleSpec() = default;
    ModuleSpec(RingPtr r, size_t ambient, std::vector<VectorElement> cols);

    size_t ngens() const { return columns.size(); }
    const Polynomial& entry(size_t row, size_t col) const { return columns[col].comps[row]; }
    bool is_homogeneous() const;

    // Derived data is expensive; share it across copies.
    struct Cache {
        std::optional<std::vector<VectorElement>> syzygies;
        std::map<size_t, Ideal> fitting;
        std::optional<int> rank;
    };
    std::shared_ptr<Cache> cache = std::make_shared<Cache>();
};

Submodule to_submodule(const ModuleSpec& e);

// All k×k minors of the matrix with the given columns (nrows = ambient rank
// of the columns), normalized and deduplicated up to scalars; the `parallel`
// flag switches the OpenMP path, output is identical either way.
std::vector<Polynomial> matrix_minors(const RingPtr& ring, const std::vector<VectorElement>& cols,
                                      size_t nrows, size_t k, bool parallel = true);

// Largest k with a nonvanishing k-minor of ψ.
int module_rank(const ModuleSpec& e);

// Columns of the syzygy matrix φ of ψ's columns (cached).
const std::vector<VectorElement>& presentation_syzygies(const ModuleSpec& e);

// F_i(E) = I_{n-i}(φ) from the syzygy presentation; F_i = R for i ≥ n.
Ideal fitting_ideal(const ModuleSpec& e, size_t i, bool parallel = true);

// F_0(G/E) = I_e(ψ), the Fitting ideal of the quotient presented by ψ itself.
Ideal quotient_fitting_zero(const ModuleSpec& e, bool parallel = true);

// Height of I_e(ψ) = grade of G/E under the grade-equals-height convention;
// +infinity sentinel when E = G.
int grade_quotient(const ModuleSpec& e);

// dim R/I_e(ψ); -1 when E = G.
int dim_quotient(const ModuleSpec& e);

// Minimal number of generators over the graded-local ring (homogeneous only).
int mu_local(const ModuleSpec& e);

// μ(E_p) from the Fitting characterization; `prime` is caller-asserted prime.
int mu_at_prime(const ModuleSpec& e, Ideal& prime);

bool is_ideal_module(const ModuleSpec& e);               // grade G/E ≥ 2
bool is_free_on_punctured_spectrum(const ModuleSpec& e);  // F_rank(E) m-primary

}  // namespace eqmod

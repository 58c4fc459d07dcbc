// Graded minimal free resolutions over the graded-local ring k[x]_(x):
// minimal generator selection by graded Nakayama, iterated syzygies, and
// depth through the Auslander-Buchsbaum formula depth = nvars - pd.
#pragma once

#include "eqmod/errors.hpp"
#include "eqmod/module_gb.hpp"

#include <vector>

namespace eqmod {

struct FreeResolution {
    // betti[k] = rank of F_k; maps[k] = columns of d_{k+1} : F_{k+1} -> F_k.
    std::vector<size_t> betti;
    std::vector<std::vector<int>> twists;  // generator degrees of each F_k
    std::vector<std::vector<VectorElement>> maps;

    int pd() const { return static_cast<int>(maps.size()); }
};

// Indices (in selection order, degree-ascending) of a minimal generating
// subset of the given homogeneous generators; `twists` grades the ambient
// free module.  Rejects non-homogeneous input.
std::vector<size_t> minimal_generator_indices(const RingPtr& ring, size_t ambient,
                                              const std::vector<VectorElement>& gens,
                                              const std::vector<int>& twists);
std::vector<size_t> minimal_generator_indices(const RingPtr& ring, size_t ambient,
                                              const std::vector<VectorElement>& gens);

// Minimal free resolution of the submodule generated by `gens` inside R^ambient.
FreeResolution minimal_resolution_submodule(const RingPtr& ring, size_t ambient,
                                            const std::vector<VectorElement>& gens);

// Minimal free resolution of the quotient R^ambient / <relations>.
FreeResolution minimal_resolution_quotient(const RingPtr& ring, size_t ambient,
                                           const std::vector<VectorElement>& relations);

int projective_dimension(const FreeResolution& res);

// nvars - pd; +infinity sentinel for the zero module.
int depth_graded_submodule(const RingPtr& ring, size_t ambient, const std::vector<VectorElement>& gens);
int depth_graded_quotient(const RingPtr& ring, size_t ambient, const std::vector<VectorElement>& relations);

// Test hooks: exactness-by-composition and minimality of a resolution.
bool differentials_compose_to_zero(const FreeResolution& res);
bool resolution_is_minimal(const FreeResolution& res);

}  // namespace eqmod

#include "eqmod/resolution.hpp"

#include "eqmod/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace eqmod {

namespace {

std::vector<int> column_degrees(const std::vector<VectorElement>& cols, const std::vector<int>& twists) {
    std::vector<int> degs;
    for (const auto& c : cols) {
        auto d = c.homogeneous_degree(twists);
        if (!d) throw non_homogeneous_error("graded operation: non-homogeneous column rejected");
        degs.push_back(*d);
    }
    return degs;
}

std::vector<VectorElement> scaled_by_variables(const RingPtr& ring, const std::vector<VectorElement>& gens) {
    std::vector<VectorElement> out;
    for (const auto& g : gens)
        for (size_t v = 0; v < ring->nvars(); ++v) out.push_back(g.times(Polynomial::variable(ring, v)));
    return out;
}

}  // namespace

std::vector<size_t> minimal_generator_indices(const RingPtr& ring, size_t ambient,
                                              const std::vector<VectorElement>& gens,
                                              const std::vector<int>& twists) {
    std::vector<int> degs = column_degrees(gens, twists);
    std::vector<size_t> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return degs[a] < degs[b]; });

    // v is redundant iff v ∈ <selected> + m·<all generators> (graded Nakayama).
    std::vector<VectorElement> m_times = scaled_by_variables(ring, gens);
    std::vector<size_t> selected;
    for (size_t j : order) {
        if (gens[j].is_zero()) continue;
        std::vector<VectorElement> space = m_times;
        for (size_t s : selected) space.push_back(gens[s]);
        Submodule sub(ring, ambient, std::move(space));
        if (!vector_membership(gens[j], sub)) selected.push_back(j);
    }
    return selected;
}

std::vector<size_t> minimal_generator_indices(const RingPtr& ring, size_t ambient,
                                              const std::vector<VectorElement>& gens) {
    return minimal_generator_indices(ring, ambient, gens, std::vector<int>(ambient, 0));
}

namespace {

// Common tail: given a minimal system of columns in R^{rank}, iterate
// syzygies + minimalization until they vanish.
void resolve_from(const RingPtr& ring, FreeResolution& res, std::vector<VectorElement> cols,
                  size_t rank, std::vector<int> cur_twists) {
    while (!cols.empty()) {
        std::vector<int> next_twists = column_degrees(cols, cur_twists);
        res.maps.push_back(cols);
        res.betti.push_back(cols.size());
        res.twists.push_back(next_twists);

        std::vector<VectorElement> syz = syzygies(ring, rank, cols);
        std::vector<size_t> keep = minimal_generator_indices(ring, cols.size(), syz, next_twists);
        std::vector<VectorElement> next;
        for (size_t k : keep) next.push_back(syz[k]);
        rank = cols.size();
        cur_twists = std::move(next_twists);
        cols = std::move(next);
    }
}

}  // namespace

FreeResolution minimal_resolution_submodule(const RingPtr& ring, size_t ambient,
                                            const std::vector<VectorElement>& gens) {
    column_degrees(gens, std::vector<int>(ambient, 0));  // homogeneity gate
    std::vector<size_t> keep = minimal_generator_indices(ring, ambient, gens);
    std::vector<VectorElement> mingens;
    for (size_t k : keep) mingens.push_back(gens[k]);

    FreeResolution res;
    res.betti.push_back(mingens.size());
    {
        std::vector<int> t;
        for (const auto& g : mingens) t.push_back(*g.homogeneous_degree());
        res.twists.push_back(t);
    }
    if (mingens.empty()) return res;  // zero module

    std::vector<VectorElement> syz = syzygies(ring, ambient, mingens);
    std::vector<size_t> keep_s = minimal_generator_indices(ring, mingens.size(), syz, res.twists[0]);
    std::vector<VectorElement> first;
    for (size_t k : keep_s) first.push_back(syz[k]);
    resolve_from(ring, res, std::move(first), mingens.size(), res.twists[0]);
    return res;
}

FreeResolution minimal_resolution_quotient(const RingPtr& ring, size_t ambient,
                                           const std::vector<VectorElement>& relations) {
    std::vector<int> twists0(ambient, 0);
    column_degrees(relations, twists0);  // homogeneity gate

    // Split off free summands: a relation with a unit entry eliminates one
    // generator of F_0 together with itself.
    std::vector<VectorElement> cols;
    for (const auto& c : relations)
        if (!c.is_zero()) cols.push_back(c);
    size_t rank = ambient;
    const Field& field = ring->field;
    while (true) {
        size_t ui = 0, uj = 0;
        bool found = false;
        for (size_t j = 0; j < cols.size() && !found; ++j)
            for (size_t i = 0; i < rank && !found; ++i)
                if (cols[j].comps[i].has_unit_term() && cols[j].comps[i].is_constant()) {
                    ui = i;
                    uj = j;
                    found = true;
                }
        if (!found) break;
        Coeff pivot = cols[uj].comps[ui].terms().begin()->second;
        for (size_t j = 0; j < cols.size(); ++j) {
            if (j == uj || cols[j].comps[ui].is_zero()) continue;
            Coeff factor = field.div(cols[j].comps[ui].terms().begin()->second, pivot);
            cols[j] = cols[j] - cols[uj].scaled(factor);
        }
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(uj));
        for (auto& c : cols) c.comps.erase(c.comps.begin() + static_cast<std::ptrdiff_t>(ui));
        --rank;
        std::erase_if(cols, [](const VectorElement& c) { return c.is_zero(); });
    }

    FreeResolution res;
    res.betti.push_back(rank);
    res.twists.push_back(std::vector<int>(rank, 0));
    if (cols.empty()) return res;  // free (or zero) quotient

    std::vector<size_t> keep = minimal_generator_indices(ring, rank, cols);
    std::vector<VectorElement> mincols;
    for (size_t k : keep) mincols.push_back(cols[k]);
    resolve_from(ring, res, std::move(mincols), rank, std::vector<int>(rank, 0));
    return res;
}

int projective_dimension(const FreeResolution& res) { return res.pd(); }

int depth_graded_submodule(const RingPtr& ring, size_t ambient, const std::vector<VectorElement>& gens) {
    FreeResolution res = minimal_resolution_submodule(ring, ambient, gens);
    if (res.betti[0] == 0) return kInfiniteHeight;  // zero module
    return static_cast<int>(ring->nvars()) - res.pd();
}

int depth_graded_quotient(const RingPtr& ring, size_t ambient, const std::vector<VectorElement>& relations) {
    FreeResolution res = minimal_resolution_quotient(ring, ambient, relations);
    if (res.betti[0] == 0) return kInfiniteHeight;  // zero module
    return static_cast<int>(ring->nvars()) - res.pd();
}

bool differentials_compose_to_zero(const FreeResolution& res) {
    for (size_t k = 0; k + 1 < res.maps.size(); ++k) {
        for (const auto& col : res.maps[k + 1]) {
            // col ∈ R^{betti[k+1]}; push through d_{k+1}.
            VectorElement image(col.ring, res.betti[k]);
            for (size_t j = 0; j < res.maps[k].size(); ++j)
                image = image + res.maps[k][j].times(col.comps[j]);
            if (!image.is_zero()) return false;
        }
    }
    return true;
}

bool resolution_is_minimal(const FreeResolution& res) {
    for (const auto& level : res.maps)
        for (const auto& col : level)
            for (const auto& entry : col.comps)
                if (entry.has_unit_term()) return false;
    return true;
}

}  // namespace eqmod

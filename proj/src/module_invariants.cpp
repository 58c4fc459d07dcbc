#include "eqmod/module_invariants.hpp"

#include "eqmod/errors.hpp"
#include "eqmod/parallel.hpp"
#include "eqmod/resolution.hpp"

#include <algorithm>
#include <set>

namespace eqmod {

ModuleSpec::ModuleSpec(RingPtr r, size_t ambient, std::vector<VectorElement> cols)
    : ring(std::move(r)), ambient_rank(ambient), columns(std::move(cols)) {
    if (ambient_rank < 1) throw std::invalid_argument("ModuleSpec: ambient rank must be >= 1");
    if (columns.empty()) throw std::invalid_argument("ModuleSpec: generator list is empty");
    for (const auto& c : columns) {
        if (c.comps.size() != ambient_rank)
            throw std::invalid_argument("ModuleSpec: column length differs from ambient rank");
        for (const auto& p : c.comps)
            if (!p.ring()->same_as(*ring)) throw std::invalid_argument("ModuleSpec: ring mismatch");
    }
}

bool ModuleSpec::is_homogeneous() const {
    for (const auto& c : columns)
        if (!c.homogeneous_degree()) return false;
    return true;
}

Submodule to_submodule(const ModuleSpec& e) { return Submodule(e.ring, e.ambient_rank, e.columns); }

namespace {

// Subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        size_t i = k;
        while (i-- > 0) {
            if (cur[i] + (k - i) < n) {
                ++cur[i];
                for (size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

// Determinants of all k×k column-submatrices for one fixed row subset,
// memoized over (remaining-rows depth, column mask) so shared cofactors are
// computed once.
class RowFixedMinors {
public:
    RowFixedMinors(const std::vector<VectorElement>& cols, const std::vector<size_t>& rows)
        : cols_(cols), rows_(rows) {}

    Polynomial det(const std::vector<size_t>& col_subset) {
        std::uint64_t mask = 0;
        for (size_t c : col_subset) mask |= (1ull << c);
        return det_rec(0, mask, col_subset);
    }

private:
    Polynomial det_rec(size_t depth, std::uint64_t colmask, const std::vector<size_t>& cols_list) {
        auto key = std::make_pair(depth, colmask);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const RingPtr& ring = cols_.front().ring;
        Polynomial result = Polynomial::zero(ring);
        size_t row = rows_[depth];
        if (depth + 1 == rows_.size()) {
            result = cols_[cols_list.front()].comps[row];
        } else {
            int sign = 1;
            for (size_t t = 0; t < cols_list.size(); ++t) {
                const Polynomial& entry = cols_[cols_list[t]].comps[row];
                if (!entry.is_zero()) {
                    std::vector<size_t> rest;
                    rest.reserve(cols_list.size() - 1);
                    for (size_t u = 0; u < cols_list.size(); ++u)
                        if (u != t) rest.push_back(cols_list[u]);
                    Polynomial minor = det_rec(depth + 1, colmask & ~(1ull << cols_list[t]), rest);
                    Polynomial term = entry * minor;
                    result = sign > 0 ? result + term : result - term;
                }
                sign = -sign;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    const std::vector<VectorElement>& cols_;
    const std::vector<size_t>& rows_;
    std::map<std::pair<size_t, std::uint64_t>, Polynomial> memo_;
};

Polynomial canonical_scalar_form(const Polynomial& p) {
    TermVec v = to_ordered(p, MonomialOrder::grevlex());
    normalize_representative(v, p.ring()->field);
    return from_ordered(p.ring(), v);
}

}  // namespace

std::vector<Polynomial> matrix_minors(const RingPtr& ring, const std::vector<VectorElement>& cols,
                                      size_t nrows, size_t k, bool parallel) {
    if (k == 0) return {Polynomial::constant(ring, Coeff(1))};
    if (cols.size() > 62) throw bound_exceeded_error("matrix_minors: more than 62 columns");
    if (k > nrows || k > cols.size()) return {};

    auto row_subsets = subsets_of_size(nrows, k);
    auto col_subsets = subsets_of_size(cols.size(), k);
    std::vector<std::vector<Polynomial>> per_rowset(row_subsets.size());

    parallel_for_index(row_subsets.size(), parallel, [&](size_t ri) {
        RowFixedMinors engine(cols, row_subsets[ri]);
        std::vector<Polynomial> dets;
        dets.reserve(col_subsets.size());
        for (const auto& cs : col_subsets) dets.push_back(engine.det(cs));
        per_rowset[ri] = std::move(dets);
    });

    std::set<Polynomial::TermMap> seen;
    std::vector<Polynomial> out;
    for (const auto& dets : per_rowset)
        for (const auto& d : dets) {
            if (d.is_zero()) continue;
            Polynomial c = canonical_scalar_form(d);
            if (seen.insert(c.terms()).second) out.push_back(std::move(c));
        }
    return out;
}

int module_rank(const ModuleSpec& e) {
    if (e.cache->rank) return *e.cache->rank;
    int result = 0;
    size_t kmax = std::min(e.ambient_rank, e.ngens());
    for (size_t k = kmax; k >= 1 && result == 0; --k) {
        auto row_subsets = subsets_of_size(e.ambient_rank, k);
        auto col_subsets = subsets_of_size(e.ngens(), k);
        for (const auto& rs : row_subsets) {
            RowFixedMinors engine(e.columns, rs);
            for (const auto& cs : col_subsets) {
                if (!engine.det(cs).is_zero()) {
                    result = static_cast<int>(k);
                    break;
                }
            }
            if (result != 0) break;
        }
    }
    e.cache->rank = result;
    return result;
}

const std::vector<VectorElement>& presentation_syzygies(const ModuleSpec& e) {
    if (!e.cache->syzygies) e.cache->syzygies = syzygies(e.ring, e.ambient_rank, e.columns);
    return *e.cache->syzygies;
}

Ideal fitting_ideal(const ModuleSpec& e, size_t i, bool parallel) {
    auto it = e.cache->fitting.find(i);
    if (it != e.cache->fitting.end()) return it->second;

    const size_t n = e.ngens();
    Ideal result;
    if (i >= n) {
        result = Ideal(e.ring, {Polynomial::constant(e.ring, Coeff(1))});
    } else {
        const auto& syz = presentation_syzygies(e);
        size_t k = n - i;
        if (syz.empty() || k > syz.size()) {
            result = Ideal::zero(e.ring);
        } else {
            result = Ideal(e.ring, matrix_minors(e.ring, syz, n, k, parallel));
        }
    }
    e.cache->fitting.emplace(i, result);
    return result;
}

Ideal quotient_fitting_zero(const ModuleSpec& e, bool parallel) {
    return Ideal(e.ring, matrix_minors(e.ring, e.columns, e.ambient_rank, e.ambient_rank, parallel));
}

int grade_quotient(const ModuleSpec& e) {
    Ideal f0 = quotient_fitting_zero(e);
    if (is_unit_ideal(f0)) return kInfiniteHeight;  // E = G
    return height(f0);
}

int dim_quotient(const ModuleSpec& e) {
    Ideal f0 = quotient_fitting_zero(e);
    return dimension(f0);
}

int mu_local(const ModuleSpec& e) {
    if (!e.is_homogeneous()) throw non_homogeneous_error("mu_local: non-homogeneous generator matrix");
    return static_cast<int>(minimal_generator_indices(e.ring, e.ambient_rank, e.columns).size());
}

int mu_at_prime(const ModuleSpec& e, Ideal& prime) {
    if (!prime.ring->same_as(*e.ring)) throw std::invalid_argument("mu_at_prime: ring mismatch");
    if (is_unit_ideal(prime)) throw std::invalid_argument("mu_at_prime: prime ideal must be proper");
    const size_t n = e.ngens();
    auto contained = [&](size_t i) {
        Ideal fi = fitting_ideal(e, i);
        for (const auto& g : fi.gens)
            if (!membership(g, prime)) return false;
        return true;
    };
    for (size_t i = 0; i <= n; ++i) {
        if (!contained(i)) {
            // F_{i-1} ⊆ p held for all previous steps by the loop invariant.
            return static_cast<int>(i);
        }
    }
    throw internal_error("mu_at_prime: inconsistent Fitting chain (R contained in a proper ideal)");
}

bool is_ideal_module(const ModuleSpec& e) { return grade_quotient(e) >= 2; }

bool is_free_on_punctured_spectrum(const ModuleSpec& e) {
    int r = module_rank(e);
    Ideal fe = fitting_ideal(e, static_cast<size_t>(r));
    if (is_unit_ideal(fe)) return true;  // free
    return dimension(fe) == 0;
}

}  // namespace eqmod

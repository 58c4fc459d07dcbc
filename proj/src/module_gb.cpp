#include "eqmod/module_gb.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eqmod {

bool VectorElement::is_zero() const {
    for (const auto& c : comps)
        if (!c.is_zero()) return false;
    return true;
}

VectorElement VectorElement::operator+(const VectorElement& o) const {
    if (comps.size() != o.comps.size()) throw std::invalid_argument("VectorElement: ambient-rank mismatch");
    VectorElement r(ring, comps.size());
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = comps[i] + o.comps[i];
    return r;
}

VectorElement VectorElement::operator-(const VectorElement& o) const {
    if (comps.size() != o.comps.size()) throw std::invalid_argument("VectorElement: ambient-rank mismatch");
    VectorElement r(ring, comps.size());
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = comps[i] - o.comps[i];
    return r;
}

VectorElement VectorElement::scaled(const Coeff& c) const {
    VectorElement r(ring, comps.size());
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = comps[i].scaled(c);
    return r;
}

VectorElement VectorElement::times(const Polynomial& f) const {
    VectorElement r(ring, comps.size());
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = comps[i] * f;
    return r;
}

std::optional<int> VectorElement::homogeneous_degree(const std::vector<int>& twists) const {
    std::optional<int> deg;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].is_zero()) continue;
        if (!comps[i].is_homogeneous()) return std::nullopt;
        int d = comps[i].degree() + twists[i];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<int>(0);  // zero vector counts as homogeneous of degree 0
}

std::optional<int> VectorElement::homogeneous_degree() const {
    return homogeneous_degree(std::vector<int>(comps.size(), 0));
}

namespace {

struct MTerm {
    size_t comp;
    Expvec mon;
    Coeff coeff;
};

using MTermVec = std::vector<MTerm>;

MTermVec to_ordered(const VectorElement& v, const ModuleOrder& ord) {
    MTermVec r;
    for (size_t i = 0; i < v.comps.size(); ++i)
        for (const auto& [m, c] : v.comps[i].terms()) r.push_back({i, m, c});
    std::sort(r.begin(), r.end(), [&](const MTerm& a, const MTerm& b) {
        return ord.compare(a.comp, a.mon, b.comp, b.mon) > 0;
    });
    return r;
}

VectorElement from_ordered(const RingPtr& ring, size_t ambient, const MTermVec& v) {
    VectorElement r(ring, ambient);
    for (const auto& t : v) r.comps[t.comp].add_term(t.mon, t.coeff);
    return r;
}

// a - c * x^m * b
MTermVec msub_mul(const MTermVec& a, const Coeff& c, const Expvec& m, const MTermVec& b,
                  const Field& field, const ModuleOrder& ord) {
    MTermVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Expvec bm = exp_mul(b[j].mon, m);
        int cmp = ord.compare(a[i].comp, a[i].mon, b[j].comp, bm);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({b[j].comp, std::move(bm), field.mul(field.neg(c), b[j].coeff)});
            ++j;
        } else {
            Coeff nc = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
            if (nc != 0) r.push_back({a[i].comp, a[i].mon, std::move(nc)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back({b[j].comp, exp_mul(b[j].mon, m), field.mul(field.neg(c), b[j].coeff)});
    return r;
}

void normalize_mrep(MTermVec& v, const Field& field) {
    if (v.empty()) return;
    if (field.spec().kind == FieldKind::Prime) {
        Coeff inv = field.inv(v.front().coeff);
        for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
        return;
    }
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    for (const auto& t : v) {
        mpz_class num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    if (v.front().coeff < 0) num_gcd = -num_gcd;
    Coeff scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& t : v) {
        t.coeff *= scale;
        t.coeff.canonicalize();
    }
}

struct MBasisElem {
    MTermVec terms;
    size_t lead_comp() const { return terms.front().comp; }
    const Expvec& lm() const { return terms.front().mon; }
    const Coeff& lc() const { return terms.front().coeff; }
};

MTermVec mreduce_full(MTermVec h, const std::vector<MBasisElem>& basis, const Field& field,
                      const ModuleOrder& ord) {
    MTermVec remainder;
    while (!h.empty()) {
        bool divided = false;
        for (const auto& g : basis) {
            if (g.lead_comp() == h.front().comp && exp_divides(g.lm(), h.front().mon)) {
                Coeff c = field.div(h.front().coeff, g.lc());
                Expvec m = exp_div(h.front().mon, g.lm());
                h = msub_mul(h, c, m, g.terms, field, ord);
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder.push_back(std::move(h.front()));
            h.erase(h.begin());
        }
    }
    return remainder;
}

struct MPair {
    size_t i, j;
    size_t comp;
    Expvec lcm;
};

struct MPairLess {
    const MonomialOrder* base;
    bool operator()(const MPair& a, const MPair& b) const {
        if (int c = base->compare(a.lcm, b.lcm)) return c < 0;
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

std::vector<MBasisElem> module_buchberger(const RingPtr& ring, const std::vector<VectorElement>& gens,
                                          const ModuleOrder& ord) {
    const Field& field = ring->field;
    std::vector<MBasisElem> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        MTermVec v = to_ordered(g, ord);
        normalize_mrep(v, field);
        basis.push_back({std::move(v)});
    }

    MonomialOrder base = ord.base();
    std::set<MPair, MPairLess> queue{MPairLess{&base}};
    std::set<std::pair<size_t, size_t>> treated;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            if (basis[i].lead_comp() != basis[k].lead_comp()) continue;
            queue.insert({i, k, basis[k].lead_comp(), exp_lcm(basis[i].lm(), basis[k].lm())});
        }
    };
    for (size_t k = 0; k < basis.size(); ++k) push_pairs_for(k);

    while (!queue.empty()) {
        MPair p = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({p.i, p.j});

        // Chain criterion (same leading component only; the product criterion
        // is not valid for modules).
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].lead_comp() != p.comp) continue;
            if (!exp_divides(basis[k].lm(), p.lcm)) continue;
            auto ik = std::minmax(p.i, k);
            auto jk = std::minmax(p.j, k);
            if (treated.count({ik.first, ik.second}) && treated.count({jk.first, jk.second})) chained = true;
        }
        if (chained) continue;

        const MBasisElem& f = basis[p.i];
        const MBasisElem& g = basis[p.j];
        MTermVec s;
        {
            Expvec mf = exp_div(p.lcm, f.lm());
            Coeff cf = field.inv(f.lc());
            for (const auto& t : f.terms) s.push_back({t.comp, exp_mul(t.mon, mf), field.mul(t.coeff, cf)});
            MTermVec gg;
            Coeff cg = field.inv(g.lc());
            for (const auto& t : g.terms) gg.push_back({t.comp, t.mon, field.mul(t.coeff, cg)});
            s = msub_mul(s, field.one(), exp_div(p.lcm, g.lm()), gg, field, ord);
        }
        MTermVec r = mreduce_full(std::move(s), basis, field, ord);
        if (r.empty()) continue;
        normalize_mrep(r, field);
        basis.push_back({std::move(r)});
        push_pairs_for(basis.size() - 1);
    }
    return basis;
}

std::vector<VectorElement> reduce_module_basis(const RingPtr& ring, size_t ambient,
                                               std::vector<MBasisElem> basis, const ModuleOrder& ord) {
    const Field& field = ring->field;
    std::vector<size_t> idx(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (int c = ord.compare(basis[a].lead_comp(), basis[a].lm(), basis[b].lead_comp(), basis[b].lm()))
            return c < 0;
        return a < b;
    });
    std::vector<MBasisElem> minimal;
    for (size_t i : idx) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.lead_comp() == basis[i].lead_comp() && exp_divides(kept.lm(), basis[i].lm())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(basis[i]));
    }
    std::vector<VectorElement> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MBasisElem> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MTermVec r = mreduce_full(minimal[i].terms, others, field, ord);
        Coeff inv = field.inv(r.front().coeff);
        for (auto& t : r) t.coeff = field.mul(t.coeff, inv);
        out.push_back(from_ordered(ring, ambient, r));
    }
    return out;
}

void check_gens(const RingPtr& ring, size_t ambient, const std::vector<VectorElement>& gens) {
    for (const auto& g : gens) {
        if (g.comps.size() != ambient) throw std::invalid_argument("module: ambient-rank mismatch");
        for (const auto& c : g.comps)
            if (!c.ring()->same_as(*ring)) throw std::invalid_argument("module: ring mismatch");
    }
}

}  // namespace

std::vector<VectorElement> module_groebner_basis(const RingPtr& ring, size_t ambient,
                                                 const std::vector<VectorElement>& gens,
                                                 const ModuleOrder& ord) {
    check_gens(ring, ambient, gens);
    return reduce_module_basis(ring, ambient, module_buchberger(ring, gens, ord), ord);
}

Submodule module_groebner(Submodule m, const ModuleOrder& ord) {
    m.cached_gb = {ord, module_groebner_basis(m.ring, m.ambient_rank, m.gens, ord)};
    return m;
}

const std::vector<VectorElement>& ensure_module_gb(Submodule& m) {
    if (!m.cached_gb) {
        ModuleOrder ord = default_module_order();
        m.cached_gb = {ord, module_groebner_basis(m.ring, m.ambient_rank, m.gens, ord)};
    }
    return m.cached_gb->second;
}

VectorElement module_normal_form(const VectorElement& v, const std::vector<VectorElement>& basis,
                                 const ModuleOrder& ord) {
    std::vector<MBasisElem> b;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        b.push_back({to_ordered(g, ord)});
    }
    const Field& field = v.ring->field;
    MTermVec r = mreduce_full(to_ordered(v, ord), b, field, ord);
    return from_ordered(v.ring, v.ambient(), r);
}

bool vector_membership(const VectorElement& v, Submodule& m) {
    if (v.ambient() != m.ambient_rank) throw std::invalid_argument("vector_membership: ambient-rank mismatch");
    const auto& gb = ensure_module_gb(m);
    return module_normal_form(v, gb, m.cached_gb->first).is_zero();
}

bool submodule_contains(Submodule& big, const Submodule& small) {
    if (big.ambient_rank != small.ambient_rank)
        throw std::invalid_argument("submodule_contains: ambient-rank mismatch");
    for (const auto& g : small.gens)
        if (!vector_membership(g, big)) return false;
    return true;
}

bool submodule_equal(Submodule& a, Submodule& b) {
    return submodule_contains(a, b) && submodule_contains(b, a);
}

std::vector<VectorElement> syzygies(const RingPtr& ring, size_t ambient,
                                    const std::vector<VectorElement>& columns) {
    if (columns.empty()) throw std::invalid_argument("syzygies: empty column list");
    check_gens(ring, ambient, columns);
    const size_t n = columns.size();
    // Tagged generators (f_j, e_j) in R^{ambient+n}; a Groebner basis under a
    // component-elimination order intersected with the tag block generates
    // the kernel.
    std::vector<VectorElement> tagged;
    for (size_t j = 0; j < n; ++j) {
        VectorElement w(ring, ambient + n);
        for (size_t i = 0; i < ambient; ++i) w.comps[i] = columns[j].comps[i];
        w.comps[ambient + j] = Polynomial::constant(ring, Coeff(1));
        tagged.push_back(std::move(w));
    }
    ModuleOrder ord = ModuleOrder::component_elimination(MonomialOrder::grevlex(), ambient);
    auto gb = module_groebner_basis(ring, ambient + n, tagged, ord);

    std::vector<VectorElement> syz;
    for (const auto& g : gb) {
        bool in_tag_block = true;
        for (size_t i = 0; i < ambient; ++i)
            if (!g.comps[i].is_zero()) { in_tag_block = false; break; }
        if (!in_tag_block) continue;
        VectorElement s(ring, n);
        for (size_t j = 0; j < n; ++j) s.comps[j] = g.comps[ambient + j];
        syz.push_back(std::move(s));
    }
    return syz;
}

}  // namespace eqmod

#include "eqmod/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eqmod {

TermVec to_ordered(const Polynomial& p, const MonomialOrder& ord) {
    TermVec v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    return v;
}

Polynomial from_ordered(const RingPtr& ring, const TermVec& v) {
    Polynomial p(ring);
    for (const auto& [m, c] : v) p.add_term(m, c);
    return p;
}

TermVec ordered_sub_mul(const TermVec& a, const Coeff& c, const Expvec& m, const TermVec& b,
                        const Field& field, const MonomialOrder& ord) {
    TermVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Expvec bm = exp_mul(b[j].first, m);
        int cmp = ord.compare(a[i].first, bm);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.emplace_back(std::move(bm), field.mul(field.neg(c), b[j].second));
            ++j;
        } else {
            Coeff nc = field.sub(a[i].second, field.mul(c, b[j].second));
            if (nc != 0) r.emplace_back(a[i].first, std::move(nc));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.emplace_back(exp_mul(b[j].first, m), field.mul(field.neg(c), b[j].second));
    return r;
}

void normalize_representative(TermVec& v, const Field& field) {
    if (v.empty()) return;
    if (field.spec().kind == FieldKind::Prime) {
        Coeff lead_inv = field.inv(v.front().second);
        for (auto& [m, c] : v) c = field.mul(c, lead_inv);
        return;
    }
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [m, c] : v) {
        mpz_class num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    if (v.front().second < 0) num_gcd = -num_gcd;
    Coeff scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& [m, c] : v) {
        c *= scale;
        c.canonicalize();
    }
}

namespace {

struct BasisElem {
    TermVec terms;  // nonempty, sorted descending
    const Expvec& lm() const { return terms.front().first; }
    const Coeff& lc() const { return terms.front().second; }
};

// Full reduction against a fixed basis; divisor search in index order.
TermVec reduce_full(TermVec h, const std::vector<BasisElem>& basis, const Field& field,
                    const MonomialOrder& ord) {
    TermVec remainder;
    while (!h.empty()) {
        bool divided = false;
        for (const auto& g : basis) {
            if (exp_divides(g.lm(), h.front().first)) {
                Coeff c = field.div(h.front().second, g.lc());
                Expvec m = exp_div(h.front().first, g.lm());
                h = ordered_sub_mul(h, c, m, g.terms, field, ord);
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

struct Pair {
    size_t i, j;
    Expvec lcm;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (int c = ord->compare(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

std::vector<BasisElem> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                  const MonomialOrder& ord) {
    const Field& field = ring->field;
    std::vector<BasisElem> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        TermVec v = to_ordered(g, ord);
        normalize_representative(v, field);
        basis.push_back({std::move(v)});
    }

    std::set<Pair, PairLess> queue{PairLess{&ord}};
    std::set<std::pair<size_t, size_t>> treated;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) queue.insert({i, k, exp_lcm(basis[i].lm(), basis[k].lm())});
    };
    for (size_t k = 0; k < basis.size(); ++k) push_pairs_for(k);

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({p.i, p.j});

        // Buchberger's product criterion.
        if (exp_coprime(basis[p.i].lm(), basis[p.j].lm())) continue;
        // Chain criterion: some k with lm_k | lcm(i,j) and both side pairs treated.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!exp_divides(basis[k].lm(), p.lcm)) continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (treated.count({key_ik.first, key_ik.second}) && treated.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        const BasisElem& f = basis[p.i];
        const BasisElem& g = basis[p.j];
        // S = (lcm/lm_f) f / lc_f - (lcm/lm_g) g / lc_g
        TermVec s;
        {
            Expvec mf = exp_div(p.lcm, f.lm());
            Coeff cf = field.inv(f.lc());
            for (const auto& [m, c] : f.terms) s.emplace_back(exp_mul(m, mf), field.mul(c, cf));
            Expvec mg = exp_div(p.lcm, g.lm());
            Coeff cg = field.inv(g.lc());
            s = ordered_sub_mul(s, field.one(), mg, [&] {
                TermVec t;
                for (const auto& [m, c] : g.terms) t.emplace_back(m, field.mul(c, cg));
                return t;
            }(), field, ord);
        }
        TermVec r = reduce_full(std::move(s), basis, field, ord);
        if (r.empty()) continue;
        normalize_representative(r, field);
        basis.push_back({std::move(r)});
        push_pairs_for(basis.size() - 1);
    }
    return basis;
}

std::vector<Polynomial> reduce_basis(const RingPtr& ring, std::vector<BasisElem> basis,
                                     const MonomialOrder& ord) {
    const Field& field = ring->field;
    // Minimalize: drop elements whose lm is divisible by another kept lm.
    std::vector<size_t> order_by_lm(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) order_by_lm[i] = i;
    std::sort(order_by_lm.begin(), order_by_lm.end(), [&](size_t a, size_t b) {
        if (int c = ord.compare(basis[a].lm(), basis[b].lm())) return c < 0;
        return a < b;
    });
    std::vector<BasisElem> minimal;
    for (size_t idx : order_by_lm) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (exp_divides(kept.lm(), basis[idx].lm())) { redundant = true; break; }
        if (!redundant) minimal.push_back(std::move(basis[idx]));
    }
    // Tail-reduce each element against the others and make it monic.
    std::vector<Polynomial> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisElem> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        TermVec r = reduce_full(minimal[i].terms, others, field, ord);
        Coeff inv = field.inv(r.front().second);
        for (auto& [m, c] : r) c = field.mul(c, inv);
        out.push_back(from_ordered(ring, r));
    }
    return out;  // already sorted ascending by lm
}

}  // namespace

std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord) {
    for (const auto& g : gens)
        if (!g.ring()->same_as(*ring)) throw std::invalid_argument("groebner_basis: ring mismatch");
    return reduce_basis(ring, buchberger(ring, gens, ord), ord);
}

Ideal groebner(Ideal ideal, const MonomialOrder& ord) {
    ideal.cached_gb = {ord, groebner_basis(ideal.ring, ideal.gens, ord)};
    return ideal;
}

const std::vector<Polynomial>& ensure_gb(Ideal& ideal, const MonomialOrder& ord) {
    if (!ideal.cached_gb) ideal.cached_gb = {ord, groebner_basis(ideal.ring, ideal.gens, ord)};
    return ideal.cached_gb->second;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    std::vector<BasisElem> b;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        b.push_back({to_ordered(g, ord)});
    }
    const Field& field = f.ring()->field;
    TermVec r = reduce_full(to_ordered(f, ord), b, field, ord);
    return from_ordered(f.ring(), r);
}

Polynomial normal_form(const Polynomial& f, Ideal& ideal) {
    if (!f.ring()->same_as(*ideal.ring)) throw std::invalid_argument("normal_form: ring mismatch");
    const auto& gb = ensure_gb(ideal);
    return normal_form(f, gb, ideal.cached_gb->first);
}

bool membership(const Polynomial& f, Ideal& ideal) { return normal_form(f, ideal).is_zero(); }

bool is_unit_ideal(Ideal& ideal) {
    const auto& gb = ensure_gb(ideal);
    return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

bool is_zero_ideal(Ideal& ideal) { return ensure_gb(ideal).empty(); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring->same_as(*b.ring)) throw std::invalid_argument("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return Ideal(a.ring, std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring->same_as(*b.ring)) throw std::invalid_argument("ideal_product: ring mismatch");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens)
        for (const auto& g : b.gens) gens.push_back(f * g);
    return Ideal(a.ring, std::move(gens));
}

bool ideal_contains(Ideal& big, const Ideal& small) {
    for (const auto& g : small.gens)
        if (!membership(g, big)) return false;
    return true;
}

bool ideal_equal(Ideal& a, Ideal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

Ideal elimination(const Ideal& ideal, const std::vector<std::string>& block) {
    const RingPtr& ring = ideal.ring;
    std::vector<bool> in_block(ring->nvars(), false);
    for (const auto& name : block) {
        int idx = ring->var_index(name);
        if (idx < 0) throw std::invalid_argument("elimination: unknown variable " + name);
        in_block[static_cast<size_t>(idx)] = true;
    }
    // Permute the block to the front, keeping relative order on both sides.
    std::vector<std::string> perm_vars;
    std::vector<int> fwd(ring->nvars(), -1);
    for (size_t i = 0; i < ring->nvars(); ++i)
        if (in_block[i]) { fwd[i] = static_cast<int>(perm_vars.size()); perm_vars.push_back(ring->vars[i]); }
    size_t split = perm_vars.size();
    for (size_t i = 0; i < ring->nvars(); ++i)
        if (!in_block[i]) { fwd[i] = static_cast<int>(perm_vars.size()); perm_vars.push_back(ring->vars[i]); }

    RingPtr perm_ring = make_ring(perm_vars, ring->field.spec());
    std::vector<Polynomial> perm_gens;
    for (const auto& g : ideal.gens) perm_gens.push_back(g.mapped_to(perm_ring, fwd));

    auto gb = groebner_basis(perm_ring, perm_gens, MonomialOrder::block_elimination(split));

    std::vector<bool> allowed(perm_ring->nvars(), true);
    for (size_t i = 0; i < split; ++i) allowed[i] = false;
    std::vector<int> back(perm_ring->nvars(), -1);
    for (size_t i = 0; i < ring->nvars(); ++i) back[static_cast<size_t>(fwd[i])] = static_cast<int>(i);

    std::vector<Polynomial> kept;
    for (const auto& g : gb)
        if (g.uses_only(allowed)) kept.push_back(g.mapped_to(ring, back));
    return Ideal(ring, std::move(kept));
}

int max_independent_set(const std::vector<std::vector<bool>>& supports, size_t nvars) {
    if (nvars > 22) throw std::length_error("dimension: variable count exceeds the supported bound (22)");
    std::vector<std::uint32_t> masks;
    for (const auto& s : supports) {
        std::uint32_t m = 0;
        for (size_t i = 0; i < nvars; ++i)
            if (s[i]) m |= (1u << i);
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    int best = -1;
    const std::uint32_t limit = nvars >= 32 ? 0xffffffffu : ((1u << nvars) - 1u);
    for (std::uint32_t t = 0;; ++t) {
        int pc = __builtin_popcount(t);
        if (pc > best) {
            bool ok = true;
            for (std::uint32_t g : masks)
                if ((g & ~t) == 0) { ok = false; break; }
            if (ok) best = pc;
        }
        if (t == limit) break;
    }
    return best;
}

int dimension(Ideal& ideal) {
    const auto& gb = ensure_gb(ideal);
    if (gb.empty()) return static_cast<int>(ideal.ring->nvars());
    const MonomialOrder& ord = ideal.cached_gb->first;
    std::vector<std::vector<bool>> supports;
    for (const auto& g : gb) {
        TermVec v = to_ordered(g, ord);
        const Expvec& lm = v.front().first;
        if (exp_is_one(lm)) return -1;  // unit ideal
        std::vector<bool> s(lm.size(), false);
        for (size_t i = 0; i < lm.size(); ++i) s[i] = lm[i] > 0;
        supports.push_back(std::move(s));
    }
    return max_independent_set(supports, ideal.ring->nvars());
}

int height(Ideal& ideal) {
    int d = dimension(ideal);
    if (d < 0) return kInfiniteHeight;
    return static_cast<int>(ideal.ring->nvars()) - d;
}

namespace {

// Monomial-ideal fast path: the radical is generated by the squarefree parts
// of the basis monomials, and membership in a monomial ideal is term-wise.
bool monomial_radical_membership(const Polynomial& f, const std::vector<Polynomial>& monomial_gb) {
    std::vector<Expvec> rad;
    for (const auto& g : monomial_gb) {
        Expvec m = g.terms().begin()->first;
        for (auto& e : m) e = e > 0 ? 1 : 0;
        rad.push_back(std::move(m));
    }
    for (const auto& [m, c] : f.terms()) {
        bool divided = false;
        for (const auto& r : rad)
            if (exp_divides(r, m)) { divided = true; break; }
        if (!divided) return false;
    }
    return true;
}

}  // namespace

bool radical_membership(const Polynomial& f, Ideal& ideal) {
    if (f.is_zero()) return true;
    const auto& gb = ensure_gb(ideal);
    if (gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero()) return true;  // V(I) empty

    bool all_monomial = !gb.empty();
    for (const auto& g : gb)
        if (g.num_terms() != 1) { all_monomial = false; break; }
    if (all_monomial) return monomial_radical_membership(f, gb);

    // Rabinowitsch: f ∈ √I  ⟺  1 ∈ I + (1 - z f) in R[z].
    const RingPtr& ring = ideal.ring;
    std::string zname = "_z";
    while (ring->var_index(zname) >= 0) zname += "_";
    std::vector<std::string> vars = ring->vars;
    vars.push_back(zname);
    RingPtr ext = make_ring(vars, ring->field.spec());
    std::vector<int> fwd(ring->nvars());
    for (size_t i = 0; i < ring->nvars(); ++i) fwd[i] = static_cast<int>(i);

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.gens) gens.push_back(g.mapped_to(ext, fwd));
    Polynomial one = Polynomial::constant(ext, Coeff(1));
    Polynomial z = Polynomial::variable(ext, ext->nvars() - 1);
    gens.push_back(one - z * f.mapped_to(ext, fwd));

    Ideal extended(ext, std::move(gens));
    return is_unit_ideal(extended);
}

}  // namespace eqmod

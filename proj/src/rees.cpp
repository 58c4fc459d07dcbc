#include "eqmod/rees.hpp"

#include "eqmod/errors.hpp"
#include "eqmod/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace eqmod {

namespace {

// Candidate names stem1..stemN, prefixed with underscores until none clashes
// with `taken`.
std::vector<std::string> fresh_names(const std::vector<std::string>& taken, const std::string& stem,
                                     size_t count) {
    std::string prefix;
    while (true) {
        std::vector<std::string> names;
        bool clash = false;
        for (size_t i = 1; i <= count && !clash; ++i) {
            std::string n = prefix + stem + std::to_string(i);
            if (std::find(taken.begin(), taken.end(), n) != taken.end()) clash = true;
            names.push_back(n);
        }
        if (!clash) return names;
        prefix += "_";
    }
}

}  // namespace

size_t rees_power_ambient_rank(size_t ambient_rank, int n) {
    // binom(n + e - 1, e - 1)
    size_t num = 1, den = 1;
    for (size_t i = 1; i < ambient_rank; ++i) {
        num *= static_cast<size_t>(n) + i;
        den *= i;
    }
    return num / den;
}

ReesData rees_kernel(const ModuleSpec& e) {
    const RingPtr& base = e.ring;
    const size_t d = base->nvars();
    const size_t erk = e.ambient_rank;
    const size_t n = e.ngens();

    ReesData out;
    out.base_ring = base;
    out.t_names = fresh_names(base->vars, "t", erk);
    {
        std::vector<std::string> taken = base->vars;
        taken.insert(taken.end(), out.t_names.begin(), out.t_names.end());
        out.y_names = fresh_names(taken, "y", n);
    }

    // Big ring [t | x | y] so one block order eliminates the t's.
    std::vector<std::string> big_vars = out.t_names;
    big_vars.insert(big_vars.end(), base->vars.begin(), base->vars.end());
    big_vars.insert(big_vars.end(), out.y_names.begin(), out.y_names.end());
    RingPtr big = make_ring(big_vars, base->field.spec());

    std::vector<int> base_to_big(d);
    std::iota(base_to_big.begin(), base_to_big.end(), static_cast<int>(erk));

    std::vector<Polynomial> w;
    for (size_t j = 0; j < n; ++j) {
        Polynomial rel = Polynomial::variable(big, erk + d + j);
        for (size_t i = 0; i < erk; ++i) {
            const Polynomial& coeff = e.entry(i, j);
            if (coeff.is_zero()) continue;
            rel = rel - coeff.mapped_to(big, base_to_big) * Polynomial::variable(big, i);
        }
        w.push_back(std::move(rel));
    }
    Ideal kernel_big = elimination(Ideal(big, std::move(w)), out.t_names);

    // Presentation ring k[x, y].
    std::vector<std::string> pres_vars = base->vars;
    pres_vars.insert(pres_vars.end(), out.y_names.begin(), out.y_names.end());
    out.presentation_ring = make_ring(pres_vars, base->field.spec());
    std::vector<int> big_to_pres(big->nvars(), -1);
    for (size_t i = 0; i < d + n; ++i) big_to_pres[erk + i] = static_cast<int>(i);
    std::vector<Polynomial> kernel_gens;
    for (const auto& g : kernel_big.gens) kernel_gens.push_back(g.mapped_to(out.presentation_ring, big_to_pres));
    out.kernel = Ideal(out.presentation_ring, std::move(kernel_gens));

    // Fiber ideal: x-free part of J + (x), restricted to k[y].
    Ideal with_m = out.kernel;
    for (size_t i = 0; i < d; ++i) with_m.gens.push_back(Polynomial::variable(out.presentation_ring, i));
    with_m.cached_gb.reset();
    Ideal fiber_pres = elimination(with_m, base->vars);

    out.fiber_ring = make_ring(out.y_names, base->field.spec());
    std::vector<int> pres_to_fiber(out.presentation_ring->nvars(), -1);
    for (size_t j = 0; j < n; ++j) pres_to_fiber[d + j] = static_cast<int>(j);
    std::vector<Polynomial> fiber_gens;
    for (const auto& g : fiber_pres.gens) fiber_gens.push_back(g.mapped_to(out.fiber_ring, pres_to_fiber));
    out.fiber = Ideal(out.fiber_ring, std::move(fiber_gens));

    out.analytic_spread = dimension(out.fiber);
    return out;
}

int analytic_spread(const ModuleSpec& e) {
    if (!e.is_homogeneous()) throw non_homogeneous_error("analytic_spread: non-homogeneous generator matrix");
    return rees_kernel(e).analytic_spread;
}

namespace rees_detail {

std::vector<Expvec> t_basis(size_t e, int n) {
    std::vector<Expvec> out;
    Expvec cur(e, 0);
    // Graded-lex descending: t1^n first.
    auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
        if (pos + 1 == e) {
            cur[pos] = static_cast<std::uint16_t>(remaining);
            out.push_back(cur);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur[pos] = static_cast<std::uint16_t>(k);
            self(self, pos + 1, remaining - k);
        }
    };
    rec(rec, 0, n);
    return out;
}

TForm form_mul(const TForm& a, const TForm& b, const RingPtr& ring) {
    TForm r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Expvec m = exp_mul(ma, mb);
            Polynomial prod = ca * cb;
            auto [it, fresh] = r.try_emplace(m, prod);
            if (!fresh) {
                it->second = it->second + prod;
                if (it->second.is_zero()) r.erase(it);
            } else if (it->second.is_zero()) {
                r.erase(it);
            }
        }
    return r;
}

std::vector<TForm> generator_forms(const ModuleSpec& e) {
    std::vector<TForm> forms;
    for (size_t j = 0; j < e.ngens(); ++j) {
        TForm f;
        for (size_t i = 0; i < e.ambient_rank; ++i) {
            if (e.entry(i, j).is_zero()) continue;
            Expvec t(e.ambient_rank, 0);
            t[i] = 1;
            f.emplace(std::move(t), e.entry(i, j));
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

namespace {

// Multisets {j_1 <= ... <= j_n} over {0..ngens-1} in lexicographic order.
std::vector<std::vector<size_t>> multisets(size_t ngens, int n) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, size_t pos, size_t lo) -> void {
        if (pos == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (size_t j = lo; j < ngens; ++j) {
            cur[pos] = j;
            self(self, pos + 1, j);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

std::vector<TForm> power_forms(const ModuleSpec& e, int n, bool parallel) {
    auto gen_forms = generator_forms(e);
    auto sets = multisets(e.ngens(), n);
    std::vector<TForm> out(sets.size());
    parallel_for_index(sets.size(), parallel, [&](size_t idx) {
        TForm acc = gen_forms[sets[idx][0]];
        for (size_t k = 1; k < sets[idx].size(); ++k) acc = form_mul(acc, gen_forms[sets[idx][k]], e.ring);
        out[idx] = std::move(acc);
    });
    return out;
}

VectorElement form_to_vector(const RingPtr& ring, const TForm& f, const std::vector<Expvec>& basis) {
    VectorElement v(ring, basis.size());
    std::map<Expvec, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    for (const auto& [m, c] : f) v.comps[index.at(m)] = c;
    return v;
}

}  // namespace rees_detail

Submodule rees_power(const ModuleSpec& e, int n, bool parallel) {
    if (n < 1) throw std::invalid_argument("rees_power: power must be >= 1");
    auto basis = rees_detail::t_basis(e.ambient_rank, n);
    auto forms = rees_detail::power_forms(e, n, parallel);
    std::vector<VectorElement> gens(forms.size());
    parallel_for_index(forms.size(), parallel, [&](size_t i) {
        gens[i] = rees_detail::form_to_vector(e.ring, forms[i], basis);
    });
    return Submodule(e.ring, basis.size(), std::move(gens));
}

bool is_linear_type(const ModuleSpec& e) {
    ReesData rd = rees_kernel(e);
    const auto& syz = presentation_syzygies(e);
    const size_t d = e.ring->nvars();
    std::vector<int> base_to_pres(d);
    std::iota(base_to_pres.begin(), base_to_pres.end(), 0);
    std::vector<Polynomial> linear;
    for (const auto& s : syz) {
        Polynomial rel = Polynomial::zero(rd.presentation_ring);
        for (size_t j = 0; j < s.comps.size(); ++j) {
            if (s.comps[j].is_zero()) continue;
            rel = rel + s.comps[j].mapped_to(rd.presentation_ring, base_to_pres) *
                            Polynomial::variable(rd.presentation_ring, d + j);
        }
        linear.push_back(std::move(rel));
    }
    Ideal sym(rd.presentation_ring, std::move(linear));
    return ideal_equal(rd.kernel, sym);
}

}  // namespace eqmod

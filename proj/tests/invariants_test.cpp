#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqmod/errors.hpp"
#include "eqmod/module_invariants.hpp"
#include "eqmod/monomial_tools.hpp"
#include "test_util.hpp"

using namespace eqmod;
using testutil::Rng;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

VectorElement VE(const RingPtr& r, const std::vector<std::string>& comps) {
    std::vector<Polynomial> ps;
    for (const auto& s : comps) ps.push_back(P(r, s));
    return VectorElement(r, std::move(ps));
}

ModuleSpec mod_of(const RingPtr& r, size_t ambient, const std::vector<std::vector<std::string>>& cols) {
    std::vector<VectorElement> vs;
    for (const auto& c : cols) vs.push_back(VE(r, c));
    return ModuleSpec(r, ambient, std::move(vs));
}

// E = I1 ⊕ I2 inside R^2, columns blocked per summand.
ModuleSpec direct_sum(const RingPtr& r, const std::vector<Polynomial>& i1,
                      const std::vector<Polynomial>& i2) {
    std::vector<VectorElement> cols;
    for (const auto& g : i1) {
        VectorElement v(r, 2);
        v.comps[0] = g;
        cols.push_back(std::move(v));
    }
    for (const auto& g : i2) {
        VectorElement v(r, 2);
        v.comps[1] = g;
        cols.push_back(std::move(v));
    }
    return ModuleSpec(r, 2, std::move(cols));
}

RingPtr r3() { return make_ring({"x1", "x2", "x3"}); }

ModuleSpec exs3(const RingPtr& r) {
    return mod_of(r, 2, {{"x1", "0"}, {"x2", "0"}, {"0", "x1"}, {"0", "x3"}});
}

}  // namespace

TEST_CASE("rank") {
    auto r = make_ring({"x", "y"});
    CHECK(module_rank(mod_of(r, 2, {{"1", "0"}, {"0", "1"}})) == 2);
    CHECK(module_rank(mod_of(r, 2, {{"0", "0"}})) == 0);
    auto q = r3();
    CHECK(module_rank(exs3(q)) == 2);
}

TEST_CASE("fitting ideals of a free module") {
    auto r = make_ring({"x", "y"});
    ModuleSpec free2 = mod_of(r, 2, {{"1", "0"}, {"0", "1"}});
    Ideal f2 = fitting_ideal(free2, 2);
    CHECK(is_unit_ideal(f2));
    Ideal f1 = fitting_ideal(free2, 1);
    CHECK(is_zero_ideal(f1));
}

TEST_CASE("fitting ideals of exs3") {
    auto q = r3();
    ModuleSpec e = exs3(q);
    Ideal f2 = fitting_ideal(e, 2);
    Ideal p1(q, {P(q, "x1"), P(q, "x2")});
    Ideal p2(q, {P(q, "x1"), P(q, "x3")});
    Ideal prod = ideal_product(p1, p2);
    CHECK(ideal_equal(f2, prod));

    Ideal f1 = fitting_ideal(e, 1);
    CHECK(is_zero_ideal(f1));
    CHECK(height(f2) == 2);
}

TEST_CASE("mu_local") {
    auto q = r3();
    CHECK(mu_local(exs3(q)) == 4);
    auto r = make_ring({"x", "y"});
    CHECK(mu_local(mod_of(r, 3, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}})) == 3);
    ModuleSpec mm = mod_of(r, 2, {{"x", "0"}, {"y", "0"}, {"0", "x"}, {"0", "y"}});
    CHECK(mu_local(mm) == 4);
    CHECK_THROWS_AS(mu_local(mod_of(r, 1, {{"x + 1"}})), non_homogeneous_error);
}

TEST_CASE("mu_at_prime on exs3") {
    auto q = r3();
    ModuleSpec e = exs3(q);
    Ideal p1(q, {P(q, "x1"), P(q, "x2")});
    CHECK(mu_at_prime(e, p1) == 3);
    Ideal generic = Ideal::zero(q);
    CHECK(mu_at_prime(e, generic) == module_rank(e));
    Ideal max(q, {P(q, "x1"), P(q, "x2"), P(q, "x3")});
    CHECK(mu_at_prime(e, max) == 4);
    CHECK(mu_at_prime(e, max) == mu_local(e));
    Ideal unit(q, {P(q, "1")});
    CHECK_THROWS_AS(mu_at_prime(e, unit), std::invalid_argument);
}

TEST_CASE("grade of the quotient") {
    auto q = r3();
    CHECK(grade_quotient(exs3(q)) == 2);
    auto r = make_ring({"x", "y"});
    CHECK(grade_quotient(mod_of(r, 1, {{"x"}})) == 1);
    ModuleSpec mm = mod_of(r, 2, {{"x", "0"}, {"y", "0"}, {"0", "x"}, {"0", "y"}});
    CHECK(grade_quotient(mm) == 2);
    CHECK(grade_quotient(mod_of(r, 2, {{"1", "0"}, {"0", "1"}})) == kInfiniteHeight);
}

TEST_CASE("ideal module and punctured-spectrum flags") {
    auto r = make_ring({"x", "y"});
    ModuleSpec mm = mod_of(r, 2, {{"x", "0"}, {"y", "0"}, {"0", "x"}, {"0", "y"}});
    CHECK(is_ideal_module(mm));
    CHECK(is_free_on_punctured_spectrum(mm));
    CHECK(dim_quotient(mm) == 0);

    auto q = r3();
    ModuleSpec e = exs3(q);
    CHECK(is_ideal_module(e));
    CHECK_FALSE(is_free_on_punctured_spectrum(e));
    CHECK(dim_quotient(e) == 1);

    CHECK_FALSE(is_ideal_module(mod_of(r, 1, {{"x"}})));
}

TEST_CASE("ds1: direct-sum Fitting ideal is the product (perfect height-2 family)") {
    Rng rng(71);
    auto q = r3();
    for (int inst = 0; inst < 25; ++inst) {
        auto g1 = testutil::random_perfect_ht2_monomial_ideal(rng, q);
        auto g2 = testutil::random_perfect_ht2_monomial_ideal(rng, q);
        ModuleSpec e = direct_sum(q, g1, g2);
        Ideal f2 = fitting_ideal(e, 2);
        Ideal prod = ideal_product(Ideal(q, g1), Ideal(q, g2));
        CHECK(ideal_equal(f2, prod));
    }
}

TEST_CASE("ds21: direct sum is an ideal module iff both summands have height >= 2") {
    auto q = r3();
    ModuleSpec good = direct_sum(q, {P(q, "x1"), P(q, "x2")}, {P(q, "x1"), P(q, "x3")});
    CHECK(is_ideal_module(good));
    ModuleSpec bad = direct_sum(q, {P(q, "x1")}, {P(q, "x1"), P(q, "x2")});
    CHECK_FALSE(is_ideal_module(bad));
}

TEST_CASE("dime bound on random ideal modules") {
    Rng rng(73);
    auto q = r3();
    const int d = 3;
    for (int inst = 0; inst < 15; ++inst) {
        ModuleSpec e = direct_sum(q, testutil::random_perfect_ht2_monomial_ideal(rng, q),
                                  testutil::random_perfect_ht2_monomial_ideal(rng, q));
        REQUIRE(is_ideal_module(e));
        int rk = module_rank(e);
        Ideal fe = fitting_ideal(e, static_cast<size_t>(rk));
        int ht_fe = height(fe);
        int dimq = dim_quotient(e);
        CHECK(dimq <= d - ht_fe);
        CHECK(d - ht_fe <= d - 2);
    }
}

TEST_CASE("minor kernels: parallel equals serial") {
    auto q = r3();
    ModuleSpec e = exs3(q);
    const auto& syz = presentation_syzygies(e);
    auto par = matrix_minors(q, syz, e.ngens(), 2, true);
    auto ser = matrix_minors(q, syz, e.ngens(), 2, false);
    CHECK(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("is_monomial") {
    auto r = make_ring({"x", "y"});
    Ideal a(r, {P(r, "x^2"), P(r, "x*y")});
    CHECK(is_monomial(a));
    Ideal b(r, {P(r, "x + y")});
    CHECK_FALSE(is_monomial(b));
    Ideal c(r, {P(r, "x + y"), P(r, "y")});
    CHECK(is_monomial(c));
}

TEST_CASE("minimal primes of monomial ideals") {
    auto q = r3();
    Ideal f2(q, {P(q, "x1^2"), P(q, "x1*x2"), P(q, "x1*x3"), P(q, "x2*x3")});
    auto primes = minimal_primes_monomial(f2);
    REQUIRE(primes.size() == 2);
    Ideal p1(q, {P(q, "x1"), P(q, "x2")});
    Ideal p2(q, {P(q, "x1"), P(q, "x3")});
    CHECK((ideal_equal(primes[0], p1) || ideal_equal(primes[0], p2)));
    CHECK((ideal_equal(primes[1], p1) || ideal_equal(primes[1], p2)));
    CHECK_FALSE(ideal_equal(primes[0], primes[1]));

    auto r = make_ring({"x", "y"});
    Ideal xy(r, {P(r, "x*y")});
    CHECK(minimal_primes_monomial(xy).size() == 2);
    Ideal m(r, {P(r, "x"), P(r, "y")});
    auto mp = minimal_primes_monomial(m);
    REQUIRE(mp.size() == 1);
    CHECK(ideal_equal(mp[0], m));

    Ideal notmono(r, {P(r, "x + y")});
    CHECK_THROWS_AS(minimal_primes_monomial(notmono), std::invalid_argument);
}

TEST_CASE("minimal primes: irredundance, coverage, dimension cross-validation") {
    Rng rng(79);
    auto q = r3();
    for (int inst = 0; inst < 20; ++inst) {
        std::vector<Polynomial> gens;
        int ng = 1 + static_cast<int>(testutil::draw(rng, 3));
        for (int g = 0; g < ng; ++g) {
            Expvec m = testutil::random_monomial(rng, 3, 3);
            if (exp_is_one(m)) m[testutil::draw(rng, 3)] = 1;
            gens.push_back(Polynomial::term(q, m, Coeff(1)));
        }
        Ideal ideal(q, gens);
        auto primes = minimal_primes_monomial(ideal);
        REQUIRE(!primes.empty());
        int min_ht = kInfiniteHeight;
        for (auto& p : primes) {
            for (const auto& g : ideal.gens) CHECK(radical_membership(g, p));
            min_ht = std::min(min_ht, static_cast<int>(p.gens.size()));
            for (auto& other : primes) {
                if (&other == &p) continue;
                CHECK_FALSE(ideal_contains(p, other));
            }
        }
        CHECK(dimension(ideal) == 3 - min_ht);
    }
}

TEST_CASE("m-primary tests") {
    auto r = make_ring({"x", "y"});
    Ideal a(r, {P(r, "x^2"), P(r, "y^3")});
    CHECK(is_m_primary(a));
    Ideal b(r, {P(r, "x")});
    CHECK_FALSE(is_m_primary(b));
    Ideal c(r, {P(r, "x^2"), P(r, "x*y"), P(r, "y^2")});
    CHECK(is_m_primary(c));
}

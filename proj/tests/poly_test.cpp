#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqmod/polynomial.hpp"
#include "test_util.hpp"

using namespace eqmod;
using testutil::Rng;

namespace {

RingPtr qring(std::vector<std::string> vars) { return make_ring(std::move(vars)); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

}  // namespace

TEST_CASE("addition basics") {
    auto r = qring({"x", "y"});
    CHECK(P(r, "x + y") + P(r, "-y") == P(r, "x"));
    auto f = P(r, "3*x^2*y - 7");
    CHECK(f + Polynomial::zero(r) == f);
    CHECK(P(r, "x^2 + 1") + P(r, "x^2 - 1") == P(r, "2*x^2"));
}

TEST_CASE("multiplication basics") {
    auto r = qring({"x", "y"});
    CHECK(P(r, "x") * P(r, "y") == P(r, "x*y"));
    auto f = P(r, "x^2*y - 2*x + 1/3");
    CHECK(f * Polynomial::constant(r, Coeff(1)) == f);
    CHECK(P(r, "x + y") * P(r, "x - y") == P(r, "x^2 - y^2"));
}

TEST_CASE("ring mismatch is rejected") {
    auto r1 = qring({"x", "y"});
    auto r2 = qring({"x", "z"});
    CHECK_THROWS_AS(P(r1, "x") + P(r2, "x"), std::invalid_argument);
    CHECK_THROWS_AS(P(r1, "x") * P(r2, "z"), std::invalid_argument);
}

TEST_CASE("substitute_zero") {
    auto r = qring({"x", "y", "u", "v", "w"});
    CHECK(P(r, "x*u + y*v").substitute_zero({"x", "y"}).is_zero());
    CHECK(P(r, "u*v - x*w").substitute_zero({"x"}) == P(r, "u*v"));
    CHECK(P(r, "5").substitute_zero({"x"}) == P(r, "5"));
    CHECK_THROWS_AS(P(r, "x").substitute_zero({"q"}), std::invalid_argument);
}

TEST_CASE("substitute_zero is a ring homomorphism") {
    auto r = qring({"x", "y", "z"});
    Rng rng(7);
    std::vector<std::string> kill{"x"};
    for (int i = 0; i < 50; ++i) {
        auto f = testutil::random_poly(rng, r, 4, 3);
        auto g = testutil::random_poly(rng, r, 4, 3);
        CHECK((f + g).substitute_zero(kill) == f.substitute_zero(kill) + g.substitute_zero(kill));
        CHECK((f * g).substitute_zero(kill) == f.substitute_zero(kill) * g.substitute_zero(kill));
    }
}

TEST_CASE("ring axioms on random triples") {
    auto r = qring({"x", "y", "z"});
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        auto f = testutil::random_poly(rng, r, 3, 3);
        auto g = testutil::random_poly(rng, r, 3, 3);
        auto h = testutil::random_poly(rng, r, 3, 3);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("monomial order laws") {
    Rng rng(13);
    std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex(),
                                      MonomialOrder::block_elimination(2)};
    for (const auto& ord : orders) {
        for (int i = 0; i < 200; ++i) {
            Expvec u = testutil::random_monomial(rng, 4, 4);
            Expvec v = testutil::random_monomial(rng, 4, 4);
            Expvec w = testutil::random_monomial(rng, 4, 4);
            // totality + antisymmetry
            int cuv = ord.compare(u, v);
            CHECK(cuv == -ord.compare(v, u));
            CHECK((cuv == 0) == (u == v));
            // multiplicative
            if (cuv < 0) CHECK(ord.compare(exp_mul(u, w), exp_mul(v, w)) < 0);
            // 1 <= u
            Expvec one(4, 0);
            if (!exp_is_one(u)) CHECK(ord.compare(one, u) < 0);
        }
    }
}

TEST_CASE("block order eliminates the leading block") {
    // Any monomial containing a block-0 variable beats any block-1 monomial.
    auto ord = MonomialOrder::block_elimination(1);
    Expvec t{1, 0, 0};   // block 0
    Expvec xy{0, 3, 4};  // block 1 only
    CHECK(ord.compare(t, xy) > 0);
}

TEST_CASE("parser grammar") {
    auto r = qring({"x", "y", "z"});
    CHECK(P(r, "3*x^2*y - 1/2*z") == Polynomial::term(r, {2, 1, 0}, Coeff(3)) +
                                         Polynomial::term(r, {0, 0, 1}, Coeff(-1, 2)));
    CHECK(P(r, "-x + y").to_string() == "-x + y");
    CHECK_THROWS_AS(P(r, "3x"), std::invalid_argument);       // juxtaposition
    CHECK_THROWS_AS(P(r, "x*"), std::invalid_argument);
    CHECK_THROWS_AS(P(r, "q + 1"), std::invalid_argument);    // unknown variable
    CHECK_THROWS_AS(P(r, "1/0"), std::invalid_argument);
    CHECK(P(r, "(x + y)^2") == P(r, "x^2 + 2*x*y + y^2"));
    CHECK(P(r, "0").is_zero());
}

TEST_CASE("to_string round-trips through the parser") {
    auto r = qring({"x", "y", "z"});
    Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        auto f = testutil::random_poly(rng, r, 5, 4);
        CHECK(P(r, f.to_string()) == f);
    }
}

TEST_CASE("prime field arithmetic") {
    auto r = make_ring({"x", "y"}, FieldSpec::prime(7));
    CHECK(P(r, "3*x") + P(r, "4*x") == Polynomial::zero(r));
    CHECK(P(r, "1/2*x") == P(r, "4*x"));  // 2^{-1} = 4 mod 7
    CHECK_THROWS_AS(FieldSpec::prime(6), std::invalid_argument);
}

TEST_CASE("homogeneity and degree") {
    auto r = qring({"x", "y"});
    CHECK(P(r, "x^2 + x*y").is_homogeneous());
    CHECK_FALSE(P(r, "x^2 + x").is_homogeneous());
    CHECK(Polynomial::zero(r).is_homogeneous());
    CHECK(P(r, "x^2*y").degree() == 3);
    CHECK(Polynomial::zero(r).degree() == -1);
}

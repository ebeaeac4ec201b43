#include "doctest.h"

#include <stdexcept>

#include "wittswan/fp.hpp"
#include "wittswan/laurent.hpp"
#include "wittswan/multilaurent.hpp"
#include "wittswan/ord.hpp"
#include "wittswan/sfrac.hpp"
#include "wittswan/verify.hpp"

using namespace wittswan;

namespace {

LaurentPoly lp(int p, std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly f(p);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

MultiLaurentPoly ml(int p, std::vector<std::string> vars,
                    std::initializer_list<std::pair<ExpVec, long>> terms) {
    MultiLaurentPoly f(p, std::move(vars));
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

} // namespace

TEST_CASE("Ord arithmetic and ordering") {
    CHECK(Ord().is_inf());
    CHECK(Ord::inf().is_inf());
    CHECK(Ord(3).value() == 3);
    CHECK(Ord(-4).value() == -4);
    CHECK_THROWS_AS(Ord::inf().value(), std::logic_error);

    CHECK(Ord(2) + Ord(3) == Ord(5));
    CHECK((Ord(2) + Ord::inf()).is_inf());
    CHECK(Ord(-3).scaled(2) == Ord(-6));
    CHECK(Ord::inf().scaled(5).is_inf());
    CHECK_THROWS_AS(Ord(1).scaled(0), std::invalid_argument);

    CHECK(Ord(1) < Ord(2));
    CHECK(Ord(1000000) < Ord::inf());
    CHECK(Ord::inf() >= Ord::inf());
    CHECK(min(Ord(-2), Ord(5)) == Ord(-2));
    CHECK(max(Ord(-2), Ord::inf()).is_inf());
    CHECK(Ord::inf().str() == "inf");
    CHECK(Ord(-7).str() == "-7");
}

TEST_CASE("Fp field arithmetic") {
    CHECK(supported_prime(2));
    CHECK(supported_prime(7));
    CHECK(!supported_prime(4));
    CHECK_THROWS_AS(require_supported_prime(6), std::invalid_argument);

    CHECK(Fp(3, 5).value() == 2);
    CHECK(Fp(3, -1).value() == 2);
    CHECK(Fp(5, 2) + Fp(5, 4) == Fp(5, 1));
    CHECK(Fp(5, 2) * Fp(5, 3) == Fp(5, 1));
    CHECK(-Fp(7, 3) == Fp(7, 4));
    CHECK(Fp(7, 3).inverse() == Fp(7, 5));
    CHECK(Fp(5, 4) / Fp(5, 2) == Fp(5, 2));
    CHECK(Fp(3, 2).pow(4) == Fp(3, 1));
    CHECK_THROWS_AS(Fp(5, 0).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(Fp(3, 1) + Fp(5, 1), std::invalid_argument);

    // Fermat: a^p = a for every residue
    for (int p : {2, 3, 5, 7})
        for (int a = 0; a < p; ++a)
            CHECK(Fp(p, a).pow(p) == Fp(p, a));
}

TEST_CASE("Laurent order and coefficients") {
    CHECK(lp(3, {{-3, 1}, {2, 1}}).order() == Ord(-3));
    CHECK(LaurentPoly(3).order().is_inf());
    CHECK(lp(3, {{0, 2}}).order() == Ord(0));
    CHECK(lp(2, {{4, 1}, {4, 1}}).is_zero()); // coefficients cancel mod 2

    LaurentPoly f = lp(5, {{-1, 3}, {2, 4}});
    CHECK(f.coeff(-1) == Fp(5, 3));
    CHECK(f.coeff(0) == Fp(5, 0));
    CHECK(f.low_coeff() == Fp(5, 3));
    CHECK(f.constant_term().is_zero());
}

TEST_CASE("Laurent ring operations") {
    // (t^2 - 1) / (t - 1) = t + 1 over F_3
    LaurentPoly num = lp(3, {{2, 1}, {0, -1}});
    LaurentPoly den = lp(3, {{1, 1}, {0, -1}});
    CHECK(num.divexact(den) == lp(3, {{1, 1}, {0, 1}}));

    // division must be exact
    CHECK_THROWS_AS(lp(3, {{2, 1}, {0, 1}}).divexact(den), std::invalid_argument);
    CHECK_THROWS_AS(num.divexact(LaurentPoly(3)), std::invalid_argument);

    // (1 + t)^2 = 1 + t^2 over F_2
    LaurentPoly g = lp(2, {{0, 1}, {1, 1}});
    CHECK(g.pow(2) == lp(2, {{0, 1}, {2, 1}}));
    CHECK(g.frobenius() == g.pow(2));
    CHECK(g.pow(0) == lp(2, {{0, 1}}));

    LaurentPoly h = lp(5, {{-2, 3}, {0, 1}, {3, 2}});
    CHECK(h + (-h) == LaurentPoly(5));
    CHECK(h - h == LaurentPoly(5));
    CHECK(h.scaled(Fp(5, 0)).is_zero());
    CHECK(h.shifted(2) == lp(5, {{0, 3}, {2, 1}, {5, 2}}));
    CHECK(h * LaurentPoly::monomial(5, 2, 1) == h.shifted(2));

    // d/dt and the dlog coefficient t * f'/1
    CHECK(lp(5, {{3, 1}}).derivative() == lp(5, {{2, 3}}));
    CHECK(lp(3, {{3, 1}}).derivative().is_zero());
    CHECK(lp(5, {{-2, 1}}).dlog_derivative() == lp(5, {{-2, -2}}));
}

TEST_CASE("Laurent valuation properties on random samples") {
    Rng rng(case_seed(7, "algebra/laurent-val"));
    for (int p : {2, 3, 5}) {
        for (int i = 0; i < 40; ++i) {
            LaurentPoly f = random_laurent(rng, p, -5, 5, 4);
            LaurentPoly g = random_laurent(rng, p, -5, 5, 4);
            // multiplicative over a domain
            CHECK((f * g).order() == f.order() + g.order());
            // ultrametric inequality
            CHECK((f + g).order() >= min(f.order(), g.order()));
            if (!g.is_zero()) CHECK((f * g).divexact(g) == f);
        }
    }
}

TEST_CASE("multivariate degrees and orders") {
    auto f = ml(3, {"x", "y"}, {{{2, 1}, 1}, {{1, 3}, 1}});
    CHECK(mindeg_total(f) == Ord(3)); // x^2 y + x y^3
    CHECK(f.total_order() == Ord(3));

    auto g = ml(2, {"S_1", "S_2"}, {{{3, 0}, 1}, {{1, 1}, 1}});
    CHECK(mindeg_total(g) == Ord(2)); // S_1^3 + S_1 S_2

    auto h = ml(3, {"x", "y"}, {{{-2, 1}, 1}});
    CHECK(h.total_order() == Ord(-1));
    CHECK_THROWS_AS(mindeg_total(h), std::invalid_argument);

    CHECK(mindeg_total(MultiLaurentPoly(3, {"x"})).is_inf());
    CHECK(total_order(MultiLaurentPoly(3, {"x", "y"})).is_inf());
    CHECK(ml(5, {"x"}, {{{0}, 4}}).total_order() == Ord(0));
}

TEST_CASE("multivariate ring operations") {
    auto x = MultiLaurentPoly::monomial(3, {"x", "y"}, {1, 0}, 1);
    auto y = MultiLaurentPoly::monomial(3, {"x", "y"}, {0, 1}, 1);
    auto one = MultiLaurentPoly::constant(3, {"x", "y"}, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(3) == x.pow(3) + y.pow(3)); // char 3
    CHECK((x + y).frobenius() == (x + y).pow(3));
    CHECK((x * y).divexact(y) == x);
    // dividing by a monomial is always exact here, negative exponents are fine
    CHECK((x + y).divexact(x) == one + y.shifted({-1, 0}));
    CHECK_THROWS_AS((x * y + one).divexact(x + y), std::invalid_argument);

    CHECK(x.derivative(0) == MultiLaurentPoly::constant(3, {"x", "y"}, 1));
    CHECK(x.derivative(1).is_zero());
    CHECK(x.pow(3).derivative(0).is_zero());
    CHECK(x.shifted({-1, 2}) == y * y);
    CHECK(x.with_vars_swapped(0, 1) == y);

    auto inv = MultiLaurentPoly::monomial(3, {"x", "y"}, {-1, 0}, 1);
    CHECK(x * inv == one);
}

TEST_CASE("coordinate pullbacks and axis embeddings") {
    LaurentPoly f = lp(3, {{2, 1}, {-1, 2}});
    auto vars = indexed_vars("t", 2);
    CHECK(vars == std::vector<std::string>{"t1", "t2"});

    auto f1 = pullback_i(f, 1, 2);
    CHECK(f1 == ml(3, {"t1", "t2"}, {{{2, 0}, 1}, {{-1, 0}, 2}}));
    auto f2 = pullback_i(f, 2, 2);
    CHECK(f2 == ml(3, {"t1", "t2"}, {{{0, 2}, 1}, {{0, -1}, 2}}));
    CHECK(f2 == f1.with_vars_swapped(0, 1));
    CHECK_THROWS_AS(pullback_i(f, 0, 2), std::invalid_argument);

    auto e = embed_axis(f, 1, {"x", "y", "z"});
    CHECK(e == ml(3, {"x", "y", "z"},
                  {{{0, 2, 0}, 1}, {{0, -1, 0}, 2}}));
    CHECK(embed_axis(LaurentPoly(3), 0, {"x", "y"}).is_zero());
}

TEST_CASE("symmetric-coordinate fractions") {
    int p = 3, d = 2;
    SFraction s1 = SFraction::coordinate(p, d, 1);
    SFraction s2 = SFraction::coordinate(p, d, 2);

    // S_1 S_2 / S_2^2 normalizes to S_1 / S_2
    SFraction raw = sfrac_normalize(
        ml(p, indexed_vars("S", d), {{{1, 1}, 1}}), 2);
    CHECK(raw == s1.times_sd_pow(-1));
    CHECK(raw.den_pow() == 1);

    // zero numerator clears the denominator power
    CHECK(sfrac_normalize(MultiLaurentPoly(p, indexed_vars("S", d)), 3) ==
          SFraction::zero(p, d));
    CHECK(SFraction::zero(p, d).den_pow() == 0);

    SFraction a = s1.times_sd_pow(-1), b = s2, c = SFraction::one(p, d);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(s1 - s1 == SFraction::zero(p, d));
    CHECK(s1.pow(2).frobenius() == s1.pow(6));
    CHECK(s2.times_sd_pow(-1) == SFraction::one(p, d));
    CHECK((s1.times_sd_pow(-2)).times_sd_pow(2) == s1);
}

TEST_CASE("valuation at the exceptional point") {
    int p = 2, d = 2;
    SFraction s1 = SFraction::coordinate(p, d, 1);
    SFraction s2 = SFraction::coordinate(p, d, 2);

    CHECK(s1.times_sd_pow(-1).v_exceptional() == Ord(0)); // S_1 / S_2
    CHECK(s2.v_exceptional() == Ord(1));
    CHECK(s1.pow(3).v_exceptional() == Ord(3));
    CHECK(SFraction::zero(p, d).v_exceptional().is_inf());
    CHECK((s1.pow(3) + s1 * s2).times_sd_pow(-3).v_exceptional() == Ord(-1));

    // additive on products, ultrametric on sums
    SFraction a = (s1.pow(2) + s2).times_sd_pow(-1);
    SFraction b = s1.times_sd_pow(-2);
    CHECK((a * b).v_exceptional() == a.v_exceptional() + b.v_exceptional());
    CHECK((a + b).v_exceptional() >= min(a.v_exceptional(), b.v_exceptional()));
}

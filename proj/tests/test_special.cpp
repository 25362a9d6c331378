#include <doctest.h>

#include "support/helpers.hpp"

#include <trunclog/glog.hpp>
#include <trunclog/special.hpp>

using namespace trunclog;
using testing_support::el;
using testing_support::same;

TEST_CASE("laguerre_pm1 at p = 3") {
    const Prime p(3);
    const XPoly l = laguerre_pm1(p);
    CHECK(l.degree() == 2);
    CHECK(l.coeff(0) == RatFn(FpPoly(p, {1, 0, 2})));
    CHECK(l.coeff(1) == RatFn(FpPoly(p, {1, 2})));
    CHECK(l.coeff(2) == RatFn::constant(el(p, 2)));
    CHECK(l.specialize(el(p, 0)) == FpPoly(p, {1, 1, 2}, 'X'));
    CHECK(l.modulus() == frobenius_constant(p));
    CHECK_THROWS_AS(laguerre_pm1(Prime(2)), DomainError);
}

TEST_CASE("laguerre_pm1 matches the binomial form coefficient by coefficient") {
    for (i64 q : oracle::odd_primes_upto(31)) {
        const Prime p(q);
        const XPoly l = laguerre_pm1(p);
        CHECK(l.degree() == q - 1);
        for (i64 k = 0; k < q; ++k) {
            REQUIRE(l.coeff(k).is_polynomial());
            CHECK(same(l.coeff(k).num(), oracle::laguerre_coeff(q, k)));
        }
        // constant term 1 - a^{p-1}, top coefficient -1
        CHECK(l.coeff(0).num() == FpPoly::constant(el(p, 1)) - FpPoly::monomial(el(p, 1), q - 1));
        CHECK(l.coeff(q - 1) == RatFn::constant(el(p, -1)));
        // alpha = 0 gives the truncated exponential
        CHECK(l.specialize(el(p, 0)) == truncated_exp(p));
    }
}

TEST_CASE("laguerre_scaled") {
    for (i64 q : {3, 5, 7, 11}) {
        const Prime p(q);
        CHECK(laguerre_scaled(p, 1) == laguerre_pm1(p));
        CHECK_THROWS_AS(laguerre_scaled(p, q), DomainError);
        CHECK_THROWS_AS(laguerre_scaled(p, 0), DomainError);
        for (u32 r = 1; r < q; ++r) {
            const XPoly l = laguerre_scaled(p, r);
            const FpPoly e = truncated_exp(p).scale_arg(el(p, r));
            CHECK(l.specialize(el(p, 0)) == e);
            for (i64 k = 0; k < q; ++k) {
                // -(r a - 1)_{p-1-k} r^k
                const FpPoly expect = -pochhammer(FpPoly::linear(el(p, r), el(p, -1)), q - 1 - k) * el(p, r).pow(k);
                CHECK(l.coeff(k) == RatFn(expect));
            }
        }
    }
    const Prime p3(3);
    CHECK(laguerre_scaled(p3, 2).coeff(0) == RatFn(FpPoly(p3, {1, 0, 2})));
}

TEST_CASE("finite polylog and truncated exponential") {
    const Prime p3(3), p5(5);
    CHECK(finite_polylog(p3, 1) == FpPoly(p3, {0, 1, 2}));
    CHECK(finite_polylog(p5, 0) == FpPoly(p5, {0, 1, 1, 1, 1}));
    CHECK(finite_polylog(p5, 1).coeff(4).value() == 4);
    for (i64 q : {3, 5, 7, 13}) {
        const Prime p(q);
        for (unsigned d = 0; d < 4; ++d) {
            const FpPoly f = finite_polylog(p, d);
            CHECK(f.degree() == q - 1);
            CHECK(f.coeff(0).is_zero());
        }
        CHECK(finite_polylog(p, q - 1) == finite_polylog(p, 0));  // Fermat
        const FpPoly e = truncated_exp(p);
        for (i64 k = 0; k < q; ++k) CHECK(e.coeff(k) == el(p, oracle::inv(oracle::factorial(k, q), q)));
        // G^{(0)} = -L1
        CHECK(glog_specialize(glog(p), el(p, 0)) == -finite_polylog(p, 1));
    }
}

TEST_CASE("truncated binomial") {
    const Prime p5(5);
    CHECK(trunc_binomial(RatFn(p5), el(p5, 1)) == XPoly::constant(p5, RatFn::constant(el(p5, 1))));
    const XPoly two = trunc_binomial(RatFn::constant(el(p5, 2)), el(p5, 1));
    CHECK(two == XPoly::from_polys(p5, std::vector<FpPoly>{FpPoly(p5, {1}), FpPoly(p5, {2}), FpPoly(p5, {1})}));
    for (i64 q : {3, 5, 7}) {
        const Prime p(q);
        // (1 + X)^a for integer constants a < p
        for (i64 a = 0; a < q; ++a) {
            const XPoly t = trunc_binomial(RatFn::constant(el(p, a)), el(p, 1));
            for (i64 k = 0; k < q; ++k) CHECK(t.coeff(k) == RatFn::constant(el(p, oracle::binom(a, k, q))));
        }
        // product rule modulo X^p
        const RatFn f(FpPoly(p, {1, 2})), g(FpPoly(p, {0, 0, 1}), FpPoly(p, {1, 1}));
        const RatFn zero(p);
        CHECK(mulmod(trunc_binomial(f, el(p, 1)).with_modulus(zero), trunc_binomial(g, el(p, 1)).with_modulus(zero)) ==
              trunc_binomial(f + g, el(p, 1)).with_modulus(zero));
        // derivative rule
        const XPoly lhs = trunc_binomial(f, el(p, 1)).derivative();
        const XPoly rhs = trunc_binomial(f - RatFn::constant(el(p, 1)), el(p, 1)) * f +
                          XPoly::monomial(p, f.pow(q) - f, q - 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("laguerre_const") {
    const Prime p3(3);
    CHECK(laguerre_const(p3) == FpPoly(p3, {1, 2, 2, 1}));
    for (i64 q : oracle::odd_primes_upto(19)) {
        const Prime p(q);
        const FpPoly c = laguerre_const(p);
        CHECK(c.eval(el(p, 0)).is_one());
        CHECK(c.degree() == q * (q - 1) / 2);
        CHECK(laguerre_const_substitution(laguerre_pm1(p)) == laguerre_const_product(p));
    }
}

TEST_CASE("laguerre_const_substitution notices a perturbed L") {
    const Prime p(5);
    const XPoly l = laguerre_pm1(p);
    const XPoly bad = l.with_coeff(2, l.coeff(2) + RatFn::constant(el(p, 1)));
    CHECK_FALSE(laguerre_const_substitution(bad) == laguerre_const_product(p));
}

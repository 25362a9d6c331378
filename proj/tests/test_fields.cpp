#include <doctest.h>

#include "support/helpers.hpp"

#include <trunclog/fields.hpp>
#include <trunclog/polys.hpp>

#include <set>

using namespace trunclog;
using testing_support::el;

TEST_CASE("prime validation") {
    CHECK_THROWS_AS(Prime(2), DomainError);
    CHECK_THROWS_AS(Prime(9), DomainError);
    CHECK_THROWS_AS(Prime(1), DomainError);
    CHECK_THROWS_AS(Prime(65537), DomainError);  // prime, but above the cap
    CHECK(Prime(65521).value() == 65521);
    CHECK(Prime(3).value() == 3);
}

TEST_CASE("residues stay in range and mixed moduli are rejected") {
    const Prime p(7);
    CHECK(FpElem(p, -1).value() == 6);
    CHECK(FpElem(p, 15).value() == 1);
    CHECK(FpElem(p, -1).signed_value() == -1);
    CHECK_THROWS_AS(FpElem(p, 1) + FpElem(Prime(5), 1), ModulusMismatch);
    CHECK_THROWS_AS(FpElem(p, 0).inv(), DomainError);
    for (i64 v = 1; v < 7; ++v) CHECK((FpElem(p, v) * FpElem(p, v).inv()).is_one());
}

TEST_CASE("binom_lucas examples") {
    CHECK(binom_lucas(3, 1, Prime(5)).value() == 3);
    CHECK(binom_lucas(7, 2, Prime(5)).value() == 1);
    CHECK(binom_lucas(10, 5, Prime(3)).value() == 0);
    CHECK(binom_lucas(2, 5, Prime(3)).value() == 0);
}

TEST_CASE("binom_lucas agrees with Pascal's triangle beyond one digit") {
    for (i64 q : {3, 5, 7, 11}) {
        const Prime p(q);
        for (i64 n = 0; n < 3 * q * q; n += 3)
            for (i64 k = 0; k <= n; k += 2) CHECK(binom_lucas(n, k, p).value() == oracle::binom(n, k, q));
    }
}

TEST_CASE("binom_lucas agrees with the falling factorial for n < p") {
    for (i64 q : oracle::odd_primes_upto(31)) {
        const Prime p(q);
        for (i64 n = 0; n < q; ++n)
            for (i64 k = 0; k <= n; ++k)
                CHECK(binom_lucas(n, k, p) == pochhammer(el(p, n), k) / factorial(k, p));
    }
}

TEST_CASE("pochhammer examples") {
    const Prime p5(5);
    CHECK(pochhammer(el(p5, 3), 2).value() == 1);
    CHECK(pochhammer(el(p5, 4), 0).is_one());
    CHECK(pochhammer(FpPoly::variable(p5), 0) == FpPoly::constant(el(p5, 1)));
    for (i64 q : {3, 5, 7, 13}) {
        const Prime p(q);
        const FpPoly am1 = FpPoly::linear(el(p, 1), el(p, -1));
        const FpPoly expect = FpPoly::monomial(el(p, 1), q - 1) - FpPoly::constant(el(p, 1));
        CHECK(pochhammer(am1, q - 1) == expect);
    }
}

TEST_CASE("binom_of_poly examples") {
    const Prime p3(3), p5(5);
    CHECK(binom_of_poly(FpPoly::variable(p5), 0) == FpPoly::constant(el(p5, 1)));
    CHECK(binom_of_poly(FpPoly::constant(el(p5, -1)), 4) == FpPoly::constant(el(p5, 1)));
    for (unsigned k = 0; k < 5; ++k)
        CHECK(binom_of_poly(FpPoly::constant(el(p5, -1)), k) == FpPoly::constant(el(p5, k % 2 ? -1 : 1)));
    CHECK(binom_of_poly(FpPoly::linear(el(p3, 1), el(p3, -1)), 2) == FpPoly(p3, {1, 0, 2}));
    CHECK_THROWS_AS(binom_of_poly(FpPoly::variable(p5), 5), DomainError);
}

TEST_CASE("binom_of_poly commutes with evaluation") {
    for (i64 q : {3, 5, 7, 11}) {
        const Prime p(q);
        const FpPoly f = FpPoly(p, {2, 3, 1});  // a^2 + 3a + 2
        for (unsigned k = 0; k < q; ++k) {
            const FpPoly b = binom_of_poly(f, k);
            for (i64 a = 0; a < q; ++a) {
                const FpElem fa = f.eval(el(p, a));
                CHECK(b.eval(el(p, a)) == binom_of_poly(FpPoly::constant(fa), k).coeff(0));
            }
        }
    }
}

TEST_CASE("quadratic extension examples") {
    const Ext2Field f3 = ext_quadratic(Prime(3));
    CHECK(f3.nonresidue() == 2);
    CHECK(f3.order() == 9);
    CHECK(f3.gen().frobenius() == f3.make(0, 2));  // t^3 = 2t
    const Ext2Field f5 = ext_quadratic(Prime(5));
    CHECK(f5.nonresidue() == 2);
    CHECK(f5.elements().size() == 25);
    CHECK(ext_quadratic(Prime(7)).nonresidue() == 3);
    CHECK(ext_quadratic(Prime(17)).nonresidue() == 3);
}

TEST_CASE("nonresidue is the least one") {
    for (i64 q : oracle::odd_primes_upto(97)) {
        std::set<i64> squares;
        for (i64 x = 1; x < q; ++x) squares.insert(x * x % q);
        i64 least = 1;
        while (squares.count(least)) ++least;
        CHECK(Ext2Field(Prime(q)).nonresidue() == static_cast<u32>(least));
    }
}

TEST_CASE("field axioms and Frobenius in F_{p^2}") {
    for (i64 q : {3, 5, 7}) {
        const Ext2Field f{Prime(q)};
        const auto all = f.elements();
        std::size_t fixed = 0;
        for (const auto& x : all) {
            CHECK(x.pow(u64(q) * q) == x);
            const bool fix = x.frobenius() == x;
            CHECK(fix == x.in_base_field());
            fixed += fix;
            if (!x.is_zero()) CHECK(x * x.inv() == f.one());
            CHECK(x.frobenius().frobenius() == x);
        }
        CHECK(fixed == static_cast<std::size_t>(q));
        // distributivity and commutativity on a sample
        for (std::size_t i = 0; i < all.size(); i += 3)
            for (std::size_t j = 0; j < all.size(); j += 5) {
                const auto& x = all[i];
                const auto& y = all[j];
                const auto& z = all[(i + j) % all.size()];
                CHECK(x * (y + z) == x * y + x * z);
                CHECK(x * y == y * x);
                CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
            }
    }
}

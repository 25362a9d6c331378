#include <doctest.h>

#include "support/helpers.hpp"

#include <trunclog/bpoly.hpp>
#include <trunclog/special.hpp>

#include <algorithm>
#include <future>
#include <set>

using namespace trunclog;
using testing_support::el;
using testing_support::same;

TEST_CASE("BPolyKey range") {
    const Prime p(5);
    CHECK_THROWS_AS(BPolyKey(p, 0, 1), DomainError);
    CHECK_THROWS_AS(BPolyKey(p, 1, 5), DomainError);
    CHECK(BPolyKey(p, 2, 3).degenerate());
    CHECK_FALSE(BPolyKey(p, 2, 2).degenerate());
}

TEST_CASE("b_rs examples") {
    const Prime p3(3), p5(5);
    CHECK(b_rs(BPolyKey(p5, 1, 1)) == FpPoly(p5, {1, 1, 3}));
    CHECK(b_rs(BPolyKey(p5, 1, 1)) == FpPoly(p5, {1, -1}) * FpPoly(p5, {1, -3}));
    CHECK(b_rs(BPolyKey(p3, 1, 1)) == FpPoly(p3, {1, -1}));
    CHECK(b_rs_alt(BPolyKey(p3, 1, 1)) == FpPoly(p3, {1, -1}));
    CHECK(b_rs_alt(BPolyKey(p5, 1, 2)) == b_rs(BPolyKey(p5, 1, 2)));
    CHECK_THROWS_AS(b_rs_alt(BPolyKey(p5, 2, 3)), DomainError);
    CHECK(b_rs_coeff(BPolyKey(p5, 1, 1)) == FpPoly(p5, {1, 1, 3}));
    for (i64 q : {3, 5, 7, 11}) {
        const Prime p(q);
        for (u32 r = 1; r < q; ++r) {
            CHECK(b_rs(BPolyKey(p, r, q - r)).is_zero());
            CHECK(b_rs_coeff(BPolyKey(p, r, q - r)).is_zero());
        }
    }
}

TEST_CASE("b_rs agrees with the oracle's defining sum") {
    for (i64 q : oracle::odd_primes_upto(13))
        for (i64 r = 1; r < q; ++r)
            for (i64 s = 1; s < q; ++s) CHECK(same(b_rs(BPolyKey(Prime(q), r, s)), oracle::b_rs(q, r, s)));
}

TEST_CASE("three routes to b_{r,s} agree for p <= 19") {
    for (i64 q : oracle::odd_primes_upto(19)) {
        const Prime p(q);
        for (u32 r = 1; r < q; ++r)
            for (u32 s = 1; s < q; ++s) {
                const BPolyKey key(p, r, s);
                const FpPoly b = b_rs(key);
                CHECK(b.degree() <= int(q) - 1);
                if (!key.degenerate()) {
                    CHECK(b.coeff(0).is_one());
                    CHECK(b_rs_alt(key) == b);
                }
                CHECK(b_rs_coeff(key) == b);
            }
    }
}

TEST_CASE("b_{r,r} and scaling") {
    const Prime p7(7);
    for (u32 r = 1; r < 7; ++r) {
        const FpPoly expect = -binom_of_poly(FpPoly::linear(el(p7, r), el(p7, -1)), 3);
        CHECK(b_rs_coeff(BPolyKey(p7, r, r)) == expect);
    }
    for (i64 q : {5, 7, 11, 13}) {
        const Prime p(q);
        const FpElem sign = el(p, ((q - 1) / 2) % 2 ? -1 : 1);
        for (u32 r = 1; r < q; ++r)
            CHECK(b_rs(BPolyKey(p, r, r)) == binom_of_poly(FpPoly::linear(el(p, r), el(p, -1)), (q - 1) / 2) * sign);
        // b_{rt,st}(a) = b_{r,s}(t a)
        for (u32 t = 1; t < q; ++t)
            for (u32 s = 1; s + 1 < q; ++s) {
                const u32 rt = t, st = static_cast<u32>(u64(s) * t % q);
                CHECK(b_rs(BPolyKey(p, rt, st)) == b_one(p, s).scale_arg(el(p, t)));
            }
    }
}

TEST_CASE("b_{1,s} structure") {
    for (i64 q : oracle::odd_primes_upto(23)) {
        const Prime p(q);
        const FpPoly unit_minus = FpPoly(p, {1}) - FpPoly::monomial(el(p, 1), q - 1);
        for (u32 s = 1; s + 2 <= q; ++s) {
            const FpPoly& b = b_one(p, s);
            CHECK(b * b.scale_arg(el(p, -1)) == unit_minus);
            CHECK(b.degree() == (q - 1) / 2);
            CHECK(b == b_one(p, q - 1 - s));
            const Split split = roots_and_split(b);
            std::vector<u32> roots;
            for (const auto& r : split.roots) roots.push_back(r.value());
            CHECK(std::adjacent_find(roots.begin(), roots.end()) == roots.end());
            CHECK(roots == b_roots_predicted(p, s));
            for (u32 a = 1; a < q; ++a) {
                const bool root = b.eval(el(p, a)).is_zero();
                CHECK(root != b.eval(el(p, q - a)).is_zero());
                CHECK(root == b_root_lucas(p, s, a));
            }
        }
    }
}

TEST_CASE("b_roots_predicted examples") {
    CHECK(b_roots_predicted(Prime(5), 2) == std::vector<u32>{1, 3});
    CHECK(b_roots_predicted(Prime(7), 3) == std::vector<u32>{1, 3, 5});
    CHECK(b_roots_predicted(Prime(11), 1) == std::vector<u32>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(b_roots_predicted(Prime(5), 4), DomainError);
    CHECK_THROWS_AS(b_roots_predicted(Prime(5), 0), DomainError);
    for (i64 q : {5, 7, 11, 13})
        for (u32 s = 1; s + 2 <= q; ++s) CHECK(b_roots_predicted(Prime(q), s).size() == (q - 1) / 2);
}

TEST_CASE("b_root_lucas examples") {
    CHECK(b_root_lucas(Prime(5), 2, 1));
    CHECK_FALSE(b_root_lucas(Prime(5), 2, 2));
    CHECK(b_root_lucas(Prime(7), 3, 5));
    CHECK_THROWS_AS(b_root_lucas(Prime(5), 4, 1), DomainError);
    CHECK_THROWS_AS(b_root_lucas(Prime(5), 1, 5), DomainError);
}

TEST_CASE("product_all_b") {
    CHECK(product_all_b(Prime(3)) == FpPoly(Prime(3), {1, 2}));
    for (i64 q : oracle::odd_primes_upto(17)) {
        const Prime p(q);
        const FpPoly prod = product_all_b(p);
        CHECK(prod.eval(el(p, 0)).is_one());
        CHECK(product_b_direct(p) == product_b_closed_form(p));
        for (i64 a = 1; a < q; ++a) {
            int mult = 0;
            FpPoly f = prod;
            const FpPoly lin = FpPoly::linear(el(p, 1), el(p, -a));
            while (!f.is_zero() && f.eval(el(p, a)).is_zero()) {
                f = div_exact(f, lin);
                ++mult;
            }
            CHECK(mult == q - a - 1);
        }
    }
}

TEST_CASE("root table and CSV") {
    const auto rows = b_root_table(Prime(5));
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].s == 2);
    CHECK(rows[1].roots == std::vector<u32>{1, 3});
    CHECK(rows[1].degree == 2);
    CHECK(b_root_csv(rows) == "p,s,roots,degree\n5,1,1;2,2\n5,2,1;3,2\n5,3,1;2,2\n");
    CHECK(b_root_csv(rows, false).rfind("5,1,", 0) == 0);
}

TEST_CASE("b_one cache is safe for concurrent first use") {
    const Prime p(29);
    std::vector<std::future<FpPoly>> jobs;
    for (int t = 0; t < 8; ++t)
        jobs.push_back(std::async(std::launch::async, [p, t] {
            FpPoly acc = FpPoly::constant(el(p, 1));
            for (u32 s = 1; s + 2 <= 29; ++s) acc *= b_one(p, 1 + (s + t) % 27);
            return acc;
        }));
    const FpPoly first = jobs[0].get();
    for (std::size_t i = 1; i < jobs.size(); ++i) CHECK(jobs[i].get() == first);
    CHECK(first == product_b_direct(p));
}

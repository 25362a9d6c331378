#include <doctest.h>

#include "support/helpers.hpp"

#include <trunclog/verify.hpp>

#include <json.hpp>

#include <map>
#include <set>

using namespace trunclog;
using testing_support::el;

namespace {

std::map<TheoremId, u64> expected_cases(u32 p) {
    const u64 q = p;
    return {
        {TheoremId::LemmaProduct, (q - 1) * (q - 1)},
        {TheoremId::PowerFormula, q - 1},
        {TheoremId::BConjugate, q - 2},
        {TheoremId::RootsTheorem, (q - 2) * (q - 1)},
        {TheoremId::Symmetry, q - 2},
        {TheoremId::PowersFunctional, q - 1},
        {TheoremId::ProductFormula, q},
        {TheoremId::TruncBinomialRules, 72},
    };
}

std::string strip_elapsed(std::string s) {
    const auto j = nlohmann::json::parse(s);
    auto copy = j;
    copy.erase("elapsed_ms");
    return copy.dump();
}

}  // namespace

TEST_CASE("theorem names round trip") {
    CHECK(all_theorems().size() == kTheoremCount);
    std::set<std::string> names;
    for (TheoremId id : all_theorems()) {
        const auto name = std::string(to_string(id));
        names.insert(name);
        CHECK(theorem_from_string(name) == id);
    }
    CHECK(names.size() == kTheoremCount);
    CHECK_FALSE(theorem_from_string("NoSuchTheorem").has_value());
    CHECK(all_theorems().front() == TheoremId::LeftInverse);
    CHECK(all_theorems().back() == TheoremId::CCoefficients);
}

TEST_CASE("case counts follow the enumeration formulas") {
    for (u32 q : {3u, 5u, 7u}) {
        TheoryObjects objects{Prime(q)};
        for (const auto& [id, n] : expected_cases(q)) {
            const VerifyReport r = verify_theorem(objects, id);
            CHECK(r.status == Status::pass);
            CHECK(r.cases == n);
            CHECK(r.prime == q);
            CHECK(r.theorem == id);
        }
    }
    CHECK(verify_theorem(Prime(7), TheoremId::LemmaProduct).cases == 36);
    CHECK(verify_theorem(Prime(5), TheoremId::RootsTheorem).cases == 12);
}

TEST_CASE("verify_all passes at small primes") {
    for (u32 q : {3u, 5u, 7u}) {
        const auto reports = verify_all(Prime(q));
        REQUIRE(reports.size() == kTheoremCount);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            INFO(to_string(reports[i].theorem), " at p = ", q);
            CHECK(reports[i].theorem == all_theorems()[i]);
            CHECK(reports[i].status == Status::pass);
            CHECK_FALSE(reports[i].witness.has_value());
            CHECK(reports[i].cases > 0);
        }
    }
    CHECK_THROWS_AS(verify_all(Prime(2)), DomainError);
}

TEST_CASE("parallel verify_all keeps the order and the verdicts") {
    VerifyOptions par;
    par.parallel = true;
    const auto a = verify_all(Prime(7));
    const auto b = verify_all(Prime(7), par);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(strip_elapsed(report_json(a[i])) == strip_elapsed(report_json(b[i])));
}

TEST_CASE("JSON report shape") {
    const VerifyReport r = verify_theorem(Prime(5), TheoremId::RootsTheorem);
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j.at("prime") == 5);
    CHECK(j.at("theorem") == "RootsTheorem");
    CHECK(j.at("cases") == 12);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("witness").is_null());
    CHECK(j.at("elapsed_ms").is_number_integer());
    CHECK(j.size() == 6);
    CHECK(report_json(r).find('\n') == std::string::npos);
    CHECK(report_text(r).rfind("p=5 RootsTheorem pass cases=12", 0) == 0);
}

TEST_CASE("a zero pair budget is reported as skipped") {
    VerifyOptions o;
    o.pairs = PairBudget{false, 0};
    const VerifyReport r = verify_theorem(Prime(5), TheoremId::CCoefficients, o);
    CHECK(r.status == Status::skipped);
    CHECK_FALSE(r.reason.empty());
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j.at("status") == "skipped");
    CHECK(j.contains("reason"));
}

TEST_CASE("pair budgets") {
    CHECK(PairBudget::default_for(Prime(3)).exhaustive);
    CHECK(PairBudget::default_for(Prime(5)).exhaustive);
    CHECK_FALSE(PairBudget::default_for(Prime(7)).exhaustive);
    CHECK(PairBudget::default_for(Prime(7)).count == 200);
    // valid pairs: x + y outside F_p^*, i.e. p^4 - p^2 (p - 1)
    CHECK(verify_c_coefficients(Prime(3), PairBudget{true, 0}).cases == 81 - 18);
    CHECK(verify_c_coefficients(Prime(5), PairBudget{true, 0}).cases == 625 - 100);
    const VerifyReport sampled = verify_c_coefficients(Prime(7), PairBudget{false, 50}, 11);
    CHECK(sampled.status == Status::pass);
    CHECK(sampled.cases == 50);
}

TEST_CASE("c_i solutions") {
    const Ext2Field f3{Prime(3)};
    // beta = -alpha is always solvable
    for (u64 i = 0; i < f3.order(); ++i) {
        const Ext2Elem x = f3.element(i);
        const CSolution s = solve_c_coefficients(f3, x, -x);
        CHECK(s.solvable);
        CHECK(s.c.size() == 3);
    }
    int compared = 0;
    for (const Ext2Elem& x : f3.elements())
        for (const Ext2Elem& y : f3.elements()) {
            const Ext2Elem z = x + y;
            if (z.in_base_field() && !z.is_zero()) continue;
            const CSolution s = solve_c_coefficients(f3, x, y);
            REQUIRE(s.solvable);
            const auto closed = c_closed_forms_p3(f3, x, y);
            if (!closed || !s.unique) continue;
            ++compared;
            for (int i = 0; i < 3; ++i) CHECK(s.c[i] == (*closed)[i]);
        }
    CHECK(compared > 0);
    CHECK_THROWS_AS(c_closed_forms_p3(Ext2Field(Prime(5)), Ext2Field(Prime(5)).one(), Ext2Field(Prime(5)).one()), DomainError);
    const Ext2Field f5{Prime(5)};
    const Ext2Elem a = f5.make(2, 3);
    CHECK(solve_c_coefficients(f5, a, -a).solvable);
}

TEST_CASE("c_i sampling is deterministic in the seed") {
    const VerifyReport a = verify_c_coefficients(Prime(7), PairBudget{false, 30}, 5);
    const VerifyReport b = verify_c_coefficients(Prime(7), PairBudget{false, 30}, 5);
    CHECK(a.cases == b.cases);
    CHECK(a.status == Status::pass);
}

TEST_CASE("single-site mutations are caught with a witness") {
    const Prime p(5);
    auto failing = [](TheoryObjects& objects) {
        std::set<TheoremId> out;
        for (const VerifyReport& r : verify_all(objects)) {
            if (r.status == Status::fail) {
                CHECK(r.witness.has_value());
                out.insert(r.theorem);
            }
        }
        return out;
    };
    SUBCASE("G") {
        TheoryObjects objects(p);
        const GLog g = objects.glog();
        objects.set_glog(g.with_coeff(2, g.coeff(2) + RatFn::constant(el(p, 1))));
        const auto f = failing(objects);
        CHECK(f.count(TheoremId::LeftInverse));
        CHECK(f.count(TheoremId::RightInverse));
        CHECK(f.count(TheoremId::Reciprocal));
    }
    SUBCASE("L") {
        TheoryObjects objects(p);
        const XPoly l = objects.laguerre();
        objects.set_laguerre(l.with_coeff(1, l.coeff(1) + RatFn::constant(el(p, 1))));
        const auto f = failing(objects);
        CHECK(f.count(TheoremId::LeftInverse));
        CHECK(f.count(TheoremId::LemmaProduct));
    }
    SUBCASE("b") {
        TheoryObjects objects(p);
        objects.set_b1(1, objects.b1(1) + FpPoly::variable(p));
        const auto f = failing(objects);
        CHECK(f.count(TheoremId::BConjugate));
        CHECK(f.count(TheoremId::RootsTheorem));
    }
    SUBCASE("untouched objects pass") {
        TheoryObjects objects(p);
        CHECK(failing(objects).empty());
    }
}

TEST_CASE("failure witnesses render in text") {
    TheoryObjects objects(Prime(5));
    objects.set_b1(1, objects.b1(1) + FpPoly::constant(el(Prime(5), 1)));  // b_{1,2} is its own mirror at p = 5
    const VerifyReport r = verify_theorem(objects, TheoremId::Symmetry);
    REQUIRE(r.status == Status::fail);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(r.witness->params.empty());
    const std::string text = report_text(r);
    CHECK(text.find("fail") != std::string::npos);
    CHECK(text.find("lhs") != std::string::npos);
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j.at("witness").is_object());
    CHECK(j.at("witness").contains("case"));
}

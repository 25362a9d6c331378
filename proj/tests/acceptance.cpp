// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cli.hpp>

#include <trunclog/bpoly.hpp>
#include <trunclog/glog.hpp>
#include <trunclog/special.hpp>
#include <trunclog/verify.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace trunclog;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok;
    std::string detail;
};

bool all_pass(const std::vector<VerifyReport>& reports, std::string& detail) {
    for (const auto& r : reports)
        if (r.status != Status::pass) {
            detail = "p=" + std::to_string(r.prime) + " " + std::string(to_string(r.theorem)) + " " +
                     std::string(to_string(r.status));
            return false;
        }
    return true;
}

FpElem el(Prime p, i64 v) { return FpElem(p, v); }

Outcome p3_exactness() {
    const auto t0 = Clock::now();
    const Prime p(3);
    if (glog(p).as_xpoly().to_string() != "-X - X^2/(a + 2)") return {false, "glog(3) rendering"};
    if (!(laguerre_pm1(p).specialize(el(p, 0)) == FpPoly(p, {1, 1, 2}, 'X'))) return {false, "L at a = 0"};
    const Ext2Field f(p);
    int compared = 0, unique = 0;
    for (const auto& x : f.elements())
        for (const auto& y : f.elements()) {
            const Ext2Elem z = x + y;
            if (z.in_base_field() && !z.is_zero()) continue;
            const auto closed = c_closed_forms_p3(f, x, y);
            if (!closed) continue;
            const CSolution s = solve_c_coefficients(f, x, y);
            if (!s.solvable) return {false, "unsolvable pair " + to_string(x) + ", " + to_string(y)};
            // the closed forms must solve the system; when the solution is unique they are it
            std::vector<Ext2Elem> c(closed->begin(), closed->end());
            if (s.unique && c != s.c) return {false, "closed forms differ at " + to_string(x) + ", " + to_string(y)};
            ++compared;
            if (s.unique) ++unique;
        }
    const VerifyReport rep = verify_c_coefficients(p, PairBudget{true, 0});
    if (rep.status != Status::pass) return {false, "CCoefficients at p = 3"};
    const double t = seconds_since(t0);
    return {t < 1.0, std::to_string(compared) + " pairs, " + std::to_string(unique) + " with a unique solution, " + std::to_string(t) + " s"};
}

Outcome verify_all_small() {
    const auto t0 = Clock::now();
    std::string detail;
    for (u32 q : {3u, 5u, 7u, 11u, 13u})
        if (!all_pass(verify_all(Prime(q)), detail)) return {false, detail};
    const double t = seconds_since(t0);
    return {t < 60.0, std::to_string(t) + " s"};
}

Outcome light_battery() {
    const auto t0 = Clock::now();
    const TheoremId ids[] = {TheoremId::RootsTheorem,  TheoremId::LucasCriterion, TheoremId::Symmetry,
                             TheoremId::BConjugate,    TheoremId::ProductFormula, TheoremId::LFactorization,
                             TheoremId::PolylogShift,  TheoremId::PolylogWilson,  TheoremId::SixSymmetries};
    std::string detail;
    int primes = 0;
    for (u32 q = 3; q <= 31; q += 2) {
        if (!is_prime(q)) continue;
        ++primes;
        TheoryObjects objects{Prime(q)};
        std::vector<VerifyReport> reps;
        for (TheoremId id : ids) reps.push_back(verify_theorem(objects, id));
        if (!all_pass(reps, detail)) return {false, detail};
    }
    const double t = seconds_since(t0);
    return {t < 120.0, std::to_string(primes) + " primes, " + std::to_string(t) + " s"};
}

Outcome b_routes() {
    u64 keys = 0;
    for (u32 q = 3; q <= 19; q += 2) {
        if (!is_prime(q)) continue;
        const Prime p(q);
        for (u32 r = 1; r < q; ++r)
            for (u32 s = 1; s < q; ++s) {
                const BPolyKey key(p, r, s);
                const FpPoly b = b_rs(key);
                if (!(b_rs_coeff(key) == b)) return {false, "coefficient route at p=" + std::to_string(q)};
                if (!key.degenerate() && !(b_rs_alt(key) == b)) return {false, "alternate route at p=" + std::to_string(q)};
                ++keys;
            }
    }
    return {true, std::to_string(keys) + " keys"};
}

Outcome four_term() {
    std::string detail;
    std::vector<VerifyReport> reps;
    for (u32 q = 3; q <= 13; q += 2)
        if (is_prime(q)) reps.push_back(verify_theorem(Prime(q), TheoremId::FourTerm));
    return {all_pass(reps, detail), detail.empty() ? "p = 3..13" : detail};
}

Outcome heavy() {
    const TheoremId ids[] = {TheoremId::LeftInverse, TheoremId::RightInverse, TheoremId::Reciprocal,
                             TheoremId::PowersFunctional, TheoremId::PowersHEqualsPMinus1};
    std::string detail;
    double worst = 0;
    for (u32 q = 3; q <= 13; q += 2) {
        if (!is_prime(q)) continue;
        TheoryObjects objects{Prime(q)};
        for (TheoremId id : ids) {
            const auto t0 = Clock::now();
            const VerifyReport r = verify_theorem(objects, id);
            const double t = seconds_since(t0);
            if (q == 13) worst = std::max(worst, t);
            if (!all_pass({r}, detail)) return {false, detail};
            if (q == 13 && t >= 10.0) return {false, std::string(to_string(id)) + " took " + std::to_string(t) + " s"};
        }
    }
    return {true, "slowest at p=13: " + std::to_string(worst) + " s"};
}

bool trips(TheoryObjects& objects, TheoremId must, bool any) {
    bool must_failed = false, some = false;
    for (const VerifyReport& r : verify_all(objects)) {
        if (r.status != Status::fail) continue;
        if (!r.witness) return false;
        some = true;
        if (r.theorem == must) must_failed = true;
    }
    return any ? some : must_failed;
}

Outcome mutation() {
    const Prime p(5);
    {
        TheoryObjects objects(p);
        const GLog g = objects.glog();
        const RatFn c = g.coeff(2);
        objects.set_glog(g.with_coeff(2, RatFn(c.num() + FpPoly::constant(el(p, 1)), c.den())));
        if (!trips(objects, TheoremId::LeftInverse, false)) return {false, "G mutation not caught by LeftInverse"};
    }
    {
        TheoryObjects objects(p);
        const XPoly l = objects.laguerre();
        objects.set_laguerre(l.with_coeff(1, l.coeff(1) + RatFn::constant(el(p, 1))));
        if (!trips(objects, TheoremId::LeftInverse, true)) return {false, "L mutation not caught"};
    }
    {
        TheoryObjects objects(p);
        objects.set_b1(1, objects.b1(1) + FpPoly::constant(el(p, 1)));
        if (!trips(objects, TheoremId::BConjugate, true)) return {false, "b_{1,1} mutation not caught"};
    }
    {
        TheoryObjects objects(p);
        std::string detail;
        if (!all_pass(verify_all(objects), detail)) return {false, "unmutated run fails: " + detail};
    }
    return {true, "G, L and b_{1,1} mutations caught at p=5"};
}

std::string cli_json_run() {
    std::ostringstream out, err;
    if (cli::cli_main({"verify", "--prime", "7", "--format", "json"}, out, err) != 0) return "exit != 0";
    static const std::regex ms("\"elapsed_ms\":[0-9]+");
    return std::regex_replace(out.str(), ms, "\"elapsed_ms\":_");
}

Outcome determinism() {
    const std::string a = cli_json_run(), b = cli_json_run();
    const bool ok = a == b && a != "exit != 0" && !a.empty();
    return {ok, ok ? "identical apart from elapsed_ms" : "runs differ"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 p=3 exactness", p3_exactness},
        {"2 verify_all p in {3,5,7,11,13}", verify_all_small},
        {"3 light battery, odd p <= 31", light_battery},
        {"4 three-route b agreement, p <= 19", b_routes},
        {"5 four-term identity, p <= 13", four_term},
        {"6 heavy symbolic checks, p <= 13", heavy},
        {"7 mutation sensitivity, p=5", mutation},
        {"8 deterministic verify output", determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o{false, ""};
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << o.detail << ")\n";
        if (!o.ok) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

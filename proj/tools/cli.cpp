#include "cli.hpp"

#include <trunclog/bpoly.hpp>
#include <trunclog/glog.hpp>
#include <trunclog/special.hpp>
#include <trunclog/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace trunclog::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kRendering =
    "Rendering: the parameter alpha is printed as 'a'. Polynomials are listed from the highest\n"
    "degree down with residues in [0, p), e.g. \"2*a^2 + 1\". A coefficient in F_p(a) prints as\n"
    "\"num / den\" with a monic denominator and no common factor; multi-term parts are\n"
    "parenthesized. Whole polynomials in X print from X^0 upward with signed constant\n"
    "numerators, e.g. \"-X - X^2/(a + 2)\".";

u64 parse_u64(const std::string& s, const std::string& what) {
    u64 v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) throw UsageError(what + " must be a nonnegative integer, got '" + s + "'");
    return v;
}

// "P" or "A..B". A single P must be an odd prime; a range keeps the odd primes in it.
std::vector<Prime> parse_primes(const std::string& spec) {
    const auto dots = spec.find("..");
    auto make = [](u64 n) {
        if (n == 2) throw UsageError("p = 2 is not supported; p must be an odd prime");
        if (!is_prime(n)) throw UsageError(std::to_string(n) + " is not prime");
        if (n > kMaxPrime) throw UsageError("p must not exceed " + std::to_string(kMaxPrime));
        return Prime(n);
    };
    if (dots == std::string::npos) return {make(parse_u64(spec, "--prime"))};
    const u64 lo = parse_u64(spec.substr(0, dots), "range start");
    const u64 hi = parse_u64(spec.substr(dots + 2), "range end");
    if (lo < 3) throw UsageError("prime range must start at 3 or above");
    if (hi < lo) throw UsageError("prime range is empty");
    if (hi > kMaxPrime) throw UsageError("p must not exceed " + std::to_string(kMaxPrime));
    std::vector<Prime> out;
    for (u64 n = lo; n <= hi; ++n)
        if (n % 2 == 1 && is_prime(n)) out.emplace_back(n);
    if (out.empty()) throw UsageError("no odd prime in " + spec);
    return out;
}

// ---------------------------------------------------------------------------
// show

void show_glog(Prime p, bool json, std::ostream& out) {
    const GLog g = glog(p);
    const std::string text = g.as_xpoly().to_string();
    if (json) {
        Json coeffs = Json::array();
        for (u32 k = 1; k < p.value(); ++k)
            coeffs.push_back({{"k", k}, {"num", g.coeff(k).num().to_string()}, {"den", g.coeff(k).den().to_string()}});
        out << Json{{"prime", p.value()}, {"object", "glog"}, {"text", text}, {"coefficients", coeffs}}.dump() << '\n';
        return;
    }
    out << "G(X), p = " << p.value() << "\n  " << text << '\n';
    for (u32 k = 1; k < p.value(); ++k) out << "  X^" << k << ": " << g.coeff(k).to_string() << '\n';
}

void show_laguerre(Prime p, bool json, std::ostream& out) {
    const XPoly l = laguerre_pm1(p);
    const FpPoly c = laguerre_const(p);
    if (json) {
        Json coeffs = Json::array();
        for (u32 k = 0; k < p.value(); ++k) coeffs.push_back({{"k", k}, {"coefficient", l.coeff(k).to_string()}});
        out << Json{{"prime", p.value()}, {"object", "laguerre"}, {"text", l.to_string()}, {"coefficients", coeffs},
                    {"constant", c.to_string()}}
                   .dump()
            << '\n';
        return;
    }
    out << "L(X), p = " << p.value() << "\n  " << l.to_string() << '\n';
    for (u32 k = 0; k < p.value(); ++k) out << "  X^" << k << ": " << l.coeff(k).to_string() << '\n';
    out << "  L at (a^p, a^p - a): " << c.to_string() << '\n';
}

void show_b(Prime p, bool json, std::ostream& out) {
    const auto rows = b_root_table(p);
    const FpPoly prod = product_all_b(p);
    if (json) {
        for (const auto& r : rows)
            out << Json{{"prime", p.value()}, {"object", "b"}, {"s", r.s}, {"poly", b_one(p, r.s).to_string()},
                        {"roots", r.roots}}
                       .dump()
                << '\n';
        out << Json{{"prime", p.value()}, {"object", "b-product"}, {"poly", prod.to_string()}}.dump() << '\n';
        return;
    }
    out << "b_{1,s}(a), p = " << p.value() << '\n';
    for (const auto& r : rows) {
        out << "  s=" << r.s << ": " << b_one(p, r.s).to_string() << "  roots:";
        for (u32 a : r.roots) out << ' ' << a;
        out << '\n';
    }
    out << "  product: " << prod.to_string() << '\n';
}

void show_polylog(Prime p, bool json, std::ostream& out) {
    const FpPoly l1 = finite_polylog(p, 1);
    const FpPoly e = truncated_exp(p);
    if (json) {
        out << Json{{"prime", p.value()}, {"object", "polylog"}, {"d", 1}, {"poly", l1.to_string()}}.dump() << '\n';
        out << Json{{"prime", p.value()}, {"object", "exp"}, {"poly", e.to_string()}}.dump() << '\n';
        return;
    }
    out << "p = " << p.value() << "\n  L1(X) = " << l1.to_string() << "\n  E(X) = " << e.to_string() << '\n';
}

// ---------------------------------------------------------------------------
// table

void table(const std::string& which, const std::vector<Prime>& primes, bool json, std::ostream& out) {
    bool header = !json;
    for (Prime p : primes) {
        const u32 q = p.value();
        if (which == "b-roots") {
            const auto rows = b_root_table(p);
            if (json)
                for (const auto& r : rows)
                    out << Json{{"p", r.p}, {"s", r.s}, {"roots", r.roots}, {"degree", r.degree}}.dump() << '\n';
            else
                out << b_root_csv(rows, header);
        } else if (which == "glog-poles") {
            const auto rows = glog_pole_table(glog(p));
            if (json)
                for (const auto& r : rows) out << Json{{"p", r.p}, {"k", r.k}, {"a", r.a}, {"pole", r.pole}}.dump() << '\n';
            else
                out << glog_pole_csv(rows, header);
        } else if (which == "laguerre") {
            const XPoly l = laguerre_pm1(p);
            if (header) out << "p,k,coefficient\n";
            for (u32 k = 0; k < q; ++k) {
                const std::string c = l.coeff(k).to_string();
                if (json) out << Json{{"p", q}, {"k", k}, {"coefficient", c}}.dump() << '\n';
                else out << q << ',' << k << ',' << c << '\n';
            }
        } else {  // polylog
            const FpPoly e = truncated_exp(p);
            const FpPoly l1 = finite_polylog(p, 1);
            if (header) out << "p,k,exp,polylog1\n";
            for (u32 k = 0; k < q; ++k) {
                if (json)
                    out << Json{{"p", q}, {"k", k}, {"exp", e.coeff(k).value()}, {"polylog1", l1.coeff(k).value()}}.dump()
                        << '\n';
                else
                    out << q << ',' << k << ',' << e.coeff(k).value() << ',' << l1.coeff(k).value() << '\n';
            }
        }
        header = false;
    }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact constructions and identity checks for modular Laguerre polynomials, the b_{r,s}\n"
                 "family and the generalized truncated logarithm over F_p.",
                 "trunclog"};
    app.footer(kRendering);
    app.require_subcommand(1);

    std::string prime_spec, format, target, theorem = "all", pairs;
    u64 seed = 0;
    bool parallel = false;

    auto* show = app.add_subcommand("show", "Print one of the constructed objects");
    show->add_option("target", target, "glog | laguerre | b | polylog | all")
        ->required()
        ->check(CLI::IsMember({"glog", "laguerre", "b", "polylog", "all"}));
    show->add_option("--prime", prime_spec, "odd prime P, or an inclusive range A..B")->required();
    show->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->default_str("text");

    auto* tab = app.add_subcommand("table", "Emit a table as CSV (with header) or JSON lines");
    tab->add_option("target", target, "b-roots | glog-poles | laguerre | polylog")
        ->required()
        ->check(CLI::IsMember({"b-roots", "glog-poles", "laguerre", "polylog"}));
    tab->add_option("--prime", prime_spec, "odd prime P, or an inclusive range A..B")->required();
    tab->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->default_str("csv");

    auto* ver = app.add_subcommand("verify", "Check the identities; exit 0 iff nothing fails");
    ver->add_option("--prime", prime_spec, "odd prime P, or an inclusive range A..B")->required();
    ver->add_option("--theorem", theorem, "theorem id, or all")->default_str("all");
    ver->add_option("--format", format, "text | json (one object per line)")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
    ver->add_option("--seed", seed, "seed for the sampled (alpha, beta) pairs")->default_str("0");
    ver->add_option("--pairs", pairs, "pair budget for CCoefficients: N or exhaustive (default: exhaustive for p <= 5, else 200)");
    ver->add_flag("--parallel", parallel, "run the checkers of one prime concurrently");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("trunclog");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        const std::vector<Prime> primes = parse_primes(prime_spec);
        if (format.empty()) format = tab->parsed() ? "csv" : "text";
        const bool json = format == "json";

        if (show->parsed()) {
            for (Prime p : primes) {
                if (target == "glog" || target == "all") show_glog(p, json, out);
                if (target == "laguerre" || target == "all") show_laguerre(p, json, out);
                if (target == "b" || target == "all") show_b(p, json, out);
                if (target == "polylog" || target == "all") show_polylog(p, json, out);
            }
            return 0;
        }
        if (tab->parsed()) {
            table(target, primes, json, out);
            return 0;
        }

        VerifyOptions opts;
        opts.seed = seed;
        opts.parallel = parallel;
        if (!pairs.empty()) {
            opts.pairs = pairs == "exhaustive" ? PairBudget{true, 0} : PairBudget{false, parse_u64(pairs, "--pairs")};
        }
        std::optional<TheoremId> only;
        if (theorem != "all") {
            only = theorem_from_string(theorem);
            if (!only) throw UsageError("unknown theorem '" + theorem + "'");
        }
        u64 passed = 0, failed = 0, skipped = 0;
        for (Prime p : primes) {
            std::vector<VerifyReport> reports;
            if (only) reports.push_back(verify_theorem(p, *only, opts));
            else reports = verify_all(p, opts);
            for (const auto& r : reports) {
                out << (json ? report_json(r) : report_text(r)) << '\n';
                if (r.status == Status::pass) ++passed;
                else if (r.status == Status::fail) ++failed;
                else ++skipped;
            }
        }
        if (!json) out << "summary: " << passed << " pass, " << failed << " fail, " << skipped << " skipped\n";
        return failed == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace trunclog::cli

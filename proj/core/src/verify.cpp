#include <trunclog/verify.hpp>

#include <trunclog/bpoly.hpp>
#include <trunclog/jacobi.hpp>
#include <trunclog/special.hpp>

#include <json.hpp>

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace trunclog {

namespace {

constexpr std::array<TheoremId, kTheoremCount> kOrder = {
    TheoremId::LeftInverse,      TheoremId::RightInverse,       TheoremId::LemmaProduct,
    TheoremId::PowerFormula,     TheoremId::BConjugate,         TheoremId::RootsTheorem,
    TheoremId::LucasCriterion,   TheoremId::Symmetry,           TheoremId::ProductFormula,
    TheoremId::LFactorization,   TheoremId::Reciprocal,         TheoremId::PowersFunctional,
    TheoremId::PowersHEqualsPMinus1, TheoremId::PolylogShift,   TheoremId::PolylogWilson,
    TheoremId::SixSymmetries,    TheoremId::FourTerm,           TheoremId::TruncBinomialRules,
    TheoremId::BAltAgreement,    TheoremId::JacobiLink,         TheoremId::JacobiShift,
    TheoremId::JacobiReflection, TheoremId::CCoefficients,
};

constexpr std::array<std::string_view, kTheoremCount> kNames = {
    "LeftInverse",    "RightInverse",  "LemmaProduct",         "PowerFormula",  "BConjugate",
    "RootsTheorem",   "LucasCriterion", "Symmetry",            "ProductFormula", "LFactorization",
    "Reciprocal",     "PowersFunctional", "PowersHEqualsPMinus1", "PolylogShift", "PolylogWilson",
    "SixSymmetries",  "FourTerm",      "TruncBinomialRules",   "BAltAgreement", "JacobiLink",
    "JacobiShift",    "JacobiReflection", "CCoefficients",
};

using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(u64 v) { return std::to_string(v); }

// Counts cases and keeps the first failure.
class Cases {
public:
    void check(bool ok, const std::function<Witness()>& make) {
        ++n_;
        if (!ok && !first_) first_ = make();
    }
    void fail(Witness w) {
        ++n_;
        if (!first_) first_ = std::move(w);
    }
    u64 count() const noexcept { return n_; }
    std::optional<Witness>& first() noexcept { return first_; }

private:
    u64 n_ = 0;
    std::optional<Witness> first_;
};

FpElem one(u32 p) { return FpElem::from_residue(p, 1); }

FpPoly unit_minus_apm1(Prime p) {
    return FpPoly::constant(one(p.value())) - FpPoly::monomial(one(p.value()), p.value() - 1);
}

XPoly x_monomial(Prime p, const RatFn& c) { return XPoly::monomial(p, RatFn::constant(one(p.value())), 1, c); }

// ---------------------------------------------------------------------------
// Compositional inverses and products of Laguerre polynomials

void check_left_inverse(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const RatFn c = frobenius_constant(p);
    const XPoly lhs = compose_mod(o.glog().as_xpoly(), o.laguerre(), c);
    const XPoly rhs = x_monomial(p, c);
    cases.check(lhs == rhs, [&] { return Witness{{}, lhs.to_string(), rhs.to_string()}; });
}

void check_right_inverse(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const RatFn c(o.lconst());
    const XPoly lhs = compose_mod(o.laguerre().with_modulus(c), o.glog().as_xpoly(c), c);
    const XPoly rhs = x_monomial(p, c);
    cases.check(lhs == rhs, [&] { return Witness{{}, lhs.to_string(), rhs.to_string()}; });
}

void check_lemma_product(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    const RatFn c = frobenius_constant(p);
    for (u32 r = 1; r < q; ++r)
        for (u32 s = 1; s < q; ++s) {
            const XPoly lhs = mulmod(o.laguerre_scaled(r), o.laguerre_scaled(s));
            const XPoly rhs = r + s == q ? XPoly::constant(p, RatFn(unit_minus_apm1(p)), c)
                                         : o.laguerre_scaled((r + s) % q) * RatFn(o.b(r, s));
            cases.check(lhs == rhs, [&] {
                return Witness{{{"r", str(r)}, {"s", str(s)}}, lhs.to_string(), rhs.to_string()};
            });
        }
}

void check_power_formula(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    XPoly power = o.laguerre();
    FpPoly prod = FpPoly::constant(one(q));
    for (u32 j = 1; j < q; ++j) {
        if (j > 1) {
            power = mulmod(power, o.laguerre());
            prod *= o.b1(j - 1);
        }
        const XPoly rhs = o.laguerre_scaled(j) * RatFn(prod);
        cases.check(power == rhs, [&] { return Witness{{{"j", str(j)}}, power.to_string(), rhs.to_string()}; });
    }
}

// ---------------------------------------------------------------------------
// b_{1,s}: conjugates, roots, symmetry, products

void check_b_conjugate(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const FpPoly target = unit_minus_apm1(p);
    for (u32 s = 1; s + 2 <= p.value(); ++s) {
        const FpPoly lhs = o.b1(s) * o.b1(s).scale_arg(-one(p.value()));
        cases.check(lhs == target, [&] { return Witness{{{"s", str(s)}}, lhs.to_string(), target.to_string()}; });
    }
}

void check_roots_theorem(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    for (u32 s = 1; s + 2 <= q; ++s) {
        const std::vector<u32> predicted = b_roots_predicted(p, s);
        for (u32 a = 1; a < q; ++a) {
            const bool is_root = o.b1(s).eval(FpElem::from_residue(q, a)).is_zero();
            const bool expect = std::find(predicted.begin(), predicted.end(), a) != predicted.end();
            cases.check(is_root == expect, [&] {
                return Witness{{{"s", str(s)}, {"a", str(a)}},
                               std::string("b_{1,s}(a) ") + (is_root ? "= 0" : "!= 0"),
                               std::string("a + a' < p ") + (expect ? "holds" : "fails")};
            });
        }
    }
}

void check_lucas(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    for (u32 s = 1; s + 2 <= q; ++s)
        for (u32 a = 1; a < q; ++a) {
            const bool is_root = o.b1(s).eval(FpElem::from_residue(q, a)).is_zero();
            const bool lucas = b_root_lucas(p, s, a);
            cases.check(is_root == lucas, [&] {
                return Witness{{{"s", str(s)}, {"a", str(a)}},
                               std::string("b_{1,s}(a) ") + (is_root ? "= 0" : "!= 0"),
                               std::string("C(a + s a, a) mod p ") + (lucas ? "!= 0" : "= 0")};
            });
        }
}

void check_symmetry(TheoryObjects& o, Cases& cases) {
    const u32 q = o.prime().value();
    for (u32 s = 1; s + 2 <= q; ++s) {
        const FpPoly& lhs = o.b1(s);
        const FpPoly& rhs = o.b1(q - 1 - s);
        cases.check(lhs == rhs, [&] { return Witness{{{"s", str(s)}}, lhs.to_string(), rhs.to_string()}; });
    }
}

void check_product_formula(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    FpPoly direct = FpPoly::constant(one(q));
    for (u32 s = 1; s + 2 <= q; ++s) direct *= o.b1(s);
    const FpPoly closed = product_b_closed_form(p);
    const auto [via_l, rem] = divrem(o.lconst(), unit_minus_apm1(p));
    cases.check(direct == closed && direct == via_l && rem.is_zero(), [&] {
        return Witness{{{"route", "direct vs closed form vs Lconst/(1 - a^(p-1))"}},
                       direct.to_string(),
                       closed.to_string() + " ; " + via_l.to_string() + " rem " + rem.to_string()};
    });
    // root a of the product has multiplicity p - a - 1
    for (u32 a = 1; a < q; ++a) {
        const FpPoly lin = FpPoly::linear(one(q), -FpElem::from_residue(q, a));
        FpPoly f = direct;
        u32 mult = 0;
        while (!f.is_zero()) {
            auto [quot, r] = divrem(f, lin);
            if (!r.is_zero()) break;
            f = std::move(quot);
            ++mult;
        }
        const u32 expect = q - a - 1;
        cases.check(mult == expect, [&] {
            return Witness{{{"a", str(a)}}, "multiplicity " + str(mult), "multiplicity " + str(expect)};
        });
    }
}

void check_l_factorization(TheoryObjects& o, Cases& cases) {
    const FpPoly lhs = laguerre_const_substitution(o.laguerre());
    const FpPoly rhs = laguerre_const_product(o.prime());
    cases.check(lhs == rhs, [&] { return Witness{{}, lhs.to_string(), rhs.to_string()}; });
}

// ---------------------------------------------------------------------------
// Functional equations of G

void check_reciprocal(TheoryObjects& o, Cases& cases) {
    const XPoly lhs = o.glog().as_xpoly() * RatFn(o.lconst());
    const XPoly rhs = reciprocal_rhs(o.glog());
    cases.check(lhs == rhs, [&] { return Witness{{}, lhs.to_string(), rhs.to_string()}; });
}

void check_powers(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    const RatFn c(o.lconst());
    const XPoly g = o.glog().as_xpoly(c);
    FpPoly prod = FpPoly::constant(one(q));
    for (u32 h = 1; h < q; ++h) {
        if (h > 1) prod *= o.b1(h - 1);
        const FpElem hh(p, h);
        const XPoly inner = XPoly::monomial(p, RatFn(FpPoly::constant(one(q)), prod), h, c);
        const XPoly lhs = compose_mod(o.glog().scale_param(hh).as_xpoly(), inner, c);
        const XPoly rhs = g * RatFn::constant(hh);
        cases.check(lhs == rhs, [&] { return Witness{{{"h", str(h)}}, lhs.to_string(), rhs.to_string()}; });
    }
}

void check_powers_pm1(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    const RatFn c(o.lconst());
    const XPoly inner = XPoly::monomial(p, RatFn(unit_minus_apm1(p), o.lconst()), q - 1, c);
    const XPoly lhs = compose_mod(o.glog().scale_param(-one(q)).as_xpoly(), inner, c);
    const XPoly rhs = -o.glog().as_xpoly(c);
    cases.check(lhs == rhs, [&] { return Witness{{}, lhs.to_string(), rhs.to_string()}; });
}

// ---------------------------------------------------------------------------
// The truncated logarithm: one-variable symmetries and the four-term relation

// sum_k f_k N^k D^{p-k}, i.e. D^p f(N/D) for deg f < p.
FpPoly homogenize(const FpPoly& f, const FpPoly& n, const FpPoly& d) {
    const u32 q = f.modulus();
    std::vector<FpPoly> dpow(q + 1, FpPoly::constant(one(q), 'X'));
    for (u32 i = 1; i <= q; ++i) dpow[i] = dpow[i - 1] * d;
    FpPoly acc(f.prime(), 'X');
    FpPoly npow = FpPoly::constant(one(q), 'X');
    for (u32 k = 0; k < q; ++k) {
        if (!f.coeff(k).is_zero()) acc += npow * dpow[q - k] * f.coeff(k);
        npow *= n;
    }
    return acc;
}

struct Symmetric {
    std::string name;
    FpPoly value;
};

// The five rewritten forms of L1(X), each with its prefactor cleared.
std::vector<Symmetric> polylog_forms(Prime p) {
    const u32 q = p.value();
    const FpPoly f = finite_polylog(p, 1);
    const FpPoly x = FpPoly::variable(p, 'X');
    const FpPoly uno = FpPoly::constant(one(q), 'X');
    const FpPoly one_minus_x = uno - x;
    const FpPoly x_minus_one = x - uno;
    return {
        {"L1(1-X)", compose(f, one_minus_x)},
        {"(X-1)^p L1(1/(1-X))", -homogenize(f, uno, one_minus_x)},
        {"(X-1)^p L1(X/(X-1))", homogenize(f, x, x_minus_one)},
        {"-X^p L1((X-1)/X)", -homogenize(f, x_minus_one, x)},
        {"-X^p L1(1/X)", -homogenize(f, uno, x)},
    };
}

void check_polylog_shift(TheoryObjects& o, Cases& cases) {
    const FpPoly f = finite_polylog(o.prime(), 1);
    const FpPoly lhs = compose(f, FpPoly::constant(one(o.prime().value()), 'X') - FpPoly::variable(o.prime(), 'X'));
    cases.check(lhs == f, [&] { return Witness{{}, lhs.to_string(), f.to_string()}; });
}

void check_polylog_wilson(TheoryObjects& o, Cases& cases) {
    const FpPoly f = finite_polylog(o.prime(), 1);
    const Symmetric w = polylog_forms(o.prime()).back();
    cases.check(w.value == f, [&] { return Witness{{{"form", w.name}}, w.value.to_string(), f.to_string()}; });
}

void check_six_symmetries(TheoryObjects& o, Cases& cases) {
    const FpPoly f = finite_polylog(o.prime(), 1);
    for (const auto& form : polylog_forms(o.prime()))
        cases.check(form.value == f, [&] { return Witness{{{"form", form.name}}, form.value.to_string(), f.to_string()}; });
}

void check_four_term(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    const std::size_t w = q + 1;
    std::vector<u32> grid(w * w, 0);  // grid[i*w + j] is the coefficient of X^i Y^j
    auto add = [&](std::size_t i, std::size_t j, FpElem c) {
        grid[i * w + j] = modp::add(grid[i * w + j], c.value(), q);
    };
    const FpPoly f = finite_polylog(p, 1);
    const FpPoly uno = FpPoly::constant(one(q), 'X');
    const FpPoly one_minus = uno - FpPoly::variable(p, 'X');
    std::vector<FpPoly> pw(q + 1, uno);  // (1 - v)^i
    for (u32 i = 1; i <= q; ++i) pw[i] = pw[i - 1] * one_minus;
    for (u32 k = 1; k < q; ++k) {
        const FpElem c = f.coeff(k);
        add(k, 0, c);       // L1(X)
        add(0, k, -c);      // -L1(Y)
        add(q - k, k, c);   // X^p L1(Y/X)
        // (1-X)^p L1((1-Y)/(1-X))
        const FpPoly& xs = pw[q - k];
        const FpPoly& ys = pw[k];
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j) add(i, j, c * xs.coeff(i) * ys.coeff(j));
    }
    std::size_t bad = grid.size();
    for (std::size_t t = 0; t < grid.size(); ++t)
        if (grid[t] != 0) { bad = t; break; }
    cases.check(bad == grid.size(), [&] {
        const std::size_t i = bad / w, j = bad % w;
        return Witness{{{"monomial", "X^" + str(i) + "*Y^" + str(j)}}, "coefficient " + str(grid[bad]), "0"};
    });
}

// ---------------------------------------------------------------------------
// Truncated binomials

std::vector<std::pair<std::string, RatFn>> exponent_family(Prime p) {
    const u32 q = p.value();
    const FpElem o1 = one(q);
    const FpPoly a = FpPoly::variable(p);
    return {
        {"0", RatFn(p)},
        {"1", RatFn::constant(o1)},
        {"-1", RatFn::constant(-o1)},
        {"a", RatFn(a)},
        {"a - 1", RatFn(FpPoly::linear(o1, -o1))},
        {"2*a + 1", RatFn(FpPoly::linear(FpElem(p, 2), o1))},
        {"a^2 + 1", RatFn(a * a + FpPoly::constant(o1))},
        {"1 / (a + 1)", RatFn(FpPoly::constant(o1), FpPoly::linear(o1, o1))},
    };
}

void check_trunc_binomial(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    const u32 q = p.value();
    const RatFn zero_tag(p);  // X^p - 0: multiplication truncated at degree p
    const auto family = exponent_family(p);
    std::vector<XPoly> tb;
    for (const auto& [name, f] : family) tb.push_back(trunc_binomial(f, one(q)).with_modulus(zero_tag));
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            const XPoly lhs = mulmod(tb[i], tb[j]);
            const XPoly rhs = trunc_binomial(family[i].second + family[j].second, one(q)).with_modulus(zero_tag);
            cases.check(lhs == rhs, [&] {
                return Witness{{{"rule", "product"}, {"f", family[i].first}, {"g", family[j].first}},
                               lhs.to_string(), rhs.to_string()};
            });
        }
    for (std::size_t i = 0; i < family.size(); ++i) {
        const RatFn& f = family[i].second;
        const XPoly lhs = tb[i].derivative().with_modulus(std::nullopt);
        const XPoly shifted = trunc_binomial(f - RatFn::constant(one(q)), one(q));
        const XPoly rhs = shifted * f + XPoly::monomial(p, f.pow(q) - f, q - 1);
        cases.check(lhs == rhs, [&] {
            return Witness{{{"rule", "derivative"}, {"f", family[i].first}}, lhs.to_string(), rhs.to_string()};
        });
    }
}

// ---------------------------------------------------------------------------
// Three routes to b_{r,s} and the Jacobi connection

template <class F>
void for_nondegenerate(u32 q, F&& f) {
    for (u32 r = 1; r < q; ++r)
        for (u32 s = 1; s < q; ++s)
            if (r + s != q) f(r, s);
}

void check_b_alt(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    for_nondegenerate(p.value(), [&](u32 r, u32 s) {
        const BPolyKey key(p, r, s);
        const FpPoly base = o.b(r, s);
        const FpPoly alt = b_rs_alt(key);
        const FpPoly coeff = b_rs_coeff(key);
        cases.check(base == alt && base == coeff, [&] {
            return Witness{{{"r", str(r)}, {"s", str(s)}}, base.to_string(), alt.to_string() + " ; " + coeff.to_string()};
        });
    });
}

void check_jacobi_link(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    for_nondegenerate(p.value(), [&](u32 r, u32 s) {
        JacobiSpec spec = jacobi_spec_for_b(p, r, s);
        const FpPoly lhs = jacobi_pm1(spec);
        spec.b_param += FpPoly::constant(one(p.value()));
        const FpPoly shifted = jacobi_pm1(spec);
        const FpPoly rhs = o.b(r, s);
        cases.check(lhs == rhs && shifted == rhs, [&] {
            return Witness{{{"r", str(r)}, {"s", str(s)}}, lhs.to_string() + " ; " + shifted.to_string(), rhs.to_string()};
        });
    });
}

void check_jacobi_shift(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    for_nondegenerate(p.value(), [&](u32 r, u32 s) {
        const FpPoly res = contiguous_residual(jacobi_spec_for_b(p, r, s));
        cases.check(res.is_zero(), [&] { return Witness{{{"r", str(r)}, {"s", str(s)}}, res.to_string(), "0"}; });
    });
}

void check_jacobi_reflection(TheoryObjects& o, Cases& cases) {
    const Prime p = o.prime();
    for (u32 s = 1; s + 2 <= p.value(); ++s) {
        const bool ok = jacobi_reflection_check(p, s);
        cases.check(ok, [&] {
            return Witness{{{"s", str(s)}}, "P(a, s a)((s-1)/(s+1)) chain", "b_{1,s} = b_{1,p-1-s}"};
        });
    }
}

// ---------------------------------------------------------------------------

Witness exception_witness(const char* kind, const std::exception& e) {
    return Witness{{{"exception", kind}}, e.what(), "no exception"};
}

void run_checker(TheoryObjects& o, TheoremId id, Cases& cases) {
    switch (id) {
    case TheoremId::LeftInverse: return check_left_inverse(o, cases);
    case TheoremId::RightInverse: return check_right_inverse(o, cases);
    case TheoremId::LemmaProduct: return check_lemma_product(o, cases);
    case TheoremId::PowerFormula: return check_power_formula(o, cases);
    case TheoremId::BConjugate: return check_b_conjugate(o, cases);
    case TheoremId::RootsTheorem: return check_roots_theorem(o, cases);
    case TheoremId::LucasCriterion: return check_lucas(o, cases);
    case TheoremId::Symmetry: return check_symmetry(o, cases);
    case TheoremId::ProductFormula: return check_product_formula(o, cases);
    case TheoremId::LFactorization: return check_l_factorization(o, cases);
    case TheoremId::Reciprocal: return check_reciprocal(o, cases);
    case TheoremId::PowersFunctional: return check_powers(o, cases);
    case TheoremId::PowersHEqualsPMinus1: return check_powers_pm1(o, cases);
    case TheoremId::PolylogShift: return check_polylog_shift(o, cases);
    case TheoremId::PolylogWilson: return check_polylog_wilson(o, cases);
    case TheoremId::SixSymmetries: return check_six_symmetries(o, cases);
    case TheoremId::FourTerm: return check_four_term(o, cases);
    case TheoremId::TruncBinomialRules: return check_trunc_binomial(o, cases);
    case TheoremId::BAltAgreement: return check_b_alt(o, cases);
    case TheoremId::JacobiLink: return check_jacobi_link(o, cases);
    case TheoremId::JacobiShift: return check_jacobi_shift(o, cases);
    case TheoremId::JacobiReflection: return check_jacobi_reflection(o, cases);
    case TheoremId::CCoefficients: break;
    }
    throw DomainError("no checker for theorem id");
}

i64 millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Linear algebra over F_{p^2} for the c_i system

// Row-reduce [A | b] in place; returns (consistent, rank, pivot columns).
struct Reduced {
    bool consistent;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

Reduced row_reduce(std::vector<std::vector<Ext2Elem>>& m, std::size_t cols) {
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        const Ext2Elem inv = m[row][col].inv();
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Ext2Elem f = m[r][col];
            for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m.size(); ++r)
        if (!m[r][cols].is_zero()) return {false, row, pivots};
    return {true, row, pivots};
}

// Coefficients of L^{(x)}(X) at a point of F_{p^2}.
std::vector<Ext2Elem> laguerre_at(const std::vector<FpPoly>& coeffs, const Ext2Elem& x) {
    std::vector<Ext2Elem> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.eval(x));
    return out;
}

const std::vector<FpPoly>& laguerre_coeff_polys(Prime p) {
    static std::mutex mutex;
    static std::map<u32, std::vector<FpPoly>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(p.value());
    if (it == cache.end()) {
        const XPoly l = laguerre_pm1(p);
        std::vector<FpPoly> cs;
        for (u32 k = 0; k < p.value(); ++k) cs.push_back(l.coeff(k).num());
        it = cache.emplace(p.value(), std::move(cs)).first;
    }
    return it->second;
}

// The augmented system [columns for c_0..c_{p-1} | lhs grid], p^2 rows.
std::vector<std::vector<Ext2Elem>> c_system(const Ext2Field& field, const Ext2Elem& x, const Ext2Elem& y) {
    const u32 q = field.prime().value();
    const auto& polys = laguerre_coeff_polys(field.prime());
    const auto lx = laguerre_at(polys, x);
    const auto ly = laguerre_at(polys, y);
    const auto lxy = laguerre_at(polys, x + y);
    const Ext2Elem u = x.frobenius() - x;
    const Ext2Elem v = y.frobenius() - y;

    std::vector<std::vector<Ext2Elem>> m(std::size_t(q) * q, std::vector<Ext2Elem>(q + 1, field.zero()));
    auto row = [q](u32 i, u32 j) { return std::size_t(i) * q + j; };
    for (u32 i = 0; i < q; ++i)
        for (u32 j = 0; j < q; ++j) m[row(i, j)][q] = lx[i] * ly[j];
    // L^{(x+y)}(X+Y) has X^i Y^j coefficient l_{i+j} C(i+j, i)
    for (u32 i = 0; i < q; ++i)
        for (u32 j = 0; i + j < q; ++j) {
            const Ext2Elem mij = lxy[i + j] * field.embed(binom_lucas(i + j, i, field.prime()));
            if (mij.is_zero()) continue;
            m[row(i, j)][0] += mij;
            for (u32 t = 1; t < q; ++t) {
                u32 a = i + t, b = j + q - t;
                Ext2Elem w = mij;
                if (a >= q) { a -= q; w *= u; }
                if (b >= q) { b -= q; w *= v; }
                m[row(a, b)][t] += w;
            }
        }
    return m;
}

bool valid_pair(const Ext2Elem& x, const Ext2Elem& y) {
    const Ext2Elem s = x + y;
    return !(s.in_base_field() && !s.is_zero());
}

}  // namespace

// ---------------------------------------------------------------------------

const std::array<TheoremId, kTheoremCount>& all_theorems() { return kOrder; }

std::string_view to_string(TheoremId id) { return kNames.at(static_cast<std::size_t>(id)); }

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<TheoremId>(i);
    return std::nullopt;
}

std::string_view to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

std::string report_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["prime"] = r.prime;
    j["theorem"] = std::string(to_string(r.theorem));
    j["cases"] = r.cases;
    j["status"] = std::string(to_string(r.status));
    if (r.witness) {
        nlohmann::ordered_json w;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.witness->params) params[k] = v;
        w["case"] = params;
        w["lhs"] = r.witness->lhs;
        w["rhs"] = r.witness->rhs;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    if (r.status == Status::skipped) j["reason"] = r.reason;
    return j.dump();
}

std::string report_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "p=" << r.prime << ' ' << to_string(r.theorem) << ' ' << to_string(r.status) << " cases=" << r.cases << " ("
       << r.elapsed_ms << " ms)";
    if (r.status == Status::skipped) os << " reason: " << r.reason;
    if (r.witness) {
        os << "\n  case:";
        if (r.witness->params.empty()) os << " (single)";
        for (const auto& [k, v] : r.witness->params) os << ' ' << k << '=' << v;
        os << "\n  lhs: " << r.witness->lhs << "\n  rhs: " << r.witness->rhs;
    }
    return os.str();
}

PairBudget PairBudget::default_for(Prime p) {
    if (p.value() <= 5) return {true, 0};
    return {false, 200};
}

// ---------------------------------------------------------------------------

const XPoly& TheoryObjects::laguerre() {
    std::lock_guard lock(mutex_);
    if (!laguerre_) laguerre_ = laguerre_pm1(p_);
    return *laguerre_;
}

const XPoly& TheoryObjects::laguerre_scaled(u32 r) {
    if (r % p_.value() == 1) return laguerre();
    std::lock_guard lock(mutex_);
    auto it = scaled_.find(r);
    if (it == scaled_.end()) it = scaled_.emplace(r, trunclog::laguerre_scaled(p_, r)).first;
    return it->second;
}

const GLog& TheoryObjects::glog() {
    std::lock_guard lock(mutex_);
    if (!glog_) glog_ = trunclog::glog(p_, SelfCheck::off);
    return *glog_;
}

const FpPoly& TheoryObjects::b1(u32 s) {
    if (s < 1 || s + 2 > p_.value()) throw DomainError("b_{1,s} needs 1 <= s <= p-2");
    std::lock_guard lock(mutex_);
    auto it = b1_.find(s);
    if (it == b1_.end()) it = b1_.emplace(s, b_one(p_, s)).first;
    return it->second;
}

FpPoly TheoryObjects::b(u32 r, u32 s) {
    if (r == 1 && s >= 1 && s + 2 <= p_.value()) return b1(s);
    return b_rs(BPolyKey(p_, r, s));
}

const FpPoly& TheoryObjects::lconst() {
    std::lock_guard lock(mutex_);
    if (!lconst_) lconst_ = laguerre_const_product(p_);
    return *lconst_;
}

void TheoryObjects::set_laguerre(XPoly l) {
    if (l.prime() != p_) throw ModulusMismatch("replacement L over a different prime");
    std::lock_guard lock(mutex_);
    laguerre_ = std::move(l);
}

void TheoryObjects::set_glog(GLog g) {
    if (g.prime() != p_) throw ModulusMismatch("replacement G over a different prime");
    std::lock_guard lock(mutex_);
    glog_ = std::move(g);
}

void TheoryObjects::set_b1(u32 s, FpPoly b) {
    if (s < 1 || s + 2 > p_.value()) throw DomainError("b_{1,s} needs 1 <= s <= p-2");
    if (b.modulus() != p_.value()) throw ModulusMismatch("replacement b_{1,s} over a different prime");
    std::lock_guard lock(mutex_);
    b1_.insert_or_assign(s, std::move(b));
}

// ---------------------------------------------------------------------------

VerifyReport verify_theorem(TheoryObjects& objects, TheoremId id, const VerifyOptions& options) {
    const Prime p = objects.prime();
    if (id == TheoremId::CCoefficients)
        return verify_c_coefficients(p, options.pairs.value_or(PairBudget::default_for(p)), options.seed);

    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.theorem = id;
    rep.prime = p.value();
    Cases cases;
    try {
        run_checker(objects, id, cases);
    } catch (const DomainError& e) {
        rep.status = Status::skipped;
        rep.reason = e.what();
        rep.cases = cases.count();
        rep.elapsed_ms = millis_since(t0);
        return rep;
    } catch (const TheoremViolation& e) {
        cases.fail(exception_witness("TheoremViolation", e));
    } catch (const NonSplitError& e) {
        cases.fail(exception_witness("NonSplitError", e));
    } catch (const PoleError& e) {
        cases.fail(exception_witness("PoleError", e));
    } catch (const std::exception& e) {
        cases.fail(exception_witness("exception", e));
    }
    rep.cases = cases.count();
    rep.witness = std::move(cases.first());
    rep.status = rep.witness ? Status::fail : Status::pass;
    rep.elapsed_ms = millis_since(t0);
    return rep;
}

VerifyReport verify_theorem(Prime p, TheoremId id, const VerifyOptions& options) {
    TheoryObjects objects(p);
    return verify_theorem(objects, id, options);
}

CSolution solve_c_coefficients(const Ext2Field& field, const Ext2Elem& x, const Ext2Elem& y) {
    const u32 q = field.prime().value();
    auto m = c_system(field, x, y);
    const Reduced red = row_reduce(m, q);
    CSolution out;
    out.solvable = red.consistent;
    out.unique = red.consistent && red.rank == q;
    if (red.consistent) {
        out.c.assign(q, field.zero());
        for (std::size_t r = 0; r < red.pivots.size(); ++r) out.c[red.pivots[r]] = m[r][q];
    }
    return out;
}

std::optional<std::array<Ext2Elem, 3>> c_closed_forms_p3(const Ext2Field& field, const Ext2Elem& x, const Ext2Elem& y) {
    if (field.prime().value() != 3) throw DomainError("closed forms for c_i are only known at p = 3");
    const Ext2Elem uno = field.one();
    const Ext2Elem s = x + y;
    const Ext2Elem d = uno - s * s;
    if (d.is_zero()) return std::nullopt;
    const Ext2Elem di = d.inv();
    return std::array<Ext2Elem, 3>{(uno - x * x) * (uno - y * y) * di, (x - uno) * di, (y - uno) * di};
}

VerifyReport verify_c_coefficients(Prime p, PairBudget budget, u64 seed) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.theorem = TheoremId::CCoefficients;
    rep.prime = p.value();
    const Ext2Field field(p);
    const u32 q = p.value();
    Cases cases;

    auto visit = [&](const Ext2Elem& x, const Ext2Elem& y) {
        auto params = [&] { return Params{{"alpha", to_string(x)}, {"beta", to_string(y)}}; };
        const CSolution sol = solve_c_coefficients(field, x, y);
        if (!sol.solvable) {
            cases.fail(Witness{params(), "inconsistent linear system", "some c_0..c_{p-1}"});
            return;
        }
        if (q == 3) {
            const auto closed = c_closed_forms_p3(field, x, y);
            if (closed) {
                // the closed forms must satisfy the same system
                auto m = c_system(field, x, y);
                bool ok = true;
                for (const auto& row : m) {
                    Ext2Elem acc = row[q];
                    for (u32 t = 0; t < q; ++t) acc -= row[t] * (*closed)[t];
                    if (!acc.is_zero()) { ok = false; break; }
                }
                if (ok && sol.unique)
                    for (u32 t = 0; t < q; ++t) ok = ok && sol.c[t] == (*closed)[t];
                if (!ok) {
                    std::string solved, expect;
                    for (u32 t = 0; t < q; ++t) {
                        solved += (t ? ", " : "") + to_string(sol.c[t]);
                        expect += (t ? ", " : "") + to_string((*closed)[t]);
                    }
                    cases.fail(Witness{params(), "solved c = (" + solved + ")", "closed form c = (" + expect + ")"});
                    return;
                }
            }
        }
        cases.check(true, {});
    };

    try {
        if (budget.exhaustive) {
            const auto elems = field.elements();
            for (const auto& x : elems)
                for (const auto& y : elems)
                    if (valid_pair(x, y)) visit(x, y);
        } else {
            if (budget.count == 0) {
                rep.status = Status::skipped;
                rep.reason = "pair budget is zero";
                rep.elapsed_ms = millis_since(t0);
                return rep;
            }
            std::mt19937_64 rng(seed);
            const u64 order = field.order();
            u64 done = 0;
            while (done < budget.count) {
                const Ext2Elem x = field.element(rng() % order);
                const Ext2Elem y = field.element(rng() % order);
                if (!valid_pair(x, y)) continue;
                visit(x, y);
                ++done;
            }
        }
    } catch (const std::exception& e) {
        cases.fail(exception_witness("exception", e));
    }
    rep.cases = cases.count();
    rep.witness = std::move(cases.first());
    rep.status = rep.witness ? Status::fail : Status::pass;
    rep.elapsed_ms = millis_since(t0);
    return rep;
}

std::vector<VerifyReport> verify_all(TheoryObjects& objects, const VerifyOptions& options) {
    std::vector<VerifyReport> out;
    out.reserve(kTheoremCount);
    if (!options.parallel) {
        for (TheoremId id : kOrder) out.push_back(verify_theorem(objects, id, options));
        return out;
    }
    std::vector<std::future<VerifyReport>> jobs;
    jobs.reserve(kTheoremCount);
    for (TheoremId id : kOrder)
        jobs.push_back(std::async(std::launch::async, [&objects, id, &options] { return verify_theorem(objects, id, options); }));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::vector<VerifyReport> verify_all(Prime p, const VerifyOptions& options) {
    TheoryObjects objects(p);
    return verify_all(objects, options);
}

}  // namespace trunclog

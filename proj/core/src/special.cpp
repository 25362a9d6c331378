#include <trunclog/special.hpp>

namespace trunclog {

namespace {
FpElem one(u32 p) { return FpElem::from_residue(p, 1); }
}  // namespace

XPoly laguerre_scaled(Prime p, u32 r) {
    const u32 q = p.value();
    if (r % q == 0) throw DomainError("laguerre_scaled needs r != 0 mod p");
    const FpElem rr(p, r);
    const FpPoly base = FpPoly::linear(rr, -one(q));  // r a - 1
    std::vector<FpPoly> coeffs;
    coeffs.reserve(q);
    FpElem rk = one(q);
    for (u32 k = 0; k < q; ++k) {
        coeffs.push_back(-pochhammer(base, q - 1 - k) * rk);
        rk *= rr;
    }
    return XPoly::from_polys(p, coeffs, frobenius_constant(p));
}

XPoly laguerre_pm1(Prime p) { return laguerre_scaled(p, 1); }

FpPoly truncated_exp(Prime p) {
    std::vector<u32> c(p.value());
    for (u32 k = 0; k < p.value(); ++k) c[k] = factorial(k, p).inv().value();
    return FpPoly(p, std::move(c), 'X');
}

FpPoly finite_polylog(Prime p, unsigned d) {
    std::vector<u32> c(p.value(), 0);
    for (u32 k = 1; k < p.value(); ++k) c[k] = FpElem(p, k).inv().pow(d).value();
    return FpPoly(p, std::move(c), 'X');
}

XPoly trunc_binomial(const RatFn& f, const RatFn& b) {
    const Prime p = f.prime();
    std::vector<RatFn> coeffs;
    coeffs.reserve(p.value());
    // C(f, k) built incrementally: C(f, k) = C(f, k-1) (f - k + 1) / k
    RatFn binom = RatFn::constant(one(p.value()));
    RatFn bk = RatFn::constant(one(p.value()));
    for (u32 k = 0; k < p.value(); ++k) {
        if (k > 0) {
            binom *= (f - RatFn::constant(FpElem(p, k - 1))) * RatFn::constant(FpElem(p, k).inv());
            bk *= b;
        }
        coeffs.push_back(binom * bk);
    }
    return XPoly::from_coeffs(p, coeffs);
}

XPoly trunc_binomial(const RatFn& f, FpElem b) { return trunc_binomial(f, RatFn::constant(b)); }

FpPoly laguerre_const_substitution(const XPoly& laguerre) {
    const Prime p = laguerre.prime();
    const u32 q = p.value();
    const FpPoly ap = FpPoly::monomial(one(q), q);
    const FpPoly arg = ap - FpPoly::variable(p);
    // sum_k coeff_k(a^p) * (a^p - a)^k, Horner in the argument
    RatFn acc(p);
    for (int k = laguerre.degree(); k >= 0; --k) {
        acc *= RatFn(arg);
        acc += laguerre.coeff(static_cast<std::size_t>(k)).compose_arg(ap);
    }
    if (!acc.is_polynomial()) throw TheoremViolation("L^{(a^p)}(a^p - a) is not a polynomial");
    return acc.num();
}

FpPoly laguerre_const_product(Prime p) {
    const u32 q = p.value();
    FpPoly acc = FpPoly::constant(one(q));
    for (u32 k = 1; k < q; ++k) acc *= FpPoly::linear(FpElem(p, k).inv(), one(q)).pow(k);
    return acc;
}

FpPoly laguerre_const(Prime p) {
    FpPoly by_product = laguerre_const_product(p);
    const FpPoly by_substitution = laguerre_const_substitution(laguerre_pm1(p));
    if (!(by_product == by_substitution))
        throw TheoremViolation("L^{(a^p)}(a^p - a) routes disagree at p = " + std::to_string(p.value()) + ": " +
                               by_substitution.to_string() + " vs " + by_product.to_string());
    return by_product;
}

}  // namespace trunclog

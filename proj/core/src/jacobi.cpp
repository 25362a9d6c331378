#include <trunclog/jacobi.hpp>

#include <trunclog/bpoly.hpp>

namespace trunclog {

namespace {
FpElem one(u32 p) { return FpElem::from_residue(p, 1); }
FpPoly constant(FpElem c) { return FpPoly::constant(c); }
}  // namespace

FpPoly jacobi_pm1(const JacobiSpec& spec) {
    const Prime p = spec.prime();
    const u32 q = p.value();
    if (spec.b_param.modulus() != q || spec.x.modulus() != q) throw ModulusMismatch("Jacobi data over mixed primes");
    const FpPoly a1 = spec.a_param - constant(one(q));
    const FpPoly b1 = spec.b_param - constant(one(q));
    const FpElem xp = spec.x + one(q), xm = spec.x - one(q);
    FpPoly acc(p);
    for (u32 k = 0; k < q; ++k) {
        const FpElem w = xp.pow(q - 1 - k) * xm.pow(k);
        if (w.is_zero()) continue;
        acc += binom_of_poly(a1, q - 1 - k) * binom_of_poly(b1, k) * w;
    }
    return acc;
}

FpPoly p_times_jacobi_p(const JacobiSpec& spec) {
    const u32 q = spec.prime().value();
    const FpElem half = FpElem::from_residue(q, 2).inv();
    const FpElem xp = (spec.x + one(q)).pow(q), xm = (spec.x - one(q)).pow(q);
    return (spec.a_param - spec.a_param.pow(q)) * (half * xp) + (spec.b_param - spec.b_param.pow(q)) * (half * xm);
}

FpPoly contiguous_residual(const JacobiSpec& spec) {
    const u32 q = spec.prime().value();
    const FpElem half = FpElem::from_residue(q, 2).inv();
    const JacobiSpec shifted{spec.a_param, spec.b_param + constant(one(q)), spec.x};
    const FpPoly lhs = (spec.a_param + spec.b_param) * jacobi_pm1(shifted) * ((spec.x + one(q)) * half);
    return lhs - spec.b_param * jacobi_pm1(spec) - p_times_jacobi_p(spec);
}

JacobiSpec jacobi_spec_for_b(Prime p, u32 r, u32 s) {
    const u32 q = p.value();
    if ((r + s) % q == 0) throw DomainError("Jacobi specialization needs r + s != 0 mod p");
    const FpElem rr(p, r), ss(p, s);
    return JacobiSpec{FpPoly::linear(rr, FpElem(p, 0)), FpPoly::linear(ss, FpElem(p, 0)), (ss - rr) / (ss + rr)};
}

bool jacobi_reflection_check(Prime p, u32 s) {
    const u32 q = p.value();
    if (s < 1 || s > q - 2) throw DomainError("reflection check needs s != 0, -1 mod p");
    const FpElem ss(p, s), zero(p, 0);
    const FpPoly a = FpPoly::variable(p);
    const FpElem m = -(ss + one(q));  // -s-1
    const FpElem x1 = (ss - one(q)) / (ss + one(q));
    const FpElem x2 = (ss + FpElem(p, 2)) / ss;
    const FpPoly first = jacobi_pm1({a, FpPoly::linear(ss, zero), x1});
    const FpPoly middle = jacobi_pm1({a, FpPoly::linear(m, one(q)), x2});
    const FpPoly last = jacobi_pm1({a, FpPoly::linear(m, zero), x2});
    return first == middle && middle == last && first == b_one(p, s) && last == b_one(p, q - 1 - s);
}

}  // namespace trunclog

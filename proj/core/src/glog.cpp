#include <trunclog/glog.hpp>

#include <trunclog/bpoly.hpp>
#include <trunclog/special.hpp>

#include <sstream>

namespace trunclog {

namespace {

FpElem one(u32 p) { return FpElem::from_residue(p, 1); }

FpPoly one_minus_a_pm1(Prime p) {
    return FpPoly::constant(one(p.value())) - FpPoly::monomial(one(p.value()), p.value() - 1);
}

// -(1/k) / prod_{s<k} b_{1,s}(a)
RatFn closed_form_coeff(Prime p, u32 k) {
    FpPoly den = FpPoly::constant(one(p.value()));
    for (u32 s = 1; s < k; ++s) den *= b_one(p, s);
    return RatFn(FpPoly::constant(-FpElem(p, k).inv()), den);
}

}  // namespace

GLog::GLog(Prime p, std::vector<RatFn> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != p.value() - 1)
        throw DomainError("G needs exactly p-1 coefficients (X^1 .. X^{p-1})");
    for (const auto& c : coeffs_)
        if (c.modulus() != p.value()) throw ModulusMismatch("G coefficient over a different prime");
}

const RatFn& GLog::coeff(std::size_t k) const {
    if (k < 1 || k >= p_.value()) throw DomainError("G coefficient index must lie in [1, p-1]");
    return coeffs_[k - 1];
}

XPoly GLog::as_xpoly(std::optional<RatFn> modulus) const {
    std::vector<RatFn> cs;
    cs.reserve(p_.value());
    cs.emplace_back(p_);
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return XPoly::from_coeffs(p_, cs, std::move(modulus));
}

GLog GLog::scale_param(FpElem t) const {
    std::vector<RatFn> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c.scale_arg(t));
    return GLog(p_, std::move(cs));
}

GLog GLog::with_coeff(std::size_t k, RatFn c) const {
    if (k < 1 || k >= p_.value()) throw DomainError("G coefficient index must lie in [1, p-1]");
    std::vector<RatFn> cs = coeffs_;
    cs[k - 1] = std::move(c);
    return GLog(p_, std::move(cs));
}

XPoly glog_left_composite(const GLog& g, const XPoly& laguerre) {
    return compose_mod(g.as_xpoly(), laguerre, frobenius_constant(g.prime()));
}

GLog glog(Prime p, SelfCheck check) {
    std::vector<RatFn> cs;
    cs.reserve(p.value() - 1);
    for (u32 k = 1; k < p.value(); ++k) cs.push_back(closed_form_coeff(p, k));
    GLog g(p, std::move(cs));
    if (check == SelfCheck::on) {
        const XPoly composite = glog_left_composite(g, laguerre_pm1(p));
        const XPoly x = XPoly::monomial(p, RatFn::constant(one(p.value())), 1, frobenius_constant(p));
        if (!(composite == x))
            throw TheoremViolation("G(L(X)) != X at p = " + std::to_string(p.value()) + ": got " + composite.to_string());
    }
    return g;
}

NormalCoeff glog_coeff_normal(Prime p, unsigned k) {
    if (k < 1 || k >= p.value()) throw DomainError("G coefficient index must lie in [1, p-1]");
    const FpElem minus_one = -one(p.value());
    FpPoly num = FpPoly::constant(-FpElem(p, k).inv());
    for (u32 s = 1; s < k; ++s) num *= b_one(p, s).scale_arg(minus_one);
    NormalCoeff out{num, k - 1};
    const RatFn as_fraction(num, one_minus_a_pm1(p).pow(k - 1));
    if (!(as_fraction == closed_form_coeff(p, k)))
        throw TheoremViolation("normal form of G coefficient " + std::to_string(k) + " disagrees with the closed form");
    return out;
}

FpPoly glog_specialize(const GLog& g, FpElem x) {
    const u32 q = g.prime().value();
    std::vector<u32> out(q, 0);
    for (u32 k = 1; k < q; ++k) {
        const RatFn& c = g.coeff(k);
        const FpElem d = c.den().eval(x);
        if (d.is_zero())
            throw PoleError(x.value(), "G coefficient of X^" + std::to_string(k) + " has a pole at a = " +
                                           std::to_string(x.value()));
        out[k] = (c.num().eval(x) / d).value();
    }
    return FpPoly(g.prime(), std::move(out), 'X');
}

XPoly reciprocal_rhs(const GLog& g) {
    const Prime p = g.prime();
    const u32 q = p.value();
    const GLog neg = g.scale_param(-one(q));
    const RatFn z(one_minus_a_pm1(p));
    std::vector<RatFn> cs(q, RatFn(p));
    RatFn zk = RatFn::constant(one(q));
    for (u32 k = 1; k < q; ++k) {
        zk *= z;
        // -X^p * g_k(-a) * z^k * X^{-k}
        cs[q - k] = -(neg.coeff(k) * zk);
    }
    return XPoly::from_coeffs(p, cs);
}

XPoly reciprocal_rhs(Prime p) { return reciprocal_rhs(glog(p, SelfCheck::off)); }

std::vector<PoleRow> glog_pole_table(const GLog& g) {
    const u32 q = g.prime().value();
    std::vector<PoleRow> rows;
    for (u32 k = 1; k < q; ++k)
        for (u32 a = 1; a < q; ++a)
            rows.push_back({q, k, a, g.coeff(k).den().eval(FpElem::from_residue(q, a)).is_zero()});
    return rows;
}

std::string glog_pole_csv(const std::vector<PoleRow>& rows, bool header) {
    std::ostringstream os;
    if (header) os << "p,k,a,pole\n";
    for (const auto& r : rows) os << r.p << ',' << r.k << ',' << r.a << ',' << (r.pole ? 1 : 0) << '\n';
    return os.str();
}

}  // namespace trunclog

#include <trunclog/quotient.hpp>

#include <sstream>

namespace trunclog {

namespace {

FpPoly one_poly(u32 p) { return FpPoly::constant(FpElem::from_residue(p, 1)); }

bool same_modulus(const std::optional<RatFn>& a, const std::optional<RatFn>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || *a == *b;
}

std::string modulus_name(const std::optional<RatFn>& m) {
    return m ? "X^p - (" + m->to_string() + ")" : "<none>";
}

}  // namespace

XPoly::XPoly(Prime p, std::optional<RatFn> modulus)
    : p_(p.value()), num_(p.value(), FpPoly(p)), den_(one_poly(p.value())), mod_(std::move(modulus)) {
    if (mod_ && mod_->modulus() != p_) throw ModulusMismatch("quotient modulus over a different prime");
}

XPoly::XPoly(u32 p, std::vector<FpPoly> num, FpPoly den, std::optional<RatFn> mod)
    : p_(p), num_(std::move(num)), den_(std::move(den)), mod_(std::move(mod)) {
    normalize();
}

void XPoly::normalize() {
    if (den_.is_zero()) throw DomainError("XPoly with zero denominator");
    bool all_zero = true;
    for (const auto& n : num_) all_zero = all_zero && n.is_zero();
    if (all_zero) {
        den_ = one_poly(p_);
        return;
    }
    if (den_.degree() > 0) {
        FpPoly g = den_;
        for (const auto& n : num_) {
            if (n.is_zero()) continue;
            g = gcd(g, n);
            if (g.is_one()) break;
        }
        if (!g.is_one()) {
            den_ = div_exact(den_, g);
            for (auto& n : num_)
                if (!n.is_zero()) n = div_exact(n, g);
        }
    }
    const FpElem lc = den_.leading();
    if (!lc.is_one()) {
        const FpElem li = lc.inv();
        den_ *= li;
        for (auto& n : num_) n *= li;
    }
}

void XPoly::check_compatible(const XPoly& o) const {
    if (o.p_ != p_) throw ModulusMismatch("XPoly values over different primes");
    if (!same_modulus(mod_, o.mod_))
        throw ModulusMismatch("XPoly moduli differ: " + modulus_name(mod_) + " vs " + modulus_name(o.mod_));
}

XPoly XPoly::from_coeffs(Prime p, std::span<const RatFn> coeffs, std::optional<RatFn> modulus) {
    if (coeffs.size() > p.value()) throw DomainError("XPoly needs degree < p; use reduce_mod for longer inputs");
    // common denominator = lcm of the coefficient denominators
    FpPoly den = one_poly(p.value());
    for (const auto& c : coeffs) {
        if (c.modulus() != p.value()) throw ModulusMismatch("coefficient over a different prime");
        if (!c.is_zero() && !c.den().is_one()) den = den * div_exact(c.den(), gcd(den, c.den()));
    }
    std::vector<FpPoly> num(p.value(), FpPoly(p));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) num[k] = coeffs[k].num() * div_exact(den, coeffs[k].den());
    return XPoly(p.value(), std::move(num), std::move(den), std::move(modulus));
}

XPoly XPoly::from_polys(Prime p, std::span<const FpPoly> coeffs, std::optional<RatFn> modulus) {
    if (coeffs.size() > p.value()) throw DomainError("XPoly needs degree < p");
    std::vector<FpPoly> num(p.value(), FpPoly(p));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].modulus() != p.value()) throw ModulusMismatch("coefficient over a different prime");
        num[k] = coeffs[k];
    }
    return XPoly(p.value(), std::move(num), one_poly(p.value()), std::move(modulus));
}

XPoly XPoly::monomial(Prime p, RatFn c, std::size_t k, std::optional<RatFn> modulus) {
    if (k >= p.value()) throw DomainError("monomial degree must be < p");
    if (c.modulus() != p.value()) throw ModulusMismatch("coefficient over a different prime");
    std::vector<FpPoly> num(p.value(), FpPoly(p));
    num[k] = c.num();
    return XPoly(p.value(), std::move(num), c.den(), std::move(modulus));
}

int XPoly::degree() const noexcept {
    for (std::size_t k = num_.size(); k-- > 0;)
        if (!num_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

RatFn XPoly::coeff(std::size_t k) const {
    if (k >= num_.size()) return RatFn(Prime(p_));
    return RatFn(num_[k], den_);
}

std::vector<RatFn> XPoly::coeffs() const {
    std::vector<RatFn> out;
    out.reserve(num_.size());
    for (std::size_t k = 0; k < num_.size(); ++k) out.push_back(coeff(k));
    return out;
}

XPoly XPoly::with_modulus(std::optional<RatFn> c) const {
    if (c && c->modulus() != p_) throw ModulusMismatch("quotient modulus over a different prime");
    XPoly r = *this;
    r.mod_ = std::move(c);
    return r;
}

XPoly XPoly::with_coeff(std::size_t k, const RatFn& c) const {
    if (k >= num_.size()) throw DomainError("coefficient index must be < p");
    auto cs = coeffs();
    cs[k] = c;
    return from_coeffs(Prime(p_), cs, mod_);
}

XPoly XPoly::derivative() const {
    std::vector<FpPoly> num(num_.size(), FpPoly(Prime(p_)));
    for (std::size_t k = 1; k < num_.size(); ++k) num[k - 1] = num_[k] * FpElem::from_residue(p_, static_cast<u32>(k % p_));
    return XPoly(p_, std::move(num), den_, mod_);
}

XPoly XPoly::substitute_param(const FpPoly& g) const {
    std::vector<FpPoly> num;
    num.reserve(num_.size());
    for (const auto& n : num_) num.push_back(compose(n, g));
    return XPoly(p_, std::move(num), compose(den_, g), std::nullopt);
}

FpPoly XPoly::specialize(FpElem x, char var) const {
    std::vector<u32> out(num_.size(), 0);
    const bool den_ok = !den_.eval(x).is_zero();
    const FpElem dinv = den_ok ? den_.eval(x).inv() : FpElem::from_residue(p_, 0);
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k].is_zero()) continue;
        FpElem v = den_ok ? num_[k].eval(x) * dinv : coeff(k).eval(x);
        out[k] = v.value();
    }
    return FpPoly(Prime(p_), std::move(out), var);
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& n : r.num_) n = -n;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    check_compatible(o);
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += o.num_[k];
    } else {
        const FpPoly g = gcd(den_, o.den_);
        const FpPoly sa = div_exact(o.den_, g), sb = div_exact(den_, g);
        for (std::size_t k = 0; k < num_.size(); ++k) {
            FpPoly t = sa.is_one() ? num_[k] : num_[k] * sa;
            if (!o.num_[k].is_zero()) t += sb.is_one() ? o.num_[k] : o.num_[k] * sb;
            num_[k] = std::move(t);
        }
        den_ = den_ * sa;
    }
    normalize();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) { return *this += -o; }

XPoly& XPoly::operator*=(const RatFn& c) {
    if (c.modulus() != p_) throw ModulusMismatch("scalar over a different prime");
    for (auto& n : num_)
        if (!n.is_zero()) n = n * c.num();
    den_ = den_ * c.den();
    normalize();
    return *this;
}

bool operator==(const XPoly& a, const XPoly& b) {
    return a.p_ == b.p_ && a.den_ == b.den_ && a.num_ == b.num_ && same_modulus(a.mod_, b.mod_);
}

std::string XPoly::to_string(char var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k].is_zero()) continue;
        const RatFn c = coeff(k);
        std::string mono;
        if (k == 1) mono = std::string(1, var);
        else if (k > 1) mono = std::string(1, var) + "^" + std::to_string(k);

        bool negative = false;
        std::string body;
        if (c.num().is_constant()) {
            i64 v = c.num().coeff(0).signed_value();
            negative = v < 0;
            const i64 mag = negative ? -v : v;
            if (mono.empty()) body = std::to_string(mag);
            else body = mag == 1 ? mono : std::to_string(mag) + "*" + mono;
        } else {
            body = "(" + c.num().to_string() + ")";
            if (!mono.empty()) body += "*" + mono;
        }
        if (!c.den().is_one()) {
            const std::string d = c.den().to_string();
            body += d.find(' ') == std::string::npos ? "/" + d : "/(" + d + ")";
        }
        if (first) os << (negative ? "-" : "") << body;
        else os << (negative ? " - " : " + ") << body;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

// ---------------------------------------------------------------------------

XPoly XPoly::fold(u32 p, std::vector<FpPoly> terms, FpPoly den, const RatFn& c) {
    const Prime P(p);
    std::vector<FpPoly> out(p, FpPoly(P));
    if (terms.empty()) return XPoly(p, std::move(out), std::move(den), c);
    const std::size_t qmax = (terms.size() - 1) / p;
    if (c.is_zero() || qmax == 0) {
        for (std::size_t t = 0; t < std::min<std::size_t>(p, terms.size()); ++t) out[t] = std::move(terms[t]);
        return XPoly(p, std::move(out), std::move(den), c);
    }
    // X^{qp + r} -> (cn/cd)^q X^r, over the common denominator den * cd^qmax
    std::vector<FpPoly> cn_pow{one_poly(p)}, cd_pow{one_poly(p)};
    for (std::size_t q = 1; q <= qmax; ++q) {
        cn_pow.push_back(cn_pow.back() * c.num());
        cd_pow.push_back(cd_pow.back() * c.den());
    }
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (terms[t].is_zero()) continue;
        const std::size_t q = t / p, r = t % p;
        FpPoly term = std::move(terms[t]);
        if (q > 0) term = term * cn_pow[q];
        if (!cd_pow[qmax - q].is_one()) term = term * cd_pow[qmax - q];
        out[r] += term;
    }
    if (!cd_pow[qmax].is_one()) den = den * cd_pow[qmax];
    return XPoly(p, std::move(out), std::move(den), c);
}

XPoly reduce_mod(std::span<const RatFn> f, const RatFn& c) {
    const u32 p = c.modulus();
    FpPoly den = one_poly(p);
    for (const auto& x : f) {
        if (x.modulus() != p) throw ModulusMismatch("coefficient over a different prime");
        if (!x.is_zero() && !x.den().is_one()) den = den * div_exact(x.den(), gcd(den, x.den()));
    }
    std::vector<FpPoly> terms;
    terms.reserve(f.size());
    for (const auto& x : f) terms.push_back(x.is_zero() ? FpPoly(Prime(p)) : x.num() * div_exact(den, x.den()));
    return XPoly::fold(p, std::move(terms), std::move(den), c);
}

XPoly mulmod(const XPoly& a, const XPoly& b) {
    a.check_compatible(b);
    if (!a.mod_) throw ModulusMismatch("mulmod needs a modulus tag on its operands");
    const u32 p = a.p_;
    std::vector<FpPoly> terms(2 * p - 1, FpPoly(Prime(p)));
    for (std::size_t i = 0; i < p; ++i) {
        if (a.num_[i].is_zero()) continue;
        for (std::size_t j = 0; j < p; ++j) {
            if (b.num_[j].is_zero()) continue;
            terms[i + j] += a.num_[i] * b.num_[j];
        }
    }
    FpPoly den = a.den_.is_one() ? b.den_ : (b.den_.is_one() ? a.den_ : a.den_ * b.den_);
    return XPoly::fold(p, std::move(terms), std::move(den), *a.mod_);
}

XPoly powmod(const XPoly& a, unsigned j) {
    if (!a.modulus()) throw ModulusMismatch("powmod needs a modulus tag");
    XPoly r = XPoly::constant(a.prime(), RatFn::constant(FpElem::from_residue(a.prime().value(), 1)), a.modulus());
    XPoly b = a;
    while (j) {
        if (j & 1) r = mulmod(r, b);
        j >>= 1;
        if (j) b = mulmod(b, b);
    }
    return r;
}

XPoly compose_mod(const XPoly& outer, const XPoly& inner, const RatFn& c) {
    if (outer.p_ != inner.p_ || c.modulus() != outer.p_) throw ModulusMismatch("compose_mod over different primes");
    const Prime P(outer.p_);
    const XPoly in = inner.with_modulus(c);
    // Horner on the outer numerators, dividing by the outer denominator once at the end.
    XPoly acc(P, c);
    const int d = outer.degree();
    for (int k = d; k >= 0; --k) {
        if (k != d) acc = mulmod(acc, in);
        const FpPoly& nk = outer.num_[static_cast<std::size_t>(k)];
        if (!nk.is_zero()) acc += XPoly::constant(P, RatFn(nk), c);
    }
    if (!outer.den_.is_one()) acc *= RatFn(one_poly(outer.p_), outer.den_);
    return acc;
}

RatFn frobenius_constant(Prime p) {
    return RatFn(FpPoly::monomial(FpElem(p, 1), p.value()) - FpPoly::variable(p));
}

}  // namespace trunclog

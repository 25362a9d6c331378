#include <trunclog/polys.hpp>

#include <algorithm>
#include <sstream>

namespace trunclog {

namespace detail {
namespace {

constexpr std::size_t kKaratsubaCutoff = 40;

void schoolbook(std::span<const u32> a, std::span<const u32> b, u32 p, std::vector<u32>& out) {
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const u64 ai = a[i];
        if (ai == 0) continue;
        u64* row = acc.data() + i;
        for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
    }
    out.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<u32>(acc[k] % p);
}

// Both inputs have the same length n; writes 2n-1 coefficients.
void karatsuba(std::span<const u32> a, std::span<const u32> b, u32 p, std::vector<u32>& out) {
    const std::size_t n = a.size();
    if (n <= kKaratsubaCutoff) {
        schoolbook(a, b, p, out);
        return;
    }
    const std::size_t h = n / 2, m = n - h;
    std::vector<u32> z0, z1, z2;
    karatsuba(a.first(h), b.first(h), p, z0);
    karatsuba(a.subspan(h), b.subspan(h), p, z2);

    std::vector<u32> as(a.begin() + h, a.end()), bs(b.begin() + h, b.end());
    for (std::size_t i = 0; i < h; ++i) {
        as[i] = modp::add(as[i], a[i], p);
        bs[i] = modp::add(bs[i], b[i], p);
    }
    karatsuba(as, bs, p, z1);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = modp::sub(z1[i], z0[i], p);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = modp::sub(z1[i], z2[i], p);

    out.assign(2 * n - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = modp::add(out[i + 2 * h], z2[i], p);
    for (std::size_t i = 0; i < 2 * m - 1; ++i) out[i + h] = modp::add(out[i + h], z1[i], p);
}

}  // namespace

std::vector<u32> mul_residues(std::span<const u32> a, std::span<const u32> b, u32 p) {
    if (a.empty() || b.empty()) return {};
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<u32> out;
    if (b.size() <= kKaratsubaCutoff) {
        schoolbook(a, b, p, out);
        return out;
    }
    // Split the longer factor into blocks of the shorter length.
    const std::size_t n = b.size();
    out.assign(a.size() + b.size() - 1, 0);
    std::vector<u32> block(n), part;
    for (std::size_t off = 0; off < a.size(); off += n) {
        const std::size_t len = std::min(n, a.size() - off);
        std::fill(block.begin(), block.end(), 0);
        std::copy_n(a.begin() + off, len, block.begin());
        karatsuba(block, b, p, part);
        const std::size_t used = std::min(part.size(), out.size() - off);
        for (std::size_t i = 0; i < used; ++i) out[off + i] = modp::add(out[off + i], part[i], p);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(Prime p, std::vector<u32> residues, char var) : p_(p.value()), c_(std::move(residues)), var_(var) {
    for (auto& x : c_) x %= p_;
    trim();
}

FpPoly::FpPoly(Prime p, std::initializer_list<i64> coeffs, char var) : p_(p.value()), var_(var) {
    c_.reserve(coeffs.size());
    for (i64 c : coeffs) c_.push_back(modp::reduce(c, p_));
    trim();
}

FpPoly FpPoly::constant(FpElem c, char var) {
    FpPoly r(Prime(c.modulus()), var);
    if (!c.is_zero()) r.c_.push_back(c.value());
    return r;
}

FpPoly FpPoly::monomial(FpElem c, std::size_t degree, char var) {
    FpPoly r(Prime(c.modulus()), var);
    if (!c.is_zero()) {
        r.c_.assign(degree + 1, 0);
        r.c_[degree] = c.value();
    }
    return r;
}

FpPoly FpPoly::linear(FpElem c1, FpElem c0, char var) {
    FpPoly r(Prime(c0.modulus()), var);
    if (c1.modulus() != c0.modulus()) throw ModulusMismatch("linear polynomial from mixed moduli");
    r.c_ = {c0.value(), c1.value()};
    r.trim();
    return r;
}

FpPoly FpPoly::variable(Prime p, char var) { return FpPoly(p, {0, 1}, var); }

void FpPoly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_same(const FpPoly& o) const {
    if (o.p_ != p_)
        throw ModulusMismatch("polynomials over F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
}

FpElem FpPoly::coeff(std::size_t k) const noexcept {
    return FpElem::from_residue(p_, k < c_.size() ? c_[k] : 0);
}

FpElem FpPoly::leading() const noexcept { return FpElem::from_residue(p_, c_.empty() ? 0 : c_.back()); }

FpPoly FpPoly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    return *this * leading().inv();
}

FpElem FpPoly::eval(FpElem x) const {
    if (x.modulus() != p_) throw ModulusMismatch("evaluation point from a different field");
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x.value() + *it) % p_;
    return FpElem::from_residue(p_, static_cast<u32>(acc));
}

Ext2Elem FpPoly::eval(const Ext2Elem& x) const {
    if (x.modulus() != p_) throw ModulusMismatch("evaluation point from a different field");
    Ext2Elem acc(p_, x.nonresidue(), 0, 0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += Ext2Elem(p_, x.nonresidue(), *it, 0);
    }
    return acc;
}

FpPoly FpPoly::derivative() const {
    FpPoly r(Prime(p_), var_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = modp::mul(c_[k], static_cast<u32>(k % p_), p_);
    r.trim();
    return r;
}

FpPoly FpPoly::scale_arg(FpElem t) const {
    if (t.modulus() != p_) throw ModulusMismatch("scaling by an element of a different field");
    FpPoly r = *this;
    u32 tk = 1;
    for (auto& c : r.c_) {
        c = modp::mul(c, tk, p_);
        tk = modp::mul(tk, t.value(), p_);
    }
    r.trim();
    return r;
}

FpPoly FpPoly::inflate(unsigned k) const {
    if (k == 0) throw DomainError("inflate by zero");
    FpPoly r(Prime(p_), var_);
    if (c_.empty()) return r;
    r.c_.assign((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

FpPoly FpPoly::pow(u64 e) const {
    FpPoly r = constant(FpElem::from_residue(p_, 1), var_), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = modp::neg(c, p_);
    return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = modp::add(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = modp::sub(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    a.check_same(b);
    FpPoly r(Prime(a.p_), a.var_);
    r.c_ = detail::mul_residues(a.c_, b.c_, a.p_);
    r.trim();
    return r;
}

FpPoly& FpPoly::operator*=(const FpPoly& o) { return *this = *this * o; }

FpPoly& FpPoly::operator*=(FpElem c) {
    if (c.modulus() != p_) throw ModulusMismatch("scalar from a different field");
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x = modp::mul(x, c.value(), p_);
    return *this;
}

std::string FpPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const u32 c = c_[k];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        os << var_;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.modulus() != b.modulus()) throw ModulusMismatch("divrem over different primes");
    const u32 p = a.modulus();
    const Prime P(p);
    if (a.degree() < b.degree()) return {FpPoly(P, a.var()), a};

    std::vector<u32> r(a.residues().begin(), a.residues().end());
    const auto bc = b.residues();
    const std::size_t db = bc.size() - 1;
    const u32 lead_inv = modp::inv(bc.back(), p);
    std::vector<u32> q(r.size() - db, 0);
    for (std::size_t k = r.size(); k-- > db;) {
        const u32 c = modp::mul(r[k], lead_inv, p);
        q[k - db] = c;
        if (c == 0) continue;
        const u32 nc = p - c;
        for (std::size_t j = 0; j <= db; ++j)
            r[k - db + j] = static_cast<u32>((r[k - db + j] + u64(nc) * bc[j]) % p);
    }
    r.resize(db);
    return {FpPoly(P, std::move(q), a.var()), FpPoly(P, std::move(r), a.var())};
}

FpPoly div_exact(const FpPoly& a, const FpPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw TheoremViolation("inexact division: (" + a.to_string() + ") by (" + b.to_string() + ")");
    return q;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch("gcd over different primes");
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly compose(const FpPoly& outer, const FpPoly& inner) {
    FpPoly acc(Prime(outer.modulus()), inner.var());
    for (int k = outer.degree(); k >= 0; --k) {
        acc *= inner;
        acc += FpPoly::constant(outer.coeff(static_cast<std::size_t>(k)), inner.var());
    }
    return acc;
}

FpPoly pochhammer(const FpPoly& f, unsigned m) {
    const u32 p = f.modulus();
    FpPoly r = FpPoly::constant(FpElem::from_residue(p, 1), f.var());
    for (unsigned i = 0; i < m; ++i) r *= f - FpPoly::constant(FpElem::from_residue(p, i % p), f.var());
    return r;
}

FpPoly binom_of_poly(const FpPoly& f, unsigned k) {
    const Prime p(f.modulus());
    if (k >= p.value()) throw DomainError("binomial C(f, k) needs k < p, got k = " + std::to_string(k));
    return pochhammer(f, k) * factorial(k, p).inv();
}

Split roots_and_split(const FpPoly& f) {
    if (f.is_zero()) throw DomainError("roots of the zero polynomial");
    const u32 p = f.modulus();
    Split out{f.leading(), {}};
    FpPoly rest = f;
    for (u32 a = 0; a < p && rest.degree() > 0; ++a) {
        const FpElem x = FpElem::from_residue(p, a);
        const FpPoly lin = FpPoly::linear(FpElem::from_residue(p, 1), -x, f.var());
        while (rest.degree() > 0 && rest.eval(x).is_zero()) {
            rest = div_exact(rest, lin);
            out.roots.push_back(x);
        }
    }
    if (rest.degree() > 0)
        throw NonSplitError("polynomial " + f.to_string() + " has a non-linear irreducible factor over F_" +
                            std::to_string(p));
    return out;
}

// ---------------------------------------------------------------------------
// RatFn

RatFn::RatFn(Prime p, char var) : num_(p, var), den_(FpPoly::constant(FpElem(p, 1), var)) {}

RatFn::RatFn(FpPoly num)
    : num_(std::move(num)), den_(FpPoly::constant(FpElem::from_residue(num_.modulus(), 1), num_.var())) {}

RatFn::RatFn(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.modulus() != den_.modulus()) throw ModulusMismatch("fraction of polynomials over different primes");
    canonicalize();
}

void RatFn::canonicalize() {
    const u32 p = num_.modulus();
    if (num_.is_zero()) {
        den_ = FpPoly::constant(FpElem::from_residue(p, 1), num_.var());
        return;
    }
    if (den_.degree() > 0) {
        FpPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
    }
    const FpElem lc = den_.leading();
    if (!lc.is_one()) {
        const FpElem li = lc.inv();
        num_ *= li;
        den_ *= li;
    }
}

RatFn RatFn::inv() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(u64 e) const { return RatFn(num_.pow(e), den_.pow(e), Canonical{}); }

FpElem RatFn::eval(FpElem x) const {
    const FpElem d = den_.eval(x);
    if (d.is_zero())
        throw PoleError(x.value(), "pole of " + to_string() + " at " + std::to_string(x.value()));
    return num_.eval(x) / d;
}

RatFn RatFn::compose_arg(const FpPoly& g) const {
    return RatFn(compose(num_, g).with_var(var()), compose(den_, g).with_var(var()));
}

RatFn RatFn::scale_arg(FpElem t) const {
    if (t.is_zero()) return RatFn(num_.scale_arg(t), den_.scale_arg(t));
    // scaling preserves coprimality; only the leading coefficient changes
    FpPoly n = num_.scale_arg(t), d = den_.scale_arg(t);
    const FpElem li = d.leading().inv();
    return RatFn(n * li, d * li, Canonical{});
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_, Canonical{}); }

RatFn& RatFn::operator+=(const RatFn& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    const FpPoly g = gcd(den_, o.den_);
    const FpPoly d1 = div_exact(den_, g), d2 = div_exact(o.den_, g);
    FpPoly n = num_ * d2 + o.num_ * d1;
    FpPoly d = den_ * d2;
    if (!g.is_one() && !n.is_zero()) {
        const FpPoly h = gcd(n, g);
        if (!h.is_one()) {
            n = div_exact(n, h);
            d = div_exact(d, h);
        }
    }
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = FpPoly::constant(FpElem::from_residue(modulus(), 1), var());
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
    if (is_zero() || o.is_zero()) {
        if (o.modulus() != modulus()) throw ModulusMismatch("rational functions over different primes");
        return *this = RatFn(Prime(modulus()), var());
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    const FpPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    FpPoly n = (g1.is_one() ? num_ : div_exact(num_, g1)) * (g2.is_one() ? o.num_ : div_exact(o.num_, g2));
    FpPoly d = (g2.is_one() ? den_ : div_exact(den_, g2)) * (g1.is_one() ? o.den_ : div_exact(o.den_, g1));
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) { return *this *= o.inv(); }

namespace {
std::string paren(const FpPoly& f) {
    std::string s = f.to_string();
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}
}  // namespace

std::string RatFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return paren(num_) + " / " + paren(den_);
}

RatFn pochhammer(const RatFn& f, unsigned m) {
    const u32 p = f.modulus();
    RatFn r = RatFn::constant(FpElem::from_residue(p, 1), f.var());
    for (unsigned i = 0; i < m; ++i) r *= f - RatFn::constant(FpElem::from_residue(p, i % p), f.var());
    return r;
}

RatFn binom_of_ratfn(const RatFn& f, unsigned k) {
    const Prime p(f.modulus());
    if (k >= p.value()) throw DomainError("binomial C(f, k) needs k < p, got k = " + std::to_string(k));
    return pochhammer(f, k) * RatFn::constant(factorial(k, p).inv(), f.var());
}

}  // namespace trunclog

#include <trunclog/fields.hpp>

#include <string>

namespace trunclog {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(u64 n) : p_(0) {
    if (n == 2) throw DomainError("p = 2 is not supported; the prime must be odd");
    if (!is_prime(n)) throw DomainError(std::to_string(n) + " is not a prime");
    if (n > kMaxPrime) throw DomainError("prime " + std::to_string(n) + " exceeds the supported maximum");
    p_ = static_cast<u32>(n);
}

namespace modp {

u32 inv(u32 a, u32 p) {
    if (a % p == 0) throw DomainError("inverse of zero in F_" + std::to_string(p));
    i64 r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    return reduce(s0, p);
}

u32 pow(u32 a, u64 e, u32 p) noexcept {
    u64 r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<u32>(r);
}

u32 reduce(i64 v, u32 p) noexcept {
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += p;
    return static_cast<u32>(r);
}

}  // namespace modp

FpElem::FpElem(Prime p, i64 v) : v_(modp::reduce(v, p.value())), p_(p.value()) {}

void FpElem::check_same(FpElem o) const {
    if (o.p_ != p_)
        throw ModulusMismatch("F_" + std::to_string(p_) + " element combined with F_" + std::to_string(o.p_) + " element");
}

i64 FpElem::signed_value() const noexcept {
    return v_ > p_ / 2 ? static_cast<i64>(v_) - p_ : static_cast<i64>(v_);
}

FpElem FpElem::operator-() const noexcept { return from_residue(p_, modp::neg(v_, p_)); }
FpElem FpElem::inv() const { return from_residue(p_, modp::inv(v_, p_)); }
FpElem FpElem::pow(u64 e) const noexcept { return from_residue(p_, modp::pow(v_, e, p_)); }

FpElem& FpElem::operator+=(FpElem o) { check_same(o); v_ = modp::add(v_, o.v_, p_); return *this; }
FpElem& FpElem::operator-=(FpElem o) { check_same(o); v_ = modp::sub(v_, o.v_, p_); return *this; }
FpElem& FpElem::operator*=(FpElem o) { check_same(o); v_ = modp::mul(v_, o.v_, p_); return *this; }
FpElem& FpElem::operator/=(FpElem o) { check_same(o); v_ = modp::mul(v_, modp::inv(o.v_, p_), p_); return *this; }

std::string to_string(FpElem x) { return std::to_string(x.value()); }

FpElem binom_lucas(u64 n, u64 k, Prime p) {
    const u32 q = p.value();
    u32 result = 1;
    while (n > 0 || k > 0) {
        const u32 nd = static_cast<u32>(n % q), kd = static_cast<u32>(k % q);
        if (kd > nd) return FpElem(p, 0);
        // single-digit binomial by the multiplicative formula
        u32 num = 1, den = 1;
        for (u32 i = 0; i < kd; ++i) {
            num = modp::mul(num, nd - i, q);
            den = modp::mul(den, i + 1, q);
        }
        result = modp::mul(result, modp::mul(num, modp::inv(den, q), q), q);
        n /= q;
        k /= q;
    }
    return FpElem(p, result);
}

FpElem pochhammer(FpElem x, unsigned m) {
    const u32 p = x.modulus();
    FpElem r = FpElem::from_residue(p, 1);
    for (unsigned i = 0; i < m; ++i) r *= x - FpElem::from_residue(p, i % p);
    return r;
}

FpElem factorial(unsigned k, Prime p) {
    u32 r = 1;
    for (unsigned i = 2; i <= k; ++i) r = modp::mul(r, i % p.value(), p.value());
    return FpElem(p, r);
}

// ---------------------------------------------------------------------------

void Ext2Elem::check_same(const Ext2Elem& o) const {
    if (o.p_ != p_ || o.n_ != n_) throw ModulusMismatch("elements of different quadratic extensions");
}

Ext2Elem Ext2Elem::operator-() const noexcept {
    return Ext2Elem(p_, n_, modp::neg(c0_, p_), modp::neg(c1_, p_));
}

Ext2Elem& Ext2Elem::operator+=(const Ext2Elem& o) {
    check_same(o);
    c0_ = modp::add(c0_, o.c0_, p_);
    c1_ = modp::add(c1_, o.c1_, p_);
    return *this;
}

Ext2Elem& Ext2Elem::operator-=(const Ext2Elem& o) {
    check_same(o);
    c0_ = modp::sub(c0_, o.c0_, p_);
    c1_ = modp::sub(c1_, o.c1_, p_);
    return *this;
}

Ext2Elem& Ext2Elem::operator*=(const Ext2Elem& o) {
    check_same(o);
    // (a + bt)(c + dt) = ac + n bd + (ad + bc) t
    const u64 a = c0_, b = c1_, c = o.c0_, d = o.c1_;
    const u32 r0 = static_cast<u32>((a * c + (b * d % p_) * n_) % p_);
    const u32 r1 = static_cast<u32>((a * d + b * c) % p_);
    c0_ = r0;
    c1_ = r1;
    return *this;
}

Ext2Elem Ext2Elem::inv() const {
    if (is_zero()) throw DomainError("inverse of zero in F_p^2");
    // (a + bt)^{-1} = (a - bt) / (a^2 - n b^2)
    const u32 norm = modp::sub(modp::mul(c0_, c0_, p_), modp::mul(n_, modp::mul(c1_, c1_, p_), p_), p_);
    const u32 ninv = modp::inv(norm, p_);
    return Ext2Elem(p_, n_, modp::mul(c0_, ninv, p_), modp::mul(modp::neg(c1_, p_), ninv, p_));
}

Ext2Elem& Ext2Elem::operator/=(const Ext2Elem& o) {
    check_same(o);
    return *this *= o.inv();
}

Ext2Elem Ext2Elem::pow(u64 e) const noexcept {
    Ext2Elem r(p_, n_, 1 % p_, 0), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string to_string(const Ext2Elem& x) {
    if (x.c1() == 0) return std::to_string(x.c0());
    std::string t = x.c1() == 1 ? "t" : std::to_string(x.c1()) + "*t";
    if (x.c0() == 0) return t;
    return t + " + " + std::to_string(x.c0());
}

namespace {
u32 least_nonresidue(u32 p) {
    std::vector<bool> square(p, false);
    for (u32 x = 0; x < p; ++x) square[modp::mul(x, x, p)] = true;
    for (u32 n = 1; n < p; ++n)
        if (!square[n]) return n;
    throw DomainError("no quadratic non-residue mod " + std::to_string(p));
}
}  // namespace

Ext2Field::Ext2Field(Prime p) : p_(p), n_(least_nonresidue(p.value())) {}

Ext2Elem Ext2Field::embed(FpElem x) const {
    if (x.modulus() != p_.value()) throw ModulusMismatch("embedding an element of a different prime field");
    return make(x.value(), 0);
}

Ext2Elem Ext2Field::element(u64 index) const noexcept {
    const u32 p = p_.value();
    return make(static_cast<u32>(index % p), static_cast<u32>(index / p % p));
}

std::vector<Ext2Elem> Ext2Field::elements() const {
    std::vector<Ext2Elem> out;
    out.reserve(order());
    for (u64 i = 0; i < order(); ++i) out.push_back(element(i));
    return out;
}

Ext2Field ext_quadratic(Prime p) { return Ext2Field(p); }

}  // namespace trunclog

#ifndef TRUNCLOG_FIELDS_HPP
#define TRUNCLOG_FIELDS_HPP

#include <trunclog/errors.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace trunclog {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest modulus accepted. Keeping p below 2^16 lets polynomial kernels
/// accumulate residue products in 64 bits without intermediate reduction.
inline constexpr u32 kMaxPrime = 65521;

bool is_prime(u64 n);

/// A validated odd prime modulus.
class Prime {
public:
    /// Throws DomainError unless n is an odd prime not exceeding kMaxPrime.
    explicit Prime(u64 n);

    u32 value() const noexcept { return p_; }
    operator u32() const noexcept { return p_; }

    friend bool operator==(Prime, Prime) = default;

private:
    u32 p_;
};

/// Element of F_p with its modulus carried alongside.
class FpElem {
public:
    FpElem(Prime p, i64 v);

    /// Trusted constructor for residues already in [0, p).
    static FpElem from_residue(u32 p, u32 v) noexcept { return FpElem(p, v, Raw{}); }

    u32 value() const noexcept { return v_; }
    u32 modulus() const noexcept { return p_; }
    Prime prime() const { return Prime(p_); }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    /// Representative in (-p/2, p/2].
    i64 signed_value() const noexcept;

    FpElem operator-() const noexcept;
    FpElem inv() const;
    FpElem pow(u64 e) const noexcept;

    FpElem& operator+=(FpElem o);
    FpElem& operator-=(FpElem o);
    FpElem& operator*=(FpElem o);
    FpElem& operator/=(FpElem o);

    friend FpElem operator+(FpElem a, FpElem b) { return a += b; }
    friend FpElem operator-(FpElem a, FpElem b) { return a -= b; }
    friend FpElem operator*(FpElem a, FpElem b) { return a *= b; }
    friend FpElem operator/(FpElem a, FpElem b) { return a /= b; }

    friend bool operator==(FpElem a, FpElem b) noexcept { return a.v_ == b.v_ && a.p_ == b.p_; }

private:
    struct Raw {};
    FpElem(u32 p, u32 v, Raw) noexcept : v_(v), p_(p) {}
    void check_same(FpElem o) const;

    u32 v_;
    u32 p_;
};

std::string to_string(FpElem x);

namespace modp {
inline u32 add(u32 a, u32 b, u32 p) noexcept { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 sub(u32 a, u32 b, u32 p) noexcept { return a >= b ? a - b : a + p - b; }
inline u32 mul(u32 a, u32 b, u32 p) noexcept { return static_cast<u32>(u64(a) * b % p); }
inline u32 neg(u32 a, u32 p) noexcept { return a == 0 ? 0 : p - a; }
u32 inv(u32 a, u32 p);  // extended Euclid; throws DomainError on 0
u32 pow(u32 a, u64 e, u32 p) noexcept;
u32 reduce(i64 v, u32 p) noexcept;
}  // namespace modp

// ---------------------------------------------------------------------------
// Binomial combinatorics on scalars.

/// C(n, k) mod p by base-p digits (Lucas).
FpElem binom_lucas(u64 n, u64 k, Prime p);

/// Falling factorial x(x-1)...(x-m+1); (x)_0 = 1.
FpElem pochhammer(FpElem x, unsigned m);

FpElem factorial(unsigned k, Prime p);

// ---------------------------------------------------------------------------
// Quadratic extension F_p[t]/(t^2 - n), n the least quadratic non-residue.

class Ext2Elem {
public:
    Ext2Elem(u32 p, u32 nonresidue, u32 c0, u32 c1) noexcept : c0_(c0), c1_(c1), p_(p), n_(nonresidue) {}

    u32 c0() const noexcept { return c0_; }
    u32 c1() const noexcept { return c1_; }
    u32 modulus() const noexcept { return p_; }
    u32 nonresidue() const noexcept { return n_; }

    bool is_zero() const noexcept { return c0_ == 0 && c1_ == 0; }
    /// True iff the element lies in the embedded prime field.
    bool in_base_field() const noexcept { return c1_ == 0; }

    Ext2Elem operator-() const noexcept;
    Ext2Elem inv() const;
    Ext2Elem pow(u64 e) const noexcept;
    Ext2Elem frobenius() const noexcept { return pow(p_); }

    Ext2Elem& operator+=(const Ext2Elem& o);
    Ext2Elem& operator-=(const Ext2Elem& o);
    Ext2Elem& operator*=(const Ext2Elem& o);
    Ext2Elem& operator/=(const Ext2Elem& o);

    friend Ext2Elem operator+(Ext2Elem a, const Ext2Elem& b) { return a += b; }
    friend Ext2Elem operator-(Ext2Elem a, const Ext2Elem& b) { return a -= b; }
    friend Ext2Elem operator*(Ext2Elem a, const Ext2Elem& b) { return a *= b; }
    friend Ext2Elem operator/(Ext2Elem a, const Ext2Elem& b) { return a /= b; }

    friend bool operator==(const Ext2Elem&, const Ext2Elem&) = default;

private:
    void check_same(const Ext2Elem& o) const;

    u32 c0_, c1_;
    u32 p_, n_;
};

std::string to_string(const Ext2Elem& x);

/// Descriptor for F_{p^2}.
class Ext2Field {
public:
    explicit Ext2Field(Prime p);

    Prime prime() const noexcept { return p_; }
    /// The constant n in the minimal polynomial t^2 - n.
    u32 nonresidue() const noexcept { return n_; }

    Ext2Elem zero() const noexcept { return make(0, 0); }
    Ext2Elem one() const noexcept { return make(1, 0); }
    Ext2Elem gen() const noexcept { return make(0, 1); }
    Ext2Elem make(u32 c0, u32 c1) const noexcept { return Ext2Elem(p_, n_, c0 % p_, c1 % p_); }
    Ext2Elem embed(FpElem x) const;

    /// Element with index i = c0 + p*c1, for i in [0, p^2).
    Ext2Elem element(u64 index) const noexcept;
    u64 order() const noexcept { return u64(p_.value()) * p_.value(); }
    std::vector<Ext2Elem> elements() const;

private:
    Prime p_;
    u32 n_;
};

Ext2Field ext_quadratic(Prime p);

}  // namespace trunclog

#endif  // TRUNCLOG_FIELDS_HPP

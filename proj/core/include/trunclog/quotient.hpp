#ifndef TRUNCLOG_QUOTIENT_HPP
#define TRUNCLOG_QUOTIENT_HPP

#include <trunclog/polys.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trunclog {

/// Polynomial of degree < p in X with coefficients in F_p(a), optionally
/// tagged with the constant c of a binomial modulus X^p - c.
///
/// Stored as numerators over one common monic denominator, with no factor
/// shared by the denominator and every numerator. That representation is a
/// normal form, so equality is structural; coeff(k) recovers the reduced
/// fraction of each coefficient.
class XPoly {
public:
    explicit XPoly(Prime p, std::optional<RatFn> modulus = std::nullopt);

    /// From up to p coefficients (lowest first); missing ones are zero.
    static XPoly from_coeffs(Prime p, std::span<const RatFn> coeffs, std::optional<RatFn> modulus = std::nullopt);
    /// From polynomial coefficients over F_p[a].
    static XPoly from_polys(Prime p, std::span<const FpPoly> coeffs, std::optional<RatFn> modulus = std::nullopt);
    /// c * X^k, k < p.
    static XPoly monomial(Prime p, RatFn c, std::size_t k, std::optional<RatFn> modulus = std::nullopt);
    static XPoly constant(Prime p, RatFn c, std::optional<RatFn> modulus = std::nullopt) {
        return monomial(p, std::move(c), 0, std::move(modulus));
    }

    Prime prime() const { return Prime(p_); }
    /// Number of coefficient slots (= p).
    std::size_t slots() const noexcept { return num_.size(); }
    /// Degree in X; -1 for zero.
    int degree() const noexcept;
    bool is_zero() const noexcept { return degree() < 0; }

    RatFn coeff(std::size_t k) const;
    std::vector<RatFn> coeffs() const;
    const FpPoly& common_denominator() const noexcept { return den_; }
    const FpPoly& numerator(std::size_t k) const { return num_.at(k); }

    const std::optional<RatFn>& modulus() const noexcept { return mod_; }
    XPoly with_modulus(std::optional<RatFn> c) const;

    /// Replace the coefficient of X^k.
    XPoly with_coeff(std::size_t k, const RatFn& c) const;
    /// d/dX applied coefficient-wise.
    XPoly derivative() const;
    /// Substitute a -> g(a) inside every coefficient (modulus tag is dropped).
    XPoly substitute_param(const FpPoly& g) const;
    /// Specialize a -> x in every coefficient; throws PoleError on a vanishing denominator.
    FpPoly specialize(FpElem x, char var = 'X') const;

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const RatFn& c);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(XPoly a, const RatFn& c) { return a *= c; }
    friend XPoly operator*(const RatFn& c, XPoly a) { return a *= c; }

    friend bool operator==(const XPoly& a, const XPoly& b);

    /// Ascending terms in X, e.g. "-X - X^2/(a + 2)". Constant numerators
    /// are printed with signed representatives.
    std::string to_string(char var = 'X') const;

private:
    friend XPoly mulmod(const XPoly& a, const XPoly& b);
    friend XPoly reduce_mod(std::span<const RatFn> f, const RatFn& c);
    friend XPoly compose_mod(const XPoly& outer, const XPoly& inner, const RatFn& c);

    XPoly(u32 p, std::vector<FpPoly> num, FpPoly den, std::optional<RatFn> mod);
    /// Numerators of any length over den, folded by X^{qp+r} -> c^q X^r.
    static XPoly fold(u32 p, std::vector<FpPoly> terms, FpPoly den, const RatFn& c);
    void normalize();
    void check_compatible(const XPoly& o) const;

    u32 p_;
    std::vector<FpPoly> num_;
    FpPoly den_;
    std::optional<RatFn> mod_;
};

/// Reduce a polynomial of any degree modulo X^p - c by rewriting X^{p+t} -> c X^t.
XPoly reduce_mod(std::span<const RatFn> f, const RatFn& c);

/// Product reduced modulo the shared modulus. Both operands must carry the
/// same modulus tag; untagged operands are rejected.
XPoly mulmod(const XPoly& a, const XPoly& b);
XPoly powmod(const XPoly& a, unsigned j);

/// Horner evaluation of outer at inner, reducing modulo X^p - c after every step.
XPoly compose_mod(const XPoly& outer, const XPoly& inner, const RatFn& c);

/// The constant a^p - a of the modulus X^p - (a^p - a).
RatFn frobenius_constant(Prime p);

}  // namespace trunclog

#endif  // TRUNCLOG_QUOTIENT_HPP

#ifndef TRUNCLOG_POLYS_HPP
#define TRUNCLOG_POLYS_HPP

#include <trunclog/fields.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trunclog {

/// Dense univariate polynomial over F_p, lowest degree first.
///
/// The coefficient vector never has a trailing zero; the zero polynomial has
/// no coefficients. The variable tag only affects rendering: arithmetic
/// results carry the tag of the left operand.
class FpPoly {
public:
    explicit FpPoly(Prime p, char var = 'a') : p_(p.value()), var_(var) {}
    FpPoly(Prime p, std::vector<u32> residues, char var = 'a');
    FpPoly(Prime p, std::initializer_list<i64> coeffs, char var = 'a');

    static FpPoly constant(FpElem c, char var = 'a');
    static FpPoly monomial(FpElem c, std::size_t degree, char var = 'a');
    /// The polynomial c1*v + c0.
    static FpPoly linear(FpElem c1, FpElem c0, char var = 'a');
    static FpPoly variable(Prime p, char var = 'a');

    u32 modulus() const noexcept { return p_; }
    Prime prime() const { return Prime(p_); }
    char var() const noexcept { return var_; }
    FpPoly with_var(char v) const { FpPoly r = *this; r.var_ = v; return r; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Degree, or -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }

    /// Coefficient of v^k (zero past the degree).
    FpElem coeff(std::size_t k) const noexcept;
    FpElem leading() const noexcept;
    std::span<const u32> residues() const noexcept { return c_; }

    FpPoly monic() const;
    FpElem eval(FpElem x) const;
    Ext2Elem eval(const Ext2Elem& x) const;
    FpPoly derivative() const;
    /// f(t*v) for a scalar t.
    FpPoly scale_arg(FpElem t) const;
    /// f(v^k).
    FpPoly inflate(unsigned k) const;
    FpPoly pow(u64 e) const;

    FpPoly operator-() const;
    FpPoly& operator+=(const FpPoly& o);
    FpPoly& operator-=(const FpPoly& o);
    FpPoly& operator*=(const FpPoly& o);
    FpPoly& operator*=(FpElem c);

    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(FpPoly a, FpElem c) { return a *= c; }
    friend FpPoly operator*(FpElem c, FpPoly a) { return a *= c; }

    /// Equality of coefficient sequences; the variable tag is ignored.
    friend bool operator==(const FpPoly& a, const FpPoly& b) noexcept { return a.p_ == b.p_ && a.c_ == b.c_; }

    /// Descending-degree rendering, e.g. "2*a^2 + 1".
    std::string to_string() const;

private:
    void trim() noexcept;
    void check_same(const FpPoly& o) const;

    u32 p_;
    std::vector<u32> c_;
    char var_;
};

/// a = q*b + r with deg r < deg b. Throws DomainError when b is zero.
std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b);
/// Exact quotient; throws TheoremViolation if b does not divide a.
FpPoly div_exact(const FpPoly& a, const FpPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// outer(inner(v)).
FpPoly compose(const FpPoly& outer, const FpPoly& inner);

/// Falling factorial (f)_m = f(f-1)...(f-m+1).
FpPoly pochhammer(const FpPoly& f, unsigned m);
/// C(f, k) = (f)_k / k!, 0 <= k < p.
FpPoly binom_of_poly(const FpPoly& f, unsigned k);

struct Split {
    FpElem leading;
    std::vector<FpElem> roots;  // ascending, with multiplicity
};

/// Factor f = c * prod(v - a_i) over F_p. Throws NonSplitError if some
/// irreducible factor has degree > 1.
Split roots_and_split(const FpPoly& f);

/// Element of F_p(v) in canonical form: monic denominator, gcd(num, den) = 1.
class RatFn {
public:
    explicit RatFn(Prime p, char var = 'a');
    RatFn(FpPoly num);  // NOLINT: polynomials embed in their fraction field
    RatFn(FpPoly num, FpPoly den);
    static RatFn constant(FpElem c, char var = 'a') { return RatFn(FpPoly::constant(c, var)); }

    const FpPoly& num() const noexcept { return num_; }
    const FpPoly& den() const noexcept { return den_; }
    u32 modulus() const noexcept { return num_.modulus(); }
    Prime prime() const { return num_.prime(); }
    char var() const noexcept { return num_.var(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    RatFn inv() const;
    RatFn pow(u64 e) const;
    /// Throws PoleError if the reduced denominator vanishes at x.
    FpElem eval(FpElem x) const;
    /// Substitute the variable by a polynomial: f(g(v)).
    RatFn compose_arg(const FpPoly& g) const;
    RatFn scale_arg(FpElem t) const;

    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o);

    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }

    friend bool operator==(const RatFn& a, const RatFn& b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// "num / den", parenthesizing multi-term parts; plain "num" when den = 1.
    std::string to_string() const;

private:
    struct Canonical {};
    RatFn(FpPoly num, FpPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    FpPoly num_;
    FpPoly den_;
};

RatFn pochhammer(const RatFn& f, unsigned m);
RatFn binom_of_ratfn(const RatFn& f, unsigned k);

namespace detail {
/// Coefficients of a*b (raw residues, untrimmed length |a|+|b|-1).
std::vector<u32> mul_residues(std::span<const u32> a, std::span<const u32> b, u32 p);
}  // namespace detail

}  // namespace trunclog

#endif  // TRUNCLOG_POLYS_HPP

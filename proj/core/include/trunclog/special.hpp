#ifndef TRUNCLOG_SPECIAL_HPP
#define TRUNCLOG_SPECIAL_HPP

#include <trunclog/quotient.hpp>

namespace trunclog {

/// The degree-(p-1) Laguerre polynomial read in F_p[a][X]: the coefficient
/// of X^k is -(a-1)_{p-1-k}. Tagged with the modulus X^p - (a^p - a).
XPoly laguerre_pm1(Prime p);

/// L_{p-1}^{(r a)}(r X): coefficient of X^k is -(r a - 1)_{p-1-k} r^k.
/// Tagged with X^p - (a^p - a). Throws DomainError for r = 0 mod p.
XPoly laguerre_scaled(Prime p, u32 r);

/// Truncated exponential sum_{k<p} X^k / k!.
FpPoly truncated_exp(Prime p);

/// Finite polylogarithm sum_{k=1}^{p-1} X^k / k^d.
FpPoly finite_polylog(Prime p, unsigned d);

/// (1 + bX)_*^f = sum_{k<p} C(f, k) b^k X^k, untagged.
XPoly trunc_binomial(const RatFn& f, const RatFn& b);
XPoly trunc_binomial(const RatFn& f, FpElem b);

/// L_{p-1}^{(a^p)}(a^p - a) by direct substitution into the coefficients.
FpPoly laguerre_const_substitution(const XPoly& laguerre);
/// prod_{k=1}^{p-1} (1 + a/k)^k.
FpPoly laguerre_const_product(Prime p);

/// L_{p-1}^{(a^p)}(a^p - a). Both routes above are computed and must agree;
/// throws TheoremViolation otherwise.
FpPoly laguerre_const(Prime p);

}  // namespace trunclog

#endif  // TRUNCLOG_SPECIAL_HPP

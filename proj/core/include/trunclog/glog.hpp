#ifndef TRUNCLOG_GLOG_HPP
#define TRUNCLOG_GLOG_HPP

#include <trunclog/quotient.hpp>

#include <string>
#include <vector>

namespace trunclog {

/// The generalized truncated logarithm G^{(a)}(X) = sum_{k=1}^{p-1} g_k X^k.
class GLog {
public:
    /// coeffs[k-1] is the coefficient of X^k; exactly p-1 entries.
    GLog(Prime p, std::vector<RatFn> coeffs);

    Prime prime() const noexcept { return p_; }
    /// Coefficient of X^k, 1 <= k <= p-1.
    const RatFn& coeff(std::size_t k) const;
    const std::vector<RatFn>& coeffs() const noexcept { return coeffs_; }

    /// As an element of F_p(a)[X] with the given modulus tag.
    XPoly as_xpoly(std::optional<RatFn> modulus = std::nullopt) const;

    /// G^{(t a)}: substitute a -> t a inside every coefficient.
    GLog scale_param(FpElem t) const;
    GLog with_coeff(std::size_t k, RatFn c) const;

    friend bool operator==(const GLog&, const GLog&) = default;

private:
    Prime p_;
    std::vector<RatFn> coeffs_;
};

enum class SelfCheck { on, off };

/// G^{(a)} from the closed form -(1/k) / prod_{s<k} b_{1,s}(a). With
/// SelfCheck::on, G(L(X)) = X mod X^p - (a^p - a) is asserted before
/// returning (TheoremViolation on failure).
GLog glog(Prime p, SelfCheck check = SelfCheck::on);

/// G(L(X)) reduced modulo X^p - (a^p - a).
XPoly glog_left_composite(const GLog& g, const XPoly& laguerre);

/// Coefficient k written as N_k(a) / (1 - a^{p-1})^{k-1}.
struct NormalCoeff {
    FpPoly numerator;
    unsigned exponent;
};

/// N_k = -(1/k) prod_{s<k} b_{1,s}(-a), checked against the reduced
/// coefficient (TheoremViolation on mismatch).
NormalCoeff glog_coeff_normal(Prime p, unsigned k);

/// Substitute a -> x. Throws PoleError (carrying x) naming the first
/// coefficient index with a vanishing denominator.
FpPoly glog_specialize(const GLog& g, FpElem x);

/// -X^p G^{(-a)}((1 - a^{p-1}) / X) as a polynomial of degree < p in X.
XPoly reciprocal_rhs(const GLog& g);
XPoly reciprocal_rhs(Prime p);

struct PoleRow {
    u32 p;
    u32 k;
    u32 a;
    bool pole;
};

/// For every k in [1, p-1] and a in [1, p-1], whether the reduced
/// coefficient of X^k has a pole at a.
std::vector<PoleRow> glog_pole_table(const GLog& g);
std::string glog_pole_csv(const std::vector<PoleRow>& rows, bool header = true);

}  // namespace trunclog

#endif  // TRUNCLOG_GLOG_HPP

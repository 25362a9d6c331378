#ifndef TRUNCLOG_BPOLY_HPP
#define TRUNCLOG_BPOLY_HPP

#include <trunclog/polys.hpp>

#include <string>
#include <vector>

namespace trunclog {

/// Index pair (r, s) of b_{r,s}, both in [1, p-1].
class BPolyKey {
public:
    BPolyKey(Prime p, u32 r, u32 s);

    Prime prime() const noexcept { return p_; }
    u32 r() const noexcept { return r_; }
    u32 s() const noexcept { return s_; }
    /// r + s = p, where b_{r,s} is the zero polynomial.
    bool degenerate() const noexcept { return r_ + s_ == p_.value(); }

private:
    Prime p_;
    u32 r_, s_;
};

/// sum_k (-r/s)^k C(ra - 1, p-1-k) C(sa - 1, k).
FpPoly b_rs(const BPolyKey& key);

/// sum_k (-r/s)^k C(ra - 1, p-1-k) C(sa, k). Throws DomainError when r + s = p.
FpPoly b_rs_alt(const BPolyKey& key);

/// Coefficient of X^{p-1} in (1 + X/r)_*^{ra-1} (1 - X/s)_*^{sa-1}.
FpPoly b_rs_coeff(const BPolyKey& key);

/// Memoized b_{1,s}; safe to call concurrently.
const FpPoly& b_one(Prime p, u32 s);

/// { a in [1, p-1] : a + (s a mod p) < p }. Requires 1 <= s <= p-2.
std::vector<u32> b_roots_predicted(Prime p, u32 s);

/// b_{1,s}(a) = 0 iff p does not divide C(a + s a, a).
bool b_root_lucas(Prime p, u32 s, u32 a);

/// prod_{s=1}^{p-2} b_{1,s}.
FpPoly product_b_direct(Prime p);
/// prod_{k=2}^{p-1} (1 + a/k)^{k-1}.
FpPoly product_b_closed_form(Prime p);

/// prod_{s=1}^{p-2} b_{1,s}; the direct product, the closed form, and
/// L^{(a^p)}(a^p - a) / (1 - a^{p-1}) must all agree (TheoremViolation otherwise).
FpPoly product_all_b(Prime p);

struct BRootRow {
    u32 p;
    u32 s;
    std::vector<u32> roots;
    int degree;
};

/// One row per s in [1, p-2], roots found by splitting b_{1,s}.
std::vector<BRootRow> b_root_table(Prime p);

/// "p,s,roots,degree" header plus one line per row; roots ';'-separated ascending.
std::string b_root_csv(const std::vector<BRootRow>& rows, bool header = true);

}  // namespace trunclog

#endif  // TRUNCLOG_BPOLY_HPP

#ifndef TRUNCLOG_JACOBI_HPP
#define TRUNCLOG_JACOBI_HPP

#include <trunclog/polys.hpp>

namespace trunclog {

/// Specialized Jacobi data: parameters given as polynomials in a, argument in F_p.
struct JacobiSpec {
    FpPoly a_param;
    FpPoly b_param;
    FpElem x;

    Prime prime() const { return a_param.prime(); }
};

/// P_{p-1}^{(A,B)}(x) mod p:
/// sum_k C(A-1, p-1-k) C(B-1, k) (x+1)^{p-1-k} (x-1)^k.
FpPoly jacobi_pm1(const JacobiSpec& spec);

/// p P_p^{(A,B)}(x) mod p = (A - A^p)(x+1)^p / 2 + (B - B^p)(x-1)^p / 2.
FpPoly p_times_jacobi_p(const JacobiSpec& spec);

/// (A+B) (x+1)/2 P_{p-1}^{(A,B+1)}(x) - B P_{p-1}^{(A,B)}(x) - p P_p^{(A,B)}(x),
/// the three-term contiguous relation read mod p; zero when it holds.
FpPoly contiguous_residual(const JacobiSpec& spec);

/// A = r a, B = s a, x = (s - r)/(s + r). Requires r + s != p.
JacobiSpec jacobi_spec_for_b(Prime p, u32 r, u32 s);

/// Checks P^{(a, s a)}((s-1)/(s+1)) = P^{(a, (-s-1)a + 1)}((s+2)/s)
/// = P^{(a, (-s-1) a)}((s+2)/s), and that the outer two equal b_{1,s}
/// and b_{1,p-1-s}. Throws DomainError unless 1 <= s <= p-2.
bool jacobi_reflection_check(Prime p, u32 s);

}  // namespace trunclog

#endif  // TRUNCLOG_JACOBI_HPP

#ifndef TRUNCLOG_ERRORS_HPP
#define TRUNCLOG_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trunclog {

/// Invalid argument: non-prime modulus, index out of range, k >= p, ...
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic between values over different primes or different quotient moduli.
class ModulusMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation of a rational function at one of its poles.
class PoleError : public std::domain_error {
public:
    PoleError(std::uint32_t point, std::string what)
        : std::domain_error(std::move(what)), point_(point) {}
    std::uint32_t point() const noexcept { return point_; }

private:
    std::uint32_t point_;
};

/// A polynomial expected to split into linear factors over F_p did not.
class NonSplitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two routes to a quantity that must agree did not. Never expected.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace trunclog

#endif  // TRUNCLOG_ERRORS_HPP

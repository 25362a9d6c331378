#ifndef TRUNCLOG_TESTS_HELPERS_HPP
#define TRUNCLOG_TESTS_HELPERS_HPP

#include "oracle.hpp"

#include <trunclog/polys.hpp>

#include <vector>

namespace testing_support {

inline bool same(const trunclog::FpPoly& f, const oracle::Poly& o) {
    const auto r = f.residues();
    return std::vector<std::uint32_t>(r.begin(), r.end()) == oracle::residues(o);
}

inline trunclog::FpPoly from_oracle(trunclog::Prime p, const oracle::Poly& o, char var = 'a') {
    return trunclog::FpPoly(p, oracle::residues(o), var);
}

inline trunclog::FpElem el(trunclog::Prime p, long long v) { return trunclog::FpElem(p, v); }

}  // namespace testing_support

#endif  // TRUNCLOG_TESTS_HELPERS_HPP

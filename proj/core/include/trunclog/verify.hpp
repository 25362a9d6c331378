#ifndef TRUNCLOG_VERIFY_HPP
#define TRUNCLOG_VERIFY_HPP

#include <trunclog/glog.hpp>

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trunclog {

enum class TheoremId {
    LeftInverse,
    RightInverse,
    LemmaProduct,
    PowerFormula,
    BConjugate,
    RootsTheorem,
    LucasCriterion,
    Symmetry,
    ProductFormula,
    LFactorization,
    Reciprocal,
    PowersFunctional,
    PowersHEqualsPMinus1,
    PolylogShift,
    PolylogWilson,
    SixSymmetries,
    FourTerm,
    TruncBinomialRules,
    BAltAgreement,
    JacobiLink,
    JacobiShift,
    JacobiReflection,
    CCoefficients,
};

inline constexpr std::size_t kTheoremCount = 23;

/// Every id, in the order verify_all runs them.
const std::array<TheoremId, kTheoremCount>& all_theorems();
std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

enum class Status { pass, fail, skipped };
std::string_view to_string(Status s);

/// The first failing case: its parameters and both sides, rendered.
struct Witness {
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    TheoremId theorem = TheoremId::LeftInverse;
    u32 prime = 0;
    u64 cases = 0;
    Status status = Status::pass;
    std::optional<Witness> witness;  // present iff status == fail
    std::string reason;              // set when skipped
    i64 elapsed_ms = 0;
};

/// One JSON object on a single line (no trailing newline). Keys: prime,
/// theorem, cases, status, witness, elapsed_ms; skipped reports add "reason".
std::string report_json(const VerifyReport& r);
/// "p=5 RootsTheorem pass cases=12 (3 ms)" plus witness lines on failure.
std::string report_text(const VerifyReport& r);

/// How many (alpha, beta) pairs the c_i check visits.
struct PairBudget {
    bool exhaustive = false;
    u64 count = 0;

    /// Exhaustive for p <= 5, otherwise 200 sampled pairs.
    static PairBudget default_for(Prime p);
};

struct VerifyOptions {
    std::optional<PairBudget> pairs;  // default_for(p) when empty
    u64 seed = 0;
    bool parallel = false;  // verify_all only
};

/// The objects every checker reads: L, G, the b_{1,s} and the constant
/// prod (1 + a/k)^k. Built lazily; any of them can be replaced before use,
/// which is how the suite's sensitivity to single-site mutations is tested.
/// Getters are safe to call concurrently.
class TheoryObjects {
public:
    explicit TheoryObjects(Prime p) : p_(p) {}
    TheoryObjects(const TheoryObjects&) = delete;
    TheoryObjects& operator=(const TheoryObjects&) = delete;

    Prime prime() const noexcept { return p_; }

    const XPoly& laguerre();
    /// L^{(r a)}(r X); r = 1 is laguerre().
    const XPoly& laguerre_scaled(u32 r);
    const GLog& glog();
    /// b_{1,s}, 1 <= s <= p-2.
    const FpPoly& b1(u32 s);
    /// b_{r,s}; goes through b1() when r = 1.
    FpPoly b(u32 r, u32 s);
    const FpPoly& lconst();

    void set_laguerre(XPoly l);
    void set_glog(GLog g);
    void set_b1(u32 s, FpPoly b);

private:
    Prime p_;
    std::mutex mutex_;
    std::optional<XPoly> laguerre_;
    std::map<u32, XPoly> scaled_;
    std::optional<GLog> glog_;
    std::map<u32, FpPoly> b1_;
    std::optional<FpPoly> lconst_;
};

/// Run one checker. Exceptions escaping a checker become a failing report
/// whose witness carries the message; DomainError becomes "skipped".
VerifyReport verify_theorem(TheoryObjects& objects, TheoremId id, const VerifyOptions& options = {});
VerifyReport verify_theorem(Prime p, TheoremId id, const VerifyOptions& options = {});

/// Result of solving for c_0..c_{p-1} at one specialized pair.
struct CSolution {
    bool solvable = false;
    bool unique = false;
    std::vector<Ext2Elem> c;  // one solution when solvable
};

/// Solve L^{(x)}(X) L^{(y)}(Y) = L^{(x+y)}(X+Y) (c_0 + sum_i c_i X^i Y^{p-i})
/// modulo X^p - (x^p - x), Y^p - (y^p - y), as p^2 equations over F_{p^2}.
CSolution solve_c_coefficients(const Ext2Field& field, const Ext2Elem& x, const Ext2Elem& y);

/// The closed forms at p = 3; empty when 1 - (x+y)^2 vanishes.
std::optional<std::array<Ext2Elem, 3>> c_closed_forms_p3(const Ext2Field& field, const Ext2Elem& x, const Ext2Elem& y);

VerifyReport verify_c_coefficients(Prime p, PairBudget budget, u64 seed = 0);

/// Every theorem, in all_theorems() order regardless of scheduling.
std::vector<VerifyReport> verify_all(Prime p, const VerifyOptions& options = {});
std::vector<VerifyReport> verify_all(TheoryObjects& objects, const VerifyOptions& options = {});

}  // namespace trunclog

#endif  // TRUNCLOG_VERIFY_HPP

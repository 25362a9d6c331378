#include <trunclog/bpoly.hpp>

#include <trunclog/quotient.hpp>
#include <trunclog/special.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace trunclog {

namespace {

FpElem one(u32 p) { return FpElem::from_residue(p, 1); }

// sum_k (-r/s)^k C(ra - 1, p-1-k) C(top, k)
FpPoly b_sum(const BPolyKey& key, const FpPoly& top) {
    const Prime p = key.prime();
    const u32 q = p.value();
    const FpElem ratio = -(FpElem(p, key.r()) / FpElem(p, key.s()));
    const FpPoly ra1 = FpPoly::linear(FpElem(p, key.r()), -one(q));
    FpPoly acc(p);
    FpElem rk = one(q);
    for (u32 k = 0; k < q; ++k) {
        acc += binom_of_poly(ra1, q - 1 - k) * binom_of_poly(top, k) * rk;
        rk *= ratio;
    }
    return acc;
}

}  // namespace

BPolyKey::BPolyKey(Prime p, u32 r, u32 s) : p_(p), r_(r), s_(s) {
    if (r < 1 || r >= p.value() || s < 1 || s >= p.value())
        throw DomainError("b_{r,s} needs 1 <= r, s <= p-1; got r = " + std::to_string(r) + ", s = " + std::to_string(s));
}

FpPoly b_rs(const BPolyKey& key) {
    const u32 q = key.prime().value();
    return b_sum(key, FpPoly::linear(FpElem(key.prime(), key.s()), -one(q)));
}

FpPoly b_rs_alt(const BPolyKey& key) {
    if (key.degenerate()) throw DomainError("alternate b_{r,s} expression needs r + s != p");
    return b_sum(key, FpPoly::linear(FpElem(key.prime(), key.s()), FpElem(key.prime(), 0)));
}

FpPoly b_rs_coeff(const BPolyKey& key) {
    const Prime p = key.prime();
    const u32 q = p.value();
    const FpElem r(p, key.r()), s(p, key.s());
    const XPoly left = trunc_binomial(RatFn(FpPoly::linear(r, -one(q))), r.inv());
    const XPoly right = trunc_binomial(RatFn(FpPoly::linear(s, -one(q))), -s.inv());
    // coefficient of X^{p-1} in the product: sum_i left_i * right_{p-1-i}
    RatFn acc(p);
    for (u32 i = 0; i < q; ++i) acc += left.coeff(i) * right.coeff(q - 1 - i);
    if (!acc.is_polynomial()) throw TheoremViolation("b_{r,s} coefficient route produced a non-polynomial");
    return acc.num();
}

const FpPoly& b_one(Prime p, u32 s) {
    static std::shared_mutex mutex;
    static std::map<std::pair<u32, u32>, std::unique_ptr<const FpPoly>> cache;
    const auto key = std::make_pair(p.value(), s);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<const FpPoly>(b_rs(BPolyKey(p, 1, s)));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(key, std::move(value));
    return *it->second;
}

std::vector<u32> b_roots_predicted(Prime p, u32 s) {
    const u32 q = p.value();
    if (s < 1 || s > q - 2) throw DomainError("root prediction needs 1 <= s <= p-2");
    std::vector<u32> out;
    for (u32 a = 1; a < q; ++a) {
        const u32 ap = static_cast<u32>(u64(s) * a % q);
        if (a + ap < q) out.push_back(a);
    }
    return out;
}

bool b_root_lucas(Prime p, u32 s, u32 a) {
    const u32 q = p.value();
    if (s < 1 || s > q - 2) throw DomainError("Lucas criterion needs 1 <= s <= p-2");
    if (a < 1 || a > q - 1) throw DomainError("Lucas criterion needs 1 <= a <= p-1");
    return !binom_lucas(u64(a) + u64(s) * a, a, p).is_zero();
}

FpPoly product_b_direct(Prime p) {
    FpPoly acc = FpPoly::constant(one(p.value()));
    for (u32 s = 1; s + 2 <= p.value(); ++s) acc *= b_one(p, s);
    return acc;
}

FpPoly product_b_closed_form(Prime p) {
    const u32 q = p.value();
    FpPoly acc = FpPoly::constant(one(q));
    for (u32 k = 2; k < q; ++k) acc *= FpPoly::linear(FpElem(p, k).inv(), one(q)).pow(k - 1);
    return acc;
}

FpPoly product_all_b(Prime p) {
    const u32 q = p.value();
    const FpPoly direct = product_b_direct(p);
    const FpPoly closed = product_b_closed_form(p);
    const FpPoly unit_minus = FpPoly::constant(one(q)) - FpPoly::monomial(one(q), q - 1);
    const FpPoly via_l = div_exact(laguerre_const(p), unit_minus);
    if (!(direct == closed) || !(direct == via_l))
        throw TheoremViolation("product of b_{1,s} routes disagree at p = " + std::to_string(q));
    return direct;
}

std::vector<BRootRow> b_root_table(Prime p) {
    std::vector<BRootRow> rows;
    for (u32 s = 1; s + 2 <= p.value(); ++s) {
        const FpPoly& b = b_one(p, s);
        const Split split = roots_and_split(b);
        BRootRow row{p.value(), s, {}, b.degree()};
        for (const auto& r : split.roots) row.roots.push_back(r.value());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string b_root_csv(const std::vector<BRootRow>& rows, bool header) {
    std::ostringstream os;
    if (header) os << "p,s,roots,degree\n";
    for (const auto& row : rows) {
        os << row.p << ',' << row.s << ',';
        for (std::size_t i = 0; i < row.roots.size(); ++i) os << (i ? ";" : "") << row.roots[i];
        os << ',' << row.degree << '\n';
    }
    return os.str();
}

}  // namespace trunclog

#pragma once

// Macdonald's formula for the zonal spherical function of GSp(4) at the
// double-coset representatives h(ell, m): an 8-term sum over the Weyl group,
// each term a product of four first-order factors times a character of the
// torus.  The symbolic value depends only on (ell, m); numeric parameter
// bundles are evaluated exactly in the quadratic algebra.

#include "sib/satake.hpp"
#include "sib/symrat.hpp"

#include <map>
#include <mutex>

namespace sib {

namespace detail {

// The i-th summand's four factor arguments x, as exponent pairs (e_a, e_b)
// meaning x = alpha^{e_a} beta^{e_b}; factor = (1 - q^{-1} x)/(1 - x).
inline constexpr int kMacdonaldX[8][4][2] = {
    {{-1, 1}, {0, -1}, {-1, -1}, {-1, 0}},
    {{1, -1}, {-1, 0}, {-1, -1}, {0, -1}},
    {{-1, -1}, {0, 1}, {-1, 1}, {-1, 0}},
    {{1, 1}, {-1, 0}, {-1, 1}, {0, 1}},
    {{-1, -1}, {1, 0}, {1, -1}, {0, -1}},
    {{1, 1}, {0, -1}, {1, -1}, {1, 0}},
    {{-1, 1}, {1, 0}, {1, 1}, {0, 1}},
    {{1, -1}, {0, 1}, {1, 1}, {1, 0}},
};

// The i-th summand's torus character: alpha and beta exponents as
// coefficient pairs (c_m, c_ell) meaning exponent = c_m*m + c_ell*ell.
// Every summand also carries gamma^{2m+ell}.
inline constexpr int kMacdonaldB[8][2][2] = {
    {{2, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{2, 1}, {1, 0}}, {{1, 1}, {0, 0}},
    {{1, 0}, {2, 1}}, {{0, 0}, {1, 1}}, {{1, 0}, {0, 0}}, {{0, 0}, {1, 0}},
};

inline LaurentPoly one_minus(int ea, int eb, int er = 0) {
    Mono x = mono_one();
    x[VR] = er;
    x[VA] = ea;
    x[VB] = eb;
    return LaurentPoly(1) - LaurentPoly::term(x, BigRat(1));
}

// The monomial u with p * u = target, or throws if none exists.  Used to
// rewrite each summand's denominator over a fixed common one: the eight
// denominators all divide (1-alpha)(1-beta)(1-alpha*beta)(1-alpha/beta) up
// to a unit monomial.
inline LaurentPoly monomial_quotient(const LaurentPoly& p, const LaurentPoly& target) {
    const auto& pt = p.terms();
    const auto& tt = target.terms();
    if (pt.empty() || tt.empty()) throw std::logic_error("monomial quotient of zero");
    Mono u;
    for (int i = 0; i < kNumVars; ++i) u[i] = tt.begin()->first[i] - pt.begin()->first[i];
    LaurentPoly um = LaurentPoly::term(u, tt.begin()->second / pt.begin()->second);
    if (!(p * um == target)) throw std::logic_error("denominators not unit-related");
    return um;
}

}  // namespace detail

// Symbolic spherical function value at h(ell, m); memoized, safe under
// concurrent callers.  Normalized so that the value at h(0,0) is 1.
//
// All eight summands are put over the single denominator
//   (1-alpha)(1-beta)(1-alpha*beta)(1-alpha*beta^{-1}) * (1+2q^{-1}+2q^{-2}+2q^{-3}+q^{-4}),
// which keeps every later linear combination of these values on one shared
// denominator (no cross-multiplication growth).
inline const SymRat& macdonald_phi0_symbolic(const CosetIndex& c) {
    static std::mutex mu;
    static std::map<CosetIndex, SymRat> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;

    const long l = c.ell, m = c.m;
    const LaurentPoly common = detail::one_minus(1, 0) * detail::one_minus(0, 1) *
                               detail::one_minus(1, 1) * detail::one_minus(1, -1);
    LaurentPoly num(0);
    for (int i = 0; i < 8; ++i) {
        LaurentPoly ni(1), di(1);
        for (int f = 0; f < 4; ++f) {
            int ea = detail::kMacdonaldX[i][f][0], eb = detail::kMacdonaldX[i][f][1];
            ni = ni * detail::one_minus(ea, eb, -2);  // (1 - q^{-1} x)
            di = di * detail::one_minus(ea, eb);      // (1 - x)
        }
        ni = ni * detail::monomial_quotient(di, common);
        // torus character: alpha^{..} beta^{..} gamma^{2m+l}; the even part
        // of gamma^{2m+l} is the monomial (alpha*beta)^{-floor((2m+l)/2)}
        long ea = detail::kMacdonaldB[i][0][0] * m + detail::kMacdonaldB[i][0][1] * l;
        long eb = detail::kMacdonaldB[i][1][0] * m + detail::kMacdonaldB[i][1][1] * l;
        long ghalf = (2 * m + l) / 2;
        Mono bm = mono_one();
        // q^{-(4m+3l)/2} prefactor: the half modulus character of the Borel
        // at diag(w^{l+2m}, w^{l+m}, 1, w^m)
        bm[VR] = static_cast<std::int32_t>(-(4 * m + 3 * l));
        bm[VA] = static_cast<std::int32_t>(ea - ghalf);
        bm[VB] = static_cast<std::int32_t>(eb - ghalf);
        num = num + ni * LaurentPoly::term(bm, BigRat(1));
    }
    LaurentPoly den8(1);
    for (int j = 1; j <= 4; ++j)
        den8 = den8 + LaurentPoly::var(VR, -2 * j) * (j == 4 ? BigRat(1) : BigRat(2));
    RatFrac frac(num, common * den8);
    // odd 2m+l leaves one loose factor of gamma
    SymRat value = (l % 2 == 0) ? SymRat(frac) : SymRat(RatFrac(0L), frac);
    return memo.emplace(c, std::move(value)).first->second;
}

// Spherical function at h(ell, m).  The returned expression is the same in
// both modes (sqrt(q) and gamma are irrational at any numeric bundle, so
// they stay formal); a numeric bundle's admissibility was checked at
// construction, and its closed value comes from macdonald_phi0_value.
inline const SymRat& macdonald_phi0(const SatakeParams&, const CosetIndex& c) {
    return macdonald_phi0_symbolic(c);
}

// Exact value in Q[sqrt(q), gamma] at a numeric parameter bundle.
inline BiQuad macdonald_phi0_value(const SatakeParams& p, const CosetIndex& c) {
    return eval_biquad(macdonald_phi0_symbolic(c), p.point());
}

}  // namespace sib

#pragma once

// Verification-only: literal re-evaluation of the spherical-function table
// at exact numeric parameters, term by term in the quadratic algebra.  This
// path shares no polynomial machinery with the symbolic implementation (no
// Laurent fractions, no common-denominator rewrite), so agreement between
// the two is a genuine cross-check of both transcriptions.

#include "sib/biquad.hpp"
#include "sib/fraction.hpp"
#include "sib/rational.hpp"
#include "sib/symrat.hpp"

namespace sib::oracle {

namespace detail {

// One summand: four factor arguments x = alpha^{xe[i][0]} beta^{xe[i][1]}
// and the torus character alpha^{am*m + al*ell} beta^{bm*m + bl*ell}.
struct SummandRow {
    int xe[4][2];
    int am, al, bm, bl;
};

inline constexpr SummandRow kSummands[8] = {
    {{{-1, 1}, {0, -1}, {-1, -1}, {-1, 0}}, 2, 1, 1, 1},
    {{{1, -1}, {-1, 0}, {-1, -1}, {0, -1}}, 1, 1, 2, 1},
    {{{-1, -1}, {0, 1}, {-1, 1}, {-1, 0}}, 2, 1, 1, 0},
    {{{1, 1}, {-1, 0}, {-1, 1}, {0, 1}}, 1, 1, 0, 0},
    {{{-1, -1}, {1, 0}, {1, -1}, {0, -1}}, 1, 0, 2, 1},
    {{{1, 1}, {0, -1}, {1, -1}, {1, 0}}, 0, 0, 1, 1},
    {{{-1, 1}, {1, 0}, {1, 1}, {0, 1}}, 1, 0, 0, 0},
    {{{1, -1}, {0, 1}, {1, 1}, {1, 0}}, 0, 0, 1, 0},
};

}  // namespace detail

inline BiQuad macdonald_phi0_direct(const NumericPoint& pt, long ell, long m) {
    BiQuadCtx ctx = pt.ctx();
    const BigRat qi = BigRat(1) / pt.q;
    BiQuad acc(ctx, BigRat(0));
    for (const auto& row : detail::kSummands) {
        BigRat a(1);
        for (const auto& xe : row.xe) {
            BigRat x = pow_rat(pt.alpha, xe[0]) * pow_rat(pt.beta, xe[1]);
            if (x == 1) throw PoleError("1 - x with x = 1 in direct summation");
            a *= (1 - qi * x) / (1 - x);
        }
        long ea = row.am * m + row.al * ell;
        long eb = row.bm * m + row.bl * ell;
        BiQuad b = BiQuad(ctx, pow_rat(pt.alpha, ea) * pow_rat(pt.beta, eb)) *
                   BiQuad::g(ctx).pow(2 * m + ell);
        acc = acc + b * a;
    }
    BigRat den = 1 + 2 * qi + 2 * qi * qi + 2 * qi * qi * qi + qi * qi * qi * qi;
    return acc * (BigRat(1) / den) * BiQuad::s(ctx).pow(-(4 * m + 3 * ell));
}

}  // namespace sib::oracle

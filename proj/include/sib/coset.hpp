#pragma once

// Double-coset classifier: which h(ell, m) a unipotent-times-torus element
// lands in, read off from valuations alone.  Zero gets valuation +infinity,
// encoded as a saturating sentinel so the min-formulas need no special
// cases.

#include "sib/rational.hpp"
#include "sib/satake.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sib {

// Large enough that sums of two sentinels stay positive and dwarf any real
// valuation in range.
inline constexpr long kValInf = std::numeric_limits<long>::max() / 4;

inline long valuation_or_inf(const BigRat& x, const BigInt& p) {
    return x == 0 ? kValInf : valuation(x, p);
}

// g = n(x,y,z) * diag(1,u,u,1) with v(u) in {0,1} lands in the double coset
// of h(ell, m) where
//   M    = min(0, v(u)+v(xz-y^2), v(ux), v(uy), v(z))
//   ell  = v(u) + 2*(min(0, v(ux), v(y), v(z)) - M)
//   m    = M - 2*min(0, v(ux), v(y), v(z))
inline CosetIndex classify_double_coset(const BigRat& x, const BigRat& y, const BigRat& z,
                                        const BigRat& u, const BigInt& p) {
    if (u == 0) throw std::invalid_argument("torus entry u must be nonzero");
    const long vu = valuation(u, p);
    if (vu != 0 && vu != 1)
        throw std::invalid_argument("torus entry u must have valuation 0 or 1");
    auto sat2 = [](long a) { return std::min(a, kValInf); };
    const long vux = sat2(vu + valuation_or_inf(x, p));
    const long vuy = sat2(vu + valuation_or_inf(y, p));
    const long vy = valuation_or_inf(y, p);
    const long vz = valuation_or_inf(z, p);
    const long vdet = sat2(vu + valuation_or_inf(x * z - y * y, p));

    const long inner = std::min({0L, vux, vy, vz});
    const long M = std::min({0L, vdet, vux, vuy, vz});
    return CosetIndex(vu + 2 * (inner - M), M - 2 * inner);
}

}  // namespace sib

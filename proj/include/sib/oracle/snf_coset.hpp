#pragma once

// Verification-only: classify the double coset of
// n(x,y,z) * diag(1,u,u,1) by Smith invariants instead of the closed
// min-formulas.  The p-adic elementary-divisor exponents are minima of
// valuations of k x k minors; after normalizing away the center, the
// exponent multiset {0, m, ell+m, ell+2m} pins (ell, m) uniquely.

#include "sib/rational.hpp"
#include "sib/satake.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sib::oracle {

namespace detail {

inline constexpr long kInf = std::numeric_limits<long>::max() / 4;

// Determinant of the submatrix of rows/cols selected by bitmasks.
inline BigRat minor_det(const std::array<std::array<BigRat, 4>, 4>& m, unsigned rows,
                        unsigned cols) {
    std::vector<int> r, c;
    for (int i = 0; i < 4; ++i) {
        if (rows & (1u << i)) r.push_back(i);
        if (cols & (1u << i)) c.push_back(i);
    }
    const std::size_t k = r.size();
    // Laplace expansion along the first selected row.
    std::vector<std::vector<BigRat>> a(k, std::vector<BigRat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m[r[i]][c[j]];
    // iterative elimination-free evaluation for k <= 4
    std::function<BigRat(std::vector<std::vector<BigRat>>&)> det =
        [&det](std::vector<std::vector<BigRat>>& mm) -> BigRat {
        const std::size_t n = mm.size();
        if (n == 1) return mm[0][0];
        BigRat acc(0);
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (mm[0][j] != 0) {
                std::vector<std::vector<BigRat>> sub(n - 1, std::vector<BigRat>(n - 1));
                for (std::size_t i = 1; i < n; ++i) {
                    std::size_t cc = 0;
                    for (std::size_t jj = 0; jj < n; ++jj) {
                        if (jj == j) continue;
                        sub[i - 1][cc++] = mm[i][jj];
                    }
                }
                acc += BigRat(sign) * mm[0][j] * det(sub);
            }
            sign = -sign;
        }
        return acc;
    };
    return det(a);
}

}  // namespace detail

inline CosetIndex snf_coset_oracle(const BigRat& x, const BigRat& y, const BigRat& z,
                                   const BigRat& u, const BigInt& p) {
    std::array<std::array<BigRat, 4>, 4> m = {{{BigRat(1), BigRat(0), x * u, y},
                                               {BigRat(0), u, y * u, z},
                                               {BigRat(0), BigRat(0), u, BigRat(0)},
                                               {BigRat(0), BigRat(0), BigRat(0), BigRat(1)}}};
    long delta_prev = 0;
    std::array<long, 4> e{};
    for (int k = 1; k <= 4; ++k) {
        long delta = detail::kInf;
        for (unsigned rows = 0; rows < 16; ++rows) {
            if (__builtin_popcount(rows) != k) continue;
            for (unsigned cols = 0; cols < 16; ++cols) {
                if (__builtin_popcount(cols) != k) continue;
                BigRat d = detail::minor_det(m, rows, cols);
                if (d != 0) delta = std::min(delta, valuation(d, p));
            }
        }
        if (delta >= detail::kInf) throw std::logic_error("singular coset matrix");
        e[static_cast<std::size_t>(k - 1)] = delta - delta_prev;
        delta_prev = delta;
    }
    std::sort(e.begin(), e.end());
    const long base = e[0];
    for (long& v : e) v -= base;
    if (e[3] != e[1] + e[2])
        throw std::logic_error("exponent multiset is not of coset shape");
    return CosetIndex(e[2] - e[1], e[1]);
}

}  // namespace sib::oracle

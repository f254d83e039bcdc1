#pragma once

// Test oracle: index-1 Jacobi forms on the honest (n, r) coefficient grid.
// The production tables collapse coefficients to a function of D = 4n - r^2
// up front; here the grid is kept two-dimensional through the arithmetic, so
// that the collapse itself becomes a checkable property of the result.

#include "sib/cohen.hpp"
#include "sib/qexp.hpp"
#include "sib/rational.hpp"

#include <stdexcept>
#include <vector>

namespace sib::oracle {

// grid[n][r + r_max] = c(n, r) for 0 <= n <= n_max, |r| <= r_max.
struct JacobiGrid {
    long n_max = 0;
    long r_max = 0;
    std::vector<std::vector<BigRat>> c;

    const BigRat& at(long n, long r) const {
        if (n < 0 || n > n_max || r < -r_max || r > r_max) throw std::out_of_range("JacobiGrid: out of range");
        return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + r_max)];
    }
    BigRat& at(long n, long r) {
        return const_cast<BigRat&>(static_cast<const JacobiGrid&>(*this).at(n, r));
    }
};

inline JacobiGrid grid_zero(long n_max, long r_max) {
    JacobiGrid g;
    g.n_max = n_max;
    g.r_max = r_max;
    g.c.assign(static_cast<std::size_t>(n_max) + 1,
               std::vector<BigRat>(static_cast<std::size_t>(2 * r_max) + 1, BigRat(0)));
    return g;
}

// The weight-k index-1 Jacobi-Eisenstein grid: c(n, r) = H(k-1, 4n - r^2)
// normalized to c(0, 0) = 1, and zero where 4n - r^2 < 0.
inline JacobiGrid eisenstein_grid(int k, long n_max, long r_max) {
    JacobiGrid g = grid_zero(n_max, r_max);
    BigRat h0 = cohen_number(k - 1, 0);
    for (long n = 0; n <= n_max; ++n)
        for (long r = -r_max; r <= r_max; ++r) {
            long d = 4 * n - r * r;
            if (d < 0) continue;
            BigRat v = cohen_number(k - 1, d) / h0;
            v.canonicalize();
            g.at(n, r) = v;
        }
    return g;
}

// f(tau) * phi(tau, z): convolution in the q-variable only.
inline JacobiGrid grid_scale_by_form(const QExpansion& f, const JacobiGrid& phi) {
    JacobiGrid g = grid_zero(phi.n_max, phi.r_max);
    for (long n = 0; n <= g.n_max; ++n)
        for (long r = -g.r_max; r <= g.r_max; ++r) {
            BigRat acc(0);
            for (long m = 0; m <= n; ++m) acc += f.at(m) * phi.at(n - m, r);
            acc.canonicalize();
            g.at(n, r) = acc;
        }
    return g;
}

inline JacobiGrid grid_sub(const JacobiGrid& a, const JacobiGrid& b) {
    JacobiGrid g = grid_zero(a.n_max, a.r_max);
    for (long n = 0; n <= g.n_max; ++n)
        for (long r = -g.r_max; r <= g.r_max; ++r) g.at(n, r) = a.at(n, r) - b.at(n, r);
    return g;
}

inline JacobiGrid grid_scale(const BigRat& s, const JacobiGrid& a) {
    JacobiGrid g = grid_zero(a.n_max, a.r_max);
    for (long n = 0; n <= g.n_max; ++n)
        for (long r = -g.r_max; r <= g.r_max; ++r) {
            g.at(n, r) = s * a.at(n, r);
            g.at(n, r).canonicalize();
        }
    return g;
}

}  // namespace sib::oracle

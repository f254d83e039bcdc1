#pragma once

// Smith normal form over the integers with all four transform matrices
// tracked, so callers can convert between the original and the diagonal
// basis in both directions.

#include "sib/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sib {

using IntMat = std::vector<std::vector<BigInt>>;

inline IntMat int_identity(std::size_t n) {
    IntMat m(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMat c(n, std::vector<BigInt>(p, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

// d = u * input * v, d diagonal with d[i][i] | d[i+1][i+1] and entries >= 0.
struct SnfResult {
    IntMat d;
    IntMat u, u_inv;  // row transform and its inverse
    IntMat v, v_inv;  // column transform and its inverse
};

inline SnfResult smith_normal_form(IntMat a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    SnfResult res;
    res.u = int_identity(rows);
    res.u_inv = int_identity(rows);
    res.v = int_identity(cols);
    res.v_inv = int_identity(cols);

    // elementary operations, mirrored onto the transforms
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(res.u[i], res.u[j]);
        for (std::size_t k = 0; k < rows; ++k) std::swap(res.u_inv[k][i], res.u_inv[k][j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows; ++k) std::swap(a[k][i], a[k][j]);
        for (std::size_t k = 0; k < cols; ++k) std::swap(res.v[k][i], res.v[k][j]);
        std::swap(res.v_inv[i], res.v_inv[j]);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        // row dst += f * row src
        for (std::size_t k = 0; k < cols; ++k) a[dst][k] += f * a[src][k];
        for (std::size_t k = 0; k < rows; ++k) res.u[dst][k] += f * res.u[src][k];
        for (std::size_t k = 0; k < rows; ++k) res.u_inv[k][src] -= f * res.u_inv[k][dst];
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t k = 0; k < rows; ++k) a[k][dst] += f * a[k][src];
        for (std::size_t k = 0; k < cols; ++k) res.v[k][dst] += f * res.v[k][src];
        for (std::size_t k = 0; k < cols; ++k) res.v_inv[src][k] -= f * res.v_inv[dst][k];
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t k = 0; k < cols; ++k) a[i][k] = -a[i][k];
        for (std::size_t k = 0; k < rows; ++k) res.u[i][k] = -res.u[i][k];
        for (std::size_t k = 0; k < rows; ++k) res.u_inv[k][i] = -res.u_inv[k][i];
    };

    const std::size_t t = rows < cols ? rows : cols;
    for (std::size_t p = 0; p < t; ++p) {
        for (;;) {
            // locate the entry of smallest nonzero magnitude in the submatrix
            std::size_t bi = p, bj = p;
            bool found = false;
            for (std::size_t i = p; i < rows; ++i)
                for (std::size_t j = p; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    if (!found || cmp(abs(a[i][j]), abs(a[bi][bj])) < 0) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
                }
            if (!found) goto done;  // remaining submatrix is zero
            if (bi != p) row_swap(p, bi);
            if (bj != p) col_swap(p, bj);
            if (a[p][p] < 0) row_negate(p);

            bool clean = true;
            for (std::size_t i = p + 1; i < rows; ++i)
                if (a[i][p] != 0) {
                    BigInt f = a[i][p] / a[p][p];
                    if (f != 0) row_add(i, p, -f);
                    if (a[i][p] != 0) clean = false;
                }
            for (std::size_t j = p + 1; j < cols; ++j)
                if (a[p][j] != 0) {
                    BigInt f = a[p][j] / a[p][p];
                    if (f != 0) col_add(j, p, -f);
                    if (a[p][j] != 0) clean = false;
                }
            if (!clean) continue;  // smaller remainders appeared; iterate

            // pivot must divide the remaining submatrix for the chain property
            bool divides = true;
            for (std::size_t i = p + 1; i < rows && divides; ++i)
                for (std::size_t j = p + 1; j < cols && divides; ++j)
                    if (a[i][j] % a[p][p] != 0) {
                        row_add(p, i, BigInt(1));  // pulls the bad entry into row p
                        divides = false;
                    }
            if (divides) break;
        }
    }
done:
    res.d = std::move(a);
    return res;
}

}  // namespace sib

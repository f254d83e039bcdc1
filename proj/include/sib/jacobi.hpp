#pragma once

// Jacobi forms of index 1 as discriminant-keyed coefficient tables, and the
// Kohnen plus-space forms they correspond to.
//
// An index-1 Jacobi form phi = sum c(n, r) q^n zeta^r has c(n, r) depending
// only on D = 4n - r^2, so it is stored as a map e(D) on D >= 0 with
// D == 0, 3 mod 4.  Multiplying by a modular form f(tau) = sum f_m q^m acts
// on the table as e'(D) = sum_m f_m e(D - 4m), which is how the two cusp
// form quotient constructions below are evaluated.

#include "sib/cohen.hpp"
#include "sib/qexp.hpp"
#include "sib/rational.hpp"

#include <map>
#include <stdexcept>

namespace sib {

// c(D) tables for the half-integral weight k - 1/2 plus space; keys cover
// every D with 0 <= D <= d_max, D == 0, 3 mod 4.
struct KohnenForm {
    int k = 0;  // the half-integral weight is k - 1/2
    long d_max = 0;
    std::map<long, BigRat> c;

    const BigRat& at(long d) const {
        if (d < 0 || d > d_max) throw std::out_of_range("KohnenForm: discriminant beyond table");
        auto it = c.find(d);
        if (it == c.end()) throw std::invalid_argument("KohnenForm: D must be 0 or 3 mod 4");
        return it->second;
    }
};

namespace detail {

// e'(D) = sum_{m >= 0, D - 4m >= 0} f_m e(D - 4m).
inline std::map<long, BigRat> jacobi_scale_by_form(const QExpansion& f, const std::map<long, BigRat>& e,
                                                   long d_max) {
    std::map<long, BigRat> out;
    for (long d = 0; d <= d_max; ++d) {
        long rem = d % 4;
        if (rem == 1 || rem == 2) continue;
        BigRat acc(0);
        for (long m = 0; 4 * m <= d; ++m) acc += f.at(m) * e.at(d - 4 * m);
        acc.canonicalize();
        out[d] = acc;
    }
    return out;
}

}  // namespace detail

// Index-1 Jacobi forms of weight k in {4, 6, 10, 12}: the two Eisenstein
// series with e(D) = H(k-1, D)/H(k-1, 0), and the two normalized cusp forms
//   phi_{10,1} = (E6 E_{4,1} - E4 E_{6,1}) / 144,
//   phi_{12,1} = (E4^2 E_{4,1} - E6 E_{6,1}) / 144.
inline KohnenForm jacobi_index1(int k, long d_max) {
    if (d_max < 0) throw std::invalid_argument("jacobi_index1: d_max must be >= 0");
    auto eisen_table = [d_max](int r) {
        BigRat h0 = cohen_number(r, 0);
        std::map<long, BigRat> e;
        for (long d = 0; d <= d_max; ++d) {
            long rem = d % 4;
            if (rem == 1 || rem == 2) continue;
            BigRat v = cohen_number(r, d) / h0;
            v.canonicalize();
            e[d] = v;
        }
        return e;
    };
    KohnenForm out;
    out.k = k;
    out.d_max = d_max;
    if (k == 4 || k == 6) {
        out.c = eisen_table(k - 1);
        return out;
    }
    if (k != 10 && k != 12) throw std::invalid_argument("jacobi_index1: weight not in {4,6,10,12}");
    const long n = d_max / 4 + 1;
    std::map<long, BigRat> e4 = eisen_table(3);
    std::map<long, BigRat> e6 = eisen_table(5);
    QExpansion f4 = eisenstein(4, n);
    QExpansion f6 = eisenstein(6, n);
    std::map<long, BigRat> lhs, rhs;
    if (k == 10) {
        lhs = detail::jacobi_scale_by_form(f6, e4, d_max);
        rhs = detail::jacobi_scale_by_form(f4, e6, d_max);
    } else {
        lhs = detail::jacobi_scale_by_form(f4 * f4, e4, d_max);
        rhs = detail::jacobi_scale_by_form(f6, e6, d_max);
    }
    for (auto& [d, v] : lhs) {
        v = (v - rhs.at(d)) / BigRat(144);
        v.canonicalize();
        if (BigInt(v.get_den()) != 1)
            throw std::logic_error("jacobi_index1: cusp coefficient table is not integral");
        out.c[d] = v;
    }
    if (out.c.at(0) != 0) throw std::logic_error("jacobi_index1: cusp form has nonzero constant term");
    return out;
}

}  // namespace sib

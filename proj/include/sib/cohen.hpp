#pragma once

// Bernoulli numbers, Bernoulli polynomials, generalized Bernoulli numbers of
// quadratic characters, and Cohen's class number function H(r, N).  All exact.
//
// Conventions.  B_1 = -1/2.  For a character chi mod m,
//   B_{n,chi} = m^{n-1} * sum_{a=1}^{m} chi(a) B_n(a/m),
// and L(1-n, chi) = -B_{n,chi} / n.  H(r, N) is supported on N = 0 and on
// N > 0 with N == 0, 3 mod 4; there -N = D f^2 with D the fundamental
// discriminant of Q(sqrt(-N)) and
//   H(r, N) = L(1-r, chi_D) * sum_{e | f} mu(e) chi_D(e) e^{r-1} sigma_{2r-1}(f/e).
// H(r, 0) = zeta(1-2r).  H(1, N) is the Hurwitz class number.

#include "sib/quadform.hpp"
#include "sib/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace sib {

// B_0, B_1, ..., B_n as exact rationals.
inline std::vector<BigRat> bernoulli_numbers(int n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1 solves for B_m.
    std::vector<BigRat> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    b.emplace_back(1);
    for (int m = 1; m <= n; ++m) {
        BigRat acc(0);
        BigInt binom(1);  // C(m+1, j), updated incrementally
        for (int j = 0; j < m; ++j) {
            acc += BigRat(binom) * b[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        BigRat bm = -acc / BigRat(binom);  // binom == C(m+1, m) = m+1
        bm.canonicalize();
        b.push_back(bm);
    }
    return b;
}

inline BigRat bernoulli_number(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
    static std::vector<BigRat> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<std::size_t>(n) >= cache.size()) cache = bernoulli_numbers(n + 8);
    return cache[static_cast<std::size_t>(n)];
}

// B_n(x) = sum_j C(n, j) B_j x^{n-j}, by Horner in x.
inline BigRat bernoulli_poly(int n, const BigRat& x) {
    BigRat acc(0);
    BigInt binom(1);  // C(n, j)
    for (int j = 0; j <= n; ++j) {
        acc = acc * x + BigRat(binom) * bernoulli_number(j);
        acc.canonicalize();
        binom = binom * (n - j) / (j + 1);
    }
    return acc;
}

// B_{n,chi} for the quadratic character chi_D attached to a fundamental
// discriminant D (chi_D(a) via the Kronecker symbol).
inline BigRat generalized_bernoulli(int n, const FundamentalDisc& D) {
    const long m = D.d < 0 ? -D.d : D.d;
    BigRat acc(0);
    for (long a = 1; a <= m; ++a) {
        int chi = kronecker(D, BigInt(a));
        if (chi == 0) continue;
        BigRat x(a, m);
        x.canonicalize();
        acc += BigRat(chi) * bernoulli_poly(n, x);
    }
    acc.canonicalize();
    BigInt scale = pow_int(BigInt(m), static_cast<unsigned>(n - 1));
    BigRat out = acc * BigRat(scale);
    out.canonicalize();
    return out;
}

// L(1-r, chi_D) = -B_{r, chi_D} / r.
inline BigRat quadratic_l_negative(int r, const FundamentalDisc& D) {
    BigRat v = -generalized_bernoulli(r, D) / BigRat(r);
    v.canonicalize();
    return v;
}

namespace detail {

// Moebius function by trial division; n >= 1.
inline int moebius(long n) {
    int m = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

inline BigInt sigma_power(long n, unsigned k) {
    BigInt s(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += pow_int(BigInt(d), k);
        if (d != n / d) s += pow_int(BigInt(n / d), k);
    }
    return s;
}

}  // namespace detail

// Cohen's H(r, N).  Zero off the 0, 3 mod 4 support; zeta(1-2r) at N = 0.
inline BigRat cohen_number(int r, long n) {
    if (r < 1) throw std::invalid_argument("cohen_number: r must be >= 1");
    if (n < 0) throw std::invalid_argument("cohen_number: N must be >= 0");
    if (n == 0) {
        BigRat v = -bernoulli_number(2 * r) / BigRat(2 * r);
        v.canonicalize();
        return v;
    }
    long rem = n % 4;
    if (rem == 1 || rem == 2) return BigRat(0);
    // -N = D f^2 with D fundamental: scan square divisors for the split.
    long dd = 0, f = 0;
    for (long g = 1; g * g <= n; ++g) {
        if (n % (g * g)) continue;
        long cand = -(n / (g * g));
        if (is_fundamental(cand)) {
            dd = cand;
            f = g;
            break;
        }
    }
    if (f == 0) throw std::logic_error("cohen_number: no fundamental split");
    FundamentalDisc D(dd);
    BigRat lead = quadratic_l_negative(r, D);
    BigRat tail(0);
    for (long e = 1; e <= f; ++e) {
        if (f % e) continue;
        int mu = detail::moebius(e);
        if (mu == 0) continue;
        int chi = kronecker(D, BigInt(e));
        if (chi == 0) continue;
        BigRat term = BigRat(mu * chi) * BigRat(pow_int(BigInt(e), static_cast<unsigned>(r - 1))) *
                      BigRat(detail::sigma_power(f / e, static_cast<unsigned>(2 * r - 1)));
        tail += term;
    }
    BigRat out = lead * tail;
    out.canonicalize();
    return out;
}

}  // namespace sib

#pragma once

// Central values of quadratic twists via a smoothed approximate functional
// equation, plus direct Dirichlet-series evaluation with explicit tail
// control, plus the completed zeta function.
//
// Normalization: for a level-one normalized eigenform g of even weight w,
// coefficients enter in the analytic normalization lambda(n) = a(n) /
// n^{(w-1)/2}, so the functional equation relates s and 1-s.  The twisted
// completed function
//
//   Lambda(s) = (|d|/2pi)^{s+(w-1)/2} Gamma(s+(w-1)/2) L(s, g x chi_d)
//
// satisfies Lambda(s) = eps Lambda(1-s) with root number
//
//   eps = chi_d(-1) (-1)^{w/2}.
//
// At the center the shifted gamma argument is the integer w/2, so the
// Mellin cutoff weights reduce to finite exponential sums
//
//   P(y) = Gamma(w/2, y) / Gamma(w/2) = e^{-y} sum_{j < w/2} y^j / j!,
//
// and for every cutoff X > 0, with Q = |d| / (2 pi),
//
//   L(1/2) = (1/(w/2-1)!) sum_n  a(n) chi_d(n) n^{-w/2}
//                                [ P(n/(QX)) + eps P(nX/Q) ].
//
// The identity holds for each X separately; comparing two cutoffs measures
// the truncation honestly, and a value is only released when they agree.

#include <functional>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "sib/cohen.hpp"
#include "sib/qexp.hpp"
#include "sib/quadform.hpp"
#include "sib/real.hpp"
#include "sib/report.hpp"

namespace sib {

struct CentralValue {
    Real value;        // L(1/2, g x chi_d), analytic normalization
    Real error_bound;  // truncation allowance plus the observed cutoff delta
    long coefficients_used = 0;
    Real cutoff_x;     // cutoff of the released value (its partner is 2X)
};

namespace detail {

// P(y) = e^{-y} sum_{j<m} y^j / j!, the regularized upper incomplete gamma
// at integer first argument; decreasing from 1 to 0.
inline Real regularized_upper_gamma(int m, const Real& y) {
    Real term = 1, acc = 1;
    for (int j = 1; j < m; ++j) {
        term *= y / j;
        acc += term;
    }
    return exp(-y) * acc;
}

}  // namespace detail

// Central L-value of g twisted by the quadratic character of fundamental
// discriminant d < 0; d = 1 selects the trivial twist (the untwisted
// value).  Throws when the expansion of g is too short for the truncation
// bound (the message carries the required count) and when the two cutoffs
// disagree (the message carries both values).
inline CentralValue twisted_central_value(const QExpansion& g, long d,
                                          const Real& tol_in) {
    if (g.level != 1) throw std::invalid_argument("level-one source form required");
    if (g.weight < 4 || g.weight % 2 != 0)
        throw std::invalid_argument("even weight at least 4 required");
    if (g.prec() < 1 || g.at(1) != 1)
        throw std::invalid_argument("normalized eigenform required (a(1) = 1)");
    const bool trivial = d == 1;
    if (!trivial && !(d < 0 && is_fundamental(d)))
        throw std::invalid_argument(
            "twist discriminant must be 1 or a negative fundamental discriminant");
    if (!(tol_in > 0 && tol_in < 1)) throw std::invalid_argument("tolerance must lie in (0, 1)");
    const Real tol = std::max(tol_in, Real(1e-10));  // release floor

    const int m2 = g.weight / 2;
    const int eps = (trivial ? 1 : -1) * (m2 % 2 == 0 ? 1 : -1);
    const long cond = trivial ? 1 : -d;
    const Real q_scale = Real(cond) / (2 * real_pi());

    // Truncation: the slowest-decaying weight across both cutoffs is
    // P(n/(2Q)).  |a(n)| n^{-w/2} <= d(n) n^{-1/2} <= sqrt(n), and the terms
    // beyond the gamma hump shrink at least geometrically with unit ratio
    // bounded via e^{-1/(2Q)}, giving the (2Q + 2) tail multiplier.
    const Real tail_allowance = tol / 1000;
    const long hump = 8 * (static_cast<long>(static_cast<double>(q_scale)) + 1) * (m2 + 4);
    long n_req = 0;
    for (long n = 1;; ++n) {
        if (n > hump) {
            const Real bound = 2 * sqrt(Real(n)) *
                               detail::regularized_upper_gamma(m2, Real(n) / (2 * q_scale)) *
                               (2 * q_scale + 2);
            if (bound < tail_allowance) {
                n_req = n;
                break;
            }
        }
        if (n > 50'000'000)
            throw std::runtime_error("truncation bound failed to close");
    }
    if (g.prec() < n_req)
        throw std::runtime_error("insufficient coefficients: need " + std::to_string(n_req) +
                                 " terms of the source form, have " + std::to_string(g.prec()));

    std::vector<int> chi(static_cast<std::size_t>(n_req) + 1, 1);
    if (!trivial) {
        const FundamentalDisc D(d);
        for (long n = 1; n <= n_req; ++n)
            chi[static_cast<std::size_t>(n)] = kronecker(D, BigInt(n));
    }

    const auto eval_at = [&](const Real& x_cut) {
        Real s = 0;
        for (long n = 1; n <= n_req; ++n) {
            if (chi[static_cast<std::size_t>(n)] == 0) continue;
            const BigRat& an = g.at(n);
            if (an == 0) continue;
            const Real coef =
                to_real(an) / to_real(pow_int(BigInt(n), static_cast<unsigned long>(m2)));
            const Real near = detail::regularized_upper_gamma(m2, Real(n) / (q_scale * x_cut));
            const Real far = detail::regularized_upper_gamma(m2, Real(n) * x_cut / q_scale);
            s += chi[static_cast<std::size_t>(n)] * coef * (near + eps * far);
        }
        return s;
    };
    const Real v1 = eval_at(Real(1));
    const Real v2 = eval_at(Real(2));

    const Real diff = abs(v1 - v2);
    if (diff > tol * std::max(abs(v1), Real(1e-15)))
        throw std::runtime_error("cutoff disagreement: value(X=1) = " + render_real(v1) +
                                 ", value(X=2) = " + render_real(v2));

    CentralValue out;
    out.value = v1;
    out.error_bound = diff + 2 * tail_allowance;
    out.coefficients_used = n_req;
    out.cutoff_x = Real(1);
    return out;
}

struct DirichletSeries {
    std::function<Real(long)> a;  // n-th Dirichlet coefficient
    Real abscissa = Real(1);      // abscissa of absolute convergence
    // Coefficients identically 1 past every finite prefix (the zeta
    // pattern): enables the Euler-Maclaurin tail with a rigorous remainder.
    bool unit_tail = false;
};

struct SeriesValue {
    Real value;
    // Rigorous Euler-Maclaurin remainder on the unit-tail path; the
    // observed half-to-full doubling delta on the generic path, where a
    // pointwise coefficient bound would be astronomically conservative.
    Real tail_bound;
    long terms_used = 0;
};

// Value of sum a(n) n^{-s} for s at least 1/4 to the right of the
// abscissa.  unit_tail sources close the tail with Euler-Maclaurin applied
// to sum_{n>N} n^{-s} (remainder bounded by the first omitted correction
// for real s); generic sources are summed to the term budget and the
// doubling self-consistency delta must come in under tol.
inline SeriesValue dirichlet_series_value(const DirichletSeries& series, const Real& s,
                                          const Real& tol, long n_terms = 0) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const Real margin = s - series.abscissa;
    if (!(margin >= Real(1) / 4))
        throw std::invalid_argument("s too close to the abscissa of absolute convergence: margin " +
                                    render_real(margin) + ", need at least 0.25");

    SeriesValue out;
    if (series.unit_tail) {
        const long N = n_terms > 0 ? n_terms : 64;
        Real val = 0;
        for (long n = 1; n <= N; ++n) val += series.a(n) * pow(Real(n), -s);
        // sum_{n>N} n^{-s} = N^{1-s}/(s-1) - N^{-s}/2
        //   + sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1} + R
        val += pow(Real(N), 1 - s) / (s - 1) - pow(Real(N), -s) / 2;
        Real rising = s;
        Real npow = pow(Real(N), -s - 1);
        Real remainder = 0;
        for (int j = 1;; ++j) {
            const Real term = to_real(bernoulli_number(2 * j)) /
                              to_real(factorial(static_cast<unsigned long>(2 * j))) * rising * npow;
            if (j > 10) {
                remainder = abs(term);  // first omitted correction bounds R
                break;
            }
            val += term;
            rising *= (s + 2 * j - 1) * (s + 2 * j);
            npow /= Real(N) * Real(N);
        }
        if (remainder > tol)
            throw std::runtime_error("tail remainder " + render_real(remainder) +
                                     " exceeds tolerance; increase the prefix length");
        out.value = val;
        out.tail_bound = remainder;
        out.terms_used = N;
        return out;
    }

    const long N = n_terms > 0 ? n_terms : (1L << 18);
    if (N < 16) throw std::invalid_argument("term budget too small");
    const long half = N / 2;
    Real full = 0, at_half = 0;
    for (long n = 1; n <= N; ++n) {
        full += series.a(n) * pow(Real(n), -s);
        if (n == half) at_half = full;
    }
    const Real delta = abs(full - at_half);
    if (delta > tol)
        throw std::runtime_error("series not settled at the term budget: doubling delta " +
                                 render_real(delta) + " exceeds tolerance " + render_real(tol));
    out.value = full;
    out.tail_bound = delta;
    out.terms_used = N;
    return out;
}

// pi^{-s/2} Gamma(s/2) zeta(s), right of the pole only.
inline Real completed_zeta(const Real& s) {
    if (!(s > 1))
        throw std::domain_error("completed zeta restricted to s > 1 (pole region rejected)");
    return pow(real_pi(), -s / 2) * boost::math::tgamma(s / 2) * boost::math::zeta(s);
}

}  // namespace sib

#pragma once

// Archimedean constants: the normalized Bessel-integral value at the
// identity, the gamma factors of the spin and adjoint L-functions, and a
// quadrature cross-check of the oscillatory integral identity
//
//   int_R (2 - ix)^{-(k - 1/2)} e^{-2 pi i x} dx
//       = (2 pi)^{k - 1/2} e^{-4 pi} / Gamma(k - 1/2).

#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "sib/quadform.hpp"
#include "sib/real.hpp"
#include "sib/report.hpp"

namespace sib {

struct ArchResult {
    int k = 0;
    long d = 0;
    Real j_infty_over_vol = Real(0);
    BigRat trace_s;
};

// Trace of the half-integral matrix attached to the principal form; an
// integer for every fundamental discriminant, by the parity split.
inline BigRat principal_trace(const FundamentalDisc& d) {
    auto m = s_matrix(d);
    return m[0][0] + m[1][1];
}

// Value of the archimedean integral at the identity, divided by the volume
// normalizer:  2^{4k-4} (|d|/4)^{k-3/2} e^{-4 pi Tr(S)}.  The exponential
// is ~1e-11 already at Tr(S) = 2 while the power factor reaches 2^{36} at
// k = 10, hence the wide-precision type.
inline ArchResult j_infty(int k, const FundamentalDisc& d) {
    if (k <= 2) throw std::invalid_argument("scalar weight must be at least 3");
    if (d.d >= 0)
        throw std::invalid_argument("imaginary quadratic discriminant required");
    ArchResult out;
    out.k = k;
    out.d = d.d;
    out.trace_s = principal_trace(d);
    const Real quarter = to_real(BigInt(-d.d)) / 4;
    out.j_infty_over_vol = pow(Real(2), 4 * k - 4) *
                           pow(quarter, Real(k) - Real(3) / 2) *
                           exp(-4 * real_pi() * to_real(out.trace_s));
    return out;
}

struct GammaFactors {
    int k = 0;
    Real linf_half;  // archimedean spin factor at the central point
    Real linf_ad;    // archimedean adjoint factor at the edge
    Real ratio;      // linf_half / linf_ad in closed form
};

// Gamma factors for scalar weight k:
//   linf_half = 2^4 (2 pi)^{-2k} Gamma(k-1)^2
//   linf_ad   = 2^5 (2 pi)^{-4k-1} Gamma(k-1)^2 Gamma(2k-1)
//   ratio     = (2 pi)^{2k+1} / (2 Gamma(2k-1)).
inline GammaFactors gamma_factors(int k) {
    if (k < 3) throw std::invalid_argument("scalar weight must be at least 3");
    GammaFactors g;
    g.k = k;
    const Real two_pi = 2 * real_pi();
    const Real gk1 = to_real(factorial(static_cast<unsigned long>(k - 2)));
    const Real g2k1 = to_real(factorial(static_cast<unsigned long>(2 * k - 2)));
    g.linf_half = 16 * pow(two_pi, -2 * k) * gk1 * gk1;
    g.linf_ad = 32 * pow(two_pi, -4 * k - 1) * gk1 * gk1 * g2k1;
    g.ratio = pow(two_pi, 2 * k + 1) / (2 * g2k1);
    return g;
}

// Numerical confirmation of the displayed integral identity.  The domain is
// truncated at T where the integration-by-parts tail bound
//   |tail| <= (2/pi) T^{-(k-1/2)}
// (boundary term plus the absolutely convergent derivative integral, both
// tails together) drops below tol/100 of the closed form; inside [-T, T]
// the integrand is smooth with period-one oscillation, resolved by 20-point
// Gauss-Legendre panels of unit width.  Conjugate symmetry folds everything
// onto [0, T]: the real part is even, the imaginary part odd.
inline VerificationReport arch_quadrature_check(int k, const Real& tol) {
    if (k < 3) throw std::invalid_argument("scalar weight must be at least 3");
    if (!(tol >= Real(1e-8) && tol <= Real(1e-2)))
        throw std::invalid_argument("tolerance must lie in [1e-8, 1e-2]");

    const Real w = Real(k) - Real(1) / 2;
    const Real two_pi = 2 * real_pi();
    const Real rhs = pow(two_pi, w) * exp(-2 * two_pi) / boost::math::tgamma(w);

    const Real target = tol * rhs / 100;
    const Real t_needed = pow(2 / (real_pi() * target), 1 / w);
    const long T = std::max<long>(10, static_cast<long>(static_cast<double>(t_needed)) + 1);

    const auto integrand = [&](const Real& x) {
        // real part of (2 - ix)^{-w} e^{-2 pi i x}
        const Real r2 = 4 + x * x;
        const Real theta = atan2(-x, Real(2));
        return pow(r2, -w / 2) * cos(w * theta + two_pi * x);
    };
    using GL = boost::math::quadrature::gauss<Real, 20>;
    Real acc = 0;
    for (long t = 0; t < T; ++t)
        acc += GL::integrate(integrand, Real(t), Real(t + 1));
    const Real lhs = 2 * acc;

    VerificationReport rep = make_report("arch-quadrature", lhs, rhs, tol);
    rep.params["k"] = std::to_string(k);
    rep.params["T"] = std::to_string(T);
    rep.params["panels"] = std::to_string(T);
    rep.params["tail_bound"] = render_real(2 / real_pi() * pow(Real(T), -w));
    return rep;
}

}  // namespace sib

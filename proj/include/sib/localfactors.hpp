#pragma once

// Local Bessel-integral quantities J_0 and J:
//  - spherical vectors when the quadratic torus algebra is ramified,
//  - P1-fixed vectors of Iwahori-spherical representations when it is the
//    unramified field (trivial torus character),
// plus the per-prime values used by the global assembly.

#include "sib/macdonald.hpp"
#include "sib/satake.hpp"
#include "sib/symrat.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace sib {

// Raised when a built-in consistency identity between two independently
// assembled expressions fails; always a regression, never a data error.
struct InternalIdentityError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class RamifiedPart { trivial_torus_rep, t_K };

// J_0 contributions for a spherical vector, split over the two orbits of
// the compact torus.
inline SymRat j0_spherical_ramified(const SatakeParams& p, RamifiedPart which) {
    auto phi = [&p](long l, long m) { return macdonald_phi0(p, CosetIndex(l, m)); };
    const SymRat q = SymRat::q();
    const SymRat q2 = SymRat::q(2);
    if (which == RamifiedPart::trivial_torus_rep)
        return SymRat(1L) - phi(0, 1) - q2 * phi(0, 2) + q2 * phi(2, 1);
    return q * phi(1, 0) - (q2 + q) * phi(1, 1) + q2 * phi(3, 0);
}

namespace detail {

// Normalizing constant with `apply` mapped over every atomic factor before
// the inversion.  Splitting gamma off into even/odd components introduces
// norm factors like (1 - beta alpha^{-1} q^{-1}) into the componentwise
// denominators; these vanish identically on the degenerate locus even
// though the constant itself is finite there, so any substitution onto that
// locus must happen factor by factor.
template <typename F>
SymRat norm_const_factored(int l, F&& apply) {
    if (l != 1 && l != -1) throw std::invalid_argument("l must be +1 or -1");
    const BigRat ls(l);
    const SymRat rinv = SymRat::r(-1);
    const SymRat q1 = SymRat::q(-1);
    const SymRat one(1L);

    SymRat num = apply(one + q1) * apply(one + q1) * apply(one + SymRat::q(-2));
    SymRat den = apply(one + ls * (SymRat::gamma() * SymRat::alpha() * rinv)) *
                 apply(one + ls * (SymRat::gamma() * rinv)) *
                 apply(one + ls * (SymRat::gamma(-1) * rinv)) *
                 apply(one + ls * (SymRat::gamma() * SymRat::beta() * rinv)) *
                 apply(one - SymRat::alpha() * q1) *
                 apply(one - SymRat::alpha(-1) * q1) *
                 apply(one - SymRat::beta() * q1) *
                 apply(one - SymRat::beta(-1) * q1);
    return num * den.inverse();
}

}  // namespace detail

// Normalizing constant relating J to J_0 in the ramified-torus case;
// l is the torus character's value on a uniformizer of the quadratic
// extension.
inline SymRat norm_const_ramified(const SatakeParams&, int l) {
    return detail::norm_const_factored(l, [](const SymRat& x) { return x; });
}

// Full local integral for a spherical vector.  Type I: the torus algebra is
// a ramified field and l = +-1 picks the character value; the result is
// identically 1.  The one-dimensional-core degenerate case substitutes
// alpha = t*q^{-1/2}, beta = t*q^{1/2}, gamma = t^{-1} (l forced to +1) and
// the result is identically 2.
inline SymRat j_spherical_ramified(const SatakeParams& p, ReprTag repr, int l) {
    SymRat j0t = j0_spherical_ramified(p, RamifiedPart::trivial_torus_rep);
    SymRat j0k = j0_spherical_ramified(p, RamifiedPart::t_K);
    if (repr == ReprTag::I)
        return norm_const_ramified(p, l) * (j0t + BigRat(l) * j0k);
    if (repr == ReprTag::IIb) {
        if (l != 1)
            throw std::invalid_argument("the degenerate case admits only l = +1");
        Subst s;
        s.abg = Subst::AbgBlock{SymRat::t() * SymRat::r(-1), SymRat::t() * SymRat::r(),
                                SymRat::t(-1)};
        SymRat c = detail::norm_const_factored(
            1, [&s](const SymRat& x) { return substitute(x, s); });
        return SymRat(2L) * c * (substitute(j0t, s) + substitute(j0k, s));
    }
    throw std::invalid_argument("spherical local integral needs type I or IIb");
}

// Diagonal matrix-coefficient data (lambda, mu) for the orthogonal
// P1-fixed basis vectors of each admissible type.
inline std::pair<SymRat, SymRat> lambda_mu(const P1Vector& v) {
    const LaurentPoly q = LaurentPoly::var(VR, 2);
    const LaurentPoly q2 = q * q;
    const LaurentPoly one(1);
    auto frac = [](LaurentPoly n, LaurentPoly d) { return SymRat(RatFrac(n, d)); };
    auto poly = [](const LaurentPoly& n) { return SymRat(RatFrac(n)); };

    switch (v.repr) {
        case ReprTag::I:
            switch (v.index) {
                case 1: return {poly((q - one) * q2), poly((q - one) * q2)};
                case 2: return {frac((q - one) * q2, q + one), poly((q - one) * q)};
                case 3: return {frac((q - one) * q2, q + one), SymRat()};
                case 4: return {SymRat(), SymRat()};
            }
            break;
        case ReprTag::IIIa:
            return {frac(-q2, q + one), SymRat()};
        case ReprTag::VIb:
            return {poly(-q2), poly(q)};
        case ReprTag::IIa:
        case ReprTag::Vb:
        case ReprTag::Vc:
        case ReprTag::VIa:
            return {frac((q - one) * q2, q + one), poly(-q)};
        default:
            break;
    }
    throw std::invalid_argument("no matrix-coefficient data for type " +
                                to_string(v.repr));
}

// J_0 for a P1-fixed vector: 1 - (q+1) q^{-3} lambda + q^{-2} mu.
inline SymRat j0_p1(const P1Vector& v) {
    auto [lam, mu] = lambda_mu(v);
    const SymRat q = SymRat::q();
    return SymRat(1L) - (q + SymRat(1L)) * SymRat::q(-3) * lam + SymRat::q(-2) * mu;
}

// Unramified Langlands L-factors as rational functions of the Satake
// parameters, evaluated at a half-integral point s.
struct LanglandsFactors {
    SymRat spin;          // parameters {gamma, alpha gamma, beta gamma, alpha beta gamma}
    SymRat spin_twisted;  // same, twisted by the unramified quadratic character
    SymRat adjoint;       // {alpha^{+-1}, beta^{+-1}, (alpha beta)^{+-1}, (alpha/beta)^{+-1}, 1, 1}
    SymRat standard;      // {1, alpha^{+-1}, beta^{+-1}}
};

inline LanglandsFactors spin_adjoint_factors(const SatakeParams&, const BigRat& s) {
    BigRat twos = s * 2;
    if (twos.get_den() != 1)
        throw std::invalid_argument("evaluation point must be half-integral");
    if (!fits_long(twos.get_num()))
        throw std::invalid_argument("evaluation point out of range");
    const SymRat qs = SymRat::r(static_cast<int>(-to_long(twos.get_num())));  // q^{-s}

    auto euler = [&qs](const std::vector<SymRat>& xs, int sign) {
        SymRat acc(1L);
        for (const SymRat& x : xs) acc = acc * (SymRat(1L) + BigRat(sign) * (x * qs));
        return acc.inverse();
    };
    const SymRat a = SymRat::alpha(), b = SymRat::beta(), g = SymRat::gamma();
    const std::vector<SymRat> spin = {g, a * g, b * g, a * b * g};
    const std::vector<SymRat> adjoint = {a,     SymRat::alpha(-1), b, SymRat::beta(-1),
                                         a * b, SymRat::alpha(-1) * SymRat::beta(-1),
                                         a * SymRat::beta(-1), SymRat::alpha(-1) * b,
                                         SymRat(1L), SymRat(1L)};
    const std::vector<SymRat> standard = {SymRat(1L), a, SymRat::alpha(-1), b,
                                          SymRat::beta(-1)};
    return {euler(spin, -1), euler(spin, +1), euler(adjoint, -1), euler(standard, -1)};
}

struct LocalFactorResult {
    SymRat j0;
    SymRat j;
    ReprClass repr;
    P1Vector vector;
    int l;  // torus character value on the quadratic uniformizer; 0 = n/a
};

// Full local integral for a P1-fixed vector in the unramified-torus,
// trivial-character regime.  For type I the ratio J/J_0 is assembled from
// first principles and cross-checked against the closed form
// L(1, Std)(1 - q^{-4}); a mismatch is a regression, not a data error.
// For the two non-generic survivors the ratio (1 + q^{-2}) is the table
// value itself (no independent derivation is on record).
inline LocalFactorResult j_p1(const P1Vector& v, const SatakeParams& p) {
    const SymRat j0 = j0_p1(v);
    const SymRat q1 = SymRat::q(-1);
    const SymRat one(1L);
    SymRat j;
    switch (v.repr) {
        case ReprTag::I: {
            LanglandsFactors at1 = spin_adjoint_factors(p, BigRat(1));
            LanglandsFactors athalf = spin_adjoint_factors(p, BigRat(1, 2));
            const SymRat lchi = (one + q1).inverse();
            const SymRat zeta2_inv = one - SymRat::q(-2);
            const SymRat zeta4_inv = one - SymRat::q(-4);
            SymRat m = at1.adjoint * lchi * zeta2_inv * zeta4_inv *
                       athalf.spin.inverse() * athalf.spin_twisted.inverse();
            SymRat closed = at1.standard * zeta4_inv;
            if (!(m == closed))
                throw InternalIdentityError(
                    "normalizing factor disagrees with its closed form");
            j = closed * j0;
            break;
        }
        case ReprTag::IIIa:
        case ReprTag::VIb:
            j = (one + SymRat::q(-2)) * j0;
            break;
        case ReprTag::IIa:
        case ReprTag::Vb:
        case ReprTag::Vc:
        case ReprTag::VIa:
            j = SymRat();  // J_0 is 0 and so is J
            break;
        default:
            throw std::invalid_argument("no local integral data for type " +
                                        to_string(v.repr));
    }
    return {j0, j, repr_class(v.repr), v, +1};
}

namespace detail {

inline void require_odd_prime(const BigInt& p) {
    if (p % 2 == 0) throw std::invalid_argument("level must be odd");
    if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("not an odd prime: " + to_string(p));
}

}  // namespace detail

// Per-prime factor entering the global assembly for a newform component at
// an odd prime of the level.
inline BigRat jp_global(ReprTag repr, const BigInt& p) {
    detail::require_odd_prime(p);
    const BigRat pinv = BigRat(1, p);
    const BigRat base = (1 + pinv * pinv) * (1 + pinv);
    switch (repr) {
        case ReprTag::IIIa:
            return base;
        case ReprTag::VIb:
            return base * 2;
        default:
            return BigRat(0);
    }
}

// Oldform branch: a p-spherical type I component occupied by a raised
// vector contributes L(1, Std)(1 - p^{-4}), with an extra p^{-1} for the
// two basis slots whose J_0 is q^{-1} (indices 1 and 3).
inline BigRat jp_global_oldform(const SatakeParams& sp, int index) {
    if (!sp.is_numeric())
        throw std::invalid_argument("oldform branch needs numeric Satake data");
    if (index < 1 || index > 4) throw std::invalid_argument("basis index must be 1..4");
    const NumericPoint& pt = sp.point();
    if (pt.q.get_den() != 1) throw std::invalid_argument("q must be integral");
    detail::require_odd_prime(pt.q.get_num());

    const BigRat qi = BigRat(1) / pt.q;
    BigRat lstd_inv = (1 - qi) * (1 - pt.alpha * qi) * (1 - qi / pt.alpha) *
                      (1 - pt.beta * qi) * (1 - qi / pt.beta);
    if (lstd_inv == 0) throw DivisionByZero();
    BigRat val = (1 - pow_rat(qi, 4)) / lstd_inv;
    if (index == 1 || index == 3) val *= qi;
    return val;
}

}  // namespace sib

#pragma once

// Elements of the coefficient algebra used by the local computations:
//     x = ev + gamma * od
// where ev, od are rational functions in {r, alpha, beta, t} and gamma is a
// formal square root with gamma^2 = (alpha*beta)^{-1}.  Since alpha*beta is
// not a square in the rational function field, {1, gamma} is a basis and
// componentwise equality is sound.
//
// r carries the half-power of the residue cardinality: q = r^2.  Expressions
// that are honest functions of q alone have r-exponents all even.

#include "sib/biquad.hpp"
#include "sib/fraction.hpp"
#include "sib/laurent.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sib {

class SymRat {
  public:
    SymRat() : ev_(), od_() {}
    explicit SymRat(long c) : ev_(c), od_() {}
    explicit SymRat(const BigRat& c) : ev_(c), od_() {}
    explicit SymRat(RatFrac even) : ev_(std::move(even)), od_() {}
    SymRat(RatFrac even, RatFrac odd) : ev_(std::move(even)), od_(std::move(odd)) {}

    static SymRat var(Var v, int exp = 1) {
        return SymRat(RatFrac(LaurentPoly::var(v, exp)));
    }
    static SymRat r(int exp = 1) { return var(VR, exp); }
    static SymRat alpha(int exp = 1) { return var(VA, exp); }
    static SymRat beta(int exp = 1) { return var(VB, exp); }
    static SymRat t(int exp = 1) { return var(VT, exp); }
    // q = r^2, exposed for readability at call sites.
    static SymRat q(int exp = 1) { return var(VR, 2 * exp); }
    static SymRat gamma(int exp = 1) {
        if (exp < 0) return gamma(-exp).inverse();
        SymRat g(RatFrac(0L), RatFrac(1L));
        return g.pow(exp);
    }

    const RatFrac& even_part() const { return ev_; }
    const RatFrac& odd_part() const { return od_; }
    bool is_zero() const { return ev_.is_zero() && od_.is_zero(); }
    bool is_even() const { return od_.is_zero(); }

    bool is_constant() const {
        return od_.is_zero() && ev_.is_constant();
    }
    BigRat constant_value() const { return ev_.constant_value(); }

    SymRat operator-() const { return SymRat(-ev_, -od_); }

    friend SymRat operator+(const SymRat& a, const SymRat& b) {
        return SymRat(a.ev_ + b.ev_, a.od_ + b.od_);
    }
    friend SymRat operator-(const SymRat& a, const SymRat& b) {
        return SymRat(a.ev_ - b.ev_, a.od_ - b.od_);
    }
    friend SymRat operator*(const SymRat& a, const SymRat& b) {
        // (e1 + g*o1)(e2 + g*o2) = e1 e2 + g^2 o1 o2 + g (e1 o2 + o1 e2)
        return SymRat(a.ev_ * b.ev_ + gamma_sq() * (a.od_ * b.od_),
                      a.ev_ * b.od_ + a.od_ * b.ev_);
    }
    friend SymRat operator*(const SymRat& a, const BigRat& s) {
        return SymRat(a.ev_ * s, a.od_ * s);
    }
    friend SymRat operator*(const BigRat& s, const SymRat& a) { return a * s; }

    SymRat inverse() const {
        // (e + g o)^{-1} = (e - g o) / (e^2 - g^2 o^2); the norm is an even
        // element, zero iff the element is zero or a zero divisor (the
        // latter cannot happen: the extension is a field).
        RatFrac norm = ev_ * ev_ - gamma_sq() * (od_ * od_);
        if (norm.is_zero()) throw DivisionByZero();
        return SymRat(ev_ / norm, -(od_ / norm));
    }

    friend SymRat operator/(const SymRat& a, const SymRat& b) {
        return a * b.inverse();
    }

    SymRat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        SymRat acc(1L);
        SymRat base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const SymRat& a, const SymRat& b) {
        return a.ev_ == b.ev_ && a.od_ == b.od_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (!ev_.is_zero()) out += ev_.str();
        if (!od_.is_zero()) {
            if (!out.empty()) out += " + ";
            out += "gamma*[" + od_.str() + "]";
        }
        return out;
    }

  private:
    static const RatFrac& gamma_sq() {
        static const RatFrac m{RatFrac(LaurentPoly::term(
            Mono{0, -1, -1, 0}, BigRat(1)))};
        return m;
    }

    RatFrac ev_, od_;
};

// ---------------------------------------------------------------------------
// Substitution.  Images are full algebra elements, so Weyl reflections such
// as (alpha, beta, gamma) -> (alpha, beta^{-1}, beta*gamma) are expressible.
// The three Satake coordinates are bound together or not at all: binding a
// subset would break the relation gamma^2 = (alpha*beta)^{-1}.

struct Subst {
    std::optional<SymRat> r;
    std::optional<SymRat> t;
    struct AbgBlock {
        SymRat alpha, beta, gamma;
    };
    std::optional<AbgBlock> abg;
};

namespace detail {

inline SymRat subst_poly(const LaurentPoly& p, const std::array<SymRat, kNumVars>& img) {
    SymRat acc;
    for (const auto& [m, c] : p.terms()) {
        SymRat term(c);
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            term = term * img[i].pow(m[i]);
        }
        acc = acc + term;
    }
    return acc;
}

inline SymRat subst_fraction(const RatFrac& f, const std::array<SymRat, kNumVars>& img) {
    SymRat den = subst_poly(f.den(), img);
    if (den.is_zero()) throw PoleError(f.den().str());
    return subst_poly(f.num(), img) / den;
}

}  // namespace detail

inline SymRat substitute(const SymRat& x, const Subst& s) {
    std::array<SymRat, kNumVars> img = {SymRat::r(), SymRat::alpha(), SymRat::beta(),
                                        SymRat::t()};
    SymRat gamma_img = SymRat::gamma();
    if (s.r) img[VR] = *s.r;
    if (s.t) img[VT] = *s.t;
    if (s.abg) {
        img[VA] = s.abg->alpha;
        img[VB] = s.abg->beta;
        gamma_img = s.abg->gamma;
        if (!(gamma_img * gamma_img * img[VA] * img[VB] == SymRat(1L)))
            throw std::invalid_argument(
                "inconsistent Satake substitution: gamma^2 * alpha * beta != 1");
    }
    SymRat even_img = detail::subst_fraction(x.even_part(), img);
    if (x.odd_part().is_zero()) return even_img;
    return even_img + gamma_img * detail::subst_fraction(x.odd_part(), img);
}

// ---------------------------------------------------------------------------
// Exact numeric evaluation in Q[s, g], s^2 = q, g^2 = 1/(alpha*beta).

struct NumericPoint {
    BigRat q;      // residue cardinality; must be nonzero
    BigRat alpha;  // nonzero rational Satake value
    BigRat beta;   // nonzero rational Satake value
    BigRat t = BigRat(1);

    BiQuadCtx ctx() const {
        if (q == 0 || alpha == 0 || beta == 0)
            throw std::invalid_argument("numeric point needs nonzero q, alpha, beta");
        return BiQuadCtx{q, BigRat(1) / (alpha * beta)};
    }
};

namespace detail {

inline BiQuad eval_fraction(const RatFrac& f, const std::array<BiQuad, kNumVars>& vals,
                            const BiQuad& zero, const BiQuad& one) {
    BiQuad den = f.den().eval(vals, zero, one);
    if (den.is_zero()) throw PoleError(f.den().str());
    try {
        return f.num().eval(vals, zero, one) * den.inverse();
    } catch (const DivisionByZero&) {
        // zero divisor in the quadratic algebra: the draw sits on the
        // singular locus of this denominator
        throw PoleError(f.den().str());
    }
}

}  // namespace detail

inline BiQuad eval_biquad(const SymRat& x, const NumericPoint& pt) {
    BiQuadCtx ctx = pt.ctx();
    BiQuad zero(ctx, BigRat(0));
    BiQuad one(ctx, BigRat(1));
    std::array<BiQuad, kNumVars> vals = {BiQuad::s(ctx), BiQuad(ctx, pt.alpha),
                                         BiQuad(ctx, pt.beta), BiQuad(ctx, pt.t)};
    BiQuad even = detail::eval_fraction(x.even_part(), vals, zero, one);
    if (x.odd_part().is_zero()) return even;
    return even + BiQuad::g(ctx) * detail::eval_fraction(x.odd_part(), vals, zero, one);
}

}  // namespace sib

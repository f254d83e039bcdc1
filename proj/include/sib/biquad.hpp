#pragma once

// Exact arithmetic in Q[s,g] with s^2 = q0 and g^2 = g2, both fixed
// rationals.  Values are 4-component vectors over the basis {1, s, g, s*g}.
// This is the numeric target for symbolic identities involving sqrt(q) and
// the square-root character value: equality checks stay exact instead of
// relying on floating-point tolerances.
//
// The algebra need not be a field (q0 or g2 may be rational squares), but
// inversion by the product of the three conjugates works whenever the
// rational norm is nonzero, which is all the callers need.

#include "sib/rational.hpp"
#include "sib/fraction.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace sib {

struct BiQuadCtx {
    BigRat q0;  // value of s^2 (the residue cardinality q)
    BigRat g2;  // value of g^2 (for Satake use: 1/(alpha*beta))
    friend bool operator==(const BiQuadCtx&, const BiQuadCtx&) = default;
};

class BiQuad {
  public:
    BiQuad() : c_{BigRat(0), BigRat(0), BigRat(0), BigRat(0)} {}
    BiQuad(BiQuadCtx ctx, BigRat c0)
        : ctx_(std::move(ctx)), c_{std::move(c0), BigRat(0), BigRat(0), BigRat(0)} {}
    BiQuad(BiQuadCtx ctx, std::array<BigRat, 4> c) : ctx_(std::move(ctx)), c_(std::move(c)) {}

    static BiQuad s(const BiQuadCtx& ctx) {
        return BiQuad(ctx, {BigRat(0), BigRat(1), BigRat(0), BigRat(0)});
    }
    static BiQuad g(const BiQuadCtx& ctx) {
        return BiQuad(ctx, {BigRat(0), BigRat(0), BigRat(1), BigRat(0)});
    }

    const BiQuadCtx& ctx() const { return ctx_; }
    const std::array<BigRat, 4>& coords() const { return c_; }
    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    const BigRat& rational_part() const { return c_[0]; }

    friend BiQuad operator+(const BiQuad& a, const BiQuad& b) {
        a.check(b);
        return BiQuad(a.ctx_, {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2],
                               a.c_[3] + b.c_[3]});
    }
    friend BiQuad operator-(const BiQuad& a, const BiQuad& b) {
        a.check(b);
        return BiQuad(a.ctx_, {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2],
                               a.c_[3] - b.c_[3]});
    }
    BiQuad operator-() const { return BiQuad(ctx_, {-c_[0], -c_[1], -c_[2], -c_[3]}); }

    friend BiQuad operator*(const BiQuad& a, const BiQuad& b) {
        a.check(b);
        const BigRat& q0 = a.ctx_.q0;
        const BigRat& g2 = a.ctx_.g2;
        const auto& x = a.c_;
        const auto& y = b.c_;
        std::array<BigRat, 4> z;
        z[0] = x[0] * y[0] + q0 * (x[1] * y[1]) + g2 * (x[2] * y[2]) +
               q0 * g2 * (x[3] * y[3]);
        z[1] = x[0] * y[1] + x[1] * y[0] + g2 * (x[2] * y[3] + x[3] * y[2]);
        z[2] = x[0] * y[2] + x[2] * y[0] + q0 * (x[1] * y[3] + x[3] * y[1]);
        z[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
        return BiQuad(a.ctx_, std::move(z));
    }
    friend BiQuad operator*(const BiQuad& a, const BigRat& s) {
        return BiQuad(a.ctx_, {a.c_[0] * s, a.c_[1] * s, a.c_[2] * s, a.c_[3] * s});
    }
    friend BiQuad operator*(const BigRat& s, const BiQuad& a) { return a * s; }

    // Conjugations s -> -s and g -> -g generate the norm form.
    BiQuad conj_s() const { return BiQuad(ctx_, {c_[0], -c_[1], c_[2], -c_[3]}); }
    BiQuad conj_g() const { return BiQuad(ctx_, {c_[0], c_[1], -c_[2], -c_[3]}); }

    BiQuad inverse() const {
        BiQuad z1 = conj_s();
        BiQuad y = (*this) * z1;           // lies in Q[g]
        BiQuad z2 = y.conj_g();
        BiQuad n = y * z2;                 // rational norm
        if (!n.is_rational()) throw std::logic_error("norm not rational");
        if (n.c_[0] == 0) throw DivisionByZero();
        BigRat inv = BigRat(1) / n.c_[0];
        return (z1 * z2) * inv;
    }

    friend BiQuad operator/(const BiQuad& a, const BiQuad& b) { return a * b.inverse(); }

    BiQuad pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        BiQuad acc(ctx_, BigRat(1));
        BiQuad base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const BiQuad& a, const BiQuad& b) {
        a.check(b);
        return a.c_ == b.c_;
    }

    std::string str() const {
        static const char* names[4] = {"", "*s", "*g", "*s*g"};
        std::string out;
        for (int i = 0; i < 4; ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += to_string(c_[i]) + names[i];
        }
        return out.empty() ? "0" : out;
    }

  private:
    void check(const BiQuad& o) const {
        if (!(ctx_ == o.ctx_)) throw std::logic_error("mixed BiQuad contexts");
    }

    BiQuadCtx ctx_;
    std::array<BigRat, 4> c_;
};

}  // namespace sib

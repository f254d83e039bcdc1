#pragma once

// Fractions of Laurent polynomials, stored unreduced.  Equality is decided
// by cross-multiplication; no multivariate gcd anywhere.  Integer content is
// stripped after every operation and the denominator's sign is fixed, which
// keeps coefficient sizes bounded through long identity computations.

#include "sib/laurent.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace sib {

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& denominator)
        : std::runtime_error("substitution hits a pole: denominator (" + denominator +
                             ") vanishes"),
          vanishing(denominator) {}
    std::string vanishing;
};

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero value") {}
};

class RatFrac {
  public:
    RatFrac() : num_(0L), den_(1L) {}
    explicit RatFrac(const BigRat& c) : num_(c), den_(1L) {}
    explicit RatFrac(long c) : num_(c), den_(1L) {}
    explicit RatFrac(LaurentPoly p) : num_(std::move(p)), den_(1L) {}
    RatFrac(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    BigRat constant_value() const {
        return num_.constant_value() / den_.constant_value();
    }

    RatFrac operator-() const { return RatFrac::raw(-num_, den_); }

    friend RatFrac operator+(const RatFrac& a, const RatFrac& b) {
        if (a.den_ == b.den_) return RatFrac(a.num_ + b.num_, a.den_);
        return RatFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFrac operator-(const RatFrac& a, const RatFrac& b) { return a + (-b); }
    friend RatFrac operator*(const RatFrac& a, const RatFrac& b) {
        return RatFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFrac operator*(const RatFrac& a, const BigRat& s) {
        return RatFrac(a.num_ * s, a.den_);
    }
    friend RatFrac operator/(const RatFrac& a, const RatFrac& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RatFrac(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFrac reciprocal() const {
        if (is_zero()) throw DivisionByZero();
        return RatFrac(den_, num_);
    }

    friend bool operator==(const RatFrac& a, const RatFrac& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const {
        if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    static RatFrac raw(LaurentPoly n, LaurentPoly d) {
        RatFrac f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        // Scale both polynomials by the rational gcd of their contents: the
        // result has integer coefficients with joint content 1, so repeated
        // products cannot accumulate scalar blowup.
        BigRat cn = num_.content(), cd = den_.content();
        BigRat s(gcd(cn.get_num(), cd.get_num()), lcm(cn.get_den(), cd.get_den()));
        s.canonicalize();
        if (s != 1) {
            num_ = num_.divided_by(s);
            den_ = den_.divided_by(s);
        }
        if (den_.lead_sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    LaurentPoly num_, den_;
};

}  // namespace sib

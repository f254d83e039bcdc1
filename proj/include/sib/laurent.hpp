#pragma once

// Sparse Laurent polynomials over BigRat in the fixed variable set
// {r, alpha, beta, t}.  The symbolic layer encodes q = r^2 so half-integer
// powers of q stay polynomial; t is the free parameter of non-tempered
// substitutions.  Exponents may be negative.

#include "sib/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sib {

enum Var : int { VR = 0, VA = 1, VB = 2, VT = 3 };
inline constexpr int kNumVars = 4;
inline constexpr const char* kVarNames[kNumVars] = {"r", "alpha", "beta", "t"};

using Mono = std::array<std::int32_t, kNumVars>;

inline Mono mono_one() { return {0, 0, 0, 0}; }

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    for (int i = 0; i < kNumVars; ++i) out[i] = a[i] + b[i];
    return out;
}

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigRat& c) {
        if (c != 0) terms_[mono_one()] = c;
    }
    explicit LaurentPoly(long c) : LaurentPoly(BigRat(c)) {}

    static LaurentPoly var(Var v, int exp = 1) {
        LaurentPoly p;
        if (exp == 0) return LaurentPoly(1);
        Mono m = mono_one();
        m[v] = exp;
        p.terms_[m] = 1;
        return p;
    }
    static LaurentPoly term(const Mono& m, const BigRat& c) {
        LaurentPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == mono_one());
    }
    BigRat constant_value() const {
        if (terms_.empty()) return BigRat(0);
        if (!is_constant()) throw std::logic_error("constant_value: non-constant polynomial");
        return terms_.begin()->second;
    }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, BigRat>& terms() const { return terms_; }

    bool uses_var(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m[v] != 0) return true;
        return false;
    }

    // Exponent parity of one variable across all terms: 0 all even, 1 all
    // odd, -1 mixed. Zero polynomial counts as all even.
    int var_parity(Var v) const {
        int seen = -2;
        for (const auto& [m, c] : terms_) {
            int p = ((m[v] % 2) + 2) % 2;
            if (seen == -2)
                seen = p;
            else if (seen != p)
                return -1;
        }
        return seen == -2 ? 0 : seen;
    }

    LaurentPoly operator-() const {
        LaurentPoly out;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [m, c] : b.terms_) {
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                out.terms_[m] = c;
            } else {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Mono m = mono_mul(ma, mb);
                auto it = out.terms_.find(m);
                if (it == out.terms_.end()) {
                    BigRat c = ca * cb;
                    if (c != 0) out.terms_.emplace(m, std::move(c));
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) out.terms_.erase(it);
                }
            }
        }
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const BigRat& s) {
        LaurentPoly out;
        if (s == 0) return out;
        for (const auto& [m, c] : a.terms_) out.terms_[m] = c * s;
        return out;
    }
    friend LaurentPoly operator*(const BigRat& s, const LaurentPoly& a) { return a * s; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Positive rational g with poly/g integral and of integer content 1.
    BigRat content() const {
        if (terms_.empty()) return BigRat(1);
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : terms_) {
            num_gcd = gcd(num_gcd, c.get_num());
            den_lcm = lcm(den_lcm, c.get_den());
        }
        BigRat g(num_gcd, den_lcm);
        g.canonicalize();
        return g;
    }

    LaurentPoly divided_by(const BigRat& s) const {
        if (s == 0) throw std::domain_error("divided_by: zero scalar");
        LaurentPoly out;
        for (const auto& [m, c] : terms_) out.terms_[m] = c / s;
        return out;
    }

    // Sign of the first stored coefficient; 0 for the zero polynomial.
    int lead_sign() const {
        if (terms_.empty()) return 0;
        return sgn(terms_.begin()->second);
    }

    // Evaluate in a commutative ring R supplying one(), mul, add and
    // exact inversion for negative exponents.
    template <typename R>
    R eval(const std::array<R, kNumVars>& vals, const R& zero, const R& one) const {
        R acc = zero;
        for (const auto& [m, c] : terms_) {
            R t = one * c;
            for (int i = 0; i < kNumVars; ++i) {
                if (m[i] == 0) continue;
                t = t * vals[i].pow(m[i]);
            }
            acc = acc + t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << to_string(c);
            for (int i = 0; i < kNumVars; ++i) {
                if (m[i] == 0) continue;
                os << "*" << kVarNames[i];
                if (m[i] != 1) os << "^" << m[i];
            }
        }
        return os.str();
    }

  private:
    std::map<Mono, BigRat> terms_;  // zero coefficients never stored
};

}  // namespace sib

#pragma once

// Exact integer/rational layer. BigRat values are always canonical:
// positive denominator, gcd(|num|, den) = 1 (mpq_class guarantees both).

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace sib {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline std::string to_string(const BigRat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// base^e for any integer e; e < 0 requires base != 0.
inline BigRat pow_rat(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rat: 0 to a negative power");
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    BigRat out(pow_int(base.get_num(), a), pow_int(base.get_den(), a));
    out.canonicalize();
    if (e < 0) out = 1 / out;
    return out;
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// p-adic valuation of a nonzero rational.
inline long valuation(const BigRat& x, const BigInt& p) {
    if (x == 0) throw std::domain_error("valuation: zero input");
    long v = 0;
    BigInt n = x.get_num(), d = x.get_den(), q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++v;
    }
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        d = q;
        --v;
    }
    return v;
}

inline bool fits_long(const BigInt& z) { return z.fits_slong_p(); }

inline long to_long(const BigInt& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("to_long: out of range");
    return z.get_si();
}

}  // namespace sib

#pragma once

// Imaginary quadratic field data realized through positive definite binary
// quadratic forms: fundamental discriminants, reduced forms, Gauss
// composition, class groups with invariant-factor structure, exact ideal
// class characters, Kronecker symbols, and L(1, chi_d) by two routes.

#include "sib/cyclo.hpp"
#include "sib/rational.hpp"
#include "sib/real.hpp"
#include "sib/snf.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sib {

// d < 0 is fundamental iff d = 1 mod 4 and squarefree, or d = 4m with
// m = 2 or 3 mod 4 and squarefree.
inline bool is_fundamental(long d) {
    if (d >= 0) return false;
    auto squarefree = [](long n) {
        n = std::labs(n);
        for (long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    long r4 = ((d % 4) + 4) % 4;
    if (r4 == 1) return squarefree(d);
    if (r4 == 0) {
        long m = d / 4;
        long m4 = ((m % 4) + 4) % 4;
        return (m4 == 2 || m4 == 3) && squarefree(m);
    }
    return false;
}

struct FundamentalDisc {
    long d;
    explicit FundamentalDisc(long d_) : d(d_) {
        if (!is_fundamental(d))
            throw std::invalid_argument(std::to_string(d_) +
                                        " is not a negative fundamental discriminant");
    }
};

// Integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    BigInt a, b, c;

    QuadForm(BigInt a_, BigInt b_, BigInt c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
    QuadForm(long a_, long b_, long c_) : a(a_), b(b_), c(c_) {}

    BigInt disc() const { return b * b - 4 * a * c; }
    bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
    bool is_positive_definite() const { return a > 0 && disc() < 0; }

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const {
        if (int s = cmp(a, o.a); s != 0) return s < 0;
        if (int s = cmp(b, o.b); s != 0) return s < 0;
        return cmp(c, o.c) < 0;
    }
    std::string str() const {
        return "(" + to_string(a) + "," + to_string(b) + "," + to_string(c) + ")";
    }
};

// Unimodular change of variables by [[p, q], [r, s]] with det = 1.
inline QuadForm transform(const QuadForm& f, const BigInt& p, const BigInt& q,
                          const BigInt& r, const BigInt& s) {
    if (p * s - q * r != 1) throw std::invalid_argument("transform must have det 1");
    BigInt a2 = f.a * p * p + f.b * p * r + f.c * r * r;
    BigInt b2 = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
    BigInt c2 = f.a * q * q + f.b * q * s + f.c * s * s;
    return QuadForm(a2, b2, c2);
}

// Unique reduced representative: |b| <= a <= c with b >= 0 when |b| = a
// or a = c.
inline QuadForm reduce(QuadForm f) {
    if (!f.is_positive_definite())
        throw std::invalid_argument("reduction requires a positive definite form");
    const BigInt d = f.disc();
    for (;;) {
        if (f.c < f.a) {
            f = QuadForm(f.c, -f.b, f.a);
        } else if (f.b > f.a || f.b <= -f.a) {
            // translate b into (-a, a]
            BigInt two_a = 2 * f.a;
            BigInt r = f.b % two_a;
            if (r < 0) r += two_a;
            if (r > f.a) r -= two_a;
            f = QuadForm(f.a, r, (r * r - d) / (4 * f.a));
        } else {
            break;
        }
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

inline QuadForm principal_form(long d) {
    if (((d % 4) + 4) % 4 == 0) return QuadForm(BigInt(1), BigInt(0), BigInt(-d / 4));
    return QuadForm(BigInt(1), BigInt(1), BigInt((1 - d) / 4));
}

inline QuadForm inverse_form(const QuadForm& f) { return reduce(QuadForm(f.a, -f.b, f.c)); }

// Gauss composition through united forms: bring g to a leading coefficient
// coprime to f.a, align the middle coefficients by CRT, multiply the
// leading coefficients.
inline QuadForm compose(const QuadForm& f, const QuadForm& g) {
    if (f.disc() != g.disc())
        throw std::invalid_argument("composition requires equal discriminants");
    if (!f.is_primitive() || !g.is_primitive())
        throw std::invalid_argument("composition requires primitive forms");
    const BigInt d = f.disc();

    // primitive pair (x, y) with g(x, y) positive and coprime to f.a
    BigInt gx, gy, m;
    bool found = false;
    for (long n = 1; !found; ++n) {
        for (long x = -n; x <= n && !found; ++x)
            for (long y = -n; y <= n && !found; ++y) {
                if (std::max(std::labs(x), std::labs(y)) != n) continue;  // new shell only
                if (std::gcd(x, y) != 1) continue;
                BigInt val = g.a * x * x + g.b * x * y + g.c * y * y;
                if (gcd(val, f.a) == 1) {
                    gx = x;
                    gy = y;
                    m = val;
                    found = true;
                }
            }
    }
    // complete (gx, gy) to det-1 and move it to the leading slot
    BigInt u, v, one;
    mpz_gcdext(one.get_mpz_t(), v.get_mpz_t(), u.get_mpz_t(), gx.get_mpz_t(),
               gy.get_mpz_t());
    // gx*v + gy*u = 1, so [[gx, -u], [gy, v]] has det 1
    QuadForm g2 = transform(g, gx, -u, gy, v);
    // g2.a == m; align middles: B = f.b mod 2 f.a and B = g2.b mod 2 m
    BigInt delta = (g2.b - f.b) / 2;  // both middles have the parity of d
    BigInt ainv;
    if (mpz_invert(ainv.get_mpz_t(), f.a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("united-form leading coefficients not coprime");
    BigInt t = (delta * ainv) % m;
    BigInt B = f.b + 2 * f.a * t;
    BigInt A = f.a * m;
    BigInt C_num = B * B - d;
    if (C_num % (4 * A) != 0) throw std::logic_error("united-form middle misaligned");
    return reduce(QuadForm(A, B, C_num / (4 * A)));
}

// Ordered class data for a fundamental discriminant.
struct QuadClassGroup {
    long disc = 0;
    std::vector<QuadForm> classes;        // reduced forms, principal first
    std::vector<long> invariant_factors;  // n_1 | n_2 | ... , each > 1
    std::vector<QuadForm> generators;     // generators[j] has order invariant_factors[j]
    std::vector<std::vector<long>> dlog;  // exponent vector of each class
    long exponent = 1;                    // largest invariant factor

    std::size_t h() const { return classes.size(); }

    int class_index(const QuadForm& f) const {
        if (f.disc() != disc)
            throw std::invalid_argument("form discriminant does not match the group");
        QuadForm r = reduce(f);
        auto it = index_.find(r);
        if (it == index_.end()) throw std::logic_error("reduced form missing from table");
        return it->second;
    }

    std::map<QuadForm, int> index_;  // reduced form -> position in classes
};

namespace detail {

inline QuadForm class_pow(const QuadForm& g, BigInt e, long d) {
    QuadForm base = e < 0 ? inverse_form(g) : g;
    if (e < 0) e = -e;
    QuadForm acc = reduce(principal_form(d));
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = compose(acc, base);
        base = compose(base, base);
        e /= 2;
    }
    return acc;
}

}  // namespace detail

inline QuadClassGroup class_group(const FundamentalDisc& dd) {
    const long d = dd.d;
    QuadClassGroup G;
    G.disc = d;

    // all reduced primitive forms: |b| <= a <= sqrt(|d|/3) <= c
    for (long a = 1; 3 * a * a <= -d; ++a) {
        for (long b = -a; b <= a; ++b) {
            if (((b - d) % 2 + 2) % 2 != 0) continue;
            BigInt num = BigInt(b) * b - d;
            if (num % (4 * a) != 0) continue;
            BigInt c = num / (4 * a);
            if (c < a) continue;
            QuadForm f{BigInt(a), BigInt(b), c};
            if (!f.is_primitive()) continue;
            if (b < 0 && (BigInt(-b) == a || BigInt(a) == c)) continue;  // boundary twins
            G.classes.push_back(f);
        }
    }
    std::sort(G.classes.begin(), G.classes.end());
    for (std::size_t i = 0; i < G.classes.size(); ++i)
        G.index_.emplace(G.classes[i], static_cast<int>(i));

    const std::size_t h = G.classes.size();
    if (reduce(principal_form(d)) != G.classes[0])
        throw std::logic_error("principal form is not the first class");
    if (h == 1) {
        G.dlog.assign(1, {});
        return G;
    }

    // presentation on all nonprincipal classes: e_i + e_j = e_{i*j}
    const std::size_t mgen = h - 1;
    std::vector<std::vector<BigInt>> rel;
    for (std::size_t i = 1; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
            int k = G.class_index(compose(G.classes[i], G.classes[j]));
            std::vector<BigInt> col(mgen, BigInt(0));
            col[i - 1] += 1;
            col[j - 1] += 1;
            if (k > 0) col[k - 1] -= 1;
            rel.push_back(std::move(col));
        }
    // columns of the relation matrix span the relation lattice
    IntMat R(mgen, std::vector<BigInt>(rel.size()));
    for (std::size_t c = 0; c < rel.size(); ++c)
        for (std::size_t r = 0; r < mgen; ++r) R[r][c] = rel[c][r];

    SnfResult snf = smith_normal_form(std::move(R));
    std::vector<std::size_t> slots;  // diagonal positions with entry > 1
    for (std::size_t j = 0; j < mgen; ++j) {
        const BigInt& dj = snf.d[j][j];
        if (dj == 0) throw std::logic_error("relation lattice not of full rank");
        if (dj > 1) slots.push_back(j);
    }
    BigInt prod(1);
    for (std::size_t j : slots) prod *= snf.d[j][j];
    if (prod != static_cast<long>(h))
        throw std::logic_error("invariant factors do not multiply to the class number");

    // generator for slot j: product of g_i to the power u_inv[i][j]
    for (std::size_t j : slots) {
        long nj = to_long(snf.d[j][j]);
        QuadForm gen = reduce(principal_form(d));
        for (std::size_t i = 0; i < mgen; ++i) {
            if (snf.u_inv[i][j] == 0) continue;
            gen = compose(gen,
                          detail::class_pow(G.classes[i + 1], snf.u_inv[i][j], d));
        }
        gen = reduce(gen);
        // the order must be exactly nj
        QuadForm p = gen;
        for (long e = 1; e < nj; ++e) {
            if (p == G.classes[0]) throw std::logic_error("generator order too small");
            p = compose(p, gen);
        }
        if (p != G.classes[0]) throw std::logic_error("generator order mismatch");
        G.generators.push_back(gen);
        G.invariant_factors.push_back(nj);
    }
    G.exponent = G.invariant_factors.empty() ? 1 : G.invariant_factors.back();

    // discrete logarithms by enumerating the product decomposition
    const std::size_t r = G.invariant_factors.size();
    G.dlog.assign(h, {});
    std::vector<long> k(r, 0);
    std::vector<bool> seen(h, false);
    for (;;) {
        QuadForm p = reduce(principal_form(d));
        for (std::size_t j = 0; j < r; ++j)
            p = compose(p, detail::class_pow(G.generators[j], BigInt(k[j]), d));
        int idx = G.class_index(p);
        if (seen[idx]) throw std::logic_error("product decomposition not a bijection");
        seen[idx] = true;
        G.dlog[idx] = k;
        std::size_t j = 0;
        while (j < r && ++k[j] == G.invariant_factors[j]) k[j++] = 0;
        if (j == r) break;
    }
    for (bool s : seen)
        if (!s) throw std::logic_error("product decomposition misses a class");
    return G;
}

// Exact ideal class character: values are roots of unity of order dividing
// the group exponent.
struct ClassCharacter {
    const QuadClassGroup* group = nullptr;
    std::vector<long> twists;   // twists[j] in [0, n_j)
    std::vector<Cyclo> images;  // images[j] = zeta_{n_j}^{twists[j]} in Cyclo(exponent)

    Cyclo eval(int class_index) const {
        const long n = group->exponent;
        long e = 0;
        const auto& a = group->dlog.at(class_index);
        for (std::size_t j = 0; j < twists.size(); ++j) {
            long nj = group->invariant_factors[j];
            e = (e + (n / nj) * ((twists[j] * a[j]) % nj)) % n;
        }
        return Cyclo::root(n, e);
    }
    Cyclo eval(const QuadForm& f) const { return eval(group->class_index(f)); }

    ClassCharacter conj() const {
        ClassCharacter c = *this;
        for (std::size_t j = 0; j < twists.size(); ++j) {
            long nj = group->invariant_factors[j];
            c.twists[j] = (nj - twists[j]) % nj;
            c.images[j] = images[j].conj();
        }
        return c;
    }

    long order() const {
        long o = 1;
        for (std::size_t j = 0; j < twists.size(); ++j) {
            long nj = group->invariant_factors[j];
            o = std::lcm(o, nj / std::gcd(nj, twists[j]));
        }
        return o;
    }
    bool is_trivial() const { return order() == 1; }

    bool operator==(const ClassCharacter& o) const {
        return group == o.group && twists == o.twists;
    }
};

// All h characters; the trivial character comes first.  The returned
// objects keep a pointer to G, which must outlive them.
inline std::vector<ClassCharacter> characters(const QuadClassGroup& G) {
    std::vector<ClassCharacter> out;
    const std::size_t r = G.invariant_factors.size();
    std::vector<long> k(r, 0);
    for (;;) {
        ClassCharacter ch;
        ch.group = &G;
        ch.twists = k;
        for (std::size_t j = 0; j < r; ++j) {
            long nj = G.invariant_factors[j];
            ch.images.push_back(Cyclo::root(G.exponent, (G.exponent / nj) * k[j]));
        }
        out.push_back(std::move(ch));
        std::size_t j = 0;
        while (j < r && ++k[j] == G.invariant_factors[j]) k[j++] = 0;
        if (j == r) break;
    }
    return out;
}

namespace detail {

// Kronecker symbol (a / b), defined by complete multiplicativity in b from
//   (a / p) = Legendre symbol for odd prime p,
//   (a / 2) = 0 if a even, +1 if a = +-1 mod 8, -1 if a = +-3 mod 8,
//   (a / -1) = -1 if a < 0 else +1,
//   (a / 0) = 1 if a = +-1 else 0.
inline int kronecker_general(BigInt a, BigInt b) {
    auto mod8 = [](const BigInt& x) { return to_long(((x % 8) + 8) % 8); };
    auto mod4_is_3 = [](const BigInt& x) { return ((x % 4) + 4) % 4 == 3; };
    static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (mpz_even_p(a.get_mpz_t()) && mpz_even_p(b.get_mpz_t())) return 0;
    int k = 1;
    long v = 0;
    while (mpz_even_p(b.get_mpz_t())) {
        b /= 2;
        ++v;
    }
    if (v % 2 == 1) k = tab2[mod8(a)];
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    for (;;) {
        if (a == 0) return b > 1 ? 0 : k;
        v = 0;
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1) k *= tab2[mod8(b)];
        if (mod4_is_3(a) && mod4_is_3(b)) k = -k;  // reciprocity flip
        BigInt r = abs(a);
        a = b % r;
        b = r;
    }
}

}  // namespace detail

inline int kronecker(const FundamentalDisc& d, const BigInt& n) {
    return detail::kronecker_general(BigInt(d.d), n);
}

// Count of roots of unity in the field of discriminant d.
inline int w_of(const FundamentalDisc& d) {
    if (d.d == -3) return 6;
    if (d.d == -4) return 4;
    return 2;
}

// The half-integral matrix of the principal form, split by parity of d.
inline std::array<std::array<BigRat, 2>, 2> s_matrix(const FundamentalDisc& d) {
    if (((d.d % 4) + 4) % 4 == 0)
        return {{{BigRat(-d.d / 4), BigRat(0)}, {BigRat(0), BigRat(1)}}};
    return {{{BigRat((1 - d.d) / 4), BigRat(1, 2)}, {BigRat(1, 2), BigRat(1)}}};
}

// L(1, chi_d) two ways: exactly from the class number formula, numerically
// from the closed finite digamma sum
//   L(1, chi) = -(1/m) sum_{a=1}^{m-1} chi(a) psi(a/m),  m = |d|,
// which is the analytically accelerated limit of the partial character sums.
struct LOneValue {
    BigRat pi_over_sqrt_coeff;  // exact = coeff * pi / sqrt(|d|)
    Real exact;
    Real numeric;
};

inline LOneValue dirichlet_l_one(const FundamentalDisc& d) {
    QuadClassGroup G = class_group(d);
    LOneValue out;
    out.pi_over_sqrt_coeff = BigRat(2 * static_cast<long>(G.h()), w_of(d));
    out.pi_over_sqrt_coeff.canonicalize();
    out.exact = to_real(out.pi_over_sqrt_coeff) * real_pi() / sqrt(Real(-d.d));
    const long m = -d.d;
    Real acc = 0;
    for (long a = 1; a < m; ++a) {
        int chi = kronecker(d, BigInt(a));
        if (chi == 0) continue;
        Real ps = boost::math::digamma(Real(a) / m);
        acc += chi > 0 ? ps : -ps;
    }
    out.numeric = -acc / m;
    return out;
}

}  // namespace sib

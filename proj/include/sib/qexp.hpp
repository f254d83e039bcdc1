#pragma once

// Truncated q-expansions with exact rational coefficients, the level-1
// Eisenstein and cusp generators, and file ingestion.
//
// Multiplication is schoolbook convolution up to 10^4 output terms.  Above
// that the series are scaled to integer vectors and multiplied through a
// single big-integer product (each coefficient packed into a fixed-width
// limb slot), which rides the FFT multiplication of the underlying integer
// library and keeps the whole path exact.

#include "sib/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sib {

struct QExpansion {
    int weight = 0;
    int level = 1;
    // coeffs[n] multiplies q^n; indices 0..prec() are all present.
    std::vector<BigRat> coeffs;

    long prec() const { return static_cast<long>(coeffs.size()) - 1; }

    const BigRat& at(long n) const {
        if (n < 0 || n > prec()) throw std::out_of_range("QExpansion: coefficient beyond precision");
        return coeffs[static_cast<std::size_t>(n)];
    }
};

namespace detail {

// Nonnegative-coefficient convolution via one big-integer multiply.  Each
// coefficient occupies `slot` 64-bit words; `slot` must be wide enough that
// no convolution coefficient reaches 2^(64*slot), so no carries cross slots.
inline std::vector<BigInt> packed_conv_nonneg(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                              std::size_t slot) {
    const std::size_t out_len = a.size() + b.size() - 1;
    auto pack = [slot](const std::vector<BigInt>& v) {
        std::vector<std::uint64_t> buf(v.size() * slot, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            std::size_t words = 0;
            mpz_export(buf.data() + i * slot, &words, -1, sizeof(std::uint64_t), 0, 0, v[i].get_mpz_t());
        }
        BigInt z;
        mpz_import(z.get_mpz_t(), buf.size(), -1, sizeof(std::uint64_t), 0, 0, buf.data());
        return z;
    };
    BigInt prod = pack(a) * pack(b);
    std::vector<std::uint64_t> buf(out_len * slot + 2, 0);
    std::size_t words = 0;
    mpz_export(buf.data(), &words, -1, sizeof(std::uint64_t), 0, 0, prod.get_mpz_t());
    std::vector<BigInt> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
        BigInt c;
        mpz_import(c.get_mpz_t(), slot, -1, sizeof(std::uint64_t), 0, 0, buf.data() + i * slot);
        out[i] = c;
    }
    return out;
}

// Signed integer convolution, truncated to n_out+1 terms: split into
// nonnegative parts, four packed products, recombine.
inline std::vector<BigInt> int_conv(const std::vector<BigInt>& a, const std::vector<BigInt>& b, long n_out) {
    auto split = [](const std::vector<BigInt>& v) {
        std::vector<BigInt> pos(v.size()), neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            (sgn(v[i]) >= 0 ? pos : neg)[i] = abs(v[i]);
        return std::make_pair(pos, neg);
    };
    std::size_t maxbits = 1;
    auto scan = [&maxbits](const std::vector<BigInt>& v) {
        for (const auto& c : v)
            if (c != 0) maxbits = std::max(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2));
    };
    scan(a);
    scan(b);
    std::size_t count_bits = 1;
    while ((std::size_t(1) << count_bits) < std::min(a.size(), b.size())) ++count_bits;
    const std::size_t slot = (2 * maxbits + count_bits + 1 + 63) / 64;
    auto [ap, an] = split(a);
    auto [bp, bn] = split(b);
    std::vector<BigInt> pp = packed_conv_nonneg(ap, bp, slot);
    std::vector<BigInt> nn = packed_conv_nonneg(an, bn, slot);
    std::vector<BigInt> pn = packed_conv_nonneg(ap, bn, slot);
    std::vector<BigInt> np = packed_conv_nonneg(an, bp, slot);
    std::vector<BigInt> out(static_cast<std::size_t>(n_out) + 1);
    for (std::size_t i = 0; i < out.size() && i < pp.size(); ++i) out[i] = pp[i] + nn[i] - pn[i] - np[i];
    return out;
}

}  // namespace detail

inline QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    if (a.weight != b.weight) throw std::invalid_argument("QExpansion: adding different weights");
    QExpansion r;
    r.weight = a.weight;
    r.level = std::max(a.level, b.level);
    r.coeffs.resize(static_cast<std::size_t>(std::min(a.prec(), b.prec())) + 1);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return r;
}

inline QExpansion operator-(const QExpansion& a, const QExpansion& b) {
    if (a.weight != b.weight) throw std::invalid_argument("QExpansion: subtracting different weights");
    QExpansion r;
    r.weight = a.weight;
    r.level = std::max(a.level, b.level);
    r.coeffs.resize(static_cast<std::size_t>(std::min(a.prec(), b.prec())) + 1);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return r;
}

inline QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    QExpansion r;
    r.weight = a.weight + b.weight;
    r.level = std::max(a.level, b.level);
    const long n_out = std::min(a.prec(), b.prec());
    r.coeffs.assign(static_cast<std::size_t>(n_out) + 1, BigRat(0));
    if (n_out <= 10000) {
        for (long i = 0; i <= n_out; ++i) {
            if (a.coeffs[static_cast<std::size_t>(i)] == 0) continue;
            for (long j = 0; i + j <= n_out; ++j)
                r.coeffs[static_cast<std::size_t>(i + j)] +=
                    a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
        }
        return r;
    }
    // Integer fast path: scale each factor by the lcm of its denominators.
    auto scale_int = [n_out](const QExpansion& f, BigInt& den) {
        den = 1;
        for (long i = 0; i <= n_out; ++i) den = lcm(den, BigInt(f.coeffs[static_cast<std::size_t>(i)].get_den()));
        std::vector<BigInt> v(static_cast<std::size_t>(n_out) + 1);
        for (long i = 0; i <= n_out; ++i) {
            const BigRat& c = f.coeffs[static_cast<std::size_t>(i)];
            v[static_cast<std::size_t>(i)] = BigInt(c.get_num()) * (den / BigInt(c.get_den()));
        }
        return v;
    };
    BigInt da, db;
    std::vector<BigInt> ia = scale_int(a, da);
    std::vector<BigInt> ib = scale_int(b, db);
    std::vector<BigInt> ic = detail::int_conv(ia, ib, n_out);
    BigRat inv_scale(BigInt(1), da * db);
    inv_scale.canonicalize();
    for (long i = 0; i <= n_out; ++i) {
        r.coeffs[static_cast<std::size_t>(i)] = BigRat(ic[static_cast<std::size_t>(i)]) * inv_scale;
        r.coeffs[static_cast<std::size_t>(i)].canonicalize();
    }
    return r;
}

inline QExpansion operator*(const BigRat& s, const QExpansion& a) {
    QExpansion r = a;
    for (auto& c : r.coeffs) {
        c *= s;
        c.canonicalize();
    }
    return r;
}

// Multiply by q^k (shift up), dropping the tail beyond the precision.
inline QExpansion shift_q(const QExpansion& a, long k) {
    QExpansion r;
    r.weight = a.weight;
    r.level = a.level;
    r.coeffs.assign(a.coeffs.size(), BigRat(0));
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) < r.coeffs.size(); ++i)
        r.coeffs[i + static_cast<std::size_t>(k)] = a.coeffs[i];
    return r;
}

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for k in {4, 6}, by divisor sieve.
inline QExpansion eisenstein(int k, long n) {
    if (k != 4 && k != 6) throw std::invalid_argument("eisenstein: weight must be 4 or 6");
    if (n < 1) throw std::invalid_argument("eisenstein: precision must be >= 1");
    const long lead = k == 4 ? 240 : -504;
    QExpansion r;
    r.weight = k;
    r.level = 1;
    std::vector<BigInt> sig(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (long d = 1; d <= n; ++d) {
        BigInt dk = pow_int(BigInt(d), static_cast<unsigned>(k - 1));
        for (long m = d; m <= n; m += d) sig[static_cast<std::size_t>(m)] += dk;
    }
    r.coeffs.resize(static_cast<std::size_t>(n) + 1);
    r.coeffs[0] = 1;
    for (long m = 1; m <= n; ++m) r.coeffs[static_cast<std::size_t>(m)] = BigRat(lead * sig[static_cast<std::size_t>(m)]);
    return r;
}

// Delta = q prod (1-q^n)^24 = q S^8 with S = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}
// (the cube of the eta product, by Jacobi's identity).
inline QExpansion delta(long n) {
    if (n < 1) throw std::invalid_argument("delta: precision must be >= 1");
    QExpansion s;
    s.weight = 0;
    s.level = 1;
    s.coeffs.assign(static_cast<std::size_t>(n), BigRat(0));  // precision n-1 before the shift
    for (long j = 0;; ++j) {
        long e = j * (j + 1) / 2;
        if (e >= n) break;
        s.coeffs[static_cast<std::size_t>(e)] = BigRat((j % 2 ? -1 : 1) * (2 * j + 1));
    }
    QExpansion s2 = s * s;
    QExpansion s4 = s2 * s2;
    QExpansion s8 = s4 * s4;
    // Pad to n+1 slots; the shift below reads only indices 0..n-1 of s8, so
    // the padding slot never leaks into a coefficient.
    s8.coeffs.resize(static_cast<std::size_t>(n) + 1, BigRat(0));
    QExpansion r = shift_q(s8, 1);
    r.weight = 12;
    return r;
}

// The unique normalized cusp eigenform in the one-dimensional spaces
// S_w(SL(2,Z)), w in {12, 16, 18, 20, 22}: Delta times a monomial in E4, E6.
inline QExpansion level1_cusp_eigenform(int w, long n) {
    QExpansion d = delta(n);
    QExpansion r;
    switch (w) {
        case 12: r = d; break;
        case 16: r = d * eisenstein(4, n); break;
        case 18: r = d * eisenstein(6, n); break;
        case 20: {
            QExpansion e4 = eisenstein(4, n);
            r = d * (e4 * e4);
            break;
        }
        case 22: r = (d * eisenstein(4, n)) * eisenstein(6, n); break;
        default: throw std::invalid_argument("level1_cusp_eigenform: weight not in {12,16,18,20,22}");
    }
    if (r.coeffs[0] != 0 || r.coeffs.size() < 2 || r.coeffs[1] != 1)
        throw std::logic_error("level1_cusp_eigenform: normalization failed");
    return r;
}

// For a Hecke-normalized level-1 eigenform the n-th Hecke eigenvalue is the
// n-th coefficient.
inline BigRat hecke_eigenvalue(const QExpansion& g, long n) {
    if (g.level != 1) throw std::invalid_argument("hecke_eigenvalue: level-1 eigenforms only");
    if (g.prec() < 1 || g.coeffs[1] != 1) throw std::invalid_argument("hecke_eigenvalue: form is not Hecke-normalized");
    return g.at(n);
}

// Reads "n a_n" lines (integers, strictly increasing n, gaps read as zero
// coefficients), after an optional "# weight W level N" header.
inline QExpansion ingest_qexp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ingest_qexp: cannot open " + path);
    QExpansion r;
    r.weight = 0;
    r.level = 1;
    std::string line;
    long lineno = 0;
    long last_n = -1;
    std::vector<std::pair<long, BigInt>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ss(line);
        if (line[0] == '#') {
            std::string hash, kw1, kw2;
            int w = 0, lv = 0;
            ss >> hash >> kw1 >> w >> kw2 >> lv;
            if (ss.fail() || kw1 != "weight" || kw2 != "level")
                throw std::runtime_error("ingest_qexp: malformed header at line " + std::to_string(lineno));
            r.weight = w;
            r.level = lv;
            continue;
        }
        long n = 0;
        std::string a_str;
        ss >> n >> a_str;
        std::string extra;
        if (ss.fail() || (ss >> extra))
            throw std::runtime_error("ingest_qexp: malformed line " + std::to_string(lineno));
        if (n <= last_n)
            throw std::runtime_error("ingest_qexp: indices not increasing at line " + std::to_string(lineno));
        BigInt a;
        if (mpz_set_str(a.get_mpz_t(), a_str.c_str(), 10) != 0)
            throw std::runtime_error("ingest_qexp: malformed coefficient at line " + std::to_string(lineno));
        rows.emplace_back(n, a);
        last_n = n;
    }
    if (rows.empty()) throw std::runtime_error("ingest_qexp: no coefficient lines in " + path);
    r.coeffs.assign(static_cast<std::size_t>(last_n) + 1, BigRat(0));
    for (const auto& [n, a] : rows) r.coeffs[static_cast<std::size_t>(n)] = BigRat(a);
    return r;
}

}  // namespace sib

#pragma once

// Exact arithmetic in Q(zeta_n): elements are polynomials in zeta_n reduced
// modulo the n-th cyclotomic polynomial.  Character sums, orthogonality and
// Parseval identities are then decided exactly, with no unimodular floating
// point anywhere.

#include "sib/rational.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sib {

namespace detail {

inline std::vector<BigInt> poly_mul_z(const std::vector<BigInt>& a,
                                      const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic divisor; remainder must vanish.
inline std::vector<BigInt> poly_divexact_z(std::vector<BigInt> a,
                                           const std::vector<BigInt>& d) {
    if (a.size() < d.size()) throw std::logic_error("bad cyclotomic division");
    std::vector<BigInt> q(a.size() - d.size() + 1, BigInt(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        BigInt c = a[i + d.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) a[i + j] -= c * d[j];
    }
    for (const BigInt& c : a)
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

}  // namespace detail

// Coefficients of the n-th cyclotomic polynomial, ascending degree.
// References stay valid across later calls (node-based map, mutex-guarded).
inline const std::vector<BigInt>& cyclotomic_poly(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<BigInt>> memo;
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto compute = [](auto&& self, int m) -> const std::vector<BigInt>& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        std::vector<BigInt> acc(static_cast<std::size_t>(m) + 1, BigInt(0));
        acc[0] = -1;
        acc[static_cast<std::size_t>(m)] = 1;  // x^m - 1
        for (int d = 1; d < m; ++d)
            if (m % d == 0) acc = detail::poly_divexact_z(acc, self(self, d));
        return memo.emplace(m, std::move(acc)).first->second;
    };
    return compute(compute, n);
}

class Cyclo {
  public:
    Cyclo() : n_(1), c_(1, BigRat(0)) {}
    Cyclo(int n, const BigRat& value) : n_(check_order(n)), c_(degree(n), BigRat(0)) {
        c_[0] = value;
    }

    // zeta_n^k
    static Cyclo root(int n, long k) {
        Cyclo z(n, BigRat(0));
        long e = ((k % n) + n) % n;
        if (static_cast<std::size_t>(e) < z.c_.size()) {
            z.c_[static_cast<std::size_t>(e)] = 1;
        } else {
            std::vector<BigRat> raw(static_cast<std::size_t>(e) + 1, BigRat(0));
            raw[static_cast<std::size_t>(e)] = 1;
            z.c_ = reduce(n, std::move(raw));
        }
        return z;
    }

    int order() const { return n_; }
    const std::vector<BigRat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const BigRat& rational_part() const { return c_[0]; }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        a.check(b);
        Cyclo out = a;
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
        return out;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        a.check(b);
        Cyclo out = a;
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
        return out;
    }
    Cyclo operator-() const {
        Cyclo out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        a.check(b);
        std::vector<BigRat> raw(a.c_.size() + b.c_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
        }
        Cyclo out(a.n_, BigRat(0));
        out.c_ = reduce(a.n_, std::move(raw));
        return out;
    }
    friend Cyclo operator*(const Cyclo& a, const BigRat& s) {
        Cyclo out = a;
        for (auto& x : out.c_) x *= s;
        return out;
    }

    // Complex conjugation: zeta -> zeta^{-1}.
    Cyclo conj() const {
        std::vector<BigRat> raw(static_cast<std::size_t>(n_), BigRat(0));
        raw[0] = c_[0];
        for (std::size_t i = 1; i < c_.size(); ++i)
            raw[static_cast<std::size_t>(n_) - i] = c_[i];
        Cyclo out(n_, BigRat(0));
        out.c_ = reduce(n_, std::move(raw));
        return out;
    }

    // |z|^2 = z * conj(z); rational for the character sums we form, but
    // returned as a Cyclo so callers can assert that.
    Cyclo norm_sq() const { return (*this) * conj(); }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        a.check(b);
        return a.c_ == b.c_;
    }

    std::complex<double> to_complex() const {
        std::complex<double> acc(0.0, 0.0);
        const double tau = 6.283185307179586476925287;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            double arg = tau * static_cast<double>(i) / n_;
            acc += c_[i].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += to_string(c_[i]);
            if (i > 0) out += "*z" + std::to_string(n_) + "^" + std::to_string(i);
        }
        return out;
    }

  private:
    static int check_order(int n) {
        if (n < 1) throw std::invalid_argument("Cyclo: order must be positive");
        return n;
    }
    static std::size_t degree(int n) { return cyclotomic_poly(n).size() - 1; }

    static std::vector<BigRat> reduce(int n, std::vector<BigRat> raw) {
        const auto& phi = cyclotomic_poly(n);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t i = raw.size(); i-- > deg;) {
            if (raw[i] == 0) continue;
            BigRat c = raw[i];
            // subtract c * x^{i-deg} * phi (phi is monic)
            for (std::size_t j = 0; j < phi.size(); ++j)
                raw[i - deg + j] -= c * BigRat(phi[j]);
        }
        raw.resize(deg);
        return raw;
    }

    void check(const Cyclo& o) const {
        if (n_ != o.n_) throw std::logic_error("mixed cyclotomic orders");
    }

    int n_;
    std::vector<BigRat> c_;
};

}  // namespace sib

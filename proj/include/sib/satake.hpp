#pragma once

// Satake parameter bundles and the classification bookkeeping for
// Iwahori-spherical representations of GSp(4) over a p-adic field.

#include "sib/rational.hpp"
#include "sib/symrat.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace sib {

// Parameters (alpha, beta, gamma) with alpha*beta*gamma^2 = 1.  Symbolic
// mode keeps them as the free generators of the coefficient algebra; numeric
// mode pins q, alpha, beta to exact rationals (gamma stays the formal square
// root of 1/(alpha*beta), realized as the g element of the quadratic
// algebra).  The relation alpha*beta*gamma^2 = 1 therefore holds exactly in
// both modes.
class SatakeParams {
  public:
    static SatakeParams symbolic() { return SatakeParams(); }

    // Rejects draws within 1e-8 of the singular locus where the spherical
    // function's denominators vanish; conditioning degrades linearly there.
    static SatakeParams numeric(const BigRat& q, const BigRat& alpha, const BigRat& beta) {
        if (!is_admissible_q(q))
            throw std::invalid_argument("numeric Satake parameters need a prime power q >= 2");
        if (alpha == 0 || beta == 0)
            throw std::invalid_argument("Satake parameters must be nonzero");
        const BigRat eps(1, 100000000);
        auto near = [&eps](const BigRat& x, const BigRat& y) {
            BigRat d = x - y;
            return (d < 0 ? -d : d) < eps;
        };
        if (near(alpha, beta) || near(alpha, BigRat(1)) || near(beta, BigRat(1)) ||
            near(alpha * beta, BigRat(1)) || near(alpha, BigRat(1) / beta))
            throw std::invalid_argument(
                "numeric Satake parameters within 1e-8 of the singular locus");
        SatakeParams p;
        p.pt_ = NumericPoint{q, alpha, beta, BigRat(1)};
        return p;
    }

    bool is_numeric() const { return pt_.has_value(); }
    const NumericPoint& point() const {
        if (!pt_) throw std::logic_error("symbolic Satake parameters carry no point");
        return *pt_;
    }

  private:
    SatakeParams() = default;

    static bool is_admissible_q(const BigRat& q) {
        if (q.get_den() != 1) return false;
        BigInt n = q.get_num();
        if (n < 2) return false;
        // prime power test by trial division with the smallest prime factor
        BigInt p = 2;
        while (p * p <= n && n % p != 0) ++p;
        if (p * p > n) return true;  // n itself prime
        while (n % p == 0) n /= p;
        return n == 1;
    }

    std::optional<NumericPoint> pt_;
};

// Index (ell, m) of the double-coset representative
// h(ell, m) = diag(w^{ell+2m}, w^{ell+m}, 1, w^m), w a uniformizer.
struct CosetIndex {
    long ell = 0;
    long m = 0;
    CosetIndex() = default;
    CosetIndex(long l, long mm) : ell(l), m(mm) {
        if (l < 0 || mm < 0) throw std::invalid_argument("coset index must be nonnegative");
    }
    friend bool operator==(const CosetIndex&, const CosetIndex&) = default;
    friend bool operator<(const CosetIndex& a, const CosetIndex& b) {
        return a.ell != b.ell ? a.ell < b.ell : a.m < b.m;
    }
};

// The seventeen non-supercuspidal classes supported in the minimal
// parabolic, with genericity and fixed-vector dimensions under the Siegel
// congruence subgroup and the maximal compact subgroup.
enum class ReprTag {
    I, IIa, IIb, IIIa, IIIb, IVa, IVb, IVc, IVd,
    Va, Vb, Vc, Vd, VIa, VIb, VIc, VId
};

struct ReprClass {
    ReprTag tag;
    bool generic;
    int dim_P1;
    int dim_K;
};

inline ReprClass repr_class(ReprTag t) {
    switch (t) {
        case ReprTag::I:    return {t, true, 4, 1};
        case ReprTag::IIa:  return {t, true, 1, 0};
        case ReprTag::IIb:  return {t, false, 3, 1};
        case ReprTag::IIIa: return {t, true, 2, 0};
        case ReprTag::IIIb: return {t, false, 2, 1};
        case ReprTag::IVa:  return {t, true, 0, 0};
        case ReprTag::IVb:  return {t, false, 2, 0};
        case ReprTag::IVc:  return {t, false, 1, 0};
        case ReprTag::IVd:  return {t, false, 1, 1};
        case ReprTag::Va:   return {t, true, 0, 0};
        case ReprTag::Vb:   return {t, false, 1, 0};
        case ReprTag::Vc:   return {t, false, 1, 0};
        case ReprTag::Vd:   return {t, false, 2, 1};
        case ReprTag::VIa:  return {t, true, 1, 0};
        case ReprTag::VIb:  return {t, false, 1, 0};
        case ReprTag::VIc:  return {t, false, 0, 0};
        case ReprTag::VId:  return {t, false, 2, 1};
    }
    throw std::logic_error("unreachable repr tag");
}

inline std::string to_string(ReprTag t) {
    switch (t) {
        case ReprTag::I:    return "I";
        case ReprTag::IIa:  return "IIa";
        case ReprTag::IIb:  return "IIb";
        case ReprTag::IIIa: return "IIIa";
        case ReprTag::IIIb: return "IIIb";
        case ReprTag::IVa:  return "IVa";
        case ReprTag::IVb:  return "IVb";
        case ReprTag::IVc:  return "IVc";
        case ReprTag::IVd:  return "IVd";
        case ReprTag::Va:   return "Va";
        case ReprTag::Vb:   return "Vb";
        case ReprTag::Vc:   return "Vc";
        case ReprTag::Vd:   return "Vd";
        case ReprTag::VIa:  return "VIa";
        case ReprTag::VIb:  return "VIb";
        case ReprTag::VIc:  return "VIc";
        case ReprTag::VId:  return "VId";
    }
    throw std::logic_error("unreachable repr tag");
}

inline ReprTag repr_tag_from_string(const std::string& s) {
    for (ReprTag t : {ReprTag::I, ReprTag::IIa, ReprTag::IIb, ReprTag::IIIa,
                      ReprTag::IIIb, ReprTag::IVa, ReprTag::IVb, ReprTag::IVc,
                      ReprTag::IVd, ReprTag::Va, ReprTag::Vb, ReprTag::Vc,
                      ReprTag::Vd, ReprTag::VIa, ReprTag::VIb, ReprTag::VIc,
                      ReprTag::VId})
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown representation type: " + s);
}

// One member of the orthogonal basis of the P1-fixed subspace.
struct P1Vector {
    ReprTag repr;
    int index;  // 1-based
    P1Vector(ReprTag r, int i) : repr(r), index(i) {
        int d = repr_class(r).dim_P1;
        if (i < 1 || i > d)
            throw std::invalid_argument("P1 vector index " + std::to_string(i) +
                                        " out of range for type " + to_string(r));
    }
};

}  // namespace sib

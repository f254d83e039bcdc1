#pragma once

// High-precision real type shared by the analytic layers: 50 significant
// decimal digits, enough to certify 1e-12 targets with wide margin.

#include "sib/rational.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sib {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real real_pi() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const BigRat& x) {
    return Real(x.get_num().get_str()) / Real(x.get_den().get_str());
}

inline Real to_real(const BigInt& x) { return Real(x.get_str()); }

}  // namespace sib

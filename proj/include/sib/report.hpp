#pragma once

// Uniform result record for identity checks.  Exact comparisons enter with
// rel_err 0 (or a floor epsilon on mismatch) so that pass <=> rel_err <=
// tolerance holds across both exact and floating checks.

#include <algorithm>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "sib/rational.hpp"
#include "sib/real.hpp"

namespace sib {

struct VerificationReport {
    std::string check;
    std::string lhs;  // rendered value: canonical rational or 30-digit real
    std::string rhs;
    Real rel_err = Real(0);
    Real tolerance = Real(0);
    bool pass = false;
    std::map<std::string, std::string> params;
};

inline std::string render_real(const Real& x) {
    std::ostringstream ss;
    ss << std::setprecision(30) << x;
    return ss.str();
}

inline Real relative_error(const Real& lhs, const Real& rhs) {
    const Real scale = std::max(abs(lhs), abs(rhs));
    if (scale == 0) return Real(0);
    return abs(lhs - rhs) / scale;
}

inline VerificationReport make_report(std::string check, const Real& lhs,
                                      const Real& rhs, const Real& tol) {
    VerificationReport r;
    r.check = std::move(check);
    r.lhs = render_real(lhs);
    r.rhs = render_real(rhs);
    r.rel_err = relative_error(lhs, rhs);
    r.tolerance = tol;
    r.pass = r.rel_err <= tol;
    return r;
}

inline VerificationReport make_exact_report(std::string check, const BigRat& lhs,
                                            const BigRat& rhs) {
    VerificationReport r;
    r.check = std::move(check);
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    if (lhs == rhs) {
        r.rel_err = Real(0);
    } else {
        r.rel_err = std::max(relative_error(to_real(lhs), to_real(rhs)),
                             std::numeric_limits<Real>::epsilon());
    }
    r.tolerance = Real(0);
    r.pass = r.rel_err <= r.tolerance;
    return r;
}

// Boolean form for checks whose outcome is a yes/no identity over strings
// (symbolic expressions, cyclotomic values rendered canonically).
inline VerificationReport make_identity_report(std::string check, std::string lhs,
                                               std::string rhs) {
    VerificationReport r;
    r.check = std::move(check);
    const bool equal = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.rel_err = equal ? Real(0) : std::numeric_limits<Real>::epsilon();
    r.tolerance = Real(0);
    r.pass = equal;
    return r;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    return nlohmann::json{{"check", r.check},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"rel_err", static_cast<double>(r.rel_err)},
                          {"tolerance", static_cast<double>(r.tolerance)},
                          {"pass", r.pass},
                          {"params", r.params}};
}

}  // namespace sib

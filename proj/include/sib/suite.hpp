#pragma once

// Config-driven verification suite.  Each named check group exercises one
// identity family end to end and emits VerificationReports; groups run
// concurrently and results come back in a fixed canonical order.
//
// Config files are line-oriented `key = value` with `#` comments.  Lists are
// comma-separated.  Parse errors carry `<name>:<line>:` locations.

#include <future>
#include <istream>
#include <fstream>
#include <random>
#include <sstream>

#include "sib/bessel.hpp"
#include "sib/coset.hpp"
#include "sib/macdonald.hpp"
#include "sib/oracle/snf_coset.hpp"

namespace sib {

inline const std::vector<std::string>& all_suite_checks() {
    static const std::vector<std::string> names = {"local-unram", "local-table", "local-coset",
                                                   "class-group", "vanishing", "arch",
                                                   "const",       "sk-ratio"};
    return names;
}

struct SuiteConfig {
    std::vector<std::string> checks = all_suite_checks();
    int sk_k = 10;
    std::vector<long> sk_dlist = {-3, -4, -7, -8, -11, -19, -23, -24};
    Real sk_tol = Real("1e-6");
    Real afe_tol = Real("1e-8");
    std::vector<int> arch_klist = {3, 4, 6, 10, 20};
    Real arch_tol = Real("1e-6");
    std::vector<long> coset_primes = {3, 5};
    int coset_val_range = 2;  // coordinate valuations swept over [-range, range]
    long class_dmin = -60;    // class-group checks cover fundamental d in [class_dmin, -3]
    long vanishing_dmin = -60;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

[[noreturn]] inline void config_error(const std::string& name, int line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

inline long parse_integer(const std::string& s, const std::string& name, int line,
                          const std::string& key) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        config_error(name, line, "invalid integer '" + s + "' for key " + key);
    }
}

inline Real parse_tolerance(const std::string& s, const std::string& name, int line,
                            const std::string& key) {
    try {
        const Real v(s);
        if (!(v > 0) || !(v < 1)) throw std::invalid_argument("out of (0, 1)");
        return v;
    } catch (const std::exception&) {
        config_error(name, line, "invalid tolerance '" + s + "' for key " + key);
    }
}

}  // namespace detail

inline SuiteConfig parse_suite_config(std::istream& in, const std::string& name) {
    SuiteConfig cfg;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) detail::config_error(name, lineno, "expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            detail::config_error(name, lineno, "expected key = value");

        if (key == "checks") {
            cfg.checks.clear();
            for (const std::string& c : detail::split_list(value)) {
                const auto& known = all_suite_checks();
                if (std::find(known.begin(), known.end(), c) == known.end())
                    detail::config_error(name, lineno, "unknown check '" + c + "'");
                cfg.checks.push_back(c);
            }
            if (cfg.checks.empty()) detail::config_error(name, lineno, "empty check list");
        } else if (key == "sk_k") {
            cfg.sk_k = static_cast<int>(detail::parse_integer(value, name, lineno, key));
            if (cfg.sk_k != 10 && cfg.sk_k != 12)
                detail::config_error(name, lineno, "sk_k must be 10 or 12");
        } else if (key == "sk_dlist") {
            cfg.sk_dlist.clear();
            for (const std::string& c : detail::split_list(value)) {
                const long d = detail::parse_integer(c, name, lineno, key);
                if (!is_fundamental(d) || d >= 0)
                    detail::config_error(name, lineno,
                                         "'" + c + "' is not a negative fundamental discriminant");
                cfg.sk_dlist.push_back(d);
            }
            if (cfg.sk_dlist.size() < 2)
                detail::config_error(name, lineno, "sk_dlist needs at least two entries");
        } else if (key == "sk_tol") {
            cfg.sk_tol = detail::parse_tolerance(value, name, lineno, key);
        } else if (key == "afe_tol") {
            cfg.afe_tol = detail::parse_tolerance(value, name, lineno, key);
        } else if (key == "arch_klist") {
            cfg.arch_klist.clear();
            for (const std::string& c : detail::split_list(value)) {
                const long k = detail::parse_integer(c, name, lineno, key);
                if (k < 3) detail::config_error(name, lineno, "arch_klist entries must be >= 3");
                cfg.arch_klist.push_back(static_cast<int>(k));
            }
        } else if (key == "arch_tol") {
            cfg.arch_tol = detail::parse_tolerance(value, name, lineno, key);
        } else if (key == "coset_primes") {
            cfg.coset_primes.clear();
            for (const std::string& c : detail::split_list(value)) {
                const long p = detail::parse_integer(c, name, lineno, key);
                if (p < 3 || !detail::is_small_prime(p))
                    detail::config_error(name, lineno, "coset_primes entries must be odd primes");
                cfg.coset_primes.push_back(p);
            }
        } else if (key == "coset_val_range") {
            const long r = detail::parse_integer(value, name, lineno, key);
            if (r < 1 || r > 6) detail::config_error(name, lineno, "coset_val_range must be 1..6");
            cfg.coset_val_range = static_cast<int>(r);
        } else if (key == "class_dmin") {
            cfg.class_dmin = detail::parse_integer(value, name, lineno, key);
            if (cfg.class_dmin > -3) detail::config_error(name, lineno, "class_dmin must be <= -3");
        } else if (key == "vanishing_dmin") {
            cfg.vanishing_dmin = detail::parse_integer(value, name, lineno, key);
            if (cfg.vanishing_dmin > -3)
                detail::config_error(name, lineno, "vanishing_dmin must be <= -3");
        } else {
            detail::config_error(name, lineno, "unknown key '" + key + "'");
        }
    }
    return cfg;
}

inline SuiteConfig load_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_suite_config(in, path);
}

namespace detail {

// SymRat equality is semantic (exact fraction comparison); computed values
// often carry a huge unreduced representation, so on agreement the report
// renders the canonical expected shape, which is the same value.  Raw forms
// are only kept when the comparison fails and the detail matters.
inline VerificationReport symrat_report(std::string check, const SymRat& got, const SymRat& want) {
    VerificationReport rep;
    rep.check = std::move(check);
    rep.pass = got == want;
    rep.lhs = rep.pass ? want.str() : got.str();
    rep.rhs = want.str();
    rep.rel_err = rep.pass ? Real(0) : Real(std::numeric_limits<double>::epsilon());
    rep.tolerance = 0;
    return rep;
}

inline std::vector<VerificationReport> suite_local_unram() {
    std::vector<VerificationReport> out;
    const SatakeParams sym = SatakeParams::symbolic();
    for (int l : {+1, -1}) {
        const SymRat v = j_spherical_ramified(sym, ReprTag::I, l);
        out.push_back(symrat_report(std::string("local-unram/I(l=") + (l > 0 ? "+1" : "-1") + ")",
                                    v, SymRat(1)));
    }
    const SymRat vb = j_spherical_ramified(sym, ReprTag::IIb, 1);
    out.push_back(symrat_report("local-unram/IIb", vb, SymRat(2)));
    out.push_back(
        symrat_report("local-unram/normalization", macdonald_phi0(sym, CosetIndex(0, 0)), SymRat(1)));
    return out;
}

inline std::vector<VerificationReport> suite_local_table() {
    std::vector<VerificationReport> out;
    const SatakeParams sym = SatakeParams::symbolic();
    const SymRat one(1), zero(0);
    const SymRat lstd = spin_adjoint_factors(sym, BigRat(1)).standard;
    const SymRat spherical = lstd * (one - SymRat::q(-4));
    const SymRat zeta_pair = (one + SymRat::q(-2)) * (one + SymRat::q(-1));

    const auto row = [&](ReprTag t, int idx, const SymRat& want_j0, const SymRat& want_j) {
        const LocalFactorResult r = j_p1(P1Vector(t, idx), sym);
        const std::string stem = "local-table/" + to_string(t) + ":" + std::to_string(idx);
        out.push_back(symrat_report(stem + "/integral", r.j0, want_j0));
        out.push_back(symrat_report(stem + "/normalized", r.j, want_j));
    };

    row(ReprTag::I, 1, SymRat::q(-1), SymRat::q(-1) * spherical);
    row(ReprTag::I, 2, one, spherical);
    row(ReprTag::I, 3, SymRat::q(-1), SymRat::q(-1) * spherical);
    row(ReprTag::I, 4, one, spherical);
    row(ReprTag::IIa, 1, zero, zero);
    row(ReprTag::IIIa, 1, one + SymRat::q(-1), zeta_pair);
    row(ReprTag::IIIa, 2, one + SymRat::q(-1), zeta_pair);
    row(ReprTag::Vb, 1, zero, zero);
    row(ReprTag::Vc, 1, zero, zero);
    row(ReprTag::VIa, 1, zero, zero);
    row(ReprTag::VIb, 1, SymRat(2) * (one + SymRat::q(-1)), SymRat(2) * zeta_pair);
    return out;
}

inline std::vector<VerificationReport> suite_local_coset(const SuiteConfig& cfg) {
    std::mt19937 rng(0x5eed);
    long cases = 0, mismatches = 0;
    std::string first_bad;
    for (long p : cfg.coset_primes) {
        // rational values with prescribed valuation: r * p^v, r a unit
        const auto draw = [&](int v) {
            long num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1));
            BigRat r(num, 1);
            const BigRat pw = pow_rat(BigRat(p), v);
            r *= pw;
            r.canonicalize();
            return r;
        };
        std::vector<BigRat> coords;
        coords.push_back(BigRat(0));
        for (int v = -cfg.coset_val_range; v <= cfg.coset_val_range; ++v) coords.push_back(draw(v));
        for (const BigRat& x : coords)
            for (const BigRat& y : coords)
                for (const BigRat& z : coords)
                    for (long uu : {1L, p}) {
                        const BigRat u(uu);
                        const CosetIndex got = classify_double_coset(x, y, z, u, BigInt(p));
                        const CosetIndex want = oracle::snf_coset_oracle(x, y, z, u, BigInt(p));
                        ++cases;
                        if (!(got == want)) {
                            ++mismatches;
                            if (first_bad.empty())
                                first_bad = "p=" + std::to_string(p) + " x=" + to_string(x) +
                                            " y=" + to_string(y) + " z=" + to_string(z) +
                                            " u=" + std::to_string(uu);
                        }
                    }
    }
    VerificationReport rep =
        make_exact_report("local-coset", BigRat(mismatches), BigRat(0));
    rep.params["cases"] = std::to_string(cases);
    if (!first_bad.empty()) rep.params["first_mismatch"] = first_bad;
    return {rep};
}

inline std::vector<VerificationReport> suite_class_group(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    for (long d = -3; d >= cfg.class_dmin; --d) {
        if (!is_fundamental(d)) continue;
        const QuadClassGroup G = class_group(FundamentalDisc(d));
        const long h = static_cast<long>(G.h());
        long bad = 0;

        // group table: identity, inverses, commutativity, associativity; any
        // product falling outside the reduced table throws inside class_index
        const std::size_t hh = G.h();
        std::vector<std::vector<std::size_t>> table(hh, std::vector<std::size_t>(hh));
        for (std::size_t i = 0; i < hh; ++i) {
            const QuadForm& f = G.classes[i];
            if (!(reduce(compose(f, principal_form(d))) == f)) ++bad;
            if (!(reduce(compose(f, inverse_form(f))) == reduce(principal_form(d)))) ++bad;
            for (std::size_t j = 0; j < hh; ++j)
                table[i][j] = static_cast<std::size_t>(G.class_index(compose(f, G.classes[j])));
        }
        for (std::size_t i = 0; i < hh; ++i)
            for (std::size_t j = 0; j < hh; ++j) {
                if (table[i][j] != table[j][i]) ++bad;
                for (std::size_t l = 0; l < hh; ++l)
                    if (table[table[i][j]][l] != table[i][table[j][l]]) ++bad;
            }

        // orthogonality both ways, exact in the cyclotomic field
        const std::vector<ClassCharacter> chars = characters(G);
        const Cyclo zero(static_cast<int>(G.exponent), BigRat(0));
        const Cyclo order(static_cast<int>(G.exponent), BigRat(h));
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = 0; j < chars.size(); ++j) {
                Cyclo acc = zero;
                for (int c = 0; c < h; ++c)
                    acc = acc + chars[i].eval(c) * chars[j].conj().eval(c);
                if (!(acc == (i == j ? order : zero))) ++bad;
            }
        for (int c1 = 0; c1 < h; ++c1)
            for (int c2 = 0; c2 < h; ++c2) {
                Cyclo acc = zero;
                for (const ClassCharacter& chr : chars)
                    acc = acc + chr.eval(c1) * chr.conj().eval(c2);
                if (!(acc == (c1 == c2 ? order : zero))) ++bad;
            }

        VerificationReport rep =
            make_exact_report("class-group/d=" + std::to_string(d), BigRat(bad), BigRat(0));
        rep.params["h"] = std::to_string(h);
        out.push_back(rep);
    }
    return out;
}

inline std::vector<VerificationReport> suite_vanishing(const SuiteConfig& cfg) {
    const SKLift lift = sk_lift(cfg.sk_k, -cfg.vanishing_dmin);
    long fields = 0, characters_checked = 0, nonzero = 0;
    std::string first_bad;
    for (long d = -3; d >= cfg.vanishing_dmin; --d) {
        if (!is_fundamental(d)) continue;
        const FundamentalDisc D(d);
        const QuadClassGroup G = class_group(D);
        if (G.h() < 2) continue;
        ++fields;
        for (const ClassCharacter& chr : characters(G)) {
            if (chr.is_trivial()) continue;
            ++characters_checked;
            if (!bessel_sum(lift, D, chr).value.is_zero()) {
                ++nonzero;
                if (first_bad.empty()) first_bad = "d=" + std::to_string(d);
            }
        }
    }
    VerificationReport rep = make_exact_report("vanishing", BigRat(nonzero), BigRat(0));
    rep.params["fields"] = std::to_string(fields);
    rep.params["characters"] = std::to_string(characters_checked);
    rep.params["k"] = std::to_string(cfg.sk_k);
    if (!first_bad.empty()) rep.params["first_nonzero"] = first_bad;
    return {rep};
}

inline std::vector<VerificationReport> suite_arch(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    for (int k : cfg.arch_klist) {
        VerificationReport rep = arch_quadrature_check(k, cfg.arch_tol);
        rep.check = "arch/k=" + std::to_string(k);
        out.push_back(rep);
    }
    return out;
}

inline std::vector<VerificationReport> suite_const() {
    Real worst = 0, worst_lhs = 0, worst_rhs = 0;
    int worst_k = 3;
    for (int k = 3; k <= 40; ++k) {
        const Real lhs = boecherer_constant(k);
        const Real rhs = pow(Real(2), 2 * k - 6) * gamma_factors(k).ratio;
        const Real rel = relative_error(lhs, rhs);
        if (rel > worst) {
            worst = rel;
            worst_lhs = lhs;
            worst_rhs = rhs;
            worst_k = k;
        }
    }
    VerificationReport rep =
        make_report("const/gamma-ratio", worst_lhs, worst_rhs, Real("1e-12"));
    rep.params["k_range"] = "3..40";
    rep.params["worst_k"] = std::to_string(worst_k);
    return {rep};
}

inline std::vector<VerificationReport> suite_sk_ratio(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < cfg.sk_dlist.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.sk_dlist.size(); ++j) {
            VerificationReport rep = sk_ratio_check(cfg.sk_k, cfg.sk_dlist[i], cfg.sk_dlist[j],
                                                    cfg.sk_tol, cfg.afe_tol);
            rep.check = "sk-ratio/(" + std::to_string(cfg.sk_dlist[i]) + "," +
                        std::to_string(cfg.sk_dlist[j]) + ")";
            out.push_back(rep);
        }
    return out;
}

}  // namespace detail

inline std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
    using Group = std::function<std::vector<VerificationReport>()>;
    std::vector<std::pair<std::string, Group>> groups;
    for (const std::string& name : all_suite_checks()) {
        if (std::find(cfg.checks.begin(), cfg.checks.end(), name) == cfg.checks.end()) continue;
        if (name == "local-unram")
            groups.emplace_back(name, [] { return detail::suite_local_unram(); });
        else if (name == "local-table")
            groups.emplace_back(name, [] { return detail::suite_local_table(); });
        else if (name == "local-coset")
            groups.emplace_back(name, [&cfg] { return detail::suite_local_coset(cfg); });
        else if (name == "class-group")
            groups.emplace_back(name, [&cfg] { return detail::suite_class_group(cfg); });
        else if (name == "vanishing")
            groups.emplace_back(name, [&cfg] { return detail::suite_vanishing(cfg); });
        else if (name == "arch")
            groups.emplace_back(name, [&cfg] { return detail::suite_arch(cfg); });
        else if (name == "const")
            groups.emplace_back(name, [] { return detail::suite_const(); });
        else if (name == "sk-ratio")
            groups.emplace_back(name, [&cfg] { return detail::suite_sk_ratio(cfg); });
    }
    std::vector<std::future<std::vector<VerificationReport>>> futures;
    futures.reserve(groups.size());
    for (auto& g : groups) futures.push_back(std::async(std::launch::async, g.second));
    std::vector<VerificationReport> out;
    for (auto& f : futures) {
        const auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline nlohmann::json suite_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& r : reports) arr.push_back(to_json(r));
    return arr;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace sib

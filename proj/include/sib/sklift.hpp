#pragma once

// Saito-Kurokawa lifts through the Maass coefficient formula, and ingested
// Siegel Fourier coefficient tables keyed by reduced forms.
//
// A positive definite semi-integral matrix [[a, b/2], [b/2, c]] is carried
// around as the integer triple (a, b, c).  Coefficient lookups are invariant
// under unimodular change of variable, which the table realizes by reducing
// the key and folding b to |b|; the fold is the determinant -1 coset and is
// coefficient-preserving for the even weights handled here.

#include "sib/jacobi.hpp"
#include "sib/qexp.hpp"
#include "sib/quadform.hpp"
#include "sib/rational.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sib {

struct SKLift {
    int k = 0;          // Siegel weight
    QExpansion g;       // the weight 2k-2 level-1 eigenform it lifts
    KohnenForm kohnen;  // the c(D) table driving the Maass formula
};

// k in {10, 12}: the index-1 Jacobi cusp spaces are one-dimensional there
// and correspond to the weight 2k-2 cusp eigenforms.
inline SKLift sk_lift(int k, long d_max, long g_prec = 64) {
    if (k != 10 && k != 12) throw std::invalid_argument("sk_lift: weight must be 10 or 12");
    SKLift f;
    f.k = k;
    f.g = level1_cusp_eigenform(2 * k - 2, g_prec);
    f.kohnen = jacobi_index1(k, d_max);
    return f;
}

// a(F, T) = sum_{r | content(T)} r^{k-1} c(|disc T| / r^2).
inline BigRat sk_coefficient(const SKLift& f, const QuadForm& t) {
    if (!t.is_positive_definite()) throw std::invalid_argument("sk_coefficient: form must be positive definite");
    BigInt dabs = -t.disc();
    if (dabs > f.kohnen.d_max) throw std::out_of_range("sk_coefficient: discriminant beyond the Kohnen table");
    BigInt content = gcd(t.a, gcd(t.b, t.c));
    BigRat acc(0);
    for (BigInt r(1); r <= content; ++r) {
        if (content % r != 0) continue;
        BigInt r2 = r * r;
        acc += BigRat(pow_int(r, static_cast<unsigned>(f.k - 1))) * f.kohnen.at(to_long(dabs / r2));
    }
    acc.canonicalize();
    return acc;
}

struct SiegelCoeffTable {
    int weight = 0;
    int level = 1;
    std::map<std::array<long, 3>, BigRat> entries;

    static std::array<long, 3> key_of(const QuadForm& t) {
        QuadForm r = reduce(t);
        if (r.b < 0) r.b = -r.b;  // fold to the b >= 0 representative
        return {to_long(r.a), to_long(r.b), to_long(r.c)};
    }

    const BigRat& at(const QuadForm& t) const {
        auto it = entries.find(key_of(t));
        if (it == entries.end()) throw std::out_of_range("SiegelCoeffTable: form not in table");
        return it->second;
    }

    bool contains(const QuadForm& t) const { return entries.count(key_of(t)) != 0; }
};

// Reads "a b c value" lines, an optional "# weight W level N" header first.
// Keys are reduced on ingestion; rows landing on the same reduced key must
// agree.
inline SiegelCoeffTable ingest_siegel_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ingest_siegel_table: cannot open " + path);
    SiegelCoeffTable tab;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ss(line);
        if (line[0] == '#') {
            std::string hash, kw1, kw2;
            int w = 0, lv = 0;
            ss >> hash >> kw1 >> w >> kw2 >> lv;
            if (ss.fail() || kw1 != "weight" || kw2 != "level")
                throw std::runtime_error("ingest_siegel_table: malformed header at line " + std::to_string(lineno));
            tab.weight = w;
            tab.level = lv;
            continue;
        }
        long a = 0, b = 0, c = 0;
        std::string v_str;
        ss >> a >> b >> c >> v_str;
        std::string extra;
        if (ss.fail() || (ss >> extra))
            throw std::runtime_error("ingest_siegel_table: malformed line " + std::to_string(lineno));
        BigRat v;
        if (mpq_set_str(v.get_mpq_t(), v_str.c_str(), 10) != 0 || v.get_den() == 0)
            throw std::runtime_error("ingest_siegel_table: malformed value at line " + std::to_string(lineno));
        v.canonicalize();
        QuadForm t{BigInt(a), BigInt(b), BigInt(c)};
        if (!t.is_positive_definite())
            throw std::runtime_error("ingest_siegel_table: form not positive definite at line " +
                                     std::to_string(lineno));
        auto key = SiegelCoeffTable::key_of(t);
        auto it = tab.entries.find(key);
        if (it != tab.entries.end() && it->second != v)
            throw std::runtime_error("ingest_siegel_table: conflicting values for one class at line " +
                                     std::to_string(lineno));
        tab.entries[key] = v;
    }
    if (tab.entries.empty()) throw std::runtime_error("ingest_siegel_table: no entries in " + path);
    return tab;
}

}  // namespace sib

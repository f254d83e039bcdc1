// Level-1 modular forms, Cohen numbers, index-1 Jacobi forms, Saito-Kurokawa
// coefficients, and the two table ingestion paths.

#include "sib/cohen.hpp"
#include "sib/jacobi.hpp"
#include "sib/oracle/hurwitz.hpp"
#include "sib/oracle/jacobi_grid.hpp"
#include "sib/qexp.hpp"
#include "sib/quadform.hpp"
#include "sib/sklift.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace sib;

namespace {

// Coprime multiplicativity needs indices up to 200 * 199.
constexpr long kBigPrec = 39800;

const QExpansion& big_eigenform(int w) {
    static std::map<int, QExpansion> cache;
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, level1_cusp_eigenform(w, kBigPrec)).first;
    return it->second;
}

BigInt sigma_naive(long n, unsigned k) {
    BigInt s(0);
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += pow_int(BigInt(d), k);
    return s;
}

std::string temp_file(const std::string& tag, const std::string& contents) {
    std::string path = (std::filesystem::temp_directory_path() / ("sib_mf_" + tag + ".txt")).string();
    std::ofstream out(path);
    out << contents;
    out.close();
    return path;
}

}  // namespace

TEST_CASE("Eisenstein series match independent divisor sums") {
    QExpansion e4 = eisenstein(4, 60), e6 = eisenstein(6, 60);
    REQUIRE(e4.coeffs[0] == 1);
    REQUIRE(e6.coeffs[0] == 1);
    REQUIRE(e4.coeffs[1] == 240);
    REQUIRE(e6.coeffs[1] == -504);
    for (long n = 1; n <= 60; ++n) {
        REQUIRE(e4.at(n) == BigRat(240 * sigma_naive(n, 3)));
        REQUIRE(e6.at(n) == BigRat(-504 * sigma_naive(n, 5)));
    }
    REQUIRE_THROWS_AS(eisenstein(8, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(eisenstein(4, 0), std::invalid_argument);
}

TEST_CASE("discriminant function: pinned values, both constructions, Ramanujan congruence") {
    QExpansion d = delta(500);
    REQUIRE(d.weight == 12);
    REQUIRE(d.coeffs[0] == 0);
    REQUIRE(d.coeffs[1] == 1);
    REQUIRE(d.coeffs[2] == -24);
    REQUIRE(d.coeffs[3] == 252);
    REQUIRE(d.coeffs[4] == -1472);
    REQUIRE(d.coeffs[5] == 4830);
    REQUIRE(d.coeffs[6] == -6048);
    REQUIRE(d.coeffs[7] == -16744);

    // Same form through the Eisenstein ring: (E4^3 - E6^2) / 1728.
    QExpansion e4 = eisenstein(4, 200), e6 = eisenstein(6, 200);
    QExpansion alt = BigRat(1, 1728) * ((e4 * e4) * e4 - e6 * e6);
    for (long n = 0; n <= 200; ++n) REQUIRE(alt.at(n) == d.at(n));

    // tau(n) == sigma_11(n) mod 691.
    for (long n = 1; n <= 500; ++n) {
        BigInt gap = BigInt(d.at(n).get_num()) - sigma_naive(n, 11);
        REQUIRE(gap % 691 == 0);
    }
}

TEST_CASE("one-dimensional cusp spaces: normalization and Hecke structure") {
    const int weights[] = {12, 16, 18, 20, 22};
    for (int w : weights) {
        const QExpansion& g = big_eigenform(w);
        REQUIRE(g.coeffs[0] == 0);
        REQUIRE(g.coeffs[1] == 1);
        REQUIRE(hecke_eigenvalue(g, 1) == 1);

        // a(mn) = a(m) a(n) for coprime m, n.
        for (long m = 2; m <= 200; ++m)
            for (long n = m + 1; n <= 200; ++n) {
                if (std::gcd(m, n) != 1) continue;
                REQUIRE(g.at(m * n) == g.at(m) * g.at(n));
            }

        // a(p^{e+1}) = a(p) a(p^e) - p^{w-1} a(p^{e-1}).
        for (long p : {2L, 3L, 5L, 7L}) {
            BigRat pk(pow_int(BigInt(p), static_cast<unsigned>(w - 1)));
            for (long pe = p; pe * p <= kBigPrec; pe *= p)
                REQUIRE(g.at(pe * p) == g.at(p) * g.at(pe) - pk * g.at(pe / p));
        }
    }
    REQUIRE(big_eigenform(18).coeffs[2] == -528);
    REQUIRE(hecke_eigenvalue(big_eigenform(18), 4) ==
            big_eigenform(18).at(2) * big_eigenform(18).at(2) - BigRat(pow_int(BigInt(2), 17)));
    REQUIRE_THROWS_AS(level1_cusp_eigenform(14, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(hecke_eigenvalue(eisenstein(4, 10), 2), std::invalid_argument);
}

TEST_CASE("Bernoulli machinery") {
    REQUIRE(bernoulli_number(0) == 1);
    REQUIRE(bernoulli_number(1) == BigRat(-1, 2));
    REQUIRE(bernoulli_number(2) == BigRat(1, 6));
    REQUIRE(bernoulli_number(4) == BigRat(-1, 30));
    REQUIRE(bernoulli_number(6) == BigRat(1, 42));
    REQUIRE(bernoulli_number(10) == BigRat(5, 66));
    REQUIRE(bernoulli_number(12) == BigRat(-691, 2730));
    for (int n = 3; n <= 19; n += 2) REQUIRE(bernoulli_number(n) == 0);

    BigRat third(1, 3);
    REQUIRE(bernoulli_poly(2, third) == BigRat(-1, 18));  // x^2 - x + 1/6 at 1/3
    REQUIRE(bernoulli_poly(0, third) == 1);

    REQUIRE(generalized_bernoulli(1, FundamentalDisc(-3)) == BigRat(-1, 3));
    REQUIRE(generalized_bernoulli(1, FundamentalDisc(-4)) == BigRat(-1, 2));
}

TEST_CASE("Cohen numbers: pinned values, support, Hurwitz enumeration oracle") {
    REQUIRE(cohen_number(1, 0) == BigRat(-1, 12));
    REQUIRE(cohen_number(2, 0) == BigRat(1, 120));
    REQUIRE(cohen_number(3, 0) == BigRat(-1, 252));
    REQUIRE(cohen_number(5, 0) == BigRat(-1, 132));
    REQUIRE(cohen_number(1, 3) == BigRat(1, 3));
    REQUIRE(cohen_number(1, 4) == BigRat(1, 2));

    for (int r = 1; r <= 4; ++r)
        for (long n = 1; n <= 30; ++n)
            if (n % 4 == 1 || n % 4 == 2) REQUIRE(cohen_number(r, n) == 0);

    // The square-divisor split against weighted form counting.
    for (long n = 1; n <= 160; ++n) REQUIRE(cohen_number(1, n) == oracle::hurwitz_count(n));

    REQUIRE_THROWS_AS(cohen_number(0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(cohen_number(1, -4), std::invalid_argument);
}

TEST_CASE("index-1 Jacobi tables: pinned coefficients and structural checks") {
    KohnenForm e41 = jacobi_index1(4, 200);
    KohnenForm e61 = jacobi_index1(6, 200);
    KohnenForm f101 = jacobi_index1(10, 200);
    KohnenForm f121 = jacobi_index1(12, 200);

    REQUIRE(e41.at(0) == 1);
    REQUIRE(e41.at(3) == 56);
    REQUIRE(e41.at(4) == 126);
    REQUIRE(e61.at(0) == 1);
    REQUIRE(e61.at(3) == -88);
    REQUIRE(e61.at(4) == -330);
    REQUIRE(f101.at(0) == 0);
    REQUIRE(f101.at(3) == 1);
    REQUIRE(f101.at(4) == -2);
    REQUIRE(f121.at(0) == 0);
    REQUIRE(f121.at(3) == 1);
    REQUIRE(f121.at(4) == 10);

    for (const KohnenForm* f : {&f101, &f121})
        for (const auto& [d, v] : f->c) REQUIRE(BigInt(v.get_den()) == 1);

    REQUIRE_THROWS_AS(e41.at(2), std::invalid_argument);   // off the plus-space support
    REQUIRE_THROWS_AS(e41.at(201), std::out_of_range);     // beyond the table
    REQUIRE_THROWS_AS(jacobi_index1(8, 10), std::invalid_argument);
}

TEST_CASE("Jacobi coefficients on the two-variable grid collapse to discriminant functions") {
    const long n_max = 50, r_max = 15, d_max = 200;
    QExpansion e4 = eisenstein(4, n_max), e6 = eisenstein(6, n_max);

    oracle::JacobiGrid g4 = oracle::eisenstein_grid(4, n_max, r_max);
    oracle::JacobiGrid g6 = oracle::eisenstein_grid(6, n_max, r_max);
    oracle::JacobiGrid f10 = oracle::grid_scale(
        BigRat(1, 144), oracle::grid_sub(oracle::grid_scale_by_form(e6, g4), oracle::grid_scale_by_form(e4, g6)));
    oracle::JacobiGrid f12 = oracle::grid_scale(
        BigRat(1, 144),
        oracle::grid_sub(oracle::grid_scale_by_form(e4 * e4, g4), oracle::grid_scale_by_form(e6, g6)));

    const struct {
        const oracle::JacobiGrid* grid;
        int k;
    } rows[] = {{&g4, 4}, {&g6, 6}, {&f10, 10}, {&f12, 12}};

    for (const auto& row : rows) {
        KohnenForm table = jacobi_index1(row.k, d_max);
        std::map<long, BigRat> seen;
        for (long n = 0; n <= n_max; ++n)
            for (long r = -r_max; r <= r_max; ++r) {
                long d = 4 * n - r * r;
                if (d < 0) continue;
                const BigRat& v = row.grid->at(n, r);
                auto [it, fresh] = seen.emplace(d, v);
                if (!fresh) REQUIRE(it->second == v);  // same D, same coefficient
                REQUIRE(v == table.at(d));
            }
        REQUIRE(seen.size() > 90);  // both residue classes well covered
    }
}

TEST_CASE("Saito-Kurokawa coefficients through the divisor sum") {
    SKLift f = sk_lift(10, 200);
    REQUIRE(f.g.weight == 18);
    REQUIRE(f.g.coeffs[1] == 1);
    REQUIRE(f.g.coeffs[2] == -528);

    QuadForm t3{BigInt(1), BigInt(1), BigInt(1)};   // disc -3
    QuadForm t4{BigInt(1), BigInt(0), BigInt(1)};   // disc -4
    QuadForm t16{BigInt(2), BigInt(0), BigInt(2)};  // disc -16, content 2
    REQUIRE(sk_coefficient(f, t3) == f.kohnen.at(3));
    REQUIRE(sk_coefficient(f, t3) == 1);
    REQUIRE(sk_coefficient(f, t4) == f.kohnen.at(4));
    REQUIRE(sk_coefficient(f, t16) == f.kohnen.at(16) + BigRat(pow_int(BigInt(2), 9)) * f.kohnen.at(4));

    // Invariance under unimodular change of variable.
    std::mt19937_64 rng(20240818u);
    std::uniform_int_distribution<int> small(-4, 4);
    for (const QuadForm* t : {&t3, &t4, &t16}) {
        BigRat want = sk_coefficient(f, *t);
        for (int trial = 0; trial < 25; ++trial) {
            long p = small(rng), q = small(rng);
            if (std::gcd(p, q) != 1) continue;
            // Complete (p, q) to determinant one by brute force over a window.
            bool found = false;
            long rr = 0, ss = 0;
            for (long r = -9; r <= 9 && !found; ++r)
                for (long s = -9; s <= 9 && !found; ++s)
                    if (p * s - q * r == 1) {
                        rr = r;
                        ss = s;
                        found = true;
                    }
            REQUIRE(found);
            QuadForm moved = transform(*t, BigInt(p), BigInt(q), BigInt(rr), BigInt(ss));
            REQUIRE(sk_coefficient(f, moved) == want);
        }
    }

    // Constant across every class of one fundamental discriminant.
    for (long d : {-23L, -47L, -71L}) {
        QuadClassGroup cl = class_group(FundamentalDisc(d));
        for (const QuadForm& c : cl.classes) REQUIRE(sk_coefficient(f, c) == f.kohnen.at(-d));
    }

    SKLift f12 = sk_lift(12, 60);
    REQUIRE(f12.g.weight == 22);
    REQUIRE(sk_coefficient(f12, t3) == 1);

    QuadForm big{BigInt(1), BigInt(1), BigInt(80)};  // disc -319 beyond the table
    REQUIRE_THROWS_AS(sk_coefficient(f, big), std::out_of_range);
    QuadForm indef{BigInt(1), BigInt(5), BigInt(1)};
    REQUIRE_THROWS_AS(sk_coefficient(f, indef), std::invalid_argument);
    REQUIRE_THROWS_AS(sk_lift(9, 10), std::invalid_argument);
}

TEST_CASE("Siegel coefficient table ingestion and reduced lookup") {
    std::string good = temp_file("siegel_good",
                                 "# weight 10 level 1\n"
                                 "2 1 3 7\n"
                                 "1 1 6 5/3\n"
                                 "3 1 2 7\n");
    SiegelCoeffTable tab = ingest_siegel_table(good);
    REQUIRE(tab.weight == 10);
    REQUIRE(tab.level == 1);
    REQUIRE(tab.entries.size() == 2);

    QuadForm probe{BigInt(3), BigInt(1), BigInt(2)};
    REQUIRE(tab.at(probe) == 7);
    REQUIRE(tab.at(QuadForm{BigInt(2), BigInt(-1), BigInt(3)}) == 7);
    REQUIRE(tab.at(QuadForm{BigInt(1), BigInt(1), BigInt(6)}) == BigRat(5, 3));
    REQUIRE(tab.at(QuadForm{BigInt(6), BigInt(-1), BigInt(1)}) == BigRat(5, 3));
    REQUIRE(tab.contains(probe));
    REQUIRE_FALSE(tab.contains(QuadForm{BigInt(1), BigInt(0), BigInt(1)}));
    REQUIRE_THROWS_AS(tab.at(QuadForm{BigInt(1), BigInt(0), BigInt(1)}), std::out_of_range);

    std::string clash = temp_file("siegel_clash", "2 1 3 7\n3 1 2 8\n");
    REQUIRE_THROWS_WITH(ingest_siegel_table(clash), Catch::Matchers::ContainsSubstring("line 2"));
    std::string short_row = temp_file("siegel_short", "2 1 3\n");
    REQUIRE_THROWS_WITH(ingest_siegel_table(short_row), Catch::Matchers::ContainsSubstring("line 1"));
    std::string indef_row = temp_file("siegel_indef", "1 5 1 3\n");
    REQUIRE_THROWS_WITH(ingest_siegel_table(indef_row), Catch::Matchers::ContainsSubstring("line 1"));
    std::string bad_value = temp_file("siegel_badval", "2 1 3 1/0\n");
    REQUIRE_THROWS_WITH(ingest_siegel_table(bad_value), Catch::Matchers::ContainsSubstring("line 1"));
}

TEST_CASE("q-expansion ingestion") {
    std::string good = temp_file("qexp_good",
                                 "# weight 18 level 1\n"
                                 "\n"
                                 "1 1\n"
                                 "2 -528\n"
                                 "5 9\n");
    QExpansion g = ingest_qexp(good);
    REQUIRE(g.weight == 18);
    REQUIRE(g.level == 1);
    REQUIRE(g.prec() == 5);
    REQUIRE(g.coeffs[1] == 1);
    REQUIRE(g.coeffs[2] == -528);
    REQUIRE(g.coeffs[3] == 0);
    REQUIRE(g.coeffs[5] == 9);

    std::string bad = temp_file("qexp_bad", "1 1\n2 2 3\n");
    REQUIRE_THROWS_WITH(ingest_qexp(bad), Catch::Matchers::ContainsSubstring("line 2"));
    std::string decreasing = temp_file("qexp_dec", "3 1\n2 2\n");
    REQUIRE_THROWS_WITH(ingest_qexp(decreasing), Catch::Matchers::ContainsSubstring("line 2"));
    std::string nonint = temp_file("qexp_nonint", "1 1\n2 x\n");
    REQUIRE_THROWS_WITH(ingest_qexp(nonint), Catch::Matchers::ContainsSubstring("line 2"));
    REQUIRE_THROWS_AS(ingest_qexp("/nonexistent/path/zzz.txt"), std::runtime_error);
}

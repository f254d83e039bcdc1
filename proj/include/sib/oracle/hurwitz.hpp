#pragma once

// Test oracle: Hurwitz class numbers by direct enumeration of reduced
// positive definite binary forms (imprimitive ones included), weighting the
// multiples of x^2 + y^2 by 1/2 and of x^2 + xy + y^2 by 1/3.

#include "sib/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace sib::oracle {

inline BigRat hurwitz_count(long n) {
    if (n <= 0 || n % 4 == 1 || n % 4 == 2) return BigRat(0);
    BigRat acc(0);
    for (long a = 1; 3 * a * a <= n; ++a) {
        for (long b = -a; b <= a; ++b) {
            if ((b * b + n) % (4 * a)) continue;
            long c = (b * b + n) / (4 * a);
            if (c < a) continue;
            if (b < 0 && (c == a || b == -a)) continue;  // boundary twin
            long g = std::gcd(std::abs(b), std::gcd(a, c));
            if (a == g && b == 0 && c == g)
                acc += BigRat(1, 2);
            else if (a == g && b == g && c == g)
                acc += BigRat(1, 3);
            else
                acc += 1;
        }
    }
    return acc;
}

}  // namespace sib::oracle

#pragma once

#include <eulerprod/poly.hpp>
#include <eulerprod/rng.hpp>

#include <set>

namespace testing {

using namespace eulerprod;

// Random polynomial with distinct nonzero exponents, 1 <= n <= max_n, 1 <= r <= max_r.
inline IntPoly random_poly(Rng &rng, int max_n, int max_r, long max_coeff, long max_exp = 2)
{
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, max_n));
    const int r = static_cast<int>(rng.uniform_int(1, max_r));
    std::set<ExpVec> used;
    std::vector<Monomial> terms;
    for (int attempts = 0; static_cast<int>(terms.size()) < r && attempts < 100; ++attempts) {
        ExpVec e(n);
        long deg = 0;
        for (auto &x : e) {
            x = rng.uniform_int(0, max_exp);
            deg += x;
        }
        if (deg == 0 || !used.insert(e).second)
            continue;
        long c = 0;
        while (c == 0)
            c = rng.uniform_int(-max_coeff, max_coeff);
        terms.push_back({Int(c), e});
    }
    return IntPoly(n, terms);
}

} // namespace testing

#pragma once

#include <vector>

#include <json.hpp>

#include <eulerprod/geometry.hpp>

namespace eulerprod {

// sum over r in {0..n-1}^n with n | |r| of X^r X_{n+1}^{|r|/n}
IntPoly v_n_poly(int n);

struct ToricReport {
    int n = 0;
    IntPoly v_poly{1, {{Int(1), {1}}}};
    // coefficient vectors of the linear forms n s_i + s_{n+1} (numerator) and s_1 + ... + s_{n+1} (denominator)
    std::vector<ExpVec> zeta_numerators;
    ExpVec zeta_denominator;
    DomainSpec domain;
    std::vector<Face> faces;
    bool all_faces_nondegenerate = false;
};

// Throws DegenerateFaceFound when a boundary face is degenerate.
ToricReport analyze_v_n(int n, unsigned threads = 1);

nlohmann::ordered_json to_json(const ToricReport &r);

} // namespace eulerprod

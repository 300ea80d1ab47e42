#pragma once

#include <vector>

#include <eulerprod/poly.hpp>

namespace eulerprod {

// Exact decision of the face system {x : a.x = 0, g_j.x >= 1 for every j}.
// When feasible, `witness` satisfies it exactly.  When infeasible,
// `certificate` holds lambda >= 0 with sum 1 such that sum lambda_j g_j is a
// rational multiple of a (an obstruction in the sense of Gordan's theorem).
struct FaceSystemResult {
    bool feasible = false;
    std::vector<Rat> witness;
    std::vector<Rat> certificate;
};

// Fourier-Motzkin elimination in exact rationals.  Practical for small systems.
FaceSystemResult solve_face_system_fm(const ExpVec &a, const std::vector<ExpVec> &g);
// Phase-one simplex with a fraction-free integer tableau and Bland's rule.
FaceSystemResult solve_face_system_simplex(const ExpVec &a, const std::vector<ExpVec> &g);
// Chooses Fourier-Motzkin for small systems and the simplex otherwise.
FaceSystemResult solve_face_system(const ExpVec &a, const std::vector<ExpVec> &g);

bool check_witness(const ExpVec &a, const std::vector<ExpVec> &g, const std::vector<Rat> &x);
bool check_certificate(const ExpVec &a, const std::vector<ExpVec> &g, const std::vector<Rat> &lambda);

} // namespace eulerprod

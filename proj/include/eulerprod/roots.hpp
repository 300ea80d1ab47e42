#pragma once

#include <vector>

#include <eulerprod/upoly.hpp>

namespace eulerprod {

// All complex roots (with multiplicity) from companion-matrix eigenvalues,
// each refined by Newton iteration on f itself.  Sorted by argument, then modulus.
std::vector<cplx> poly_roots(const UPoly &f);

// Newton refinement of a single root; returns the refined value.
cplx newton_polish(const UPoly &f, cplx z, int max_iter = 60);

double min_pairwise_distance(const std::vector<cplx> &pts);

} // namespace eulerprod

#include <eulerprod/roots.hpp>

#include <eulerprod/errors.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace eulerprod {

cplx newton_polish(const UPoly &f, cplx z, int max_iter)
{
    for (int it = 0; it < max_iter; ++it) {
        const cplx v = eval(f, z), d = eval_derivative(f, z);
        if (v == cplx(0))
            break;
        if (d == cplx(0))
            break;
        const cplx step = v / d;
        z -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z)))
            break;
    }
    return z;
}

std::vector<cplx> poly_roots(const UPoly &f)
{
    const long n = degree(f);
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "poly_roots needs degree at least 1");
    // zero roots cannot occur for constant term 1 but are handled for completeness
    long shift = 0;
    while (f[shift] == 0)
        ++shift;
    const long m = n - shift;
    std::vector<cplx> roots(shift, cplx(0));
    if (m > 0) {
        const double lead = f[n].get_d();
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(m, m);
        for (long i = 1; i < m; ++i)
            comp(i, i - 1) = 1.0;
        for (long i = 0; i < m; ++i)
            comp(i, m - 1) = -f[shift + i].get_d() / lead;
        Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
        if (es.info() != Eigen::Success)
            throw Error(ErrorKind::ConvergenceFailure, "companion eigenvalue computation failed");
        for (long i = 0; i < m; ++i)
            roots.push_back(newton_polish(f, es.eigenvalues()[i]));
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        const double aa = std::arg(a), ab = std::arg(b);
        if (aa != ab)
            return aa < ab;
        return std::abs(a) < std::abs(b);
    });
    return roots;
}

double min_pairwise_distance(const std::vector<cplx> &pts)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, std::abs(pts[i] - pts[j]));
    return best;
}

} // namespace eulerprod

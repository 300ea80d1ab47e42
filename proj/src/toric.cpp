#include <eulerprod/toric.hpp>

#include <eulerprod/errors.hpp>

namespace eulerprod {

IntPoly v_n_poly(int n)
{
    if (n < 2 || n > 6)
        throw Error(ErrorKind::InvalidArgument, "toric family is supported for 2 <= n <= 6");
    std::vector<Monomial> terms;
    ExpVec r(n, 0);
    while (true) {
        long s = 0;
        for (long x : r)
            s += x;
        if (s > 0 && s % n == 0) {
            ExpVec e = r;
            e.push_back(s / n);
            terms.push_back({Int(1), e});
        }
        // odometer over {0..n-1}^n
        int i = 0;
        while (i < n && r[i] == n - 1)
            r[i++] = 0;
        if (i == n)
            break;
        ++r[i];
    }
    return IntPoly(n + 1, terms);
}

ToricReport analyze_v_n(int n, unsigned threads)
{
    ToricReport rep;
    rep.n = n;
    rep.v_poly = v_n_poly(n);
    for (int i = 0; i < n; ++i) {
        ExpVec f(n + 1, 0);
        f[i] = n;
        f[n] = 1;
        rep.zeta_numerators.push_back(f);
    }
    rep.zeta_denominator.assign(n + 1, 1);
    // one inequality per nonzero admissible r, i.e. per monomial
    rep.domain.delta = 0;
    for (const auto &m : rep.v_poly.terms())
        rep.domain.inequalities.push_back(m.exps);
    rep.faces = enumerate_faces(rep.v_poly, threads);
    rep.all_faces_nondegenerate = true;
    for (const auto &f : rep.faces)
        if (f.feasible && !f.nondegenerate) {
            rep.all_faces_nondegenerate = false;
            throw Error(ErrorKind::DegenerateFaceFound, "degenerate boundary face for polar vector column "
                                                            + std::to_string(f.e + 1));
        }
    return rep;
}

nlohmann::ordered_json to_json(const ToricReport &r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["v_poly"] = render(r.v_poly);
    j["terms"] = r.v_poly.nterms();
    j["zeta_prefactor"] = {{"numerators", r.zeta_numerators}, {"denominator", r.zeta_denominator}};
    j["domain"] = to_json(r.domain);
    std::size_t feasible = 0;
    auto faces = nlohmann::ordered_json::array();
    for (const auto &f : r.faces)
        if (f.feasible) {
            ++feasible;
            faces.push_back(to_json(f));
        }
    j["boundary_faces"] = feasible;
    j["faces"] = faces;
    j["all_faces_nondegenerate"] = r.all_faces_nondegenerate;
    return j;
}

} // namespace eulerprod

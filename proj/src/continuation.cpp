#include <eulerprod/continuation.hpp>

#include <eulerprod/errors.hpp>
#include <eulerprod/parallel.hpp>

#include <cmath>
#include <limits>

namespace eulerprod {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kMaxPrimeCutoff = 50'000'000;

std::vector<cplx> column_weights(const std::vector<cplx> &s, const ExponentMatrix &alpha)
{
    if (s.size() != alpha.rows())
        throw Error(ErrorKind::InvalidArgument, "point has " + std::to_string(s.size()) + " coordinates, polynomial has "
                                                    + std::to_string(alpha.rows()) + " variables");
    std::vector<cplx> w;
    for (const auto &c : alpha.columns()) {
        cplx acc = 0;
        for (std::size_t l = 0; l < c.size(); ++l)
            acc += s[l] * static_cast<double>(c[l]);
        w.push_back(acc);
    }
    return w;
}

// h(p^{-s}) written through the column weights, so no per-variable powers overflow.
cplx h_at_prime(const IntPoly &h, const std::vector<cplx> &w, double logp)
{
    cplx acc = 1;
    for (std::size_t j = 0; j < w.size(); ++j)
        acc += h.term(j).coeff.get_d() * std::exp(-w[j] * logp);
    return acc;
}

std::vector<cplx> rho_list(const ZeroTable *zeros)
{
    std::vector<cplx> rho{cplx(1, 0)};
    if (zeros)
        for (double t : zeros->ordinates) {
            rho.emplace_back(0.5, t);
            rho.emplace_back(0.5, -t);
        }
    return rho;
}

} // namespace

double delta_of(const std::vector<cplx> &s, const ExponentMatrix &alpha)
{
    const auto w = column_weights(s, alpha);
    double d = std::numeric_limits<double>::infinity();
    for (const auto &x : w)
        d = std::min(d, x.real());
    if (!(d > 0))
        throw Error(ErrorKind::NotInDomain, "min_j sigma.alpha_j = " + std::to_string(d) + " is not positive");
    return d;
}

long m_delta(const Rat &C, double delta)
{
    if (!(delta > 0))
        throw Error(ErrorKind::InvalidArgument, "m_delta needs delta > 0");
    const double x = std::pow(C.get_d(), -1.0 / delta) * (1 + 1e-12);
    if (!(x < static_cast<double>(kMaxPrimeCutoff)))
        throw Error(ErrorKind::InvalidArgument, "prime cutoff exceeds desk scale; increase delta");
    return static_cast<long>(std::floor(x)) + 1;
}

DirectResult eval_z_direct(const IntPoly &h, const std::vector<cplx> &s, long P)
{
    const auto alpha = exponent_matrix(h);
    const auto w = column_weights(s, alpha);
    double delta = std::numeric_limits<double>::infinity();
    for (const auto &x : w)
        delta = std::min(delta, x.real());
    if (!(delta > 1))
        throw Error(ErrorKind::NotAbsolutelyConvergent, "direct product needs sigma.alpha_j > 1 for every j");
    if (P < 2 || P > kMaxPrimeCutoff)
        throw Error(ErrorKind::InvalidArgument, "prime cutoff out of range");
    const auto primes = primes_up_to(P);
    cplx value = 1;
    for (long p : primes)
        value *= h_at_prime(h, w, std::log(static_cast<double>(p)));
    // first-order correction from the primes beyond P
    cplx corr = 0;
    double A = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        corr += h.term(j).coeff.get_d() * prime_zeta_tail(w[j], primes);
        A += std::abs(h.term(j).coeff.get_d());
    }
    value *= std::exp(corr);
    DirectResult r;
    r.value = value;
    r.prime_cutoff = P;
    const double Pd = static_cast<double>(P);
    const double x = A * std::pow(Pd + 1, -delta);
    if (x >= 1) {
        r.tail_bound = std::numeric_limits<double>::infinity();
        return r;
    }
    // |log(1+u) - u| <= |u|^2 / (2(1-|u|)) summed over n > P
    const double L = A * A * std::pow(Pd, 1 - 2 * delta) / ((2 * delta - 1) * 2 * (1 - x));
    const double rounding = std::abs(value) * (4 * kEps * static_cast<double>(primes.size() + 8) + 1e-13);
    r.tail_bound = std::abs(value) * std::expm1(L) + rounding;
    return r;
}

std::vector<SingularHit> singular_set_hits(const std::vector<cplx> &s, const ExponentMatrix &alpha,
                                           const GammaTable &table, const ZeroTable &zeros, double radius)
{
    const auto w = column_weights(s, alpha);
    const auto rho = rho_list(&zeros);
    std::vector<SingularHit> hits;
    for (const auto &e : table.entries) {
        if (e.gamma == 0)
            continue;
        cplx z = 0;
        for (std::size_t j = 0; j < e.beta.size(); ++j)
            z += static_cast<double>(e.beta[j]) * w[j];
        for (std::size_t k = 0; k < rho.size(); ++k)
            if (std::abs(z - rho[k]) < radius)
                hits.push_back({e.beta, z, k == 0 ? "pole" : "zeta-zero", rho[k]});
    }
    return hits;
}

EvalReport eval_z_continued(const IntPoly &h, const std::vector<cplx> &s, const ContinuationOptions &opt)
{
    const auto alpha = exponent_matrix(h);
    const auto w = column_weights(s, alpha);
    double delta = delta_of(s, alpha);
    if (opt.delta_override) {
        if (!(*opt.delta_override > 0) || *opt.delta_override > delta)
            throw Error(ErrorKind::InvalidArgument, "delta may only be lowered, and must stay positive");
        delta = *opt.delta_override;
    }
    if (opt.B < 1)
        throw Error(ErrorKind::InvalidArgument, "beta bound must be at least 1");
    if (static_cast<double>(opt.B + 1) * delta <= 1)
        throw Error(ErrorKind::TailNotControlled, "(B+1) delta <= 1; increase B");
    const Rat C = c_of_h(h);
    const long M = m_delta(C, delta);

    GammaTable own;
    const GammaTable *table = opt.table;
    if (!table || table->bound < opt.B || table->r != h.nterms()) {
        own = gamma_table(h, opt.B, opt.threads);
        table = &own;
    }

    const auto primes = primes_up_to(M);
    cplx finite = 1;
    for (long p : primes)
        finite *= h_at_prime(h, w, std::log(static_cast<double>(p)));

    const auto rho = rho_list(opt.zeros);
    std::vector<const GammaEntry *> active;
    for (const auto &e : table->entries)
        if (e.gamma != 0 && norm(e.beta) <= opt.B)
            active.push_back(&e);

    EvalReport rep;
    std::vector<cplx> zs(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
        cplx z = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            z += static_cast<double>(active[i]->beta[j]) * w[j];
        zs[i] = z;
        for (std::size_t k = 0; k < rho.size(); ++k) {
            const double d = std::abs(z - rho[k]);
            if (d < opt.refuse_radius)
                throw Error(ErrorKind::PoleHit, "factor for a multi-index of norm " + std::to_string(norm(active[i]->beta))
                                                    + " sits on a singularity of zeta");
            if (d < opt.flag_radius)
                rep.factors_near_singularity.push_back({active[i]->beta, z, k == 0 ? "pole" : "zeta-zero", rho[k]});
        }
    }

    std::vector<cplx> logs(active.size());
    std::vector<double> errs(active.size());
    parallel_for(active.size(), opt.threads, [&](std::size_t i) {
        const cplx z = zs[i];
        const cplx zm1 = zeta_minus_one(z);
        cplx acc = clog1p(zm1);
        double err = std::abs(zm1) / std::abs(1.0 + zm1);
        for (long p : primes) {
            const cplx u = std::exp(-z * std::log(static_cast<double>(p)));
            acc += clog1p(-u);
            err += std::abs(u) / std::abs(1.0 - u);
        }
        logs[i] = acc;
        errs[i] = 16 * kEps * err;
    });
    cplx sum = 0;
    double log_err = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
        const double g = active[i]->gamma.get_d();
        sum += g * logs[i];
        log_err += std::abs(g) * errs[i];
    }
    rep.value = finite * std::exp(-sum);
    rep.delta = delta;
    rep.m_delta = M;
    rep.beta_bound = opt.B;

    // Truncation: sum over k > B of M/(k(k delta - 1)) sum_{m | k} (sum_j |a_j| M^{-m w_j})^{k/m}.
    const double Md = static_cast<double>(M);
    std::vector<double> S{0.0};
    auto S_at = [&](long m) {
        while (static_cast<long>(S.size()) <= m) {
            const long mm = static_cast<long>(S.size());
            double acc = 0;
            for (std::size_t j = 0; j < w.size(); ++j)
                acc += std::abs(h.term(j).coeff.get_d()) * std::pow(Md, -static_cast<double>(mm) * w[j].real());
            S.push_back(acc);
        }
        return S[m];
    };
    if (S_at(1) >= 1)
        throw Error(ErrorKind::TailNotControlled, "majorant ratio reached 1 at this delta");
    double L = 0;
    for (long k = opt.B + 1; k <= opt.B + 100000; ++k) {
        double inner = 0;
        for (long m : divisors(k))
            inner += std::pow(S_at(m), static_cast<double>(k / m));
        const double term = Md / (static_cast<double>(k) * (static_cast<double>(k) * delta - 1)) * inner;
        L += term;
        if (term <= 1e-17 * L || term < 1e-300)
            break;
    }
    const double mag = std::abs(rep.value);
    const double rounding = mag * (4 * kEps * static_cast<double>(primes.size() + active.size() + 8) + std::expm1(log_err));
    rep.tail_bound = mag * std::expm1(L) + rounding;
    return rep;
}

nlohmann::ordered_json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::ordered_json to_json(const EvalReport &r)
{
    nlohmann::ordered_json j;
    j["value"] = complex_json(r.value);
    j["delta"] = r.delta;
    j["m_delta"] = r.m_delta;
    j["beta_bound"] = r.beta_bound;
    j["tail_bound"] = r.tail_bound;
    auto arr = nlohmann::ordered_json::array();
    for (const auto &hit : r.factors_near_singularity)
        arr.push_back({{"beta", hit.beta}, {"z", complex_json(hit.z)}, {"kind", hit.kind}, {"rho", complex_json(hit.rho)}});
    j["factors_near_singularity"] = arr;
    return j;
}

} // namespace eulerprod

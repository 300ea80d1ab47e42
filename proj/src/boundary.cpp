#include <eulerprod/boundary.hpp>

#include <eulerprod/continuation.hpp>
#include <eulerprod/errors.hpp>
#include <eulerprod/parallel.hpp>
#include <eulerprod/rng.hpp>
#include <eulerprod/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eulerprod {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Rat rat_dot(const std::vector<Rat> &x, const ExpVec &v)
{
    Rat acc = 0;
    for (std::size_t l = 0; l < v.size(); ++l)
        acc += x[l] * v[l];
    return acc;
}

double real_dot(const std::vector<double> &x, const ExpVec &v)
{
    double acc = 0;
    for (std::size_t l = 0; l < v.size(); ++l)
        acc += x[l] * static_cast<double>(v[l]);
    return acc;
}

ExpVec diff(const ExpVec &a, const ExpVec &b)
{
    ExpVec d(a.size());
    for (std::size_t l = 0; l < a.size(); ++l)
        d[l] = a[l] - b[l];
    return d;
}

// integer k with v = k * prim, if any
std::optional<long> multiple_of(const ExpVec &v, const ExpVec &prim)
{
    std::optional<long> k;
    for (std::size_t l = 0; l < v.size(); ++l) {
        if (prim[l] == 0) {
            if (v[l] != 0)
                return std::nullopt;
            continue;
        }
        if (v[l] % prim[l] != 0)
            return std::nullopt;
        const long kk = v[l] / prim[l];
        if (k && *k != kk)
            return std::nullopt;
        k = kk;
    }
    return k;
}

// coefficient of column j after the tau twist at prime p
cplx twisted(const LineProbe &pr, std::size_t j, double logp)
{
    return pr.h.term(j).coeff.get_d() * std::exp(cplx(0, -pr.tau_dot[j] * logp));
}

bool generic_sigma(const ExponentMatrix &alpha, const ExpVec &a, const std::vector<Rat> &sigma)
{
    const auto &cols = alpha.columns();
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t k = j + 1; k < cols.size(); ++k) {
            const ExpVec d = diff(cols[j], cols[k]);
            if (collinear(d, a))
                continue;
            if (rat_dot(sigma, d) == 0)
                return false;
        }
    return true;
}

} // namespace

std::vector<cplx> face_roots(const OneVarPoly &f)
{
    if (!is_nondegenerate(f))
        throw Error(ErrorKind::MultipleRootDetected, "face polynomial " + f.str() + " has a repeated root");
    auto roots = poly_roots(f.coeffs());
    if (roots.size() > 1 && min_pairwise_distance(roots) <= 1e-8)
        throw Error(ErrorKind::MultipleRootDetected, "numerically repeated root of " + f.str());
    return roots;
}

cplx w_value(const LineProbe &pr, long p, double X, cplx Y)
{
    const double logp = std::log(static_cast<double>(p));
    cplx acc = 1;
    for (std::size_t j = 0; j < pr.yexp.size(); ++j)
        acc += twisted(pr, j, logp) * std::pow(X, pr.xexp[j]) * ipow(Y, pr.yexp[j]);
    return acc;
}

cplx w_face_value(const LineProbe &pr, long p, cplx Y)
{
    const double logp = std::log(static_cast<double>(p));
    cplx acc = 1;
    for (std::size_t j = 0; j < pr.yexp.size(); ++j)
        if (pr.in_lambda[j])
            acc += twisted(pr, j, logp) * ipow(Y, pr.yexp[j]);
    return acc;
}

cplx w_face_derivative(const LineProbe &pr, long p, cplx Y)
{
    const double logp = std::log(static_cast<double>(p));
    cplx acc = 0;
    for (std::size_t j = 0; j < pr.yexp.size(); ++j)
        if (pr.in_lambda[j])
            acc += twisted(pr, j, logp) * static_cast<double>(pr.yexp[j]) * ipow(Y, pr.yexp[j] - 1);
    return acc;
}

cplx r_eprime_value(const LineProbe &pr, long p, cplx Y)
{
    const double logp = std::log(static_cast<double>(p));
    cplx acc = 0;
    for (std::size_t j = 0; j < pr.yexp.size(); ++j)
        if (pr.in_eprime_class[j])
            acc += twisted(pr, j, logp) * ipow(Y, pr.yexp[j]);
    return acc;
}

PuiseuxBranch select_branch(const LineProbe &pr, long p, const ProbeConfig &cfg)
{
    if (p < 2)
        throw Error(ErrorKind::InvalidArgument, "prime must be at least 2");
    const double logp = std::log(static_cast<double>(p));
    const double tau_a = real_dot(pr.tau0, pr.face.primitive);
    PuiseuxBranch br;
    br.p = p;
    br.theta1 = pr.theta1;
    br.c0 = std::exp((cplx(0, tau_a * logp) + std::log(pr.c)) / static_cast<double>(pr.N));
    if (!pr.cyclotomic_face) {
        br.inside_disk = std::abs(br.c0) < 1;
        return br;
    }
    auto c1_of = [&](cplx c0) { return -r_eprime_value(pr, p, c0) / w_face_derivative(pr, p, c0); };
    cplx c1 = c1_of(br.c0);
    const cplx ratio = c1 / br.c0;
    if (std::abs(ratio) == 0 || std::abs(std::cos(std::arg(ratio))) < std::sin(cfg.arg_tolerance))
        throw Error(ErrorKind::ArgDegenerate, "arg(c1/c0) too close to pi/2 at p = " + std::to_string(p));
    if (ratio.real() >= 0) {
        br.c0 = -br.c0;
        c1 = c1_of(br.c0);
    }
    br.c1 = c1;
    br.inside_disk = (c1 / br.c0).real() < 0;
    if (!br.inside_disk)
        throw Error(ErrorKind::NoBranchInsideDisk, "no sign of c0 moves the branch inside the unit disk");
    return br;
}

namespace {

// Newton in Y for W(X, Y) with X fixed.
std::optional<cplx> newton_y(const std::vector<cplx> &coef, const std::vector<long> &yexp, cplx Y)
{
    for (int it = 0; it < 60; ++it) {
        cplx f = 1, d = 0;
        for (std::size_t j = 0; j < coef.size(); ++j) {
            f += coef[j] * ipow(Y, yexp[j]);
            d += coef[j] * static_cast<double>(yexp[j]) * ipow(Y, yexp[j] - 1);
        }
        if (d == cplx(0))
            return std::nullopt;
        const cplx step = f / d;
        Y -= step;
        if (!std::isfinite(Y.real()) || !std::isfinite(Y.imag()))
            return std::nullopt;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(Y)))
            return Y;
    }
    return std::nullopt;
}

} // namespace

cplx branch_value(const LineProbe &pr, const PuiseuxBranch &br, double X)
{
    if (!(X > 0))
        throw Error(ErrorKind::InvalidArgument, "branch_value needs X > 0");
    const double logp = std::log(static_cast<double>(br.p));
    std::vector<cplx> tw(pr.yexp.size());
    for (std::size_t j = 0; j < tw.size(); ++j)
        tw[j] = twisted(pr, j, logp);
    auto coef_at = [&](double x) {
        std::vector<cplx> c(tw.size());
        for (std::size_t j = 0; j < tw.size(); ++j)
            c[j] = tw[j] * std::pow(x, pr.xexp[j]);
        return c;
    };
    if (pr.constant_branch) {
        auto y = newton_y(coef_at(1.0), pr.yexp, br.c0);
        if (!y)
            throw Error(ErrorKind::NewtonDiverged, "polish of the constant branch failed");
        return *y;
    }
    double xmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < tw.size(); ++j)
        if (!pr.in_lambda[j])
            xmin = std::min(xmin, pr.xexp[j]);
    const double X0 = std::pow(1e-6, 1.0 / xmin);
    auto seed_at = [&](double x) { return br.c1 ? br.c0 + *br.c1 * std::pow(x, br.theta1) : br.c0; };
    double x = std::min(X, X0);
    auto y = newton_y(coef_at(x), pr.yexp, seed_at(x));
    if (!y || std::abs(*y - br.c0) > 1e-3)
        throw Error(ErrorKind::NewtonDiverged, "branch start failed near X = 0");
    cplx Y = *y, Yprev = Y;
    double u = std::log(x), uprev = u;
    const double uend = std::log(X);
    double du = (uend - u) / 32;
    while (u < uend) {
        const double un = std::min(uend, u + du);
        // linear predictor in log X
        const cplx guess = (u > uprev) ? Y + (Y - Yprev) * ((un - u) / (u - uprev)) : Y;
        auto yn = newton_y(coef_at(std::exp(un)), pr.yexp, guess);
        if (yn && std::abs(*yn - guess) <= 0.05 * std::max(std::abs(Y), 1e-3)) {
            Yprev = Y;
            uprev = u;
            Y = *yn;
            u = un;
            du *= 1.5;
        } else {
            du /= 2;
            if (du < 1e-9)
                throw Error(ErrorKind::NewtonDiverged, "path following stalled at X = " + std::to_string(std::exp(u)));
        }
    }
    return Y;
}

double zero_residual(const LineProbe &pr, long p, cplx t)
{
    const double logp = std::log(static_cast<double>(p));
    cplx acc = 1;
    for (std::size_t j = 0; j < pr.yexp.size(); ++j) {
        const cplx w = cplx(pr.xexp[j], pr.tau_dot[j]) + t * static_cast<double>(pr.yexp[j]);
        acc += pr.h.term(j).coeff.get_d() * std::exp(-w * logp);
    }
    return std::abs(acc);
}

namespace {

cplx polish_t(const LineProbe &pr, long p, cplx t)
{
    const double logp = std::log(static_cast<double>(p));
    const cplx t_in = t;
    for (int it = 0; it < 20; ++it) {
        cplx g = 1, dg = 0;
        for (std::size_t j = 0; j < pr.yexp.size(); ++j) {
            const double y = static_cast<double>(pr.yexp[j]);
            const cplx w = cplx(pr.xexp[j], pr.tau_dot[j]) + t * y;
            const cplx term = pr.h.term(j).coeff.get_d() * std::exp(-w * logp);
            g += term;
            dg += -y * logp * term;
        }
        if (dg == cplx(0))
            break;
        const cplx step = g / dg;
        t -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(t)))
            break;
    }
    // never let the polish wander to a different zero
    return std::abs(t - t_in) < 1e-6 ? t : t_in;
}

// The branch at prime p, or nullopt when the prime is skipped.
std::optional<cplx> omega_at(const LineProbe &pr, long p, const ProbeConfig &cfg)
{
    try {
        const auto br = select_branch(pr, p, cfg);
        if (!br.inside_disk)
            return std::nullopt;
        const cplx om = branch_value(pr, br, 1.0 / static_cast<double>(p));
        if (!(std::abs(om) < 1))
            return std::nullopt;
        return om;
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::ArgDegenerate || e.kind() == ErrorKind::NewtonDiverged
            || e.kind() == ErrorKind::NoBranchInsideDisk)
            return std::nullopt;
        throw;
    }
}

// m strictly inside the window (u log p + arg, (u + eta) log p + arg) / 2 pi
std::pair<long, long> m_window(double u, double eta, double logp, double argom)
{
    const double lo = (u * logp + argom) / kTwoPi;
    const double hi = ((u + eta) * logp + argom) / kTwoPi;
    return {static_cast<long>(std::floor(lo)) + 1, static_cast<long>(std::ceil(hi)) - 1};
}

} // namespace

ZeroScan zeros_on_line(const LineProbe &pr, const ZeroBox &box, long p_max, unsigned threads, const ProbeConfig &cfg)
{
    if (!(box.u > 0) || !(box.eta > 0) || box.eps < 0 || !(box.eps < 1) || !(box.re_max > box.eps))
        throw Error(ErrorKind::InvalidArgument, "zero box needs u, eta > 0 and 0 <= eps < min(1, re_max)");
    const auto primes = primes_up_to(p_max);
    std::vector<std::vector<ZeroRecord>> per(primes.size());
    std::vector<char> skipped(primes.size(), 0);
    parallel_for(primes.size(), threads, [&](std::size_t i) {
        const long p = primes[i];
        const auto om = omega_at(pr, p, cfg);
        if (!om) {
            skipped[i] = 1;
            return;
        }
        const double logp = std::log(static_cast<double>(p));
        const double re = -std::log(std::abs(*om)) / logp;
        if (!(re > box.eps && re < box.re_max))
            return;
        const auto [m0, m1] = m_window(box.u, box.eta, logp, std::arg(*om));
        for (long m = m0; m <= m1; ++m) {
            const cplx t0 = (-std::log(*om) + cplx(0, kTwoPi * static_cast<double>(m))) / logp;
            const cplx t = polish_t(pr, p, t0);
            const double res = zero_residual(pr, p, t);
            if (res < 1e-8 && t.real() > box.eps && t.real() < box.re_max)
                per[i].push_back({p, m, t, res, true});
        }
    });
    ZeroScan out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (skipped[i])
            out.skipped_primes.push_back(primes[i]);
        out.records.insert(out.records.end(), per[i].begin(), per[i].end());
    }
    return out;
}

std::vector<CountRow> count_zeros_asymptotic(const LineProbe &pr, double u, double eta,
                                             const std::vector<double> &eps_list, long p_limit)
{
    if (!pr.constant_branch)
        throw Error(ErrorKind::InvalidArgument, "zero counting needs the constant-branch case");
    if (!(u > 0) || !(eta > 0))
        throw Error(ErrorKind::InvalidArgument, "u and eta must be positive");
    const double modc0 = std::pow(std::abs(pr.c), 1.0 / static_cast<double>(pr.N));
    if (!(modc0 < 1))
        throw Error(ErrorKind::InvalidArgument, "counting needs |c0| < 1");
    std::vector<CountRow> rows;
    for (double eps : eps_list) {
        if (!(eps > 0))
            throw Error(ErrorKind::InvalidArgument, "eps must be positive");
        CountRow row;
        row.eps = eps;
        row.p_bound = std::exp(-std::log(modc0) / eps);
        row.predicted = eta / kTwoPi * row.p_bound;
        row.feasible = row.p_bound <= static_cast<double>(p_limit);
        row.measured = -1;
        if (row.feasible) {
            long count = 0;
            for (long p : primes_up_to(static_cast<long>(std::floor(row.p_bound)))) {
                const auto om = omega_at(pr, p, ProbeConfig{});
                if (!om)
                    continue;
                const double logp = std::log(static_cast<double>(p));
                if (!(-std::log(std::abs(*om)) / logp > eps))
                    continue;
                const auto [m0, m1] = m_window(u, eta, logp, std::arg(*om));
                count += std::max(0L, m1 - m0 + 1);
            }
            row.measured = count;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<PoleCandidate> pole_candidates(const LineProbe &pr, const GammaTable &table, const ZeroTable &zeros)
{
    if (table.r != pr.yexp.size())
        throw Error(ErrorKind::InvalidArgument, "gamma table does not match the probe polynomial");
    std::vector<cplx> rho{cplx(1, 0)};
    for (double t : zeros.ordinates) {
        rho.emplace_back(0.5, t);
        rho.emplace_back(0.5, -t);
    }
    std::vector<PoleCandidate> out;
    for (const auto &e : table.entries) {
        if (e.gamma == 0)
            continue;
        cplx z = 0;
        double d = 0;
        bool face_class = true;
        for (std::size_t j = 0; j < e.beta.size(); ++j) {
            if (e.beta[j] == 0)
                continue;
            const double b = static_cast<double>(e.beta[j]);
            z += b * cplx(pr.xexp[j], pr.tau_dot[j]);
            d += b * static_cast<double>(pr.yexp[j]);
            face_class = face_class && pr.in_lambda[j];
        }
        for (const auto &r : rho) {
            const cplx t = (r - z) / d;
            if (t.real() > 0)
                out.push_back({e.beta, r, t, face_class});
        }
    }
    return out;
}

AuditReport collision_audit(const std::vector<ZeroRecord> &zeros, const std::vector<PoleCandidate> &cands, double tol)
{
    AuditReport rep;
    rep.min_distance.assign(zeros.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t k = 0; k < cands.size(); ++k) {
            const double d = std::abs(zeros[i].t - cands[k].t);
            if (d < rep.min_distance[i]) {
                rep.min_distance[i] = d;
                best = k;
            }
        }
        if (rep.min_distance[i] > tol)
            ++rep.survivors;
        else
            rep.near.push_back({i, best, rep.min_distance[i]});
    }
    return rep;
}

LineProbe build_probe(const IntPoly &h, const Face &face, std::uint64_t seed, const ProbeConfig &cfg)
{
    if (!face.feasible)
        throw Error(ErrorKind::InfeasibleFace, "face is not part of the boundary");
    if (!face.nondegenerate)
        throw Error(ErrorKind::InvalidArgument, "face polynomial is degenerate");
    const auto alpha = exponent_matrix(h);
    const std::size_t n = h.nvars(), r = h.nterms();
    const ExpVec &a = face.primitive;
    LineProbe pr;
    pr.h = h;
    pr.face = face;
    pr.in_lambda.assign(r, false);
    for (auto j : face.lambda)
        pr.in_lambda[j] = true;
    pr.constant_branch = face.lambda.size() == r;

    const auto roots = face_roots(face.poly);
    pr.cyclotomic_face = estermann_classify(face.poly).cyclotomic;
    if (pr.cyclotomic_face) {
        pr.c = *std::min_element(roots.begin(), roots.end(), [](cplx x, cplx y) {
            const double ax = std::abs(std::arg(x)), ay = std::abs(std::arg(y));
            if (ax != ay)
                return ax < ay;
            return x.imag() > y.imag();
        });
    } else {
        pr.c = *std::min_element(roots.begin(), roots.end(),
                                 [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
    }

    Rng rng(seed);
    // sigma0: witness moved inside the face hyperplane until column differences separate
    Rat aa = 0;
    for (long x : a)
        aa += x * x;
    bool found = false;
    for (int attempt = 0; attempt < cfg.reseed_budget && !found; ++attempt) {
        std::vector<Rat> v(n);
        for (auto &x : v)
            x = Rat(rng.uniform_int(-1000, 1000));
        Rat va = 0;
        for (std::size_t l = 0; l < n; ++l)
            va += v[l] * a[l];
        for (std::size_t l = 0; l < n; ++l) {
            v[l] -= va / aa * a[l];
            v[l].canonicalize();
        }
        Rat mx = 0;
        for (const auto &c : alpha.columns())
            mx = std::max(mx, Rat(abs(rat_dot(v, c))));
        std::vector<Rat> sigma = face.witness;
        if (sigma.size() != n)
            sigma.assign(n, Rat(0));
        if (mx > 0)
            for (std::size_t l = 0; l < n; ++l) {
                sigma[l] += v[l] / (4 * mx);
                sigma[l].canonicalize();
            }
        if (rat_dot(sigma, a) != 0)
            continue;
        if (!generic_sigma(alpha, a, sigma))
            continue;
        pr.sigma0 = sigma;
        found = true;
    }
    if (!found)
        throw Error(ErrorKind::GenericityExhausted, "no generic sigma0 within the seed budget");
    for (std::size_t j = 0; j < r; ++j) {
        const Rat x = rat_dot(pr.sigma0, alpha.column(j));
        if (!pr.in_lambda[j] && x <= 0)
            throw Error(ErrorKind::InvalidArgument, "sigma0 does not separate the face");
        pr.xexp.push_back(x.get_d());
    }

    pr.in_eprime_class.assign(r, false);
    if (pr.cyclotomic_face) {
        // classes of equal sigma0 weight outside the face, lightest first
        std::map<Rat, std::vector<std::size_t>> classes;
        for (std::size_t j = 0; j < r; ++j)
            if (!pr.in_lambda[j])
                classes[rat_dot(pr.sigma0, alpha.column(j))].push_back(j);
        for (const auto &[w, cls] : classes) {
            const std::size_t ep = cls.front();
            cplx R = 0;
            for (auto j : cls) {
                const auto k = multiple_of(diff(alpha.column(j), alpha.column(ep)), a);
                if (!k)
                    throw Error(ErrorKind::GenericityExhausted, "weight class is not a single face translate");
                R += h.term(j).coeff.get_d() * std::pow(pr.c, static_cast<double>(*k));
            }
            if (std::abs(R) > cfg.root_tolerance) {
                pr.e_prime = ep;
                for (auto j : cls)
                    pr.in_eprime_class[j] = true;
                pr.theta1 = w.get_d();
                break;
            }
        }
        if (!pr.e_prime)
            throw Error(ErrorKind::NoEPrime, "cyclotomic face without a usable second index");
    }
    pr.theta = choose_direction(alpha, face, pr.e_prime);
    pr.N = dot(pr.theta, a);
    for (std::size_t j = 0; j < r; ++j)
        pr.yexp.push_back(dot(pr.theta, alpha.column(j)));

    pr.tau0.assign(n, 0.0);
    pr.tau_dot.assign(r, 0.0);
    if (pr.cyclotomic_face) {
        const auto small = primes_up_to(cfg.arg_check_primes);
        bool ok = false;
        for (int attempt = 0; attempt < cfg.reseed_budget && !ok; ++attempt) {
            for (auto &x : pr.tau0)
                x = rng.uniform(-cfg.tau_scale, cfg.tau_scale);
            for (std::size_t j = 0; j < r; ++j)
                pr.tau_dot[j] = real_dot(pr.tau0, alpha.column(j));
            ok = true;
            for (long p : small) {
                try {
                    const auto br = select_branch(pr, p, cfg);
                    if (std::abs(w_face_value(pr, p, br.c0)) >= cfg.root_tolerance)
                        throw Error(ErrorKind::ConvergenceFailure, "lifted root misses the face polynomial");
                } catch (const Error &e) {
                    if (e.kind() != ErrorKind::ArgDegenerate)
                        throw;
                    ok = false;
                    break;
                }
            }
        }
        if (!ok)
            throw Error(ErrorKind::ArgDegenerate, "tau0 re-seed budget exhausted");
    }
    return pr;
}

nlohmann::ordered_json to_json(const LineProbe &p)
{
    nlohmann::ordered_json j;
    j["face"] = p.face.e + 1;
    std::vector<std::string> sig;
    for (const auto &x : p.sigma0)
        sig.push_back(rat_str(x));
    j["sigma0"] = sig;
    j["tau0"] = p.tau0;
    j["theta"] = p.theta;
    if (p.e_prime)
        j["e_prime"] = *p.e_prime + 1;
    else
        j["e_prime"] = nullptr;
    j["q"] = p.q;
    j["cyclotomic_face"] = p.cyclotomic_face;
    j["constant_branch"] = p.constant_branch;
    j["face_root"] = complex_json(p.c);
    j["theta_dot_face"] = p.N;
    j["theta1"] = p.theta1;
    return j;
}

} // namespace eulerprod

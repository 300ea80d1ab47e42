#include <eulerprod/zeta.hpp>

#include <eulerprod/errors.hpp>
#include <eulerprod/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

namespace eulerprod {

std::vector<long> primes_up_to(long M)
{
    std::vector<long> out;
    if (M < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(M) + 1, false);
    for (long i = 2; i <= M; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (long j = i * i; j <= M; j += i)
            composite[j] = true;
    }
    return out;
}

namespace {

// B_{2k} / (2k)! for k = 1..kmax, from the exact Bernoulli recurrence.
const std::vector<double> &bernoulli_ratios()
{
    static const std::vector<double> table = [] {
        constexpr int kmax = 40;
        std::vector<Rat> B(2 * kmax + 1);
        B[0] = 1;
        for (int m = 1; m <= 2 * kmax; ++m) {
            Rat acc = 0;
            Int binom = 1; // C(m+1, j)
            for (int j = 0; j < m; ++j) {
                acc += binom * B[j];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            B[m] = -acc / Rat(m + 1);
        }
        std::vector<double> r(kmax + 1, 0.0);
        Int fact = 1;
        for (int k = 1; k <= kmax; ++k) {
            fact *= (2 * k - 1) * (2 * k);
            Rat q = B[2 * k] / Rat(fact);
            r[k] = q.get_d();
        }
        return r;
    }();
    return table;
}

cplx npow(double n, cplx s) { return std::exp(-s * std::log(n)); }

// Euler-Maclaurin with the direct sum starting at n = first.
cplx em_sum(cplx s, long first, const ZetaConfig &cfg)
{
    if (std::abs(s - 1.0) < 1e-9)
        throw Error(ErrorKind::PoleAtOne, "zeta evaluated at its pole s = 1");
    const long N = std::max(cfg.cutoff, static_cast<long>(std::ceil(std::abs(s))) + 10);
    const int m = std::min(cfg.euler_maclaurin_terms, 40);
    // small terms first keeps the rounding error down for large Re s
    cplx sum = 0;
    for (long n = N - 1; n >= first; --n)
        sum += npow(static_cast<double>(n), s);
    const double logN = std::log(static_cast<double>(N));
    const cplx Ns = std::exp(-s * logN);
    cplx tail = Ns * static_cast<double>(N) / (s - 1.0) + 0.5 * Ns;
    const auto &br = bernoulli_ratios();
    cplx rising = s; // s (s+1) ... (s+2k-2)
    cplx Npow = Ns / static_cast<double>(N); // N^{-s-1}
    const double invN2 = 1.0 / (static_cast<double>(N) * static_cast<double>(N));
    for (int k = 1; k <= m; ++k) {
        const cplx term = br[k] * rising * Npow;
        tail += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum + tail))
            break;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        Npow *= invN2;
    }
    return sum + tail;
}

} // namespace

cplx riemann_zeta(cplx s, const ZetaConfig &cfg) { return em_sum(s, 1, cfg); }

cplx zeta_minus_one(cplx s, const ZetaConfig &cfg) { return em_sum(s, 2, cfg); }

cplx partial_euler(cplx s, long M)
{
    cplx prod = 1;
    for (long p : primes_up_to(M))
        prod *= 1.0 - npow(static_cast<double>(p), s);
    return prod;
}

cplx zeta_m(cplx s, long M) { return riemann_zeta(s) * partial_euler(s, M); }

cplx clog1p(cplx w)
{
    const double x = w.real(), y = w.imag();
    const double re = 0.5 * std::log1p(2.0 * x + x * x + y * y);
    const double im = std::atan2(y, 1.0 + x);
    return {re, im};
}

cplx log_zeta_m(cplx z, const std::vector<long> &primes)
{
    cplx acc = clog1p(zeta_minus_one(z));
    for (long p : primes)
        acc += clog1p(-npow(static_cast<double>(p), z));
    return acc;
}

cplx prime_zeta_tail(cplx z, const std::vector<long> &primes)
{
    if (z.real() <= 1.0)
        throw Error(ErrorKind::InvalidArgument, "prime zeta tail needs Re z > 1");
    const double P = primes.empty() ? 1.0 : static_cast<double>(primes.back());
    cplx acc = 0;
    for (long k = 1; k <= 64; ++k) {
        const double x = static_cast<double>(k) * z.real();
        // |log zeta_P(kz)| <= sum_{n > P} n^{-x}
        if (P > 1 && std::pow(P, 1.0 - x) / (x - 1.0) < 1e-20)
            break;
        const int mu = mobius(k);
        if (mu == 0)
            continue;
        cplx l = log_zeta_m(static_cast<double>(k) * z, primes);
        // the true value is tiny, so fold the branch back to the principal strip
        l.imag(std::remainder(l.imag(), 2 * std::numbers::pi));
        acc += static_cast<double>(mu) / static_cast<double>(k) * l;
    }
    return acc;
}

namespace {

double riemann_siegel_theta(double t)
{
    const double pi = std::numbers::pi;
    return t / 2 * std::log(t / (2 * pi)) - t / 2 - pi / 8 + 1 / (48 * t) + 7 / (5760 * t * t * t)
           + 31 / (80640 * std::pow(t, 5));
}

} // namespace

double hardy_z(double t)
{
    const cplx z = riemann_zeta(cplx(0.5, t));
    return (std::exp(cplx(0, riemann_siegel_theta(t))) * z).real();
}

ZeroTable nontrivial_zeros(int K)
{
    if (K < 0 || K > 50)
        throw Error(ErrorKind::InvalidArgument, "zero table supports 0 <= K <= 50");
    ZeroTable tab;
    const double step = 0.02, t_end = 200.0;
    double a = 10.0, fa = hardy_z(a);
    while (static_cast<int>(tab.ordinates.size()) < K) {
        if (a > t_end)
            throw Error(ErrorKind::ConvergenceFailure,
                        "zero " + std::to_string(tab.ordinates.size() + 1) + " not found below t = 200");
        double b = a + step, fb = hardy_z(b);
        if ((fa < 0) != (fb < 0)) {
            // Illinois regula falsi on the bracket
            double lo = a, hi = b, flo = fa, fhi = fb;
            int side = 0;
            for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
                const double c = (lo * fhi - hi * flo) / (fhi - flo);
                const double fc = hardy_z(c);
                if (fc == 0) {
                    lo = hi = c;
                    break;
                }
                if ((fc < 0) == (flo < 0)) {
                    lo = c;
                    flo = fc;
                    if (side == -1)
                        fhi /= 2;
                    side = -1;
                } else {
                    hi = c;
                    fhi = fc;
                    if (side == 1)
                        flo /= 2;
                    side = 1;
                }
            }
            const double t = 0.5 * (lo + hi);
            const double res = std::abs(riemann_zeta(cplx(0.5, t)));
            if (res >= tab.tolerance)
                throw Error(ErrorKind::ConvergenceFailure,
                            "zero " + std::to_string(tab.ordinates.size() + 1) + " residual too large");
            tab.ordinates.push_back(t);
        }
        a = b;
        fa = fb;
    }
    return tab;
}

nlohmann::ordered_json to_json(const ZeroTable &z)
{
    nlohmann::ordered_json j;
    j["K"] = z.size();
    j["tolerance"] = z.tolerance;
    j["ordinates"] = z.ordinates;
    return j;
}

ZeroTable zero_table_from_json(const nlohmann::ordered_json &j)
{
    ZeroTable z;
    z.tolerance = j.at("tolerance").get<double>();
    z.ordinates = j.at("ordinates").get<std::vector<double>>();
    if (z.ordinates.size() != j.at("K").get<std::size_t>())
        throw Error(ErrorKind::InvalidArgument, "zero table count mismatch");
    if (!std::is_sorted(z.ordinates.begin(), z.ordinates.end()))
        throw Error(ErrorKind::InvalidArgument, "zero table ordinates not increasing");
    return z;
}

ZeroTable cached_zero_table(int K, const std::string &path)
{
    if (!path.empty()) {
        std::ifstream in(path);
        if (in) {
            try {
                auto z = zero_table_from_json(nlohmann::ordered_json::parse(in));
                if (static_cast<int>(z.size()) >= K && z.tolerance == ZeroTable{}.tolerance) {
                    z.ordinates.resize(K);
                    return z;
                }
            } catch (const std::exception &) {
                // stale or corrupt cache, recompute below
            }
        }
    }
    auto z = nontrivial_zeros(K);
    if (!path.empty()) {
        std::ofstream out(path);
        if (out)
            out << to_json(z).dump(2) << '\n';
    }
    return z;
}

} // namespace eulerprod

#include <eulerprod/geometry.hpp>

#include <eulerprod/errors.hpp>
#include <eulerprod/gamma.hpp>
#include <eulerprod/lp.hpp>
#include <eulerprod/parallel.hpp>
#include <eulerprod/rng.hpp>
#include <eulerprod/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace eulerprod {

ExpVec primitive_vector(const ExpVec &v)
{
    long g = 0;
    for (long x : v) {
        if (x < 0)
            throw Error(ErrorKind::InvalidArgument, "primitive_vector expects a non-negative vector");
        g = std::gcd(g, x);
    }
    if (g == 0)
        throw Error(ErrorKind::InvalidArgument, "primitive_vector of the zero vector");
    ExpVec r = v;
    for (auto &x : r)
        x /= g;
    return r;
}

bool collinear(const ExpVec &a, const ExpVec &b)
{
    // non-negative vectors: collinear iff all 2x2 minors vanish
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i])
                return false;
    return true;
}

std::vector<std::size_t> lambda_class(const ExponentMatrix &alpha, std::size_t e)
{
    std::vector<std::size_t> out;
    const auto &ae = alpha.column(e);
    for (std::size_t j = 0; j < alpha.cols(); ++j)
        if (collinear(ae, alpha.column(j)))
            out.push_back(j);
    return out;
}

namespace {

long multiple_of(const ExpVec &v, const ExpVec &prim)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (prim[i] != 0)
            return v[i] / prim[i];
    return 0;
}

} // namespace

OneVarPoly face_poly(const IntPoly &h, std::size_t e)
{
    const auto alpha = exponent_matrix(h);
    const ExpVec prim = primitive_vector(alpha.column(e));
    UPoly f(1, 1);
    for (std::size_t j : lambda_class(alpha, e)) {
        const long q = multiple_of(alpha.column(j), prim);
        if (static_cast<long>(f.size()) <= q)
            f.resize(q + 1, 0);
        f[q] += h.term(j).coeff;
    }
    return OneVarPoly(f);
}

bool is_nondegenerate(const OneVarPoly &f)
{
    return degree(gcd_q(f.coeffs(), derivative(f.coeffs()))) == 0;
}

bool is_nondegenerate_resultant(const OneVarPoly &f)
{
    return resultant(f.coeffs(), derivative(f.coeffs())) != 0;
}

std::vector<Face> enumerate_faces(const IntPoly &h, unsigned threads)
{
    const auto alpha = exponent_matrix(h);
    std::vector<std::size_t> reps;
    std::set<ExpVec> seen;
    for (std::size_t j = 0; j < alpha.cols(); ++j)
        if (seen.insert(primitive_vector(alpha.column(j))).second)
            reps.push_back(j);
    std::vector<Face> faces(reps.size());
    parallel_for(reps.size(), threads, [&](std::size_t k) {
        Face f;
        f.e = reps[k];
        f.polar = alpha.column(f.e);
        f.primitive = primitive_vector(f.polar);
        f.lambda = lambda_class(alpha, f.e);
        for (std::size_t j : f.lambda)
            f.q[j] = multiple_of(alpha.column(j), f.primitive);
        f.poly = face_poly(h, f.e);
        f.nondegenerate = is_nondegenerate(f.poly);
        std::vector<ExpVec> others;
        for (std::size_t j = 0; j < alpha.cols(); ++j)
            if (!f.q.count(j))
                others.push_back(alpha.column(j));
        auto sys = solve_face_system(f.primitive, others);
        f.feasible = sys.feasible;
        f.witness = sys.witness;
        f.certificate = sys.certificate;
        faces[k] = std::move(f);
    });
    return faces;
}

DomainSpec meromorphy_domain(const IntPoly &h, const Rat &delta)
{
    if (delta < 0)
        throw Error(ErrorKind::InvalidArgument, "delta must be non-negative");
    const auto alpha = exponent_matrix(h);
    // for each ray keep the smallest multiple, which gives the binding inequality when delta >= 0
    std::map<ExpVec, ExpVec> best;
    std::vector<ExpVec> order;
    for (const auto &c : alpha.columns()) {
        const ExpVec p = primitive_vector(c);
        auto it = best.find(p);
        if (it == best.end()) {
            best.emplace(p, c);
            order.push_back(p);
        } else if (total_degree(c) < total_degree(it->second)) {
            it->second = c;
        }
    }
    DomainSpec d;
    d.delta = delta;
    for (const auto &p : order)
        d.inequalities.push_back(best.at(p));
    return d;
}

long euler_phi(long d)
{
    long result = d;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p != 0)
            continue;
        while (d % p == 0)
            d /= p;
        result -= result / p;
    }
    if (d > 1)
        result -= result / d;
    return result;
}

UPoly cyclotomic_poly(long d)
{
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    UPoly num{1}, den{1};
    for (long k : divisors(d)) {
        const int mu = mobius(d / k);
        if (mu == 0)
            continue;
        UPoly b(k + 1, 0);
        b[0] = 1;
        b[k] = -1;
        if (mu > 0)
            num = mul(num, b);
        else
            den = mul(den, b);
    }
    auto q = divexact(num, den);
    if (!q)
        throw Error(ErrorKind::NonIntegerResult, "cyclotomic quotient is not exact");
    return *q;
}

EstermannResult estermann_classify(const UPoly &f_in)
{
    UPoly f = f_in;
    trim(f);
    if (f.empty() || f[0] != 1)
        throw Error(ErrorKind::ConstantTermNotOne, "Estermann classifier needs constant term 1");
    EstermannResult res;
    const long deg0 = degree(f);
    const long dmax = 2 * deg0 * deg0 + 2;
    for (long d = 1; d <= dmax && degree(f) > 0; ++d) {
        const long ph = euler_phi(d);
        if (ph > degree(f))
            continue;
        const UPoly phi = cyclotomic_poly(d);
        long mult = 0;
        while (degree(f) >= ph) {
            auto q = divexact(f, phi);
            if (!q)
                break;
            f = std::move(*q);
            ++mult;
        }
        if (mult > 0)
            res.factors.push_back({d, mult});
    }
    res.residual = f;
    if (degree(f) == 0) {
        if (f[0] != 1)
            throw Error(ErrorKind::NonIntegerResult, "peeled quotient lost its unit constant term");
        res.cyclotomic = true;
        return res;
    }
    const auto roots = poly_roots(f);
    double best = -1;
    for (const auto &z : roots) {
        const double dev = std::abs(std::abs(z) - 1.0);
        if (dev > best) {
            best = dev;
            res.root = z;
        }
    }
    if (best <= 1e-6)
        throw Error(ErrorKind::AmbiguousRoot, "every residual root lies within 1e-6 of the unit circle");
    res.root = newton_polish(f, res.root);
    res.modulus = std::abs(res.root);
    return res;
}

const char *kind_name(CyclotomyVerdict::Kind k)
{
    switch (k) {
    case CyclotomyVerdict::Kind::Certificate: return "Certificate";
    case CyclotomyVerdict::Kind::Witness: return "Witness";
    case CyclotomyVerdict::Kind::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

SparsePoly to_sparse(const IntPoly &h)
{
    SparsePoly p;
    p[ExpVec(h.nvars(), 0)] = 1;
    for (const auto &m : h.terms())
        p[m.exps] = m.coeff;
    return p;
}

SparsePoly sparse_mul(const SparsePoly &a, const SparsePoly &b)
{
    SparsePoly r;
    for (const auto &[ea, ca] : a)
        for (const auto &[eb, cb] : b) {
            ExpVec e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            r[e] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

namespace {

// (1 - X^m)^k for k >= 1
SparsePoly binomial_power(const ExpVec &m, long k)
{
    SparsePoly p;
    for (long i = 0; i <= k; ++i) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
        ExpVec e = m;
        for (auto &x : e)
            x *= i;
        p[e] = (i % 2) ? Int(-b) : b;
    }
    return p;
}

std::optional<std::vector<std::pair<ExpVec, Int>>> reconstruct(const IntPoly &h, long bound)
{
    const auto alpha = exponent_matrix(h);
    long mindeg = total_degree(alpha.column(0));
    for (const auto &c : alpha.columns())
        mindeg = std::min(mindeg, total_degree(c));
    const long B = std::max(1L, bound / mindeg);
    // keep the table at desk scale
    const auto betas = multi_indices_upto(h.nterms(), B);
    if (betas.size() > 200000)
        return std::nullopt;
    const auto table = gamma_table(h, B);
    std::map<ExpVec, Int> Gamma;
    for (const auto &e : table.entries) {
        if (e.gamma == 0)
            continue;
        ExpVec m(h.nvars(), 0);
        for (std::size_t j = 0; j < e.beta.size(); ++j)
            for (std::size_t l = 0; l < m.size(); ++l)
                m[l] += e.beta[j] * alpha.at(l, j);
        if (total_degree(m) > bound)
            continue;
        Gamma[m] += e.gamma;
    }
    // degrees must balance before any expansion is attempted
    Int pos_deg = 0, neg_deg = 0;
    long hdeg = 0;
    for (const auto &c : alpha.columns())
        hdeg = std::max(hdeg, total_degree(c));
    std::vector<std::pair<ExpVec, Int>> factors;
    for (const auto &[m, g] : Gamma) {
        if (g == 0)
            continue;
        factors.push_back({m, g});
        if (g > 0)
            pos_deg += g * total_degree(m);
        else
            neg_deg -= g * total_degree(m);
    }
    if (pos_deg != neg_deg + hdeg)
        return std::nullopt;
    if (pos_deg > 400)
        return std::nullopt;
    SparsePoly P, N;
    P[ExpVec(h.nvars(), 0)] = 1;
    N = P;
    for (const auto &[m, g] : factors) {
        if (g > 0)
            P = sparse_mul(P, binomial_power(m, g.get_si()));
        else
            N = sparse_mul(N, binomial_power(m, Int(-g).get_si()));
    }
    if (P != sparse_mul(to_sparse(h), N))
        return std::nullopt;
    std::sort(factors.begin(), factors.end(),
              [](const auto &a, const auto &b) { return grlex_less(a.first, b.first); });
    return factors;
}

} // namespace

CyclotomyVerdict cyclotomy_probe(const IntPoly &h, long exponent_bound, int directions, std::uint64_t seed)
{
    const auto alpha = exponent_matrix(h);
    long maxdeg = 0;
    for (const auto &c : alpha.columns())
        maxdeg = std::max(maxdeg, total_degree(c));
    const long bound = exponent_bound > 0 ? exponent_bound : 4 * maxdeg;
    CyclotomyVerdict v;
    v.bound_used = bound;
    if (auto f = reconstruct(h, bound)) {
        v.kind = CyclotomyVerdict::Kind::Certificate;
        v.factors = std::move(*f);
        return v;
    }
    const std::size_t n = h.nvars();
    Rng rng(seed);
    const long wmax = 2 * static_cast<long>(n) + 6;
    for (int d = 0; d < directions; ++d) {
        std::vector<long> theta;
        if (d == 0) {
            for (std::size_t i = 0; i < n; ++i)
                theta.push_back(static_cast<long>(i) + 1);
        } else {
            std::set<long> used;
            while (theta.size() < n) {
                long w = rng.uniform_int(1, wmax);
                if (used.insert(w).second)
                    theta.push_back(w);
            }
        }
        UPoly f = substitute_power_raw(h, theta);
        if (degree(f) < 1)
            continue;
        auto est = estermann_classify(f);
        if (!est.cyclotomic) {
            v.kind = CyclotomyVerdict::Kind::Witness;
            v.theta = theta;
            v.root = est.root;
            v.modulus = est.modulus;
            return v;
        }
    }
    v.kind = CyclotomyVerdict::Kind::Inconclusive;
    return v;
}

namespace {

// Splits h by classes of exponents modulo the line through lambda and tests
// whether g(T) divides each class polynomial P_c(T) with h = sum X^{v_c} P_c(X^lambda).
bool divisible_by_binomial_type(const SparsePoly &h, const ExpVec &lambda, const UPoly &g)
{
    std::map<ExpVec, UPoly> classes;
    for (const auto &[e, c] : h) {
        long k = std::numeric_limits<long>::max();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (lambda[i] > 0)
                k = std::min(k, e[i] / lambda[i]);
        ExpVec base = e;
        for (std::size_t i = 0; i < e.size(); ++i)
            base[i] -= k * lambda[i];
        auto &poly = classes[base];
        if (static_cast<long>(poly.size()) <= k)
            poly.resize(k + 1, 0);
        poly[k] += c;
    }
    for (auto &[base, poly] : classes) {
        trim(poly);
        if (poly.empty())
            continue;
        if (!divexact(poly, g))
            return false;
    }
    return true;
}

} // namespace

std::vector<CyclotomicFactor> cyclotomic_factor_scan(const IntPoly &h, long d_bound)
{
    const auto alpha = exponent_matrix(h);
    std::vector<ExpVec> rays;
    std::set<ExpVec> seen;
    for (const auto &c : alpha.columns()) {
        ExpVec p = primitive_vector(c);
        if (seen.insert(p).second)
            rays.push_back(p);
    }
    const SparsePoly hs = to_sparse(h);
    std::vector<CyclotomicFactor> found;
    for (const auto &lam : rays)
        for (long d = 1; d <= d_bound; ++d)
            if (divisible_by_binomial_type(hs, lam, cyclotomic_poly(d)))
                found.push_back({d, lam});
    return found;
}

std::vector<long> choose_direction(const ExponentMatrix &alpha, const Face &face,
                                   std::optional<std::size_t> e_prime, long radius)
{
    const std::size_t n = alpha.rows();
    if (e_prime && collinear(face.primitive, alpha.column(*e_prime)))
        throw Error(ErrorKind::InvalidArgument, "e' must not be collinear with the face");
    auto ok = [&](const std::vector<long> &th) {
        for (const auto &c : alpha.columns())
            if (dot(th, c) < 1)
                return false;
        if (e_prime) {
            if (dot(th, face.primitive) % 2 != 0)
                return false;
            if (dot(th, alpha.column(*e_prime)) % 2 == 0)
                return false;
        }
        return true;
    };
    // enumerate positive vectors by increasing sum, lexicographically within a sum
    for (long s = static_cast<long>(n); s <= static_cast<long>(n) * radius; ++s) {
        std::vector<long> th(n, 1);
        std::function<std::optional<std::vector<long>>(std::size_t, long)> rec =
            [&](std::size_t pos, long left) -> std::optional<std::vector<long>> {
            if (pos + 1 == n) {
                if (left < 1 || left > radius)
                    return std::nullopt;
                th[pos] = left;
                if (ok(th))
                    return th;
                return std::nullopt;
            }
            for (long v = 1; v <= std::min(radius, left - static_cast<long>(n - pos - 1)); ++v) {
                th[pos] = v;
                if (auto r = rec(pos + 1, left - v))
                    return r;
            }
            return std::nullopt;
        };
        if (auto r = rec(0, s))
            return *r;
    }
    throw Error(ErrorKind::SearchExhausted, "no direction within radius " + std::to_string(radius));
}

nlohmann::ordered_json to_json(const Face &f)
{
    nlohmann::ordered_json j;
    j["e"] = f.e + 1;
    j["polar"] = f.polar;
    j["primitive"] = f.primitive;
    std::vector<std::size_t> lam;
    for (auto x : f.lambda)
        lam.push_back(x + 1);
    j["lambda"] = lam;
    j["face_poly"] = f.poly.str();
    j["nondegenerate"] = f.nondegenerate;
    if (f.feasible) {
        std::vector<std::string> w;
        for (const auto &x : f.witness)
            w.push_back(rat_str(x));
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json to_json(const DomainSpec &d)
{
    nlohmann::ordered_json j;
    j["delta"] = rat_str(d.delta);
    auto arr = nlohmann::ordered_json::array();
    for (const auto &v : d.inequalities)
        arr.push_back({{"column", v}, {"relation", ">"}});
    j["inequalities"] = arr;
    return j;
}

nlohmann::ordered_json to_json(const CyclotomyVerdict &v)
{
    nlohmann::ordered_json j;
    j["kind"] = kind_name(v.kind);
    switch (v.kind) {
    case CyclotomyVerdict::Kind::Certificate: {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &[lam, g] : v.factors)
            arr.push_back({{"lambda", lam}, {"gamma", g.get_str()}});
        j["factors"] = arr;
        break;
    }
    case CyclotomyVerdict::Kind::Witness:
        j["theta"] = v.theta;
        j["root"] = {{"re", v.root.real()}, {"im", v.root.imag()}};
        j["modulus"] = v.modulus;
        break;
    case CyclotomyVerdict::Kind::Inconclusive:
        break;
    }
    j["bound_used"] = v.bound_used;
    return j;
}

} // namespace eulerprod

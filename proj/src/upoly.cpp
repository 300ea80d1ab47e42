#include <eulerprod/upoly.hpp>

#include <eulerprod/errors.hpp>

#include <sstream>
#include <utility>

namespace eulerprod {

void trim(UPoly &f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

long degree(const UPoly &f) { return static_cast<long>(f.size()) - 1; }

UPoly mul(const UPoly &f, const UPoly &g)
{
    if (f.empty() || g.empty())
        return {};
    UPoly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] += f[i] * g[j];
    }
    trim(r);
    return r;
}

UPoly derivative(const UPoly &f)
{
    UPoly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

std::optional<UPoly> divexact(const UPoly &f, const UPoly &g)
{
    if (g.empty())
        throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    if (f.empty())
        return UPoly{};
    if (f.size() < g.size())
        return std::nullopt;
    UPoly rem = f;
    UPoly q(f.size() - g.size() + 1, 0);
    const Int &lead = g.back();
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        const Int &top = rem[k + g.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        Int c = top / lead;
        q[k] = c;
        for (std::size_t j = 0; j < g.size(); ++j)
            rem[k + j] -= c * g[j];
    }
    trim(rem);
    if (!rem.empty())
        return std::nullopt;
    trim(q);
    return q;
}

Int content(const UPoly &f)
{
    Int g = 0;
    for (const auto &c : f)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

UPoly primitive_part(const UPoly &f)
{
    if (f.empty())
        return {};
    Int c = content(f);
    if (f.back() < 0)
        c = -c;
    UPoly r = f;
    for (auto &x : r)
        x /= c;
    return r;
}

namespace {

// Pseudo-remainder of f by g (prem), integer arithmetic throughout.
UPoly prem(UPoly f, const UPoly &g)
{
    const long dg = degree(g);
    while (!f.empty() && degree(f) >= dg) {
        const long shift = degree(f) - dg;
        Int lf = f.back();
        for (auto &x : f)
            x *= g.back();
        for (long j = 0; j <= dg; ++j)
            f[shift + j] -= lf * g[j];
        trim(f);
    }
    return f;
}

} // namespace

UPoly gcd_q(UPoly f, UPoly g)
{
    f = primitive_part(f);
    g = primitive_part(g);
    if (f.size() < g.size())
        std::swap(f, g);
    while (!g.empty()) {
        UPoly r = primitive_part(prem(f, g));
        f = std::move(g);
        g = std::move(r);
    }
    return primitive_part(f);
}

Rat resultant(const UPoly &f, const UPoly &g)
{
    const long m = degree(f), n = degree(g);
    if (m < 0 || n < 0)
        return 0;
    if (m == 0 && n == 0)
        return 1;
    const long size = m + n;
    std::vector<std::vector<Rat>> a(size, std::vector<Rat>(size, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j)
            a[i][i + j] = f[m - j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j)
            a[n + i][i + j] = g[n - j];
    Rat det = 1;
    for (long c = 0; c < size; ++c) {
        long piv = -1;
        for (long r = c; r < size; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (long r = c + 1; r < size; ++r) {
            if (a[r][c] == 0)
                continue;
            Rat factor = a[r][c] / a[c][c];
            for (long k = c; k < size; ++k)
                a[r][k] -= factor * a[c][k];
        }
    }
    return det;
}

cplx ipow(cplx z, long k)
{
    cplx r = 1;
    while (k > 0) {
        if (k & 1)
            r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

cplx eval(const UPoly &f, cplx z)
{
    cplx acc = 0;
    for (long i = degree(f); i >= 0; --i)
        acc = acc * z + f[i].get_d();
    return acc;
}

cplx eval_derivative(const UPoly &f, cplx z)
{
    cplx acc = 0;
    for (long i = degree(f); i >= 1; --i)
        acc = acc * z + f[i].get_d() * static_cast<double>(i);
    return acc;
}

std::string render(const UPoly &f, const std::string &var)
{
    if (f.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        Int mag = abs(f[i]);
        if (first) {
            if (f[i] < 0)
                out << "-";
        } else {
            out << (f[i] < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << "*";
        out << var;
        if (i > 1)
            out << "^" << i;
    }
    return out.str();
}

OneVarPoly::OneVarPoly(UPoly c) : c_(std::move(c))
{
    trim(c_);
    if (c_.empty() || c_[0] != 1)
        throw Error(ErrorKind::ConstantTermNotOne, "one-variable polynomial must have constant term 1");
    if (c_.size() < 2)
        throw Error(ErrorKind::ZeroPolynomial, "one-variable polynomial must have degree at least 1");
}

} // namespace eulerprod

#include <eulerprod/gamma.hpp>

#include <eulerprod/errors.hpp>
#include <eulerprod/parallel.hpp>

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

namespace eulerprod {

int mobius(long m)
{
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "mobius needs m >= 1");
    int sign = 1;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        m /= p;
        if (m % p == 0)
            return 0;
        sign = -sign;
    }
    if (m > 1)
        sign = -sign;
    return sign;
}

long divisor_count(long m)
{
    long count = 0;
    for (long d = 1; d * d <= m; ++d)
        if (m % d == 0)
            count += (d * d == m) ? 1 : 2;
    return count;
}

std::vector<long> divisors(long m)
{
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= m; ++d)
        if (m % d == 0) {
            lo.push_back(d);
            if (d * d != m)
                hi.push_back(m / d);
        }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

long gcd_of(const MultiIndex &beta)
{
    long g = 0;
    for (long b : beta)
        g = std::gcd(g, b);
    return g;
}

long norm(const MultiIndex &beta) { return std::accumulate(beta.begin(), beta.end(), 0L); }

namespace {

void compositions(std::size_t r, long k, std::size_t pos, MultiIndex &cur, std::vector<MultiIndex> &out)
{
    if (pos + 1 == r) {
        cur[pos] = k;
        out.push_back(cur);
        return;
    }
    // larger leading entries first gives graded-lex order within a fixed norm
    for (long v = k; v >= 0; --v) {
        cur[pos] = v;
        compositions(r, k - v, pos + 1, cur, out);
    }
}

} // namespace

std::vector<MultiIndex> multi_indices(std::size_t r, long k)
{
    std::vector<MultiIndex> out;
    if (r == 0)
        return out;
    MultiIndex cur(r, 0);
    compositions(r, k, 0, cur, out);
    return out;
}

std::vector<MultiIndex> multi_indices_upto(std::size_t r, long bound)
{
    std::vector<MultiIndex> out;
    for (long k = 1; k <= bound; ++k) {
        auto level = multi_indices(r, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Rat tilde_convolve(const std::function<Rat(long)> &f,
                   const std::function<Rat(const MultiIndex &)> &g,
                   const MultiIndex &beta)
{
    const long g0 = gcd_of(beta);
    if (g0 == 0)
        throw Error(ErrorKind::InvalidArgument, "tilde_convolve needs a nonzero multi-index");
    Rat acc = 0;
    for (long m : divisors(g0)) {
        MultiIndex b = beta;
        for (auto &x : b)
            x /= m;
        acc += f(m) * g(b);
    }
    return acc;
}

namespace {

class Factorials {
public:
    const Int &operator()(long k)
    {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(table_.size()) <= k)
            table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
        return table_[k];
    }

private:
    std::mutex mu_;
    std::deque<Int> table_{Int(1)};
};

Factorials &factorials()
{
    static Factorials f;
    return f;
}

Int gamma_from_coeffs(const std::vector<Int> &a, const MultiIndex &beta)
{
    const long g0 = gcd_of(beta);
    if (g0 == 0)
        throw Error(ErrorKind::InvalidArgument, "gamma needs a nonzero multi-index");
    Rat acc = 0;
    for (long m : divisors(g0)) {
        const int mu = mobius(m);
        if (mu == 0)
            continue;
        long nb = 0;
        Int num = 1, den = m;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            const long bj = beta[j] / m;
            nb += bj;
            if (bj == 0)
                continue;
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), a[j].get_mpz_t(), static_cast<unsigned long>(bj));
            num *= pw;
            den *= factorials()(bj);
        }
        num *= factorials()(nb - 1);
        if ((nb % 2 == 1) != (mu < 0))
            num = -num;
        Rat term(num, den);
        term.canonicalize();
        acc += term;
    }
    if (acc.get_den() != 1)
        throw Error(ErrorKind::NonIntegerResult, "gamma coefficient is not an integer");
    return acc.get_num();
}

std::vector<Int> coefficients(const IntPoly &h)
{
    std::vector<Int> a;
    for (const auto &m : h.terms())
        a.push_back(m.coeff);
    return a;
}

} // namespace

Int gamma_coeff(const IntPoly &h, const MultiIndex &beta)
{
    if (beta.size() != h.nterms())
        throw Error(ErrorKind::InvalidArgument, "multi-index length must equal the number of terms");
    return gamma_from_coeffs(coefficients(h), beta);
}

bool gamma_bound_holds(const Int &gamma, const MultiIndex &beta, const Rat &C)
{
    const long k = norm(beta);
    // |gamma| * k * C^k <= tau(k)  <=>  |gamma| * k * num^k <= tau(k) * den^k
    Int lhs = abs(gamma) * k, rhs = divisor_count(k);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), C.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(pd.get_mpz_t(), C.get_den_mpz_t(), static_cast<unsigned long>(k));
    return lhs * pn <= rhs * pd;
}

const Int *GammaTable::find(const MultiIndex &beta) const
{
    auto it = index.find(beta);
    return it == index.end() ? nullptr : &entries[it->second].gamma;
}

GammaTable gamma_table(const IntPoly &h, long B, unsigned threads)
{
    if (B < 1)
        throw Error(ErrorKind::InvalidArgument, "table bound must be at least 1");
    GammaTable t;
    t.bound = B;
    t.C = c_of_h(h);
    t.r = h.nterms();
    const auto a = coefficients(h);
    const auto betas = multi_indices_upto(t.r, B);
    t.entries.resize(betas.size());
    parallel_for(betas.size(), threads, [&](std::size_t i) {
        Int g = gamma_from_coeffs(a, betas[i]);
        bool ok = gamma_bound_holds(g, betas[i], t.C);
        t.entries[i] = {betas[i], g, ok};
    });
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (!t.entries[i].bound_ok) {
            std::string b;
            for (long x : t.entries[i].beta)
                b += (b.empty() ? "" : ",") + std::to_string(x);
            throw Error(ErrorKind::BoundViolation, "gamma bound fails at beta=(" + b + ")");
        }
        t.index.emplace(t.entries[i].beta, i);
    }
    return t;
}

namespace {

// Dense truncated power series in r variables, total degree <= D.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t r, long D) : r_(r), D_(D)
    {
        monos_.push_back(MultiIndex(r, 0));
        auto rest = multi_indices_upto(r, D);
        monos_.insert(monos_.end(), rest.begin(), rest.end());
        for (std::size_t i = 0; i < monos_.size(); ++i)
            pos_.emplace(monos_[i], i);
        coef_.assign(monos_.size(), 0);
        coef_[0] = 1;
    }

    // Multiply in place by sum_k c_k Y^{k beta}, where c_0 = 1.
    void mul_along(const MultiIndex &beta, const std::vector<Int> &c)
    {
        std::vector<Int> next = coef_;
        for (std::size_t i = 0; i < monos_.size(); ++i) {
            if (coef_[i] == 0)
                continue;
            MultiIndex v = monos_[i];
            for (std::size_t k = 1; k < c.size(); ++k) {
                for (std::size_t j = 0; j < r_; ++j)
                    v[j] += beta[j];
                if (norm(v) > D_)
                    break;
                next[pos_.at(v)] += c[k] * coef_[i];
            }
        }
        coef_ = std::move(next);
    }

    const std::vector<MultiIndex> &monomials() const { return monos_; }
    const std::vector<Int> &coefficients() const { return coef_; }
    long degree_bound() const { return D_; }

private:
    std::size_t r_;
    long D_;
    std::vector<MultiIndex> monos_;
    std::map<MultiIndex, std::size_t> pos_;
    std::vector<Int> coef_;
};

} // namespace

std::vector<ResidualTerm> verify_expansion(const IntPoly &h, const GammaTable &table, long D)
{
    const std::size_t r = h.nterms();
    if (table.r != r)
        throw Error(ErrorKind::InvalidArgument, "table does not belong to this polynomial");
    TruncatedSeries s(r, D);
    for (const auto &e : table.entries) {
        if (e.gamma == 0)
            continue;
        const long nb = norm(e.beta);
        if (nb > D)
            continue;
        // (1 - Y^beta)^g = sum_k (-1)^k binom(g, k) Y^{k beta}
        std::vector<Int> c;
        for (long k = 0; k * nb <= D; ++k) {
            Int b;
            mpz_bin_ui(b.get_mpz_t(), e.gamma.get_mpz_t(), static_cast<unsigned long>(k));
            c.push_back(k % 2 ? Int(-b) : b);
        }
        s.mul_along(e.beta, c);
    }
    std::vector<ResidualTerm> res;
    const auto &monos = s.monomials();
    const auto &coef = s.coefficients();
    for (std::size_t i = 0; i < monos.size(); ++i) {
        Int expect = 0;
        const long nb = norm(monos[i]);
        if (nb == 0)
            expect = 1;
        else if (nb == 1)
            for (std::size_t j = 0; j < r; ++j)
                if (monos[i][j] == 1)
                    expect = h.term(j).coeff;
        if (coef[i] != expect)
            res.push_back({monos[i], coef[i] - expect});
    }
    return res;
}

std::string rat_str(const Rat &q)
{
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

nlohmann::ordered_json to_json(const GammaTable &t)
{
    nlohmann::ordered_json j;
    j["bound"] = t.bound;
    j["C"] = rat_str(t.C);
    auto arr = nlohmann::ordered_json::array();
    for (const auto &e : t.entries) {
        nlohmann::ordered_json x;
        x["beta"] = e.beta;
        x["gamma"] = e.gamma.get_str();
        arr.push_back(std::move(x));
    }
    j["entries"] = std::move(arr);
    return j;
}

GammaTable gamma_table_from_json(const nlohmann::ordered_json &j)
{
    GammaTable t;
    t.bound = j.at("bound").get<long>();
    t.C = Rat(j.at("C").get<std::string>());
    t.C.canonicalize();
    for (const auto &x : j.at("entries")) {
        GammaEntry e;
        e.beta = x.at("beta").get<MultiIndex>();
        e.gamma = Int(x.at("gamma").get<std::string>());
        e.bound_ok = gamma_bound_holds(e.gamma, e.beta, t.C);
        t.r = e.beta.size();
        t.index.emplace(e.beta, t.entries.size());
        t.entries.push_back(std::move(e));
    }
    return t;
}

} // namespace eulerprod

#include <eulerprod/lp.hpp>

#include <eulerprod/errors.hpp>

#include <algorithm>
#include <set>

namespace eulerprod {

bool check_witness(const ExpVec &a, const std::vector<ExpVec> &g, const std::vector<Rat> &x)
{
    if (x.size() != a.size())
        return false;
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += x[i] * a[i];
    if (s != 0)
        return false;
    for (const auto &row : g) {
        Rat t = 0;
        for (std::size_t i = 0; i < row.size(); ++i)
            t += x[i] * row[i];
        if (t < 1)
            return false;
    }
    return true;
}

bool check_certificate(const ExpVec &a, const std::vector<ExpVec> &g, const std::vector<Rat> &lambda)
{
    if (lambda.size() != g.size() || g.empty())
        return false;
    Rat total = 0;
    std::vector<Rat> v(a.size(), 0);
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (lambda[j] < 0)
            return false;
        total += lambda[j];
        for (std::size_t i = 0; i < a.size(); ++i)
            v[i] += lambda[j] * g[j][i];
    }
    if (total != 1)
        return false;
    // v must be a rational multiple of a
    std::size_t l = 0;
    while (l < a.size() && a[l] == 0)
        ++l;
    if (l == a.size())
        return false;
    Rat mu = v[l] / a[l];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (v[i] != mu * a[i])
            return false;
    return true;
}

namespace {

struct Row {
    std::vector<Rat> c; // c . y >= rhs
    Rat rhs;
};

// Scale so the first nonzero coefficient has magnitude one; keeps duplicates detectable.
void normalize(Row &row)
{
    for (const auto &x : row.c)
        if (x != 0) {
            Rat s = abs(x);
            for (auto &y : row.c)
                y /= s;
            row.rhs /= s;
            return;
        }
}

struct RowLess {
    bool operator()(const Row &a, const Row &b) const
    {
        if (a.c != b.c)
            return a.c < b.c;
        return a.rhs < b.rhs;
    }
};

// A value in the interval [lo, hi] (either side may be absent), preferring 0 and then integers.
Rat pick_in_interval(bool has_lo, const Rat &lo, bool has_hi, const Rat &hi)
{
    auto ceil_of = [](const Rat &q) {
        Int c;
        mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return Rat(c);
    };
    auto floor_of = [](const Rat &q) {
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return Rat(f);
    };
    if ((!has_lo || lo <= 0) && (!has_hi || hi >= 0))
        return 0;
    if (has_lo && lo > 0) {
        Rat c = ceil_of(lo);
        return (!has_hi || c <= hi) ? c : lo;
    }
    Rat f = floor_of(hi);
    return (!has_lo || f >= lo) ? f : hi;
}

} // namespace

FaceSystemResult solve_face_system_fm(const ExpVec &a, const std::vector<ExpVec> &g)
{
    const std::size_t n = a.size();
    FaceSystemResult res;
    std::size_t l = 0;
    while (l < n && a[l] == 0)
        ++l;
    if (l == n)
        throw Error(ErrorKind::InvalidArgument, "face system needs a nonzero polar vector");
    // substitute x_l = -(sum_{i != l} a_i x_i) / a_l; y lists the other coordinates
    std::vector<std::size_t> free_vars;
    for (std::size_t i = 0; i < n; ++i)
        if (i != l)
            free_vars.push_back(i);
    const std::size_t d = free_vars.size();
    std::vector<Row> rows;
    for (const auto &gj : g) {
        Row row;
        row.rhs = 1;
        for (std::size_t i : free_vars)
            row.c.push_back(Rat(gj[i]) - Rat(gj[l] * a[i], a[l]));
        for (auto &x : row.c)
            x.canonicalize();
        rows.push_back(row);
    }
    // stages[k] holds the system in variables 0..k-1 plus fixed ones
    std::vector<std::vector<Row>> stages(d + 1);
    stages[d] = rows;
    bool infeasible = false;
    for (std::size_t k = d; k-- > 0;) {
        std::vector<Row> pos, neg, zero;
        for (auto row : stages[k + 1]) {
            if (row.c[k] > 0)
                pos.push_back(row);
            else if (row.c[k] < 0)
                neg.push_back(row);
            else
                zero.push_back(row);
        }
        std::set<Row, RowLess> next;
        for (auto &z : zero) {
            normalize(z);
            next.insert(z);
        }
        for (const auto &p : pos)
            for (const auto &q : neg) {
                // combine so that variable k cancels
                Rat wp = -q.c[k], wq = p.c[k];
                Row row;
                row.c.resize(p.c.size());
                for (std::size_t i = 0; i < p.c.size(); ++i)
                    row.c[i] = wp * p.c[i] + wq * q.c[i];
                row.c[k] = 0;
                row.rhs = wp * p.rhs + wq * q.rhs;
                normalize(row);
                next.insert(row);
            }
        stages[k].assign(next.begin(), next.end());
        for (const auto &row : stages[k]) {
            bool allzero = std::all_of(row.c.begin(), row.c.end(), [](const Rat &x) { return x == 0; });
            if (allzero && row.rhs > 0)
                infeasible = true;
        }
        if (infeasible)
            break;
    }
    if (infeasible) {
        // FM does not produce multipliers directly; fall back to the simplex for the certificate
        auto s = solve_face_system_simplex(a, g);
        if (s.feasible)
            throw Error(ErrorKind::ConvergenceFailure, "Fourier-Motzkin and simplex disagree on a face system");
        return s;
    }
    std::vector<Rat> yy(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        // stage k+1 mentions variables 0..k only; variables 0..k-1 are already fixed
        const auto &rows_k = stages[k + 1];
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (const auto &row : rows_k) {
            const Rat &ck = row.c[k];
            if (ck == 0)
                continue;
            Rat rest = row.rhs;
            for (std::size_t i = 0; i < k; ++i)
                rest -= row.c[i] * yy[i];
            Rat b = rest / ck;
            if (ck > 0) {
                if (!has_lo || b > lo)
                    lo = b;
                has_lo = true;
            } else {
                if (!has_hi || b < hi)
                    hi = b;
                has_hi = true;
            }
        }
        yy[k] = pick_in_interval(has_lo, lo, has_hi, hi);
    }
    std::vector<Rat> x(n, 0);
    Rat acc = 0;
    for (std::size_t t = 0; t < d; ++t) {
        x[free_vars[t]] = yy[t];
        acc += Rat(a[free_vars[t]]) * yy[t];
    }
    x[l] = -acc / a[l];
    res.feasible = true;
    res.witness = x;
    if (!check_witness(a, g, x))
        throw Error(ErrorKind::ConvergenceFailure, "Fourier-Motzkin witness failed exact verification");
    return res;
}

namespace {

// Fraction-free tableau: the true entry is T[i][j] / den.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : T(rows, std::vector<Int>(cols, 0)) {}

    void pivot(std::size_t r, std::size_t c)
    {
        const Int p = T[r][c];
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (i == r)
                continue;
            const Int f = T[i][c];
            for (std::size_t j = 0; j < T[i].size(); ++j) {
                Int v = p * T[i][j] - f * T[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
                T[i][j] = std::move(v);
            }
        }
        den = p;
    }

    std::vector<std::vector<Int>> T;
    Int den = 1;
};

} // namespace

FaceSystemResult solve_face_system_simplex(const ExpVec &a, const std::vector<ExpVec> &g)
{
    const std::size_t n = a.size();
    const std::size_t m = g.size();
    FaceSystemResult res;
    if (m == 0) {
        res.feasible = true;
        res.witness.assign(n, 0);
        return res;
    }
    // Columns: lambda_1..lambda_m, mu+, mu-, z_0..z_n, rhs.  Rows 0..n: constraints, row n+1: objective.
    const std::size_t rows = n + 1;
    const std::size_t ncols = m + 2 + rows + 1;
    const std::size_t zcol = m + 2, rhs = ncols - 1;
    Tableau tab(rows + 1, ncols);
    auto &T = tab.T;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            T[i][j] = g[j][i];
        T[i][m] = a[i];
        T[i][m + 1] = -a[i];
    }
    for (std::size_t j = 0; j < m; ++j)
        T[n][j] = 1;
    T[n][rhs] = 1;
    for (std::size_t i = 0; i < rows; ++i)
        T[i][zcol + i] = 1;
    // objective row holds reduced costs of min sum z with the artificial basis
    for (std::size_t j = 0; j < ncols; ++j) {
        if (j >= zcol && j < zcol + rows)
            continue;
        Int s = 0;
        for (std::size_t i = 0; i < rows; ++i)
            s -= T[i][j];
        T[rows][j] = s;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i)
        basis[i] = zcol + i;
    const std::size_t max_pivots = 100000;
    for (std::size_t it = 0;; ++it) {
        if (it > max_pivots)
            throw Error(ErrorKind::ConvergenceFailure, "simplex pivot limit reached");
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < rhs; ++j)
            if (T[rows][j] < 0) {
                enter = j;
                break;
            }
        if (enter == ncols)
            break;
        std::size_t leave = rows;
        for (std::size_t i = 0; i < rows; ++i) {
            if (T[i][enter] <= 0)
                continue;
            if (leave == rows) {
                leave = i;
                continue;
            }
            // compare T[i][rhs]/T[i][enter] with T[leave][rhs]/T[leave][enter]
            Int lhs = T[i][rhs] * T[leave][enter];
            Int rhs_v = T[leave][rhs] * T[i][enter];
            if (lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[leave]))
                leave = i;
        }
        if (leave == rows)
            throw Error(ErrorKind::ConvergenceFailure, "phase-one simplex reported an unbounded ray");
        tab.pivot(leave, enter);
        basis[leave] = enter;
    }
    // optimum of sum z is -T[rows][rhs] / den
    const Int &den = tab.den;
    if (T[rows][rhs] == 0) {
        res.feasible = false;
        res.certificate.assign(m, 0);
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] < m)
                res.certificate[basis[i]] = Rat(T[i][rhs], den);
        for (auto &x : res.certificate)
            x.canonicalize();
        if (!check_certificate(a, g, res.certificate))
            throw Error(ErrorKind::ConvergenceFailure, "simplex certificate failed exact verification");
        return res;
    }
    // duals pi_k = 1 - reduced cost of z_k; pi = (x, s) with x.g_j + s <= 0 and x.a = 0
    std::vector<Rat> pi(rows);
    for (std::size_t k = 0; k < rows; ++k) {
        pi[k] = Rat(1) - Rat(T[rows][zcol + k], den);
        pi[k].canonicalize();
    }
    const Rat s = pi[n];
    if (s <= 0)
        throw Error(ErrorKind::ConvergenceFailure, "simplex dual has non-positive objective");
    res.feasible = true;
    res.witness.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        res.witness[i] = -pi[i] / s;
    if (!check_witness(a, g, res.witness))
        throw Error(ErrorKind::ConvergenceFailure, "simplex witness failed exact verification");
    return res;
}

FaceSystemResult solve_face_system(const ExpVec &a, const std::vector<ExpVec> &g)
{
    if (a.size() <= 4 && g.size() <= 16)
        return solve_face_system_fm(a, g);
    return solve_face_system_simplex(a, g);
}

} // namespace eulerprod

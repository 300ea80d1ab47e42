#include <eulerprod/poly.hpp>

#include <eulerprod/errors.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace eulerprod {

long dot(const ExpVec &a, const ExpVec &b)
{
    long s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        s += a[i] * b[i];
    return s;
}

long total_degree(const ExpVec &v)
{
    long s = 0;
    for (long x : v)
        s += x;
    return s;
}

bool grlex_less(const ExpVec &a, const ExpVec &b)
{
    const long da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    // larger power of the earlier variable comes first
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

IntPoly::IntPoly(std::size_t n, std::vector<Monomial> terms) : n_(n)
{
    auto cmp = [](const ExpVec &a, const ExpVec &b) { return grlex_less(a, b); };
    std::map<ExpVec, Int, decltype(cmp)> merged(cmp);
    for (auto &m : terms) {
        if (m.exps.size() != n)
            throw Error(ErrorKind::InvalidArgument, "monomial arity does not match variable count");
        bool nonconst = false;
        for (long e : m.exps) {
            if (e < 0)
                throw Error(ErrorKind::InvalidArgument, "negative exponent");
            nonconst = nonconst || e > 0;
        }
        if (!nonconst)
            throw Error(ErrorKind::ConstantTermNotOne, "constant monomial passed as a term");
        merged[m.exps] += m.coeff;
    }
    for (auto &[e, c] : merged)
        if (c != 0)
            terms_.push_back({c, e});
    if (terms_.empty())
        throw Error(ErrorKind::ZeroPolynomial, "no nonconstant terms");
}

ExponentMatrix::ExponentMatrix(std::size_t n, std::vector<ExpVec> cols) : n_(n), cols_(std::move(cols))
{
    for (const auto &c : cols_) {
        if (c.size() != n_)
            throw Error(ErrorKind::InvalidArgument, "column length mismatch");
        if (total_degree(c) <= 0)
            throw Error(ErrorKind::InvalidArgument, "zero exponent column");
    }
}

ExpVec ExponentMatrix::row(std::size_t l) const
{
    ExpVec r;
    for (const auto &c : cols_)
        r.push_back(c.at(l));
    return r;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string &s) : s_(s) {}

    IntPoly run()
    {
        Int constant = 0;
        std::vector<std::pair<Int, std::map<long, long>>> raw;
        skip();
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) {
                if (first)
                    throw SyntaxError(pos_, "\"1\"");
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw SyntaxError(pos_, "\"+\" or \"-\"");
            }
            first = false;
            Int coeff = 1;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = integer();
                skip();
                if (pos_ < s_.size() && peek() == '*') {
                    ++pos_;
                    skip();
                } else {
                    constant += sign * coeff;
                    continue;
                }
            }
            std::map<long, long> powers;
            factor(powers);
            skip();
            while (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                skip();
                factor(powers);
                skip();
            }
            raw.push_back({sign * coeff, std::move(powers)});
        }
        if (constant != 1)
            throw Error(ErrorKind::ConstantTermNotOne, "constant term is " + constant.get_str() + ", expected 1");
        long n = 0;
        for (const auto &t : raw)
            for (const auto &[v, e] : t.second)
                n = std::max(n, v);
        std::vector<Monomial> terms;
        for (auto &t : raw) {
            ExpVec e(n, 0);
            for (const auto &[v, k] : t.second)
                e[v - 1] += k;
            terms.push_back({t.first, e});
        }
        if (terms.empty())
            throw Error(ErrorKind::ZeroPolynomial, "no nonconstant terms");
        return IntPoly(static_cast<std::size_t>(n), std::move(terms));
    }

private:
    char peek() const { return s_[pos_]; }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    Int integer()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            throw SyntaxError(pos_, "integer");
        return Int(s_.substr(start, pos_ - start));
    }

    void factor(std::map<long, long> &powers)
    {
        if (pos_ >= s_.size() || peek() != 'X')
            throw SyntaxError(pos_, "\"X\"");
        ++pos_;
        long index = 1;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t at = pos_;
            Int idx = integer();
            if (idx < 1 || idx > 64)
                throw SyntaxError(at, "variable index in 1..64");
            index = idx.get_si();
        }
        skip();
        long power = 1;
        if (pos_ < s_.size() && peek() == '^') {
            ++pos_;
            skip();
            std::size_t at = pos_;
            Int k = integer();
            if (k < 1 || k > 1000000)
                throw SyntaxError(at, "positive exponent");
            power = k.get_si();
        }
        powers[index] += power;
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

} // namespace

IntPoly parse_poly(const std::string &text) { return Parser(text).run(); }

std::string render(const IntPoly &h)
{
    std::ostringstream out;
    out << "1";
    for (const auto &m : h.terms()) {
        out << (m.coeff < 0 ? " - " : " + ");
        Int mag = abs(m.coeff);
        bool need_star = false;
        if (mag != 1) {
            out << mag.get_str();
            need_star = true;
        }
        for (std::size_t l = 0; l < m.exps.size(); ++l) {
            if (m.exps[l] == 0)
                continue;
            if (need_star)
                out << "*";
            out << "X" << (l + 1);
            if (m.exps[l] > 1)
                out << "^" << m.exps[l];
            need_star = true;
        }
    }
    return out.str();
}

cplx eval_complex(const IntPoly &h, const std::vector<cplx> &z)
{
    if (z.size() != h.nvars())
        throw Error(ErrorKind::InvalidArgument, "point dimension does not match variable count");
    cplx acc = 1;
    for (const auto &m : h.terms()) {
        cplx t = m.coeff.get_d();
        for (std::size_t l = 0; l < z.size(); ++l)
            if (m.exps[l] != 0)
                t *= ipow(z[l], m.exps[l]);
        acc += t;
    }
    return acc;
}

Rat c_of_h(const IntPoly &h)
{
    Int s = 0;
    for (const auto &m : h.terms())
        s += abs(m.coeff);
    Rat c(Int(1), s);
    c.canonicalize();
    return c;
}

UPoly substitute_power_raw(const IntPoly &h, const std::vector<long> &theta)
{
    if (theta.size() != h.nvars())
        throw Error(ErrorKind::InvalidArgument, "direction dimension does not match variable count");
    UPoly f(1, 1);
    for (const auto &m : h.terms()) {
        long d = dot(theta, m.exps);
        if (d < 1)
            throw Error(ErrorKind::InvalidArgument, "direction must give every column a positive degree");
        if (static_cast<long>(f.size()) <= d)
            f.resize(d + 1, 0);
        f[d] += m.coeff;
    }
    trim(f);
    return f;
}

OneVarPoly substitute_power(const IntPoly &h, const std::vector<long> &theta)
{
    return OneVarPoly(substitute_power_raw(h, theta));
}

ExponentMatrix exponent_matrix(const IntPoly &h)
{
    std::vector<ExpVec> cols;
    for (const auto &m : h.terms())
        cols.push_back(m.exps);
    return ExponentMatrix(h.nvars(), std::move(cols));
}

} // namespace eulerprod

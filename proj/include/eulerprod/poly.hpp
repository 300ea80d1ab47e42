#pragma once

#include <complex>
#include <string>
#include <vector>

#include <eulerprod/upoly.hpp>

namespace eulerprod {

using ExpVec = std::vector<long>;

struct Monomial {
    Int coeff;
    ExpVec exps;
    bool operator==(const Monomial &o) const { return coeff == o.coeff && exps == o.exps; }
};

// Graded lexicographic order: lower total degree first, then larger exponent
// of X1 first, and so on.  Ties never occur for canonical polynomials.
bool grlex_less(const ExpVec &a, const ExpVec &b);

// h = 1 + sum_j a_j X^{alpha_j}, with the constant term kept implicit.
class IntPoly {
public:
    // Merges equal exponents, drops zero coefficients, sorts terms.
    IntPoly(std::size_t n, std::vector<Monomial> terms);

    std::size_t nvars() const noexcept { return n_; }
    std::size_t nterms() const noexcept { return terms_.size(); }
    const std::vector<Monomial> &terms() const noexcept { return terms_; }
    const Monomial &term(std::size_t j) const { return terms_.at(j); }
    bool operator==(const IntPoly &o) const { return n_ == o.n_ && terms_ == o.terms_; }

private:
    std::size_t n_;
    std::vector<Monomial> terms_;
};

// n x r matrix whose j-th column is the exponent of the j-th term.
class ExponentMatrix {
public:
    ExponentMatrix(std::size_t n, std::vector<ExpVec> cols);
    std::size_t rows() const noexcept { return n_; }
    std::size_t cols() const noexcept { return cols_.size(); }
    long at(std::size_t l, std::size_t j) const { return cols_.at(j).at(l); }
    const ExpVec &column(std::size_t j) const { return cols_.at(j); }
    ExpVec row(std::size_t l) const;
    const std::vector<ExpVec> &columns() const noexcept { return cols_; }

private:
    std::size_t n_;
    std::vector<ExpVec> cols_;
};

IntPoly parse_poly(const std::string &text);
std::string render(const IntPoly &h);
cplx eval_complex(const IntPoly &h, const std::vector<cplx> &z);
Rat c_of_h(const IntPoly &h);
// Like substitute_power but allows full cancellation down to the constant 1.
UPoly substitute_power_raw(const IntPoly &h, const std::vector<long> &theta);
OneVarPoly substitute_power(const IntPoly &h, const std::vector<long> &theta);
ExponentMatrix exponent_matrix(const IntPoly &h);

long dot(const ExpVec &a, const ExpVec &b);
long total_degree(const ExpVec &v);

} // namespace eulerprod

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eulerprod {

using Int = mpz_class;
using Rat = mpq_class;
using cplx = std::complex<double>;

// Dense univariate polynomial over the integers, coefficient i multiplies T^i.
// Trailing zeros are trimmed so the zero polynomial is the empty vector.
using UPoly = std::vector<Int>;

void trim(UPoly &f);
long degree(const UPoly &f);
UPoly mul(const UPoly &f, const UPoly &g);
UPoly derivative(const UPoly &f);
// Exact division over the integers; nullopt when g does not divide f.
std::optional<UPoly> divexact(const UPoly &f, const UPoly &g);
Int content(const UPoly &f);
UPoly primitive_part(const UPoly &f);
// Monic-free gcd over Q, returned as a primitive integer polynomial with positive leading coefficient.
UPoly gcd_q(UPoly f, UPoly g);
// Resultant via the Sylvester determinant evaluated with exact rationals.
Rat resultant(const UPoly &f, const UPoly &g);
cplx ipow(cplx z, long k);
cplx eval(const UPoly &f, cplx z);
cplx eval_derivative(const UPoly &f, cplx z);
std::string render(const UPoly &f, const std::string &var = "T");

// One-variable polynomial with constant term exactly 1 and degree at least 1.
class OneVarPoly {
public:
    explicit OneVarPoly(UPoly c);
    const UPoly &coeffs() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::string str() const { return render(c_); }
    bool operator==(const OneVarPoly &o) const { return c_ == o.c_; }

private:
    UPoly c_;
};

} // namespace eulerprod

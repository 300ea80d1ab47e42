#pragma once

#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include <eulerprod/poly.hpp>

namespace eulerprod {

using MultiIndex = std::vector<long>;

int mobius(long m);
long divisor_count(long m);
std::vector<long> divisors(long m);
long gcd_of(const MultiIndex &beta);
long norm(const MultiIndex &beta);

// All multi-indices of length r with norm exactly k, in graded-lex order.
std::vector<MultiIndex> multi_indices(std::size_t r, long k);
// All multi-indices with 1 <= norm <= bound, ascending norm then graded-lex.
std::vector<MultiIndex> multi_indices_upto(std::size_t r, long bound);

// (f ~* g)(beta) = sum over m | gcd(beta) of f(m) g(beta / m).
Rat tilde_convolve(const std::function<Rat(long)> &f,
                   const std::function<Rat(const MultiIndex &)> &g,
                   const MultiIndex &beta);

Int gamma_coeff(const IntPoly &h, const MultiIndex &beta);

struct GammaEntry {
    MultiIndex beta;
    Int gamma;
    bool bound_ok;
};

struct GammaTable {
    long bound = 0;
    Rat C;
    std::size_t r = 0;
    std::vector<GammaEntry> entries; // ascending norm, then graded-lex
    std::map<MultiIndex, std::size_t> index;

    const Int *find(const MultiIndex &beta) const;
};

// Exact check of |gamma| <= tau(k)/k * C^{-k} with k = norm(beta).
bool gamma_bound_holds(const Int &gamma, const MultiIndex &beta, const Rat &C);

GammaTable gamma_table(const IntPoly &h, long B = 12, unsigned threads = 1);

struct ResidualTerm {
    MultiIndex y;
    Int coeff;
};

// Truncated expansion of prod (1 - Y^beta)^gamma(beta) minus 1 + sum a_j Y_j,
// through total degree D in Y; an empty result means the identity holds.
std::vector<ResidualTerm> verify_expansion(const IntPoly &h, const GammaTable &table, long D);

nlohmann::ordered_json to_json(const GammaTable &t);
GammaTable gamma_table_from_json(const nlohmann::ordered_json &j);

std::string rat_str(const Rat &q);

} // namespace eulerprod

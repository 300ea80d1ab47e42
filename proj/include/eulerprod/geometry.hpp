#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include <eulerprod/poly.hpp>

namespace eulerprod {

ExpVec primitive_vector(const ExpVec &v);
bool collinear(const ExpVec &a, const ExpVec &b);
// Indices j (0-based) with column j a rational multiple of column e.
std::vector<std::size_t> lambda_class(const ExponentMatrix &alpha, std::size_t e);
OneVarPoly face_poly(const IntPoly &h, std::size_t e);
// gcd(f, f') over Q is constant.
bool is_nondegenerate(const OneVarPoly &f);
// Independent route: resultant(f, f') != 0.
bool is_nondegenerate_resultant(const OneVarPoly &f);

struct Face {
    std::size_t e = 0; // 0-based column index
    ExpVec polar;
    ExpVec primitive;
    std::vector<std::size_t> lambda;
    std::map<std::size_t, long> q;
    OneVarPoly poly{UPoly{1, 1}};
    bool nondegenerate = false;
    bool feasible = false;
    std::vector<Rat> witness;     // when feasible
    std::vector<Rat> certificate; // when infeasible, multipliers over columns outside lambda
};

std::vector<Face> enumerate_faces(const IntPoly &h, unsigned threads = 1);

struct DomainSpec {
    Rat delta;
    std::vector<ExpVec> inequalities; // sigma . v > delta
};

DomainSpec meromorphy_domain(const IntPoly &h, const Rat &delta);

long euler_phi(long d);
// Phi_d scaled to constant term 1.
UPoly cyclotomic_poly(long d);

struct EstermannResult {
    bool cyclotomic = false;
    std::vector<std::pair<long, long>> factors; // (d, multiplicity)
    UPoly residual;                             // quotient after peeling
    cplx root;                                  // witness when not cyclotomic
    double modulus = 0;
};

EstermannResult estermann_classify(const UPoly &f);
inline EstermannResult estermann_classify(const OneVarPoly &f) { return estermann_classify(f.coeffs()); }

struct CyclotomyVerdict {
    enum class Kind { Certificate, Witness, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::vector<std::pair<ExpVec, Int>> factors; // Certificate: (lambda, gamma(lambda))
    std::vector<long> theta;                     // Witness direction
    cplx root;
    double modulus = 0;
    long bound_used = 0;
};

const char *kind_name(CyclotomyVerdict::Kind k);

// exponent_bound <= 0 selects the default of four times the largest column degree.
CyclotomyVerdict cyclotomy_probe(const IntPoly &h, long exponent_bound = 0, int directions = 8,
                                 std::uint64_t seed = 0);

struct CyclotomicFactor {
    long d;
    ExpVec lambda;
};

std::vector<CyclotomicFactor> cyclotomic_factor_scan(const IntPoly &h, long d_bound);

// Minimal-sum positive integer direction; parity conditions apply when e_prime is set.
std::vector<long> choose_direction(const ExponentMatrix &alpha, const Face &face,
                                   std::optional<std::size_t> e_prime, long radius = 16);

// Exact multivariate helpers used by the cyclotomy routines.
using SparsePoly = std::map<ExpVec, Int>;
SparsePoly to_sparse(const IntPoly &h);
SparsePoly sparse_mul(const SparsePoly &a, const SparsePoly &b);

nlohmann::ordered_json to_json(const Face &f);
nlohmann::ordered_json to_json(const DomainSpec &d);
nlohmann::ordered_json to_json(const CyclotomyVerdict &v);

} // namespace eulerprod

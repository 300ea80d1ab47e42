#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <eulerprod/gamma.hpp>
#include <eulerprod/zeta.hpp>

namespace eulerprod {

// min_j sigma . alpha_j, where sigma = Re s.  Throws NotInDomain when <= 0.
double delta_of(const std::vector<cplx> &s, const ExponentMatrix &alpha);
// floor(C^{-1/delta}) + 1, nudged up when C^{-1/delta} is an integer up to rounding.
long m_delta(const Rat &C, double delta);

struct DirectResult {
    cplx value;
    double tail_bound = 0;
    long prime_cutoff = 0;
};

DirectResult eval_z_direct(const IntPoly &h, const std::vector<cplx> &s, long P);

struct SingularHit {
    MultiIndex beta;
    cplx z; // s . alpha . beta
    std::string kind; // "pole" or "zeta-zero"
    cplx rho;
};

struct EvalReport {
    cplx value;
    double delta = 0;
    long m_delta = 0;
    long beta_bound = 0;
    double tail_bound = 0;
    std::vector<SingularHit> factors_near_singularity;
};

struct ContinuationOptions {
    long B = 12;
    std::optional<double> delta_override; // may only lower delta
    const ZeroTable *zeros = nullptr;
    const GammaTable *table = nullptr; // reused when its bound is at least B
    double flag_radius = 1e-3;
    double refuse_radius = 1e-9;
    unsigned threads = 1;
};

EvalReport eval_z_continued(const IntPoly &h, const std::vector<cplx> &s, const ContinuationOptions &opt = {});

// Every beta in the table with s . alpha . beta within `radius` of 1 or of 1/2 +- i t_k.
std::vector<SingularHit> singular_set_hits(const std::vector<cplx> &s, const ExponentMatrix &alpha,
                                           const GammaTable &table, const ZeroTable &zeros,
                                           double radius = 1e-3);

nlohmann::ordered_json complex_json(cplx z);
nlohmann::ordered_json to_json(const EvalReport &r);

} // namespace eulerprod

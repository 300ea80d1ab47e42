#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include <json.hpp>

#include <eulerprod/gamma.hpp>
#include <eulerprod/geometry.hpp>
#include <eulerprod/zeta.hpp>

namespace eulerprod {

struct ProbeConfig {
    int reseed_budget = 64;
    double tau_scale = 0.1;     // tau0 components drawn from [-tau_scale, tau_scale]
    double arg_tolerance = 0.05; // radians away from pi/2 mod pi
    long arg_check_primes = 100;
    double root_tolerance = 1e-10;
};

// Line s0 + t theta through a face, with X = 1/p and Y = p^{-t}:
// W(X, Y) = 1 + sum_j a_j p^{-i tau0.alpha_j} X^{sigma0.alpha_j} Y^{theta.alpha_j}.
struct LineProbe {
    IntPoly h{1, {{Int(-1), {1}}}};
    Face face;
    std::vector<Rat> sigma0;
    std::vector<double> tau0;
    std::vector<long> theta;
    std::optional<std::size_t> e_prime;
    long q = 1;
    bool cyclotomic_face = false;
    bool constant_branch = false; // every column lies on the face ray
    cplx c;                       // chosen root of the face polynomial
    long N = 1;                   // theta . primitive(alpha_e)
    double theta1 = 0;            // sigma0 . alpha_{e'} when e' is set
    std::vector<double> xexp;     // sigma0 . alpha_j
    std::vector<long> yexp;       // theta . alpha_j
    std::vector<double> tau_dot;  // tau0 . alpha_j
    std::vector<bool> in_lambda;
    std::vector<bool> in_eprime_class;
};

LineProbe build_probe(const IntPoly &h, const Face &face, std::uint64_t seed, const ProbeConfig &cfg = {});

// Roots of a nondegenerate face polynomial; throws MultipleRootDetected otherwise.
std::vector<cplx> face_roots(const OneVarPoly &f);

struct PuiseuxBranch {
    long p = 0;
    cplx c0;
    double theta1 = 0;
    std::optional<cplx> c1;
    bool inside_disk = false;
};

PuiseuxBranch select_branch(const LineProbe &probe, long p, const ProbeConfig &cfg = {});

// W and its Y-derivative at prime p, for given X and Y.
cplx w_value(const LineProbe &probe, long p, double X, cplx Y);
cplx w_face_value(const LineProbe &probe, long p, cplx Y);
cplx w_face_derivative(const LineProbe &probe, long p, cplx Y);
cplx r_eprime_value(const LineProbe &probe, long p, cplx Y);

cplx branch_value(const LineProbe &probe, const PuiseuxBranch &branch, double X);

struct ZeroBox {
    double u = 1;
    double eta = 1;
    double eps = 0;
    double re_max = 1; // the upper edge of Re t is configurable
};

struct ZeroRecord {
    long p;
    long m;
    cplx t;
    double residual;
    bool polished;
};

struct ZeroScan {
    std::vector<ZeroRecord> records;
    std::vector<long> skipped_primes; // arg condition degenerate or no branch inside the disk
};

// |h(p^{-s0 - t theta})| evaluated through the column exponents.
double zero_residual(const LineProbe &probe, long p, cplx t);

ZeroScan zeros_on_line(const LineProbe &probe, const ZeroBox &box, long p_max, unsigned threads = 1,
                       const ProbeConfig &cfg = {});

struct CountRow {
    double eps;
    double p_bound; // exp(-log|c0| / eps)
    bool feasible;
    long measured;
    double predicted;
};

std::vector<CountRow> count_zeros_asymptotic(const LineProbe &probe, double u, double eta,
                                             const std::vector<double> &eps_list, long p_limit = 2'000'000);

struct PoleCandidate {
    MultiIndex beta;
    cplx rho;
    cplx t;
    bool in_face_class; // beta supported on lambda_e
};

std::vector<PoleCandidate> pole_candidates(const LineProbe &probe, const GammaTable &table, const ZeroTable &zeros);

struct Collision {
    std::size_t record;
    std::size_t candidate;
    double distance;
};

struct AuditReport {
    std::vector<double> min_distance; // per record, infinity without candidates
    std::size_t survivors = 0;
    std::vector<Collision> near;
};

AuditReport collision_audit(const std::vector<ZeroRecord> &zeros, const std::vector<PoleCandidate> &cands, double tol);

nlohmann::ordered_json to_json(const LineProbe &p);

} // namespace eulerprod

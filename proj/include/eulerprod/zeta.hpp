#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <eulerprod/upoly.hpp>

namespace eulerprod {

struct ZetaConfig {
    int euler_maclaurin_terms = 20;
    long cutoff = 50; // raised to |s| + 10 when larger
    double target_rel_error = 1e-12;
};

std::vector<long> primes_up_to(long M);

cplx riemann_zeta(cplx s, const ZetaConfig &cfg = {});
// zeta(s) - 1 without cancellation for large Re s.
cplx zeta_minus_one(cplx s, const ZetaConfig &cfg = {});
// prod_{p <= M} (1 - p^{-s})
cplx partial_euler(cplx s, long M);
cplx zeta_m(cplx s, long M);
// log of zeta_M(z) = zeta(z) prod_{p <= M}(1 - p^{-z}); the branch is
// irrelevant to callers that only exponentiate integer multiples.
cplx log_zeta_m(cplx z, const std::vector<long> &primes);
// log(1 + w) accurate for small |w|.
cplx clog1p(cplx w);

// Sum over primes p > P of p^{-z} for Re z > 1; `primes` must hold every prime <= P.
cplx prime_zeta_tail(cplx z, const std::vector<long> &primes);

struct ZeroTable {
    std::vector<double> ordinates;
    double tolerance = 1e-10;
    std::size_t size() const { return ordinates.size(); }
};

// Hardy function Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
double hardy_z(double t);
ZeroTable nontrivial_zeros(int K);

nlohmann::ordered_json to_json(const ZeroTable &z);
ZeroTable zero_table_from_json(const nlohmann::ordered_json &j);
// Reads the cache when it holds at least K ordinates at the same tolerance,
// otherwise computes and rewrites it.  An empty path disables caching.
ZeroTable cached_zero_table(int K, const std::string &path);

} // namespace eulerprod

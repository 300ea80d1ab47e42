#include <doctest.h>

#include <eulerprod/boundary.hpp>
#include <eulerprod/errors.hpp>

#include <cmath>
#include <numbers>

using namespace eulerprod;

namespace {

LineProbe probe_on(const char *poly, const ExpVec &ray, std::uint64_t seed = 0)
{
    const IntPoly h = parse_poly(poly);
    for (const auto &f : enumerate_faces(h))
        if (f.primitive == ray)
            return build_probe(h, f, seed);
    FAIL("no face on the requested ray");
    return {};
}

} // namespace

TEST_CASE("face roots")
{
    const auto r = face_roots(OneVarPoly({1, -1, -1}));
    REQUIRE(r.size() == 2);
    for (auto z : r)
        CHECK(std::abs(1.0 - z - z * z) < 1e-14);
    CHECK_THROWS_AS(face_roots(OneVarPoly({1, -2, 1})), Error);
}

TEST_CASE("constant branch of 1 - X - X^2")
{
    const auto pr = probe_on("1 - X - X^2", {1});
    CHECK(pr.constant_branch);
    CHECK_FALSE(pr.cyclotomic_face);
    CHECK(std::abs(pr.c) == doctest::Approx((std::sqrt(5.0) - 1) / 2));
    CHECK(pr.theta == std::vector<long>{1});
    for (long p : {2L, 3L, 97L}) {
        const auto br = select_branch(pr, p);
        CHECK(br.inside_disk);
        const cplx om = branch_value(pr, br, 1.0 / static_cast<double>(p));
        CHECK(std::abs(w_value(pr, p, 1.0 / static_cast<double>(p), om)) < 1e-13);
    }
}

TEST_CASE("cyclotomic face of 1 - X1 - X2")
{
    const auto pr = probe_on("1 - X1 - X2", {1, 0});
    CHECK(pr.cyclotomic_face);
    CHECK_FALSE(pr.constant_branch);
    REQUIRE(pr.e_prime);
    CHECK(*pr.e_prime == 1);
    CHECK(pr.theta1 > 0);
    // every column pairs positively with theta; parity conditions on the face and e'
    CHECK(pr.N % 2 == 0);
    CHECK(pr.yexp[*pr.e_prime] % 2 == 1);
    for (long p : {3L, 5L, 101L}) {
        PuiseuxBranch br;
        try {
            br = select_branch(pr, p);
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::ArgDegenerate);
            continue;
        }
        REQUIRE(br.c1);
        CHECK(std::abs(w_face_value(pr, p, br.c0)) < 1e-10);
        // c1 solves the first order balance
        CHECK(std::abs(w_face_derivative(pr, p, br.c0) * *br.c1 + r_eprime_value(pr, p, br.c0)) < 1e-10);
        CHECK((*br.c1 / br.c0).real() < 0);
        // (Omega - c0) / X^theta1 tends to c1
        double prev = 1e300;
        for (double X : {1e-3, 1e-5, 1e-7}) {
            const cplx om = branch_value(pr, br, X);
            CHECK(std::abs(w_value(pr, p, X, om)) < 1e-12);
            const double err = std::abs((om - br.c0) / std::pow(X, br.theta1) - *br.c1);
            CHECK(err <= prev);
            prev = err;
        }
        CHECK(prev < 1e-2 * std::abs(*br.c1));
    }
}

TEST_CASE("zeros on the line are zeros of h")
{
    const auto pr = probe_on("1 - X - X^2", {1});
    ZeroBox box;
    const auto scan = zeros_on_line(pr, box, 2000);
    REQUIRE_FALSE(scan.records.empty());
    for (const auto &r : scan.records) {
        CHECK(r.residual < 1e-8);
        CHECK(zero_residual(pr, r.p, r.t) < 1e-8);
        CHECK(r.t.real() > box.eps);
        CHECK(r.t.real() < box.re_max);
        CHECK(r.t.imag() > box.u);
        CHECK(r.t.imag() < box.u + box.eta);
    }
    // the same scan with two threads
    const auto scan2 = zeros_on_line(pr, box, 2000, 2);
    CHECK(scan2.records.size() == scan.records.size());
}

TEST_CASE("window count per prime")
{
    const auto pr = probe_on("1 - X - X^2", {1});
    const double eta = 2 * std::numbers::pi;
    const auto scan = zeros_on_line(pr, ZeroBox{1, eta, 0, 1}, 500);
    std::map<long, long> per;
    for (const auto &r : scan.records)
        ++per[r.p];
    for (const auto &[p, k] : per) {
        // a window of height eta holds eta log p / 2 pi values of m, give or take one
        const double expect = eta * std::log(static_cast<double>(p)) / (2 * std::numbers::pi);
        CHECK(std::abs(static_cast<double>(k) - expect) <= 1.0);
    }
}

TEST_CASE("large eps leaves nothing")
{
    const auto pr = probe_on("1 - X - X^2", {1});
    // Re t = -log|c| / log p never exceeds -log|c| / log 2 < 0.7
    const auto scan = zeros_on_line(pr, ZeroBox{1, 1, 0.7, 1}, 5000);
    CHECK(scan.records.empty());
    CHECK_THROWS_AS(zeros_on_line(pr, ZeroBox{1, 1, 1.2, 1}, 100), Error);
}

TEST_CASE("asymptotic count")
{
    const auto pr = probe_on("1 + 2*X^2 - 2*X^3 + X^5", {1});
    const auto rows = count_zeros_asymptotic(pr, 1, 2 * std::numbers::pi, {0.1, 0.05, 0.001});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].feasible);
    CHECK(rows[1].feasible);
    CHECK_FALSE(rows[2].feasible);
    CHECK(rows[1].measured > rows[0].measured);
    const double ratio = static_cast<double>(rows[1].measured) / rows[1].predicted;
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.1);
    const auto cyc = probe_on("1 - X1 - X2", {1, 0});
    CHECK_THROWS_AS(count_zeros_asymptotic(cyc, 1, 1, {0.1}), Error);
}

TEST_CASE("pole candidates solve the linear relation")
{
    const auto pr = probe_on("1 - X1 - X2", {1, 0});
    const auto table = gamma_table(pr.h, 6);
    const auto zeros = nontrivial_zeros(5);
    const auto cands = pole_candidates(pr, table, zeros);
    REQUIRE_FALSE(cands.empty());
    for (const auto &c : cands) {
        cplx z = 0;
        double d = 0;
        for (std::size_t j = 0; j < c.beta.size(); ++j) {
            z += static_cast<double>(c.beta[j]) * cplx(pr.xexp[j], pr.tau_dot[j]);
            d += static_cast<double>(c.beta[j] * pr.yexp[j]);
        }
        CHECK(std::abs(z + c.t * d - c.rho) < 1e-12);
        CHECK(c.t.real() > 0);
        CHECK(*table.find(c.beta) != 0);
    }
}

TEST_CASE("collision audit")
{
    std::vector<ZeroRecord> zs{{2, 0, cplx(0.5, 1.5), 0, true}, {3, 0, cplx(0.2, 1.2), 0, true}};
    std::vector<PoleCandidate> cs{{{1, 0}, cplx(1, 0), cplx(0.5, 1.50001), false}};
    const auto a = collision_audit(zs, cs, 1e-4);
    CHECK(a.survivors == 1);
    REQUIRE(a.near.size() == 1);
    CHECK(a.near[0].record == 0);
    CHECK(a.min_distance[0] == doctest::Approx(1e-5).epsilon(1e-6));
    const auto none = collision_audit(zs, {}, 1e-4);
    CHECK(none.survivors == 2);
    CHECK(std::isinf(none.min_distance[0]));
}

TEST_CASE("probe json uses 1-based indices")
{
    const auto pr = probe_on("1 - X1 - X2", {1, 0});
    const auto j = to_json(pr);
    CHECK(j["face"] == 1);
    CHECK(j["e_prime"] == 2);
    CHECK(j["cyclotomic_face"] == true);
}

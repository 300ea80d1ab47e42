#include <doctest.h>

#include "helpers.hpp"

#include <eulerprod/lp.hpp>

using namespace eulerprod;

TEST_CASE("face system on small cases")
{
    // a = (1,1,0), others (1,0,1), (0,1,1), (1,1,1) from the Kurokawa polynomial
    const ExpVec a{1, 1, 0};
    const std::vector<ExpVec> g{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    for (auto r : {solve_face_system_fm(a, g), solve_face_system_simplex(a, g), solve_face_system(a, g)}) {
        CHECK(r.feasible);
        CHECK(check_witness(a, g, r.witness));
    }
    // (1,1,1) against the three pairs is blocked: the pairs sum to twice a
    const ExpVec b{1, 1, 1};
    const std::vector<ExpVec> g2{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    for (auto r : {solve_face_system_fm(b, g2), solve_face_system_simplex(b, g2)}) {
        CHECK_FALSE(r.feasible);
        CHECK(check_certificate(b, g2, r.certificate));
    }
}

TEST_CASE("no other columns is trivially feasible")
{
    const auto r = solve_face_system({1, 1, 1}, {});
    CHECK(r.feasible);
    CHECK(check_witness({1, 1, 1}, {}, r.witness));
}

TEST_CASE("checkers reject bad data")
{
    const ExpVec a{1, 0};
    const std::vector<ExpVec> g{{0, 1}};
    CHECK(check_witness(a, g, {Rat(0), Rat(1)}));
    CHECK_FALSE(check_witness(a, g, {Rat(0), Rat(1, 2)}));
    CHECK_FALSE(check_witness(a, g, {Rat(1), Rat(1)}));
    CHECK_FALSE(check_certificate(a, g, {Rat(1)}));
}

TEST_CASE("Fourier-Motzkin and simplex agree on random systems")
{
    Rng rng(41);
    for (int it = 0; it < 150; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
        ExpVec a(n);
        long s = 0;
        for (auto &x : a) {
            x = rng.uniform_int(0, 3);
            s += x;
        }
        if (s == 0)
            a[0] = 1;
        std::vector<ExpVec> g(static_cast<std::size_t>(rng.uniform_int(0, 7)), ExpVec(n));
        for (auto &v : g) {
            long t = 0;
            for (auto &x : v) {
                x = rng.uniform_int(0, 3);
                t += x;
            }
            if (t == 0)
                v[n - 1] = 1;
        }
        const auto f = solve_face_system_fm(a, g);
        const auto x = solve_face_system_simplex(a, g);
        REQUIRE(f.feasible == x.feasible);
        if (f.feasible) {
            CHECK(check_witness(a, g, f.witness));
            CHECK(check_witness(a, g, x.witness));
        } else {
            CHECK(check_certificate(a, g, f.certificate));
            CHECK(check_certificate(a, g, x.certificate));
        }
    }
}

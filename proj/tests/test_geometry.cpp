#include <doctest.h>

#include "helpers.hpp"

#include <eulerprod/errors.hpp>
#include <eulerprod/gamma.hpp>
#include <eulerprod/geometry.hpp>
#include <eulerprod/lp.hpp>
#include <eulerprod/roots.hpp>

#include <cmath>
#include <set>

using namespace eulerprod;

namespace {

const char *kKurokawa = "1 - X1*X2 - X2*X3 - X3*X1 + 2*X1*X2*X3";

UPoly from_sparse_1d(const SparsePoly &p)
{
    UPoly f;
    for (const auto &[e, c] : p) {
        if (static_cast<long>(f.size()) <= e[0])
            f.resize(e[0] + 1, 0);
        f[e[0]] += c;
    }
    trim(f);
    return f;
}

// integer points with |x_i| <= R in the hyperplane a.x = 0 pairing positively with every g_j
bool grid_feasible(const ExpVec &a, const std::vector<ExpVec> &g, long R)
{
    const std::size_t n = a.size();
    ExpVec x(n, -R);
    while (true) {
        if (dot(a, x) == 0) {
            bool ok = true;
            for (const auto &v : g)
                ok = ok && dot(v, x) > 0;
            if (ok)
                return true;
        }
        std::size_t i = 0;
        while (i < n && x[i] == R)
            x[i++] = -R;
        if (i == n)
            return false;
        ++x[i];
    }
}

} // namespace

TEST_CASE("primitive vectors and collinearity")
{
    CHECK(primitive_vector({2, 4, 0}) == ExpVec{1, 2, 0});
    CHECK(primitive_vector({3, 0}) == ExpVec{1, 0});
    CHECK(primitive_vector({1, 1, 1}) == ExpVec{1, 1, 1});
    CHECK(collinear({1, 2}, {2, 4}));
    CHECK_FALSE(collinear({1, 2}, {2, 3}));
}

TEST_CASE("lambda classes and face polynomials")
{
    const IntPoly k = parse_poly(kKurokawa);
    const auto a = exponent_matrix(k);
    CHECK(lambda_class(a, 3) == std::vector<std::size_t>{3});
    CHECK(lambda_class(exponent_matrix(parse_poly("1 + X + X^2")), 0) == std::vector<std::size_t>{0, 1});
    CHECK(lambda_class(exponent_matrix(parse_poly("1 + X1 + X2")), 1) == std::vector<std::size_t>{1});

    CHECK(face_poly(parse_poly("1 + X1*X2*X3"), 0).str() == "1 + T");
    CHECK(face_poly(parse_poly("1 - X1*X2 - X1^2*X2^2"), 0).str() == "1 - T - T^2");
    CHECK(face_poly(k, 0).str() == "1 - T");
}

TEST_CASE("nondegeneracy")
{
    CHECK(is_nondegenerate(OneVarPoly({1, 1})));
    CHECK_FALSE(is_nondegenerate(OneVarPoly({1, -2, 1})));
    CHECK(is_nondegenerate(OneVarPoly({1, -1, -1})));
    CHECK(is_nondegenerate_resultant(OneVarPoly({1, -1, -1})));
    CHECK_FALSE(is_nondegenerate_resultant(OneVarPoly({1, -2, 1})));
}

TEST_CASE("Kurokawa faces")
{
    const auto faces = enumerate_faces(parse_poly(kKurokawa));
    REQUIRE(faces.size() == 4);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(faces[i].feasible);
        CHECK(faces[i].nondegenerate);
        CHECK(faces[i].poly.str() == "1 - T");
    }
    CHECK_FALSE(faces[3].feasible);
    const auto j = to_json(faces[0]);
    CHECK(j["e"] == 1);
    CHECK(j["lambda"] == std::vector<int>{1});
    CHECK(j["face_poly"] == "1 - T");
    CHECK(to_json(faces[3])["witness"].is_null());
}

TEST_CASE("faces of simple polynomials")
{
    const auto f2 = enumerate_faces(parse_poly("1 + X1 + X2"));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].feasible);
    CHECK(f2[1].feasible);
    const auto f1 = enumerate_faces(parse_poly("1 + X + X^2"));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].feasible);
    CHECK(f1[0].lambda.size() == 2);
    CHECK(f1[0].witness == std::vector<Rat>{Rat(0)});
}

TEST_CASE("faces agree with a grid oracle and the resultant route")
{
    Rng rng(71);
    for (int it = 0; it < 60; ++it) {
        const IntPoly h = testing::random_poly(rng, 3, 4, 3);
        const auto alpha = exponent_matrix(h);
        for (const auto &f : enumerate_faces(h)) {
            std::vector<ExpVec> others;
            for (std::size_t j = 0; j < alpha.cols(); ++j)
                if (!collinear(alpha.column(j), f.primitive))
                    others.push_back(alpha.column(j));
            CHECK(f.feasible == grid_feasible(f.primitive, others, 6));
            if (f.feasible)
                CHECK(check_witness(f.primitive, others, f.witness));
            CHECK(f.nondegenerate == is_nondegenerate_resultant(f.poly));
        }
    }
}

TEST_CASE("meromorphy domain")
{
    const auto d = meromorphy_domain(parse_poly(kKurokawa), 0);
    CHECK(d.inequalities == std::vector<ExpVec>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK(meromorphy_domain(parse_poly("1 - X"), 0).inequalities == std::vector<ExpVec>{{1}});
    CHECK(meromorphy_domain(parse_poly("1 + X1*X2*X3"), 0).inequalities == std::vector<ExpVec>{{1, 1, 1}});
    // multiples on one ray collapse to the smallest
    CHECK(meromorphy_domain(parse_poly("1 + X + X^2"), 0).inequalities == std::vector<ExpVec>{{1}});
}

TEST_CASE("cyclotomic polynomials and the classifier")
{
    CHECK(euler_phi(12) == 4);
    CHECK(cyclotomic_poly(1) == UPoly{1, -1});
    CHECK(cyclotomic_poly(3) == UPoly{1, 1, 1});
    CHECK(cyclotomic_poly(6) == UPoly{1, -1, 1});

    auto r1 = estermann_classify(UPoly{1, -1});
    CHECK(r1.cyclotomic);
    CHECK(r1.factors == std::vector<std::pair<long, long>>{{1, 1}});
    auto r2 = estermann_classify(UPoly{1, -1, -1});
    CHECK_FALSE(r2.cyclotomic);
    // the witness is the root farthest from the unit circle
    CHECK(r2.modulus == doctest::Approx((std::sqrt(5.0) + 1) / 2).epsilon(1e-12));
    auto r3 = estermann_classify(UPoly{1, 1, 1});
    CHECK(r3.cyclotomic);
    CHECK(r3.factors == std::vector<std::pair<long, long>>{{3, 1}});
    // product with a repeated factor
    auto r4 = estermann_classify(mul(mul(cyclotomic_poly(2), cyclotomic_poly(2)), cyclotomic_poly(10)));
    CHECK(r4.cyclotomic);
    CHECK(r4.factors == std::vector<std::pair<long, long>>{{2, 2}, {10, 1}});
}

TEST_CASE("cyclotomy probe")
{
    const auto c1 = cyclotomy_probe(parse_poly("1 - X1*X2"));
    REQUIRE(c1.kind == CyclotomyVerdict::Kind::Certificate);
    REQUIRE(c1.factors.size() == 1);
    CHECK(c1.factors[0].first == ExpVec{1, 1});
    CHECK(c1.factors[0].second == 1);

    const auto c2 = cyclotomy_probe(parse_poly(kKurokawa));
    CHECK(c2.kind == CyclotomyVerdict::Kind::Witness);
    CHECK(std::abs(c2.modulus - 1) > 1e-6);

    const auto c3 = cyclotomy_probe(parse_poly("1 - X1 - X2 + X1*X2"));
    REQUIRE(c3.kind == CyclotomyVerdict::Kind::Certificate);
    CHECK(c3.factors.size() == 2);

    // certificates reproduce h, and every direction specializes to a cyclotomic polynomial
    for (const auto &s : {"1 - X1*X2", "1 - X1 - X2 + X1*X2", "1 + X1 + X1^2", "1 + X1^2*X2^2"}) {
        const IntPoly h = parse_poly(s);
        const auto v = cyclotomy_probe(h);
        REQUIRE(v.kind == CyclotomyVerdict::Kind::Certificate);
        for (std::vector<long> th : {std::vector<long>(h.nvars(), 1), std::vector<long>(h.nvars(), 3)}) {
            th[0] += 1;
            CHECK(estermann_classify(substitute_power(h, th)).cyclotomic);
        }
    }
}

TEST_CASE("cyclotomic factor scan")
{
    const auto f = cyclotomic_factor_scan(parse_poly("1 + X1 - X1*X2 - X1^2*X2"), 6);
    std::set<std::pair<long, ExpVec>> got;
    for (const auto &x : f)
        got.insert({x.d, x.lambda});
    CHECK(got.count({1, ExpVec{1, 1}}) == 1);
    CHECK(got.count({2, ExpVec{1, 0}}) == 1);
    CHECK(cyclotomic_factor_scan(parse_poly(kKurokawa), 12).empty());
    const auto g = cyclotomic_factor_scan(parse_poly("1 + X1 + X1^2"), 6);
    REQUIRE(g.size() == 1);
    CHECK(g[0].d == 3);
}

TEST_CASE("direction choice")
{
    const auto a1 = exponent_matrix(parse_poly("1 - X - X^2"));
    const auto faces1 = enumerate_faces(parse_poly("1 - X - X^2"));
    CHECK(choose_direction(a1, faces1[0], std::nullopt) == std::vector<long>{1});

    const IntPoly h = parse_poly("1 - X1*X2 + X1");
    const auto faces = enumerate_faces(h);
    const auto alpha = exponent_matrix(h);
    // face on column (1,1), e' the column (1,0)
    const Face *fe = nullptr;
    for (const auto &f : faces)
        if (f.primitive == ExpVec{1, 1})
            fe = &f;
    REQUIRE(fe);
    std::size_t ep = 0;
    for (std::size_t j = 0; j < alpha.cols(); ++j)
        if (alpha.column(j) == ExpVec{1, 0})
            ep = j;
    const auto th = choose_direction(alpha, *fe, ep);
    CHECK(th == std::vector<long>{1, 1});

    // three variables: sum even, first entry odd, minimal sum first
    const IntPoly v = parse_poly("1 + X1*X2*X3 + X1");
    const auto fv = enumerate_faces(v);
    const auto av = exponent_matrix(v);
    const Face *f3 = nullptr;
    for (const auto &f : fv)
        if (f.primitive == ExpVec{1, 1, 1})
            f3 = &f;
    REQUIRE(f3);
    std::size_t ep3 = 0;
    for (std::size_t j = 0; j < av.cols(); ++j)
        if (av.column(j) == ExpVec{1, 0, 0})
            ep3 = j;
    const auto t3 = choose_direction(av, *f3, ep3);
    CHECK((t3[0] + t3[1] + t3[2]) % 2 == 0);
    CHECK(t3[0] % 2 == 1);
    CHECK(t3[0] + t3[1] + t3[2] == 4);
}

TEST_CASE("sparse multiplication")
{
    const IntPoly h = parse_poly("1 - X1");
    const auto sq = sparse_mul(to_sparse(h), to_sparse(h));
    CHECK(from_sparse_1d(sq) == UPoly{1, -2, 1});
}

#include "common.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

SparseSystem hirzebruch_system()
{
    return {2, {laurent({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}}), laurent({{0, 0}, {0, 1}, {1, 1}, {2, 1}})}};
}

std::vector<std::vector<Rational>> hirzebruch_points()
{
    return {{-1, -1, 1, 1}, {0, -1, 1, 1}, {1, -1, 0, 1}};
}

LaurentPolynomial support_polynomial(const IntMatrix& A)
{
    LaurentPolynomial f;
    for (int j = 0; j < A.cols(); ++j)
        f.add_term(A.col(j), Rational(j + 1));
    return f;
}

} // namespace

TEST(Kushnirenko, VeroneseSurface)
{
    KushnirenkoCount k = kushnirenko_count(lattice_points(simplex(2, 2)));
    EXPECT_EQ(k.degree, Integer(4));
    EXPECT_EQ(k.normalized_volume, Integer(4));
    EXPECT_EQ(k.index, Integer(1));
}

TEST(Kushnirenko, Pentagon)
{
    KushnirenkoCount k = kushnirenko_count(pentagon_points());
    EXPECT_EQ(k.degree, Integer(5));
    EXPECT_EQ(k.index, Integer(1));
}

TEST(Kushnirenko, PentagonWithoutOrigin)
{
    KushnirenkoCount k = kushnirenko_count(columns({{1, 0}, {0, 1}, {2, 1}, {1, 2}}));
    EXPECT_EQ(k.normalized_volume, Integer(4));
    EXPECT_EQ(k.index, Integer(2));
    EXPECT_EQ(k.degree, Integer(2));
}

TEST(Kushnirenko, LowerDimensionalConfiguration)
{
    // the hexagon spans a plane in R^3
    KushnirenkoCount k = kushnirenko_count(permutations(3));
    EXPECT_EQ(k.normalized_volume, Integer(6));
    EXPECT_EQ(k.degree, Integer(6));
}

TEST(Bezout, Products)
{
    EXPECT_EQ(bezout_count({2, 2}), Integer(4));
    EXPECT_EQ(bezout_count({1, 1, 1}), Integer(1));
    EXPECT_EQ(bezout_count({3, 5}), Integer(15));
    EXPECT_THROW(bezout_count({2, 0}), DomainError);
}

TEST(Bkk, Hirzebruch)
{
    CountReport r = bkk_count(hirzebruch_system(), fan_hirzebruch(), hirzebruch_points());
    EXPECT_EQ(r.bkk, Integer(3));
    EXPECT_EQ(r.lattice_index, Integer(1));
    ASSERT_EQ(r.divisors.size(), 2u);
    EXPECT_EQ(r.divisors[0].to_string(), "D3 + D4");
    EXPECT_EQ(r.divisors[1].to_string(), "D4");
    EXPECT_EQ(r.homogenized[0],
              Polynomial::parse("x3*x4 + x1*x4 + x2*x3^3 + x1*x2*x3^2 + x1^2*x2*x3 + x1^3*x2", 4));
    EXPECT_EQ(r.homogenized[1], Polynomial::parse("x4 + x2*x3^2 + x1*x2*x3 + x1^2*x2", 4));
    EXPECT_EQ(r.verified, (std::vector<bool>{true, true, true}));
    EXPECT_FALSE(r.kushnirenko.has_value());
}

TEST(Bkk, RejectsNonSolution)
{
    CountReport r = bkk_count(hirzebruch_system(), fan_hirzebruch(), {{1, 1, 1, 1}});
    EXPECT_EQ(r.verified, (std::vector<bool>{false}));
}

TEST(Bkk, DefaultFanIsNormalFanOfSum)
{
    CountReport r = bkk_count(hirzebruch_system());
    EXPECT_EQ(r.bkk, Integer(3));
    EXPECT_TRUE(is_refinement(*r.fan, *fan_hirzebruch()) && is_refinement(*fan_hirzebruch(), *r.fan));
}

TEST(Bkk, FullQuadrics)
{
    LaurentPolynomial q = laurent({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    CountReport r = bkk_count({2, {q, q}});
    EXPECT_EQ(r.bkk, Integer(4));
    EXPECT_EQ(*r.bezout, Integer(4));
    EXPECT_EQ(*r.kushnirenko, Integer(4));
}

TEST(Bkk, BilinearPair)
{
    LaurentPolynomial b = laurent({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CountReport r = bkk_count({2, {b, b}});
    EXPECT_EQ(r.bkk, Integer(2));
    EXPECT_EQ(*r.bezout, Integer(4));
    EXPECT_EQ(*r.kushnirenko, Integer(2));
}

TEST(Bkk, LaurentSupportsHaveNoBezout)
{
    LaurentPolynomial f = laurent({{-1, 0}, {1, 0}, {0, 1}, {0, -1}});
    CountReport r = bkk_count({2, {f, f}});
    EXPECT_FALSE(r.bezout.has_value());
    EXPECT_EQ(r.bkk, Integer(4));
}

TEST(Bkk, DegenerateSum)
{
    LaurentPolynomial f = laurent({{0, 0}, {1, 0}});
    EXPECT_THROW(bkk_count({2, {f, f}}), DomainError);
}

TEST(Bkk, UnmixedMatchesKushnirenko)
{
    std::mt19937 rng(51);
    for (int t = 0; t < 6; ++t) {
        LatticePolytope P = random_polygon(rng, 5, 3);
        IntMatrix A = lattice_points(P);
        LaurentPolynomial f = support_polynomial(A);
        CountReport r = bkk_count({2, {f, f}});
        EXPECT_EQ(r.bkk, kushnirenko_count(A).normalized_volume);
        EXPECT_EQ(*r.kushnirenko, r.bkk);
    }
}

TEST(Bkk, Monotone)
{
    std::mt19937 rng(52);
    for (int t = 0; t < 6; ++t) {
        IntMatrix A = random_polygon(rng, 4, 3).vertices(), B = random_polygon(rng, 4, 3).vertices();
        Integer before = bkk_count({2, {support_polynomial(A), support_polynomial(B)}}).bkk;
        IntMatrix A2(2, A.cols() + 1);
        A2 << A, random_matrix(rng, 2, 1, -4, 4);
        Integer after = bkk_count({2, {support_polynomial(A2), support_polynomial(B)}}).bkk;
        EXPECT_GE(after, before);
    }
}

TEST(Bkk, SummandDivisorsAddUp)
{
    std::mt19937 rng(53);
    for (int t = 0; t < 6; ++t) {
        LatticePolytope P = random_polygon(rng, 4, 3), Q = random_polygon(rng, 4, 3);
        CountReport r = bkk_count({2, {support_polynomial(P.vertices()), support_polynomial(Q.vertices())}});
        TorusInvariantDivisor sum = polytope_divisor(minkowski_sum(P, Q), r.fan);
        EXPECT_EQ(r.divisors[0] + r.divisors[1], sum);
        EXPECT_EQ(r.bkk, mixed_volume({P, Q}));
    }
}

TEST(Bkk, HomogenizedTermsMatchInput)
{
    CountReport r = bkk_count(hirzebruch_system(), fan_hirzebruch());
    SparseSystem s = hirzebruch_system();
    IntMatrix Ft = ray_rows(*r.fan);
    for (int i = 0; i < 2; ++i) {
        ASSERT_EQ(r.homogenized[i].terms().size(), s.equations[i].terms.size());
        for (const auto& [e, c] : s.equations[i].terms) {
            IntVector x = Ft * e + r.divisors[i].coeffs;
            EXPECT_GE(x.minCoeff(), 0);
        }
    }
}

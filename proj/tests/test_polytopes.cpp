#include "common.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

bool same_columns(const IntMatrix& A, const IntMatrix& B)
{
    auto a = column_list(A), b = column_list(B);
    std::sort(a.begin(), a.end(), LexLess());
    std::sort(b.begin(), b.end(), LexLess());
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), equal);
}

Integer brute_count(const LatticePolytope& P, long lo, long hi)
{
    Integer c = 0;
    for (long x = lo; x <= hi; ++x)
        for (long y = lo; y <= hi; ++y)
            if (P.contains(int_vector({x, y})))
                ++c;
    return c;
}

} // namespace

TEST(Hull, Pentagon)
{
    LatticePolytope P = hull(pentagon_points());
    EXPECT_EQ(P.dim(), 2);
    EXPECT_EQ(P.num_vertices(), 5);
    EXPECT_EQ(P.num_facets(), 5);
    EXPECT_EQ(P.vertices(), columns({{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}}));
}

TEST(Hull, TriangleNormals)
{
    LatticePolytope T = hull(columns({{6, -6}, {0, 6}, {-6, 0}}));
    EXPECT_TRUE(same_columns(T.facet_normals(), columns({{-2, -1}, {1, 2}, {1, -1}})));
    for (int f = 0; f < T.num_facets(); ++f)
        EXPECT_EQ(T.facets_at_vertex(0).size(), 2u);
}

TEST(Hull, InteriorPointsAreDropped)
{
    LatticePolytope P = hull(columns({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {0, 1}}));
    EXPECT_EQ(P, simplex(2, 2));
}

TEST(Hull, Segment)
{
    LatticePolytope S = hull(columns({{0, 0}, {2, 4}}));
    EXPECT_EQ(S.dim(), 1);
    EXPECT_EQ(S.equation_normals().cols(), 1);
    EXPECT_EQ(count_lattice_points(S), Integer(3));
}

TEST(Hull, HRepresentationHolds)
{
    std::mt19937 rng(2);
    for (int t = 0; t < 10; ++t) {
        LatticePolytope P = random_polygon(rng);
        for (int v = 0; v < P.num_vertices(); ++v)
            for (int f = 0; f < P.num_facets(); ++f)
                EXPECT_GE(dot(IntVector(P.facet_normals().col(f)), IntVector(P.vertices().col(v))) +
                              P.facet_offsets()[f],
                          0);
    }
}

TEST(LatticePoints, Examples)
{
    EXPECT_EQ(lattice_points(hull(pentagon_points())).cols(), 6);
    EXPECT_EQ(count_lattice_points(hull(permutations(3))), Integer(7));
    EXPECT_EQ(count_lattice_points(hull(permutations(4))), Integer(38));
    EXPECT_EQ(count_lattice_points(simplex(3, 2)), Integer(10));
}

TEST(LatticePoints, MatchBruteForce)
{
    std::mt19937 rng(4);
    for (int t = 0; t < 10; ++t) {
        LatticePolytope P = random_polygon(rng);
        EXPECT_EQ(count_lattice_points(P), brute_count(P, -5, 5));
    }
}

TEST(Volume, Simplex)
{
    EXPECT_EQ(volume(simplex(2)), Rational(1, 2));
    EXPECT_EQ(normalized_volume(simplex(2)), Integer(1));
    EXPECT_EQ(volume(simplex(3, 2)), Rational(4, 3));
    EXPECT_EQ(normalized_volume(simplex(3, 2)), Integer(8));
}

TEST(Volume, PentagonAndHexagon)
{
    EXPECT_EQ(volume(hull(pentagon_points())), Rational(5, 2));
    EXPECT_EQ(normalized_volume(hull(pentagon_points())), Integer(5));
    // the hexagon lives in a plane of R^3
    LatticePolytope H = hull(permutations(3));
    EXPECT_EQ(volume(H), Rational(0));
    EXPECT_EQ(normalized_volume(H), Integer(6));
}

TEST(Minkowski, SumOfSquareAndTriangle)
{
    LatticePolytope sq = hull(columns({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    LatticePolytope S = minkowski_sum(sq, simplex(2));
    EXPECT_EQ(S.num_vertices(), 5);
    EXPECT_EQ(count_lattice_points(S), Integer(8));
}

TEST(MixedVolume, Examples)
{
    LatticePolytope P1 = hull(columns({{0, 0}, {1, 0}, {3, 1}, {0, 1}}));
    LatticePolytope P2 = hull(columns({{0, 0}, {2, 1}, {0, 1}}));
    EXPECT_EQ(mixed_volume({P1, P2}), Integer(3));
    LatticePolytope P = hull(pentagon_points());
    EXPECT_EQ(mixed_volume({P, P}), Integer(5));
    EXPECT_EQ(mixed_volume({simplex(2, 2), simplex(2, 2)}), Integer(4));
}

TEST(MixedVolume, Symmetric)
{
    std::mt19937 rng(8);
    for (int t = 0; t < 8; ++t) {
        LatticePolytope P = random_polygon(rng), Q = random_polygon(rng);
        EXPECT_EQ(mixed_volume({P, Q}), mixed_volume({Q, P}));
        EXPECT_EQ(mixed_volume({P, P}), normalized_volume(P));
    }
}

TEST(Ehrhart, Pentagon)
{
    EXPECT_EQ(ehrhart(hull(pentagon_points())).to_string(), "5/2*x^2 + 5/2*x + 1");
}

TEST(Ehrhart, Permutohedra)
{
    EXPECT_EQ(ehrhart(hull(permutations(3))).to_string(), "3*x^2 + 3*x + 1");
    RationalPolynomial p = ehrhart(hull(permutations(4)));
    EXPECT_EQ(p.to_string(), "16*x^3 + 15*x^2 + 6*x + 1");
    EXPECT_EQ(p(Rational(2)), Rational(count_lattice_points(dilate(hull(permutations(4)), 2))));
}

TEST(Ehrhart, OutOfSample)
{
    std::mt19937 rng(6);
    for (int t = 0; t < 5; ++t) {
        LatticePolytope P = random_polygon(rng, 4, 3);
        RationalPolynomial p = ehrhart(P);
        for (long k : {4L, 5L})
            EXPECT_EQ(p(Rational(k)), Rational(count_lattice_points(dilate(P, k))));
        EXPECT_EQ(p.coeffs.back(), volume(P));
    }
}

TEST(ProjectFull, Segment)
{
    ProjectedPolytope pr = project_full(hull(columns({{0, 0}, {2, 4}})));
    EXPECT_EQ(pr.polytope.ambient_dim(), 1);
    EXPECT_EQ(pr.basis, columns({{1, 2}}));
    EXPECT_EQ(pr.polytope.vertices(), columns({{0}, {2}}));
    EXPECT_EQ(pr.lift(int_vector({2})), int_vector({2, 4}));
}

TEST(ProjectFull, Hexagon)
{
    ProjectedPolytope pr = project_full(hull(permutations(3)));
    EXPECT_EQ(pr.polytope.dim(), 2);
    EXPECT_EQ(normalized_volume(pr.polytope), Integer(6));
    EXPECT_EQ(count_lattice_points(pr.polytope), Integer(7));
}

TEST(Faces, DirectionalFace)
{
    LatticePolytope P = hull(pentagon_points());
    LatticePolytope F = face_in_direction(P, int_vector({-1, -1}));
    EXPECT_EQ(F.vertices(), columns({{1, 2}, {2, 1}}));
    EXPECT_EQ(face_in_direction(P, int_vector({1, 1})).num_vertices(), 1);
}

TEST(Normality, Examples)
{
    EXPECT_TRUE(is_normal(hull(permutations(4))));
    EXPECT_TRUE(is_smooth(hull(permutations(4))));
    EXPECT_TRUE(is_very_ample(hull(permutations(4))));
    EXPECT_TRUE(is_normal(hull(pentagon_points())));
    EXPECT_TRUE(is_smooth(hull(columns({{0, 0}, {2, 0}, {0, 1}, {1, 1}}))));
    EXPECT_FALSE(is_smooth(hull(columns({{0, 0}, {2, 0}, {0, 1}}))));
    // a lattice polygon is always normal; the Reeve tetrahedron is not
    EXPECT_FALSE(is_normal(hull(columns({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}))));
}

TEST(Newton, Polytope)
{
    LatticePolytope N = newton_polytope(columns({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}}));
    EXPECT_EQ(N.num_vertices(), 4);
    EXPECT_EQ(product(simplex(1), simplex(1)), N);
}

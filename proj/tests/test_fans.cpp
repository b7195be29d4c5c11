#include "common.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

Fan p1()
{
    return Fan::make(columns({{1}, {-1}}), {{0}, {1}}, 1);
}

Fan quadrant()
{
    return Fan::make(IntMatrix::Identity(2, 2), {{0, 1}}, 2);
}

} // namespace

TEST(Fan, ProjectivePlane)
{
    FanPtr p = fan_p2();
    const Fan& f = *p;
    EXPECT_TRUE(is_complete(f));
    EXPECT_TRUE(is_smooth(f));
    EXPECT_TRUE(is_simplicial(f));
    EXPECT_EQ(f.all_cones().size(), 7u);
    EXPECT_FALSE(has_torus_factor(f));
}

TEST(Fan, SingularQuadrilateral)
{
    FanPtr p = fan_singular_quad();
    const Fan& f = *p;
    EXPECT_TRUE(is_complete(f));
    EXPECT_TRUE(is_simplicial(f));
    EXPECT_FALSE(is_smooth(f));
}

TEST(Fan, NormalFanOfSingularQuadPolygon)
{
    Fan n = normal_fan(hull(columns({{0, 15}, {0, 1}, {2, 0}, {10, 0}})));
    EXPECT_EQ(n.num_rays(), 4);
    EXPECT_EQ(n.num_maximal_cones(), 4);
    EXPECT_TRUE(is_refinement(n, *fan_singular_quad()) && is_refinement(*fan_singular_quad(), n));
}

TEST(Fan, NormalFanOfSquare)
{
    Fan n = normal_fan(hull(columns({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
    EXPECT_TRUE(is_refinement(n, *fan_p1p1()) && is_refinement(*fan_p1p1(), n));
    EXPECT_FALSE(is_refinement(*fan_p2(), n));
    EXPECT_FALSE(is_refinement(n, *fan_p2()));
}

TEST(Fan, NormalFanNeedsFullDimension)
{
    EXPECT_THROW(normal_fan(hull(columns({{0, 0}, {1, 0}}))), DomainError);
}

TEST(Fan, NormalFanOfSimplexAndPentagon)
{
    Fan s = normal_fan(simplex(2));
    EXPECT_TRUE(is_refinement(s, *fan_p2()) && is_refinement(*fan_p2(), s));
    Fan p = normal_fan(hull(pentagon_points()));
    EXPECT_EQ(p.num_maximal_cones(), 5);
    EXPECT_TRUE(is_complete(p));
}

TEST(Fan, NormalFanOfPrismIsProduct)
{
    Fan prism = normal_fan(product(simplex(2), simplex(1)));
    Fan prod = product_fan(normal_fan(simplex(2)), normal_fan(simplex(1)));
    EXPECT_TRUE(is_refinement(prism, prod) && is_refinement(prod, prism));
    EXPECT_EQ(prism.num_maximal_cones(), 6);
}

TEST(Fan, NormalFanInvariantUnderDilationAndTranslation)
{
    std::mt19937 rng(12);
    for (int t = 0; t < 5; ++t) {
        LatticePolytope P = random_polygon(rng);
        Fan f = normal_fan(P);
        for (long k : {1L, 2L, 3L}) {
            IntMatrix V = dilate(P, k).vertices();
            IntVector m = random_matrix(rng, 2, 1, -5, 5).col(0);
            V.colwise() += m;
            Fan g = normal_fan(hull(V));
            EXPECT_TRUE(is_refinement(f, g) && is_refinement(g, f));
        }
        for (const RaySet& c : f.maximal_cones())
            EXPECT_EQ(f.cone(c).dim(), 2);
    }
}

TEST(Fan, TorusFan)
{
    Fan t = Fan::make(IntMatrix::Zero(2, 0), {{}}, 2);
    EXPECT_EQ(t.num_rays(), 0);
    EXPECT_TRUE(has_torus_factor(t));
    EXPECT_FALSE(is_complete(t));
    Fan withfactor = product_fan(*fan_p2(), Fan::make(IntMatrix::Zero(1, 0), {{}}, 1));
    EXPECT_EQ(withfactor.ambient_dim(), 3);
    EXPECT_TRUE(has_torus_factor(withfactor));
}

TEST(Fan, InvalidIntersection)
{
    EXPECT_THROW(Fan::make(columns({{1, 0}, {1, 2}, {1, 1}, {0, 1}}), {{0, 1}, {2, 3}}, 2), DomainError);
}

TEST(Fan, NotPointed)
{
    EXPECT_THROW(Fan::make(columns({{1, 0}, {-1, 0}}), {{0, 1}}, 2), DomainError);
}

TEST(Fan, RayIndexOutOfRange)
{
    EXPECT_THROW(Fan::make(columns({{1, 0}}), {{0, 1}}, 2), DomainError);
}

TEST(Fan, HasCone)
{
    FanPtr p = fan_p2();
    const Fan& f = *p;
    EXPECT_TRUE(f.has_cone({0}));
    EXPECT_TRUE(f.has_cone({}));
    EXPECT_TRUE(f.has_cone({1, 2}));
    EXPECT_FALSE(f.has_cone({0, 1, 2}));
    EXPECT_EQ(f.cone_dim({1, 2}), 2);
}

TEST(StarSubdivision, BlowupOfPlane)
{
    Fan bl = star_subdivision(quadrant(), 0);
    EXPECT_EQ(bl.rays(), columns({{1, 0}, {0, 1}, {1, 1}}));
    EXPECT_TRUE(is_refinement(bl, quadrant()));
    EXPECT_TRUE(is_smooth(bl));
    EXPECT_FALSE(is_complete(bl));
}

TEST(StarSubdivision, Orthant)
{
    Fan o = Fan::make(IntMatrix::Identity(3, 3), {{0, 1, 2}}, 3);
    Fan s = star_subdivision(o, 0);
    EXPECT_EQ(s.num_maximal_cones(), 3);
    EXPECT_EQ(IntVector(s.rays().col(3)), int_vector({1, 1, 1}));
    EXPECT_TRUE(is_refinement(s, o));
}

TEST(StarSubdivision, SingularConeRejected)
{
    FanPtr f = fan_singular_quad();
    int singular = -1;
    for (int i = 0; i < f->num_maximal_cones(); ++i)
        if (!f->maximal_cone(i).is_smooth())
            singular = i;
    ASSERT_GE(singular, 0);
    EXPECT_THROW(star_subdivision(*f, singular), DomainError);
}

TEST(StarQuotient, ExceptionalDivisor)
{
    Fan bl = star_subdivision(quadrant(), 0);
    StarQuotient q = star_quotient_fan(bl, {2});
    EXPECT_EQ(q.fan.ambient_dim(), 1);
    EXPECT_TRUE(is_complete(q.fan));
    EXPECT_EQ(q.fan.num_rays(), 2);
}

TEST(StarQuotient, LineInPlane)
{
    EXPECT_TRUE(is_complete(star_quotient_fan(*fan_p2(), {0}).fan));
}

TEST(Product, LinesGiveSquare)
{
    Fan f = product_fan(p1(), p1());
    EXPECT_TRUE(is_refinement(f, *fan_p1p1()) && is_refinement(*fan_p1p1(), f));
    EXPECT_EQ(orbit_table(f).size(), 9u);
}

TEST(Orbits, Counts)
{
    EXPECT_EQ(orbit_table(*fan_p2()).size(), 7u);
    EXPECT_EQ(orbit_table(*fan_p1p1()).size(), 9u);
}

TEST(Orbits, Closure)
{
    auto t = orbit_table(*fan_p2());
    // the dense orbit comes first and its closure is everything
    EXPECT_TRUE(t.front().cone.empty());
    EXPECT_EQ(t.front().orbit_dim, 2);
    EXPECT_EQ(t.front().closure.size(), 7u);
    for (const OrbitEntry& e : t)
        if (e.cone.size() == 2) {
            EXPECT_EQ(e.orbit_dim, 0);
            EXPECT_EQ(e.closure.size(), 1u);
        } else if (e.cone.size() == 1) {
            EXPECT_EQ(e.closure.size(), 3u);
        }
}

TEST(Limits, RelativeInterior)
{
    Fan f = product_fan(p1(), p1());
    auto c = cone_containing_relint(f, int_vector({2, 3}));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(f.cone(*c).dim(), 2);
    auto r = cone_containing_relint(f, int_vector({0, 5}));
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->size(), 1u);
    EXPECT_EQ(cone_containing_relint(f, int_vector({0, 0}))->size(), 0u);
    Fan bl = star_subdivision(quadrant(), 0);
    EXPECT_FALSE(cone_containing_relint(bl, int_vector({-1, 5})).has_value());
}

TEST(Compatibility, HirzebruchProjection)
{
    LatticeMap fx{int_matrix({{1, 0}})}, fy{int_matrix({{0, 1}})};
    EXPECT_TRUE(is_compatible(fx, *fan_hirzebruch(), p1()));
    EXPECT_FALSE(is_compatible(fy, *fan_hirzebruch(), p1()));
}

TEST(Compatibility, BlowdownAndIdentity)
{
    LatticeMap id{IntMatrix::Identity(2, 2)};
    Fan bl = star_subdivision(quadrant(), 0);
    EXPECT_TRUE(is_compatible(id, bl, quadrant()));
    EXPECT_FALSE(is_compatible(id, quadrant(), bl));
    auto img = image_cone(id, quadrant(), bl.cone({0, 2}));
    ASSERT_TRUE(img.has_value());
    EXPECT_EQ(*img, (RaySet{0, 1}));
}

TEST(ChartTransition, ProjectivePlane)
{
    // cones {v2, v3} and {v1, v3}
    ChartTransition t = chart_transition(*fan_p2(), 2, 1);
    EXPECT_EQ(t.source_basis, columns({{-1, 0}, {-1, 1}}));
    EXPECT_EQ(t.target_basis, columns({{0, -1}, {1, -1}}));
    EXPECT_EQ(t.expression, int_matrix({{1, -1}, {0, -1}}));
}

TEST(ChartTransition, SingularQuadrilateral)
{
    ChartTransition t = chart_transition(*fan_singular_quad(), 0, 1);
    EXPECT_EQ(t.m, int_vector({0, 1}));
    EXPECT_EQ(t.source_basis.cols(), 3);
    EXPECT_EQ(t.target_basis.cols(), 3);
    for (int i = 0; i < t.target_basis.cols(); ++i)
        EXPECT_EQ(IntVector(t.source_basis * t.expression.row(i).transpose()), IntVector(t.target_basis.col(i)));
}

TEST(ChartTransition, ExpressionsAreConsistent)
{
    for (const FanPtr& f : {fan_p2(), fan_p1p1(), fan_hirzebruch(), fan_diamond()})
        for (int a = 0; a < f->num_maximal_cones(); ++a)
            for (int b = 0; b < f->num_maximal_cones(); ++b) {
                if (a == b)
                    continue;
                ChartTransition t = chart_transition(*f, a, b);
                for (int i = 0; i < t.target_basis.cols(); ++i)
                    EXPECT_EQ(IntVector(t.source_basis * t.expression.row(i).transpose()),
                              IntVector(t.target_basis.col(i)));
            }
}

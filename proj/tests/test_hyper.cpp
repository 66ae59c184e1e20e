#include <doctest.h>

#include <staircase/hyper.hpp>
#include <staircase/veech.hpp>

#include <cmath>
#include <stdexcept>

using namespace staircase;

namespace {

const double kRootOneFortyThree = std::sqrt(143.0);
const DiskPoint kInPoint = disk_point(9.0 / 14.0, kRootOneFortyThree / 14.0);

} // namespace

TEST_CASE("disk points") {
    const DiskPoint z = disk_point(0.25, 2.0);
    CHECK(z.x == 0.25);
    CHECK(z.y == 2.0);
    CHECK_FALSE(z.exact.has_value());
    CHECK_THROWS_AS(disk_point(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(disk_point(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(disk_point(std::nan(""), 1.0), std::invalid_argument);

    const DiskPoint e = disk_point_exact(BigRat(1, 3), BigRat(5, 4));
    REQUIRE(e.exact.has_value());
    CHECK(e.x == doctest::Approx(1.0 / 3.0));
    CHECK(e.y == 1.25);
    CHECK_THROWS_AS(disk_point_exact(BigRat(0), BigRat(0)), std::invalid_argument);
}

TEST_CASE("geodesic endpoints and geometry") {
    const Geodesic g = geodesic(Slope(1, 1), Slope(-1, 1));
    CHECK(g.a() == Slope(-1, 1));
    CHECK(g.b() == Slope(1, 1));
    CHECK_FALSE(g.is_vertical());
    CHECK(g.center() == 0.0);
    CHECK(g.radius() == 1.0);
    CHECK(g.center_exact() == 0);
    CHECK(g.radius_exact() == 1);
    CHECK(g == geodesic(Slope(-1, 1), Slope(1, 1)));
    CHECK(g.str() == "gamma(-1, 1)");
    CHECK_THROWS_AS(g.foot(), std::logic_error);

    const Geodesic v = geodesic(Slope::infinity(), Slope(3, 1));
    CHECK(v.is_vertical());
    CHECK(v.foot() == Slope(3, 1));
    CHECK(v.a() == Slope(3, 1));
    CHECK(v.b() == Slope::infinity());
    CHECK_THROWS_AS(v.center(), std::logic_error);
    CHECK_THROWS_AS(v.radius(), std::logic_error);

    const Geodesic h = geodesic(Slope(-1, 2), Slope(3, 2));
    CHECK(h.center_exact() == BigRat(1, 2));
    CHECK(h.radius_exact() == 1);

    CHECK_THROWS_AS(geodesic(Slope(1, 2), Slope(1, 2)), std::invalid_argument);
}

TEST_CASE("holonomy lengths") {
    const DiskPoint i = disk_point(0.0, 1.0);
    CHECK(length_l(Slope::infinity(), i) == 1.0);
    CHECK(length_l(Slope::infinity(), disk_point(5.0, 0.1)) == 1.0);
    CHECK(length_l(Slope(0, 1), i) == 1.0);
    CHECK(length_l(Slope(1, 1), i) == doctest::Approx(std::sqrt(2.0)));
    CHECK(length_l(Slope(2, 1), i) == doctest::Approx(std::sqrt(5.0)));
    CHECK(length_l(Slope(-1, 1), kInPoint) == doctest::Approx(std::sqrt(6.0 / 7.0)));
    CHECK(length_l(Slope(1, 1), kInPoint) == doctest::Approx(std::sqrt(24.0 / 7.0)));

    CHECK(length_sq_exact(Slope(-1, 1), RatPoint{BigRat(9, 14), BigRat(1, 14)}) ==
          BigRat(25, 196) + BigRat(1, 196));
}

TEST_CASE("pair functional at the square point") {
    const DiskPoint i = disk_point(0.0, 1.0);
    CHECK(K(Slope(0, 1), Slope::infinity(), i) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(K(Slope(-1, 1), Slope(1, 1), i) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(K(Slope(1, 1), Slope(-1, 1), i) == K(Slope(-1, 1), Slope(1, 1), i));
    CHECK(K(Slope(2, 1), Slope::infinity(), i) == doctest::Approx(1.0 / std::sqrt(5.0)));
    CHECK_THROWS_AS(K(Slope(1, 2), Slope(1, 2), i), std::invalid_argument);
}

TEST_CASE("pair functional at the equidistant point") {
    CHECK(K(Slope(2, 1), Slope(-1, 1), kInPoint) ==
          doctest::Approx(std::sqrt(143.0 / 144.0)).epsilon(1e-13));
    CHECK(K(Slope(0, 1), Slope(-2, 1), kInPoint) ==
          doctest::Approx(std::sqrt(143.0 / 144.0)).epsilon(1e-13));
    CHECK(K(Slope(1, 1), Slope(-1, 1), kInPoint) ==
          doctest::Approx(std::sqrt(143.0 / 144.0)).epsilon(1e-13));
    CHECK(K(Slope(-2, 1), Slope(1, 1), kInPoint) ==
          doctest::Approx(std::sqrt(143.0 / 192.0)).epsilon(1e-13));
}

TEST_CASE("distance to geodesics") {
    const Geodesic unit = geodesic(Slope(-1, 1), Slope(1, 1));
    CHECK(dist_to_geodesic(disk_point(0.0, 1.0), unit) == doctest::Approx(0.0));
    CHECK(sinh_dist_to_geodesic(disk_point(0.0, 2.0), unit) == doctest::Approx(0.75));

    const Geodesic vert = geodesic(Slope(-1, 1), Slope::infinity());
    CHECK(sinh_dist_to_geodesic(disk_point(0.0, 2.0), vert) == doctest::Approx(0.5));
    CHECK(dist_to_geodesic(disk_point(-1.0, 0.37), vert) == doctest::Approx(0.0));

    CHECK(sinh_sq_dist_exact(RatPoint{BigRat(0), BigRat(2)}, unit) == BigRat(9, 16));
}

TEST_CASE("orthogonality locus") {
    CHECK(orthogonality_locus(Slope(1, 1), Slope::infinity()) ==
          geodesic(Slope(-1, 1), Slope::infinity()));
    CHECK(orthogonality_locus(Slope(-2, 1), Slope(1, 1)) ==
          geodesic(Slope(2, 1), Slope(-1, 1)));
    CHECK(orthogonality_locus(Slope(3, 7), Slope(0, 1)) ==
          geodesic(Slope(-3, 7), Slope(0, 1)));
}

TEST_CASE("sech of the distance reproduces the pair functional") {
    const Slope slopes[] = {Slope(0, 1),  Slope(1, 1),  Slope(-1, 1), Slope(1, 2),
                            Slope(-3, 2), Slope(5, 3),  Slope(-7, 4), Slope(2, 1),
                            Slope(9, 5),  Slope::infinity()};
    const DiskPoint pts[] = {disk_point(0.0, 1.0), disk_point(0.3, 0.7),
                             disk_point(-1.2, 2.5), kInPoint, disk_point(4.0, 0.05)};
    for (const auto& r : slopes)
        for (const auto& rp : slopes) {
            if (r == rp) continue;
            for (const auto& z : pts)
                CHECK(K(r, rp, z) ==
                      doctest::Approx(K_via_distance(r, rp, z)).epsilon(1e-12));
        }
}

TEST_CASE("group action transports the pair functional") {
    const Slope slopes[] = {Slope(0, 1), Slope(1, 1),  Slope(-1, 1), Slope(1, 2),
                            Slope(5, 3), Slope(-7, 4), Slope(2, 1),  Slope::infinity()};
    const DiskPoint pts[] = {disk_point(0.0, 1.0), disk_point(0.3, 0.7),
                             disk_point(-1.2, 2.5), kInPoint};
    // For each generator g: K(r, rp, g z) = K(g r, g rp, z).
    for (const GroupElement& g : {gen_T(), gen_R()})
        for (const auto& r : slopes)
            for (const auto& rp : slopes) {
                if (r == rp) continue;
                for (const auto& z : pts)
                    CHECK(K(r, rp, act_on_point(g, z)) ==
                          doctest::Approx(K(act_on_slope(g, r), act_on_slope(g, rp), z))
                              .epsilon(1e-12));
            }
    // Composite words transport the point by the mirror conjugate (negated
    // off-diagonal entries): K peaks on gamma(-r, -rp), and mirroring turns
    // T into T^-1 while fixing R.
    const GroupElement words[] = {mul(gen_T(), gen_R()), mul(gen_R(), t_power(-2)),
                                  mul(mul(gen_T(), gen_R()), gen_T())};
    for (const GroupElement& g : words) {
        const GroupElement m{g.a, -g.b, -g.c, g.d, g.word};
        for (const auto& r : slopes)
            for (const auto& rp : slopes) {
                if (r == rp) continue;
                for (const auto& z : pts)
                    CHECK(K(act_on_slope(g, r), act_on_slope(g, rp), act_on_point(m, z)) ==
                          doctest::Approx(K(r, rp, z)).epsilon(1e-12));
            }
    }
}

TEST_CASE("exact form of the distance identity") {
    // K^2 (1 + sinh^2 d) = 1 as an identity of rational functions.
    const RatPoint pts[] = {{BigRat(1, 3), BigRat(5, 4)},
                            {BigRat(-7, 5), BigRat(2, 9)},
                            {BigRat(9, 14), BigRat(11, 14)}};
    const Slope slopes[] = {Slope(0, 1), Slope(1, 1), Slope(-1, 2), Slope(5, 3),
                            Slope::infinity()};
    for (const auto& r : slopes)
        for (const auto& rp : slopes) {
            if (r == rp) continue;
            for (const auto& z : pts) {
                const BigRat lhs = k_sq_exact(r, rp, z) *
                                   (1 + sinh_sq_dist_exact(z, orthogonality_locus(r, rp)));
                CHECK(lhs == 1);
            }
        }
}

TEST_CASE("horodisk functional") {
    const DiskPoint i = disk_point(0.0, 1.0);
    CHECK(J(Slope::infinity(), i) == 1.0);
    CHECK(J(Slope::infinity(), disk_point(3.0, 2.5)) == 2.5);
    CHECK(J(Slope(1, 1), i) == doctest::Approx(0.5));
    CHECK(J(Slope(-1, 1), kInPoint) == doctest::Approx(kRootOneFortyThree / 12.0));
    CHECK(J(Slope(1, 1), kInPoint) == doctest::Approx(kRootOneFortyThree / 48.0));

    // J(-1) > 1 cuts out the horodisk tangent at +1
    CHECK(in_horodisk(Slope(-1, 1), disk_point(1.0, 0.4)));
    CHECK_FALSE(in_horodisk(Slope(-1, 1), disk_point(1.0, 1.0)));  // boundary
    CHECK_FALSE(in_horodisk(Slope(-1, 1), i));
    CHECK(in_horodisk(Slope(1, 1), disk_point(-1.0, 0.4)));
    CHECK_FALSE(in_horodisk(Slope(1, 1), disk_point(1.0, 0.4)));

    CHECK(in_horodisk_exact(Slope(-1, 1), RatPoint{BigRat(1), BigRat(1, 2)}));
    CHECK_FALSE(in_horodisk_exact(Slope(-1, 1), RatPoint{BigRat(1), BigRat(1)}));
    CHECK(j_exact(Slope(-1, 1), RatPoint{BigRat(1), BigRat(1)}) == 1);
}

TEST_CASE("band boundary circles") {
    const auto [lower, upper] = banana_circles(1);
    CHECK(lower.cx == doctest::Approx(0.0));
    CHECK(lower.cy == doctest::Approx(-1.0 / kRootOneFortyThree));
    CHECK(lower.radius == doctest::Approx(12.0 / kRootOneFortyThree));
    CHECK(upper.cx == doctest::Approx(0.0));
    CHECK(upper.cy == doctest::Approx(1.0 / kRootOneFortyThree));
    CHECK(upper.radius == doctest::Approx(12.0 / kRootOneFortyThree));

    const auto [lo11, up11] = banana_circles(11);
    CHECK(lo11.cx == doctest::Approx(-5.0));
    CHECK(up11.cy == doctest::Approx(6.0 / kRootOneFortyThree));
    CHECK(up11.radius == doctest::Approx(72.0 / kRootOneFortyThree));

    CHECK_THROWS_AS(banana_circles(0), std::invalid_argument);
}

TEST_CASE("band boundary sits at the threshold distance") {
    for (int n : {1, 3, 7}) {
        const Geodesic axis = geodesic(Slope(-n, 1), Slope(1, 1));
        const auto [lower, upper] = banana_circles(n);
        for (const Circle& c : {lower, upper}) {
            for (int k = 0; k < 100; ++k) {
                const double t = 2.0 * M_PI * k / 100.0;
                const double x = c.cx + c.radius * std::cos(t);
                const double y = c.cy + c.radius * std::sin(t);
                if (y < 1e-6) continue;
                const DiskPoint z = disk_point(x, y);
                CHECK(sinh_dist_to_geodesic(z, axis) ==
                      doctest::Approx(1.0 / kRootOneFortyThree).epsilon(1e-10));
                CHECK(1.0 / std::cosh(dist_to_geodesic(z, axis)) ==
                      doctest::Approx(banana_threshold_sech()).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("geodesic intersections") {
    const auto p1 = geodesic_intersection(geodesic(Slope(-1, 1), Slope(1, 1)),
                                          geodesic(Slope(0, 1), Slope::infinity()));
    REQUIRE(p1.has_value());
    CHECK(p1->x == doctest::Approx(0.0));
    CHECK(p1->y == doctest::Approx(1.0));

    const auto p2 = geodesic_intersection(geodesic(Slope(0, 1), Slope(2, 1)),
                                          geodesic(Slope(-2, 1), Slope(1, 1)));
    REQUIRE(p2.has_value());
    CHECK(p2->x == doctest::Approx(2.0 / 3.0));
    CHECK(p2->y == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0));

    // tangency on the boundary is not a proper intersection
    CHECK_FALSE(geodesic_intersection(geodesic(Slope(-1, 1), Slope(1, 1)),
                                      geodesic(Slope(1, 1), Slope(3, 1))));
    CHECK_FALSE(geodesic_intersection(geodesic(Slope(0, 1), Slope(1, 1)),
                                      geodesic(Slope(3, 1), Slope(5, 1))));
    CHECK_FALSE(geodesic_intersection(geodesic(Slope(0, 1), Slope::infinity()),
                                      geodesic(Slope(1, 1), Slope(2, 1))));
    CHECK_FALSE(geodesic_intersection(geodesic(Slope(0, 1), Slope::infinity()),
                                      geodesic(Slope(1, 1), Slope::infinity())));
    CHECK_FALSE(geodesic_intersection(geodesic(Slope(-1, 1), Slope(1, 1)),
                                      geodesic(Slope(-1, 1), Slope(1, 1))));
}

TEST_CASE("equidistant point of three geodesics") {
    const DiskPoint k = incenter(geodesic(Slope(-1, 1), Slope(1, 1)),
                                 geodesic(Slope(-2, 1), Slope(1, 1)),
                                 geodesic(Slope(0, 1), Slope(2, 1)));
    CHECK(k.x == doctest::Approx(9.0 / 14.0).epsilon(1e-9));
    CHECK(k.y == doctest::Approx(kRootOneFortyThree / 14.0).epsilon(1e-9));

    const DiskPoint sym = incenter(geodesic(Slope(-1, 1), Slope(1, 1)),
                                   geodesic(Slope(-1, 1), Slope::infinity()),
                                   geodesic(Slope(1, 1), Slope::infinity()));
    CHECK(sym.x == doctest::Approx(0.0));
    CHECK(sym.y == doctest::Approx(std::sqrt(3.0)));

    CHECK_THROWS_AS(incenter(geodesic(Slope(-1, 1), Slope(1, 1)),
                             geodesic(Slope(-1, 1), Slope(1, 1)),
                             geodesic(Slope(0, 1), Slope(2, 1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(incenter(geodesic(Slope(0, 1), Slope::infinity()),
                             geodesic(Slope(1, 1), Slope::infinity()),
                             geodesic(Slope(2, 1), Slope::infinity())),
                    std::runtime_error);
}

#pragma once

#include <staircase/rational.hpp>

#include <optional>
#include <string>
#include <utility>

namespace staircase {

struct RatPoint {
    BigRat x, y;
};

// Point of the upper half plane, optionally carrying exact coordinates.
struct DiskPoint {
    double x = 0.0;
    double y = 1.0;
    std::optional<RatPoint> exact;
};

DiskPoint disk_point(double x, double y);
DiskPoint disk_point_exact(const BigRat& x, const BigRat& y);

// Geodesic of the upper half plane with endpoints in Q union {inf}:
// a vertical line when one endpoint is inf, otherwise a semicircle.
class Geodesic {
public:
    Geodesic(const Slope& u, const Slope& v);

    bool is_vertical() const { return u_.is_infinite() || v_.is_infinite(); }
    // Endpoints in increasing projective order (inf last).
    const Slope& a() const { return u_; }
    const Slope& b() const { return v_; }
    Slope foot() const;  // finite endpoint of a vertical

    double center() const;
    double radius() const;
    BigRat center_exact() const;
    BigRat radius_exact() const;

    std::string str() const;
    friend bool operator==(const Geodesic&, const Geodesic&) = default;

private:
    Slope u_, v_;
};

Geodesic geodesic(const Slope& u, const Slope& v);

// Flat length of the holonomy vector of slope r = p/q over the point
// (x, y) of the Teichmueller disk: sqrt((p + qx)^2 + (qy)^2).
double length_l(const Slope& r, const DiskPoint& z);

// K(r, r')(z) = y |p q' - p' q| / (l_r(z) l_r'(z)), in [0, 1].
double K(const Slope& r, const Slope& rp, const DiskPoint& z);

double dist_to_geodesic(const DiskPoint& z, const Geodesic& g);
double sinh_dist_to_geodesic(const DiskPoint& z, const Geodesic& g);

// K(r, r')(z) equals sech of the distance from z to the geodesic with
// endpoints -r and -r' (where the two holonomy vectors look orthogonal).
Geodesic orthogonality_locus(const Slope& r, const Slope& rp);
double K_via_distance(const Slope& r, const Slope& rp, const DiskPoint& z);

// J(r)(z) = y / l_r(z)^2; J > 1 cuts out a horodisk tangent at -r.
double J(const Slope& r, const DiskPoint& z);
bool in_horodisk(const Slope& r, const DiskPoint& z);

struct Circle {
    double cx, cy, radius;
};

// The two circular arcs bounding the band of points at sinh-distance
// 1/sqrt(143) from gamma(-n, 1): first the arc whose circle has center
// below the real axis (the lower boundary), then its mirror (the upper).
std::pair<Circle, Circle> banana_circles(int n);

// Proper intersection point of two geodesics in the open half plane.
std::optional<DiskPoint> geodesic_intersection(const Geodesic& g1, const Geodesic& g2);

// Point equidistant from three geodesics (Newton iteration); throws if no
// such point exists in the half plane.
DiskPoint incenter(const Geodesic& g1, const Geodesic& g2, const Geodesic& g3);

// Exact rational evaluations for membership tests on rational points.
BigRat length_sq_exact(const Slope& r, const RatPoint& z);
BigRat k_sq_exact(const Slope& r, const Slope& rp, const RatPoint& z);
BigRat sinh_sq_dist_exact(const RatPoint& z, const Geodesic& g);
BigRat j_exact(const Slope& r, const RatPoint& z);
bool in_horodisk_exact(const Slope& r, const RatPoint& z);

// sech of the banana half-width: sqrt(143/144).
double banana_threshold_sech();

} // namespace staircase

#include <staircase/hyper.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace staircase {

DiskPoint disk_point(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y) || y <= 0.0)
        throw std::invalid_argument("disk point needs finite coordinates with y > 0");
    return {x, y, std::nullopt};
}

DiskPoint disk_point_exact(const BigRat& x, const BigRat& y) {
    if (y <= 0) throw std::invalid_argument("disk point needs y > 0");
    DiskPoint z;
    z.x = x.convert_to<double>();
    z.y = y.convert_to<double>();
    z.exact = RatPoint{x, y};
    return z;
}

Geodesic::Geodesic(const Slope& u, const Slope& v) : u_(u), v_(v) {
    if (u == v) throw std::invalid_argument("geodesic needs two distinct endpoints");
    if (v_ < u_) std::swap(u_, v_);
}

Slope Geodesic::foot() const {
    if (!is_vertical()) throw std::logic_error("foot of a non-vertical geodesic");
    return u_;
}

double Geodesic::center() const {
    if (is_vertical()) throw std::logic_error("vertical geodesic has no center");
    return 0.5 * (u_.to_double() + v_.to_double());
}

double Geodesic::radius() const {
    if (is_vertical()) throw std::logic_error("vertical geodesic has no radius");
    return 0.5 * (v_.to_double() - u_.to_double());
}

BigRat Geodesic::center_exact() const {
    if (is_vertical()) throw std::logic_error("vertical geodesic has no center");
    return (u_.to_rat() + v_.to_rat()) / 2;
}

BigRat Geodesic::radius_exact() const {
    if (is_vertical()) throw std::logic_error("vertical geodesic has no radius");
    return (v_.to_rat() - u_.to_rat()) / 2;
}

std::string Geodesic::str() const {
    return "gamma(" + u_.str() + ", " + v_.str() + ")";
}

Geodesic geodesic(const Slope& u, const Slope& v) { return Geodesic(u, v); }

double length_l(const Slope& r, const DiskPoint& z) {
    const double p = static_cast<double>(r.num());
    const double q = static_cast<double>(r.den());
    return std::hypot(p + q * z.x, q * z.y);
}

double K(const Slope& r, const Slope& rp, const DiskPoint& z) {
    if (r == rp) throw std::invalid_argument("K needs two distinct slopes");
    const double det = static_cast<double>(r.num()) * static_cast<double>(rp.den()) -
                       static_cast<double>(rp.num()) * static_cast<double>(r.den());
    return z.y * std::abs(det) / (length_l(r, z) * length_l(rp, z));
}

double sinh_dist_to_geodesic(const DiskPoint& z, const Geodesic& g) {
    if (g.is_vertical()) return std::abs(z.x - g.foot().to_double()) / z.y;
    const double c = g.center();
    const double rho = g.radius();
    const double dx = z.x - c;
    return std::abs(dx * dx + z.y * z.y - rho * rho) / (2.0 * rho * z.y);
}

double dist_to_geodesic(const DiskPoint& z, const Geodesic& g) {
    return std::asinh(sinh_dist_to_geodesic(z, g));
}

Geodesic orthogonality_locus(const Slope& r, const Slope& rp) {
    return geodesic(r.negated(), rp.negated());
}

double K_via_distance(const Slope& r, const Slope& rp, const DiskPoint& z) {
    const double s = sinh_dist_to_geodesic(z, orthogonality_locus(r, rp));
    return 1.0 / std::sqrt(1.0 + s * s);
}

double J(const Slope& r, const DiskPoint& z) {
    const double p = static_cast<double>(r.num());
    const double q = static_cast<double>(r.den());
    const double u = p + q * z.x;
    const double v = q * z.y;
    return z.y / (u * u + v * v);
}

bool in_horodisk(const Slope& r, const DiskPoint& z) { return J(r, z) > 1.0; }

std::pair<Circle, Circle> banana_circles(int n) {
    if (n < 1) throw std::invalid_argument("banana index must be >= 1");
    const double s143 = std::sqrt(143.0);
    const double cx = 0.5 * (1.0 - n);
    const double cy = (1.0 + n) / (2.0 * s143);
    const double radius = 0.5 * (1.0 + n) * (12.0 / s143);
    return {Circle{cx, -cy, radius}, Circle{cx, cy, radius}};
}

namespace {

// Intersection in the closed half plane (y >= 0), used for seeding the
// incenter iteration; tangencies on the boundary are allowed here.
std::optional<std::pair<double, double>> closure_intersection(const Geodesic& g1,
                                                              const Geodesic& g2) {
    if (g1 == g2) return std::nullopt;
    if (g1.is_vertical() && g2.is_vertical()) return std::nullopt;
    if (g1.is_vertical() || g2.is_vertical()) {
        const Geodesic& vert = g1.is_vertical() ? g1 : g2;
        const Geodesic& circ = g1.is_vertical() ? g2 : g1;
        const double x = vert.foot().to_double();
        const double dx = x - circ.center();
        const double y2 = circ.radius() * circ.radius() - dx * dx;
        if (y2 < 0.0) return std::nullopt;
        return std::make_pair(x, std::sqrt(std::max(0.0, y2)));
    }
    const double m1 = g1.center(), r1 = g1.radius();
    const double m2 = g2.center(), r2 = g2.radius();
    if (m1 == m2) return std::nullopt;
    const double x = (r1 * r1 - r2 * r2 + m2 * m2 - m1 * m1) / (2.0 * (m2 - m1));
    const double y2 = r1 * r1 - (x - m1) * (x - m1);
    if (y2 < 0.0) return std::nullopt;
    return std::make_pair(x, std::sqrt(std::max(0.0, y2)));
}

} // namespace

std::optional<DiskPoint> geodesic_intersection(const Geodesic& g1, const Geodesic& g2) {
    auto pt = closure_intersection(g1, g2);
    if (!pt || pt->second <= 0.0) return std::nullopt;
    return disk_point(pt->first, pt->second);
}

namespace {

// Sinh of the distance with a side sign: positive outside the semicircle
// (or right of a vertical), negative on the other side.
double side_sinh(double x, double y, const Geodesic& g) {
    if (g.is_vertical()) return (x - g.foot().to_double()) / y;
    const double dx = x - g.center();
    const double rho = g.radius();
    return (dx * dx + y * y - rho * rho) / (2.0 * rho * y);
}

// Limit sign of side_sinh at a boundary point: a semicircle separates the
// points between its feet from the rest of the real line.
double boundary_side(double x, const Geodesic& g) {
    if (g.is_vertical()) {
        const double f = g.foot().to_double();
        return x > f ? 1.0 : (x < f ? -1.0 : 0.0);
    }
    const double t = (x - g.center()) * (x - g.center()) - g.radius() * g.radius();
    return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
}

} // namespace

DiskPoint incenter(const Geodesic& g1, const Geodesic& g2, const Geodesic& g3) {
    if (g1 == g2 || g2 == g3 || g1 == g3)
        throw std::invalid_argument("incenter needs three distinct geodesics");

    const Geodesic* gs[3] = {&g1, &g2, &g3};

    // Vertex opposite each side, possibly on the boundary (shared endpoint).
    // With all three vertices present the sides bound a triangle, and the
    // sign of each side function on the interior is the sign at the
    // opposite vertex; fixing those signs removes the excenter roots.
    std::optional<std::pair<double, double>> verts[3] = {
        closure_intersection(g2, g3), closure_intersection(g1, g3),
        closure_intersection(g1, g2)};
    bool triangle = verts[0] && verts[1] && verts[2];
    double sign[3] = {1.0, 1.0, 1.0};
    for (int i = 0; i < 3 && triangle; ++i) {
        const auto [vx, vy] = *verts[i];
        const double s = vy > 1e-12 ? side_sinh(vx, vy, *gs[i]) : boundary_side(vx, *gs[i]);
        if (s == 0.0) {
            // All three sides meet in one point: it is the equidistant point.
            if (vy > 0.0) return disk_point(vx, vy);
            triangle = false;
        } else {
            sign[i] = s > 0.0 ? 1.0 : -1.0;
        }
    }

    auto residual = [&](double x, double y, double f[2]) {
        const DiskPoint z{x, y, std::nullopt};
        double t1, t2, t3;
        if (triangle) {
            t1 = sign[0] * side_sinh(x, y, g1);
            t2 = sign[1] * side_sinh(x, y, g2);
            t3 = sign[2] * side_sinh(x, y, g3);
        } else {
            t1 = dist_to_geodesic(z, g1);
            t2 = dist_to_geodesic(z, g2);
            t3 = dist_to_geodesic(z, g3);
        }
        f[0] = t1 - t2;
        f[1] = t2 - t3;
        return std::max(std::abs(f[0]), std::abs(f[1]));
    };

    std::vector<std::pair<double, double>> seeds;
    {
        double sx = 0.0, sy = 0.0;
        int cnt = 0;
        for (const auto& pt : verts) {
            if (pt) {
                sx += pt->first;
                sy += pt->second;
                ++cnt;
            }
        }
        if (cnt > 0) seeds.emplace_back(sx / cnt, std::max(sy / cnt, 0.05));
    }
    seeds.insert(seeds.end(), {{0.7, 0.7}, {0.5, 0.9}, {0.0, 1.2}, {0.3, 0.6},
                               {-0.5, 0.9}, {0.9, 0.4}, {0.0, 2.0}});

    for (auto [x, y] : seeds) {
        double f[2];
        double norm = residual(x, y, f);
        bool stuck = false;
        for (int it = 0; it < 200 && norm > 1e-14 && !stuck; ++it) {
            const double h = 1e-7 * std::max({1.0, std::abs(x), y});
            double fp[2], fm[2];
            residual(x + h, y, fp);
            residual(x - h, y, fm);
            const double j00 = (fp[0] - fm[0]) / (2 * h), j10 = (fp[1] - fm[1]) / (2 * h);
            const double ylo = std::max(y - h, y * 0.5);
            residual(x, y + h, fp);
            residual(x, ylo, fm);
            const double span = (y + h) - ylo;
            const double j01 = (fp[0] - fm[0]) / span, j11 = (fp[1] - fm[1]) / span;
            const double det = j00 * j11 - j01 * j10;
            if (std::abs(det) < 1e-18) { stuck = true; break; }
            const double dx = (f[0] * j11 - f[1] * j01) / det;
            const double dy = (j00 * f[1] - j10 * f[0]) / det;
            double lambda = 1.0;
            bool accepted = false;
            while (lambda > 1.0 / 4096.0) {
                const double nx = x - lambda * dx;
                const double ny = y - lambda * dy;
                if (ny > 1e-12) {
                    double nf[2];
                    const double nn = residual(nx, ny, nf);
                    if (nn < norm) {
                        x = nx; y = ny; f[0] = nf[0]; f[1] = nf[1]; norm = nn;
                        accepted = true;
                        break;
                    }
                }
                lambda *= 0.5;
            }
            if (!accepted) stuck = true;
        }
        if (norm <= 1e-12) {
            // In triangle mode reject the mirror root where the common
            // signed value is negative (a point outside every side).
            if (triangle && sign[0] * side_sinh(x, y, g1) <= 0.0) continue;
            return disk_point(x, y);
        }
    }
    throw std::runtime_error("incenter iteration did not converge");
}

BigRat length_sq_exact(const Slope& r, const RatPoint& z) {
    const BigRat u = BigRat(r.num()) + BigRat(r.den()) * z.x;
    const BigRat v = BigRat(r.den()) * z.y;
    return u * u + v * v;
}

BigRat k_sq_exact(const Slope& r, const Slope& rp, const RatPoint& z) {
    if (r == rp) throw std::invalid_argument("K needs two distinct slopes");
    const BigInt det = BigInt(r.num()) * rp.den() - BigInt(rp.num()) * r.den();
    return z.y * z.y * BigRat(det * det) / (length_sq_exact(r, z) * length_sq_exact(rp, z));
}

BigRat sinh_sq_dist_exact(const RatPoint& z, const Geodesic& g) {
    if (g.is_vertical()) {
        const BigRat d = (z.x - g.foot().to_rat()) / z.y;
        return d * d;
    }
    const BigRat c = g.center_exact();
    const BigRat rho = g.radius_exact();
    const BigRat dx = z.x - c;
    const BigRat num = dx * dx + z.y * z.y - rho * rho;
    return num * num / (4 * rho * rho * z.y * z.y);
}

BigRat j_exact(const Slope& r, const RatPoint& z) {
    return z.y / length_sq_exact(r, z);
}

bool in_horodisk_exact(const Slope& r, const RatPoint& z) {
    return j_exact(r, z) > 1;
}

double banana_threshold_sech() { return std::sqrt(143.0 / 144.0); }

} // namespace staircase

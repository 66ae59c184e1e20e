#include <staircase/veech.hpp>

#include <staircase/saddle.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace staircase {

GroupElement identity_element() { return {}; }

GroupElement gen_T() { return {1, 2, 0, 1, "T"}; }

GroupElement gen_R() { return {0, -1, 1, 0, "R"}; }

GroupElement t_power(long long k) {
    GroupElement g{1, 2 * k, 0, 1, ""};
    if (k == 1) g.word = "T";
    else if (k == -1) g.word = "T^-1";
    else if (k != 0) g.word = "T^" + std::to_string(k);
    return g;
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    GroupElement out;
    out.a = g.a * h.a + g.b * h.c;
    out.b = g.a * h.b + g.b * h.d;
    out.c = g.c * h.a + g.d * h.c;
    out.d = g.c * h.b + g.d * h.d;
    if (g.word.empty()) out.word = h.word;
    else if (h.word.empty()) out.word = g.word;
    else out.word = g.word + " " + h.word;
    return out;
}

GroupElement inverse(const GroupElement& g) {
    if (g.det() != 1) throw std::invalid_argument("inverse needs determinant one");
    GroupElement out{g.d, -g.b, -g.c, g.a, ""};
    if (!g.word.empty()) out.word = "(" + g.word + ")^-1";
    return out;
}

bool is_member(const GroupElement& g) {
    if (g.det() != 1) return false;
    const bool pa = g.a & 1, pb = g.b & 1, pc = g.c & 1, pd = g.d & 1;
    return (pa && pd && !pb && !pc) || (!pa && !pd && pb && pc);
}

Slope act_on_slope(const GroupElement& g, const Slope& r) {
    return Slope(g.a * r.num() + g.b * r.den(), g.c * r.num() + g.d * r.den());
}

DiskPoint act_on_point(const GroupElement& g, const DiskPoint& z) {
    if (g.det() != 1) throw std::invalid_argument("point action needs determinant one");
    if (z.exact) {
        const BigRat x = z.exact->x, y = z.exact->y;
        const BigRat cu = g.c * x + g.d;
        const BigRat cv = g.c * y;
        const BigRat den = cu * cu + cv * cv;
        const BigRat nx = ((g.a * x + g.b) * cu + g.a * g.c * y * y) / den;
        const BigRat ny = y / den;
        return disk_point_exact(nx, ny);
    }
    const double cu = g.c * z.x + g.d;
    const double cv = g.c * z.y;
    const double den = cu * cu + cv * cv;
    const double nx = ((g.a * z.x + g.b) * cu + g.a * g.c * z.y * z.y) / den;
    const double ny = z.y / den;
    return disk_point(nx, ny);
}

SlopeClass orbit_class(long long p, long long q) {
    if (std::gcd(std::llabs(p), std::llabs(q)) != 1)
        throw std::invalid_argument("orbit class needs a primitive vector");
    return ((p & 1) && (q & 1)) ? SlopeClass::Odd : SlopeClass::Even;
}

SlopeClass orbit_class(const Slope& r) { return orbit_class(r.num(), r.den()); }

namespace {

BigInt rat_floor(const BigRat& v) {
    BigInt n = boost::multiprecision::numerator(v);
    BigInt d = boost::multiprecision::denominator(v);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

std::pair<DiskPoint, GroupElement> reduce_exact(const RatPoint& z0) {
    BigRat x = z0.x, y = z0.y;
    GroupElement g = identity_element();
    for (int iter = 0; iter < 100000; ++iter) {
        BigInt kk = rat_floor((x + 1) / 2);
        if (x - 2 * BigRat(kk) == -1) --kk;
        const long long k = kk.convert_to<long long>();
        if (k != 0) {
            x -= 2 * k;
            g = mul(t_power(-k), g);
        }
        const BigRat norm = x * x + y * y;
        if (norm < 1) {
            const BigRat nx = -x / norm;
            y = y / norm;
            x = nx;
            g = mul(gen_R(), g);
            continue;
        }
        if (norm == 1 && x < 0) {
            x = -x;
            g = mul(gen_R(), g);
        }
        if (x == -1) {
            x = 1;
            g = mul(t_power(1), g);
        }
        return {disk_point_exact(x, y), g};
    }
    throw std::runtime_error("fundamental domain reduction did not terminate");
}

std::pair<DiskPoint, GroupElement> reduce_float(double x, double y) {
    GroupElement g = identity_element();
    for (int iter = 0; iter < 100000; ++iter) {
        double k = std::floor((x + 1.0) / 2.0);
        if (x - 2.0 * k == -1.0) k -= 1.0;
        if (k != 0.0) {
            x -= 2.0 * k;
            g = mul(t_power(-static_cast<long long>(k)), g);
        }
        const double norm = x * x + y * y;
        if (norm < 1.0) {
            const double nx = -x / norm;
            y = y / norm;
            x = nx;
            g = mul(gen_R(), g);
            continue;
        }
        if (norm == 1.0 && x < 0.0) {
            x = -x;
            g = mul(gen_R(), g);
        }
        if (x == -1.0) {
            x = 1.0;
            g = mul(t_power(1), g);
        }
        return {disk_point(x, y), g};
    }
    throw std::runtime_error("fundamental domain reduction did not terminate");
}

} // namespace

std::pair<DiskPoint, GroupElement> reduce_to_fundamental_domain(const DiskPoint& z) {
    if (z.exact) return reduce_exact(*z.exact);
    return reduce_float(z.x, z.y);
}

GroupElement slope_to_cusp(const Slope& r) {
    GroupElement v = identity_element();
    Slope cur = r;
    for (int iter = 0; iter < 128; ++iter) {
        if (cur.is_infinite()) return v;
        if (cur.den() == 1) {
            const long long m = cur.num();
            if (m % 2 == 0) return mul(gen_R(), mul(t_power(-m / 2), v));
            return mul(t_power(-(m - 1) / 2), v);
        }
        // Shift the numerator into (-q, q], then invert to shrink q.
        const long long p = cur.num(), q = cur.den();
        long long pp = p % (2 * q);
        if (pp <= -q) pp += 2 * q;
        if (pp > q) pp -= 2 * q;
        const long long k = (pp - p) / (2 * q);
        if (k != 0) {
            v = mul(t_power(k), v);
            cur = cur.shifted(2 * k);
        }
        v = mul(gen_R(), v);
        cur = cur.inverted_neg();
    }
    throw std::runtime_error("cusp normalization did not terminate");
}

bool is_end_of_Z(int s, const Slope& r, const Slope& rp) {
    if (r == rp) throw std::invalid_argument("endpoint test needs distinct slopes");
    return intersection_ratio(s, r, rp).value == 1;
}

bool is_end_of_Z_group(const Slope& r, const Slope& rp) {
    if (r == rp) throw std::invalid_argument("endpoint test needs distinct slopes");
    const GroupElement v = slope_to_cusp(r);
    const Slope c = act_on_slope(v, r);
    const Slope x = act_on_slope(v, rp);
    if (c.is_infinite()) {
        // Pair (inf, x): in the orbit iff x is an integer or x mod 2 has
        // numerator +-1.
        if (x.den() == 1) return true;
        const long long q = x.den();
        long long pp = x.num() % (2 * q);
        if (pp <= -q) pp += 2 * q;
        if (pp > q) pp -= 2 * q;
        return pp == 1 || pp == -1;
    }
    // Pair (1, x): substitute u = 1/(1 - x); the parabolic moves fixing 1
    // translate u by integers, and the integer targets become
    // {0} U {1/k}, i.e. classes 0, 1/b, (b-1)/b mod 1.
    Slope u = x.is_infinite() ? Slope(0, 1) : Slope(x.den(), x.den() - x.num());
    const long long b = u.den();
    const long long a = ((u.num() % b) + b) % b;
    return a == 0 || a == 1 || a == b - 1;
}

} // namespace staircase

#pragma once

#include <staircase/hyper.hpp>
#include <staircase/rational.hpp>

#include <string>
#include <utility>

namespace staircase {

// Element of SL(2, Z), carrying the generator word that produced it
// (tokens over T, T^-1, R; empty word for the identity).
struct GroupElement {
    long long a = 1, b = 0;
    long long c = 0, d = 1;
    std::string word;

    long long det() const { return a * d - b * c; }
};

GroupElement identity_element();
GroupElement gen_T();  // [[1, 2], [0, 1]]
GroupElement gen_R();  // [[0, -1], [1, 0]]
GroupElement t_power(long long k);
GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// The lattice generated by T and R: determinant one, congruent mod 2 to
// the identity or to the antidiagonal matrix.
bool is_member(const GroupElement& g);

Slope act_on_slope(const GroupElement& g, const Slope& r);
DiskPoint act_on_point(const GroupElement& g, const DiskPoint& z);

// Primitive vectors fall in two lattice orbits: p, q both odd (cusp 1)
// or of opposite parity (cusp inf).
enum class SlopeClass { Even, Odd };
SlopeClass orbit_class(long long p, long long q);
SlopeClass orbit_class(const Slope& r);

// Moves z into the fundamental domain |x| <= 1, x^2 + y^2 >= 1, returning
// the image and the element g with g(z) = image. Boundary ties resolve
// toward x >= 0.
std::pair<DiskPoint, GroupElement> reduce_to_fundamental_domain(const DiskPoint& z);

// An element sending r to its cusp representative: inf for the even
// class, 1 for the odd class.
GroupElement slope_to_cusp(const Slope& r);

// Whether the geodesic with endpoints r, rp lies in the lattice orbit of
// the integer-endpoint geodesics. Primary test: intersection ratio == 1.
bool is_end_of_Z(int s, const Slope& r, const Slope& rp);
// Closed-form test on cusp-normalized coordinates; never builds traces.
bool is_end_of_Z_group(const Slope& r, const Slope& rp);

} // namespace staircase

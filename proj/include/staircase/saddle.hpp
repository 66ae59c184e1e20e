#pragma once

#include <staircase/origami.hpp>
#include <staircase/rational.hpp>

#include <utility>
#include <vector>

namespace staircase {

// Primitive direction vector. Canonical form: gcd(|p|, q) = 1 with q > 0,
// or the horizontal direction (1, 0).
struct Direction {
    long long p = 1;
    long long q = 0;
    friend bool operator==(const Direction&, const Direction&) = default;
    std::string str() const;
};

Direction make_direction(long long p, long long q);
bool is_canonical(const Direction& d);

// Slope r = p/q names the direction (p, q); r = inf is horizontal and
// r = 0 is vertical.
Direction direction_of_slope(const Slope& r);
Slope slope_of_direction(const Direction& d);

enum class EdgeKind { Right, Top };

// One square-boundary crossing along a trace: the edge kind that was
// crossed and the square the trajectory entered.
struct Crossing {
    EdgeKind kind;
    int square;
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct SaddleConnection {
    Direction direction;
    int start_square = 0;
    std::vector<Crossing> crossings;
    HomologyClass homology;
};

// Traces the 2s-1 saddle connections of a primitive direction, one per
// start square. Each connection runs from corner to corner over exactly
// one torus period.
std::vector<SaddleConnection> trace_direction(const StaircaseSurface& sf, const Direction& d);

// Recomputes the homology class of a recorded trace, failing if the
// crossing list is not the one the straight-line flow generates.
HomologyClass homology_of_trace(const StaircaseSurface& sf, const Direction& d,
                                int start_square, const std::vector<Crossing>& crossings);

// I(r, r') = max_{i,j} |<h_i, h'_j>| / |p q' - p' q| over the two trace
// families. witness is the first (start, start') pair attaining the max.
struct IntersectionRatio {
    BigRat value;
    std::pair<int, int> witness;
};

IntersectionRatio intersection_ratio(int s, const Slope& r, const Slope& rp);

enum class WordFamily { EFamily, GFamily };

// The sequence of bottom-edge labels read at interior horizontal crossings
// (EFamily), or of diagonal labels read at diagonal crossings (GFamily).
// GFamily requires p and q both odd; EFamily requires a non-horizontal
// direction.
std::vector<Label> crossing_word(const StaircaseSurface& sf, const SaddleConnection& conn,
                                 WordFamily family);

// Sum of all signed pairings between the trace families of r and r'.
// Always equals (2s-1)(p q' - p' q); throws if the identity fails.
long long sum_rule_check(int s, const Slope& r, const Slope& rp);

} // namespace staircase

#pragma once

#include <staircase/rational.hpp>

#include <string>
#include <vector>

namespace staircase {

// Integer homology coordinates in the basis e_1..e_s, f_1..f_s.
struct HomologyClass {
    std::vector<long long> eps;  // coordinates on e_1..e_s
    std::vector<long long> phi;  // coordinates on f_1..f_s

    HomologyClass() = default;
    explicit HomologyClass(int s) : eps(s, 0), phi(s, 0) {}

    int dim() const { return static_cast<int>(eps.size()); }
    bool is_zero() const;
    std::string str() const;

    HomologyClass& operator+=(const HomologyClass& o);
    HomologyClass& operator-=(const HomologyClass& o);
    friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
    friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
    friend HomologyClass operator*(long long k, HomologyClass a);
    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

// The staircase origami on n = 2s-1 unit squares. Squares are numbered 1..n,
// row by row from the bottom left; vectors are 1-indexed with slot 0 unused.
struct StaircaseSurface {
    int s = 0;
    int n = 0;
    std::vector<int> sigma_right, sigma_up;
    std::vector<int> sigma_right_inv, sigma_up_inv;
    std::vector<std::vector<int>> row_cylinders, column_cylinders;
    std::vector<int> row_of, col_of;  // 1-based cylinder index per square
};

// Builds the surface and checks the single-cone-point invariant
// (the commutator of the two gluing permutations is one (2s-1)-cycle).
StaircaseSurface build_staircase(int s);

// Antisymmetric pairing on H_1, stored over the interleaved basis
// e_1, f_1, e_2, f_2, ..., e_s, f_s.
class IntersectionForm {
public:
    explicit IntersectionForm(int s);

    int s() const { return s_; }
    int dim() const { return 2 * s_; }
    long long entry(int i, int j) const { return m_[i][j]; }
    long long pair(const HomologyClass& a, const HomologyClass& b) const;
    BigInt determinant() const;

private:
    int s_;
    std::vector<std::vector<long long>> m_;
};

IntersectionForm intersection_form(int s);

enum class CurveFamily { E, EPrime, F, FPrime, Alpha, Beta, G, GPrime };

// Curve classes: e_i, f_i (edge classes; primed twins share the class),
// alpha_i / beta_i (cylinder core curves), g_i / g'_i (diagonal classes).
HomologyClass named_class(CurveFamily family, int index, int s);
HomologyClass named_class(const std::string& name, int s);

// Recovers coordinates of h by pairing against the cylinder core curves:
// eps_i = <h, beta_i>, phi_i = -<h, alpha_i>. Must round-trip to h.
HomologyClass coords_from_pairings(const IntersectionForm& form, const HomologyClass& h);

// A labelled edge or diagonal of one square.
struct Label {
    CurveFamily family;
    int index;
    std::string str() const;
    friend bool operator==(const Label&, const Label&) = default;
};

Label bottom_edge_label(int square);
Label left_edge_label(int square);
Label diagonal_label(int square);

} // namespace staircase

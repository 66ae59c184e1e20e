#include <staircase/origami.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace staircase {

namespace {

void check_same_dim(const HomologyClass& a, const HomologyClass& b) {
    if (a.eps.size() != b.eps.size() || a.phi.size() != b.phi.size())
        throw std::invalid_argument("homology classes of different genus");
}

std::string term(long long c, const std::string& name, bool first) {
    std::string out;
    if (c < 0)
        out += first ? "-" : " - ";
    else if (!first)
        out += " + ";
    long long a = std::llabs(c);
    if (a != 1) out += std::to_string(a);
    out += name;
    return out;
}

} // namespace

bool HomologyClass::is_zero() const {
    auto zero = [](long long v) { return v == 0; };
    return std::all_of(eps.begin(), eps.end(), zero) &&
           std::all_of(phi.begin(), phi.end(), zero);
}

std::string HomologyClass::str() const {
    std::string out;
    for (int i = 0; i < dim(); ++i)
        if (eps[i] != 0) out += term(eps[i], "e_" + std::to_string(i + 1), out.empty());
    for (int i = 0; i < dim(); ++i)
        if (phi[i] != 0) out += term(phi[i], "f_" + std::to_string(i + 1), out.empty());
    return out.empty() ? "0" : out;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
    check_same_dim(*this, o);
    for (size_t i = 0; i < eps.size(); ++i) eps[i] += o.eps[i];
    for (size_t i = 0; i < phi.size(); ++i) phi[i] += o.phi[i];
    return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) {
    check_same_dim(*this, o);
    for (size_t i = 0; i < eps.size(); ++i) eps[i] -= o.eps[i];
    for (size_t i = 0; i < phi.size(); ++i) phi[i] -= o.phi[i];
    return *this;
}

HomologyClass operator*(long long k, HomologyClass a) {
    for (auto& v : a.eps) v *= k;
    for (auto& v : a.phi) v *= k;
    return a;
}

StaircaseSurface build_staircase(int s) {
    if (s < 2) throw std::invalid_argument("staircase needs s >= 2");
    StaircaseSurface sf;
    sf.s = s;
    sf.n = 2 * s - 1;
    sf.sigma_right.assign(sf.n + 1, 0);
    sf.sigma_up.assign(sf.n + 1, 0);
    // Horizontal gluing swaps the two squares of each row; the top square
    // 2s-1 is alone in its row and wraps onto itself.
    for (int i = 1; i <= s - 1; ++i) {
        sf.sigma_right[2 * i - 1] = 2 * i;
        sf.sigma_right[2 * i] = 2 * i - 1;
    }
    sf.sigma_right[sf.n] = sf.n;
    // Vertical gluing swaps the two squares of each column; square 1 is
    // alone in its column.
    sf.sigma_up[1] = 1;
    for (int i = 1; i <= s - 1; ++i) {
        sf.sigma_up[2 * i] = 2 * i + 1;
        sf.sigma_up[2 * i + 1] = 2 * i;
    }
    sf.sigma_right_inv = sf.sigma_right;  // involutions
    sf.sigma_up_inv = sf.sigma_up;

    sf.row_of.assign(sf.n + 1, 0);
    sf.col_of.assign(sf.n + 1, 0);
    for (int c = 1; c <= sf.n; ++c) {
        sf.row_of[c] = (c + 1) / 2;
        sf.col_of[c] = (c % 2 == 0) ? c / 2 + 1 : (c + 1) / 2;
    }
    for (int i = 1; i <= s - 1; ++i) sf.row_cylinders.push_back({2 * i - 1, 2 * i});
    sf.row_cylinders.push_back({sf.n});
    sf.column_cylinders.push_back({1});
    for (int i = 2; i <= s; ++i) sf.column_cylinders.push_back({2 * i - 2, 2 * i - 1});

    // One cone point: the commutator of the gluings must be a single n-cycle.
    int seen = 0;
    int cur = 1;
    do {
        cur = sf.sigma_right[sf.sigma_up[sf.sigma_right_inv[sf.sigma_up_inv[cur]]]];
        ++seen;
    } while (cur != 1 && seen <= sf.n);
    if (seen != sf.n)
        throw std::logic_error("staircase gluing does not give a single cone point");
    return sf;
}

IntersectionForm::IntersectionForm(int s) : s_(s) {
    if (s < 2) throw std::invalid_argument("intersection form needs s >= 2");
    const int d = 2 * s;
    m_.assign(d, std::vector<long long>(d, 0));
    // <e_i, f_j> = (-1)^(j-i) when j >= i, zero otherwise; e and f families
    // are isotropic. Basis order interleaves: e_1, f_1, e_2, f_2, ...
    for (int i = 1; i <= s; ++i)
        for (int j = i; j <= s; ++j) {
            long long v = ((j - i) % 2 == 0) ? 1 : -1;
            m_[2 * (i - 1)][2 * (j - 1) + 1] = v;
            m_[2 * (j - 1) + 1][2 * (i - 1)] = -v;
        }
}

long long IntersectionForm::pair(const HomologyClass& a, const HomologyClass& b) const {
    if (a.dim() != s_ || b.dim() != s_)
        throw std::invalid_argument("homology class does not match form dimension");
    auto interleave = [&](const HomologyClass& h) {
        std::vector<long long> v(2 * s_);
        for (int i = 0; i < s_; ++i) {
            v[2 * i] = h.eps[i];
            v[2 * i + 1] = h.phi[i];
        }
        return v;
    };
    const auto va = interleave(a);
    const auto vb = interleave(b);
    long long out = 0;
    for (int i = 0; i < 2 * s_; ++i) {
        if (va[i] == 0) continue;
        for (int j = 0; j < 2 * s_; ++j) out += va[i] * m_[i][j] * vb[j];
    }
    return out;
}

BigInt IntersectionForm::determinant() const {
    const int d = 2 * s_;
    std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = m_[i][j];
    // Bareiss fraction-free elimination.
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < d; ++k) {
        if (a[k][k] == 0) {
            int r = k + 1;
            while (r < d && a[r][k] == 0) ++r;
            if (r == d) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[d - 1][d - 1];
}

IntersectionForm intersection_form(int s) {
    IntersectionForm form(s);
    for (int i = 0; i < form.dim(); ++i)
        for (int j = 0; j < form.dim(); ++j)
            if (form.entry(i, j) != -form.entry(j, i))
                throw std::logic_error("intersection form is not antisymmetric");
    if (form.determinant() == 0)
        throw std::logic_error("intersection form is degenerate");
    return form;
}

namespace {

void check_index(int index, int lo, int hi, const std::string& what) {
    if (index < lo || index > hi)
        throw std::invalid_argument(what + " index " + std::to_string(index) +
                                    " out of range [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
}

} // namespace

HomologyClass named_class(CurveFamily family, int index, int s) {
    if (s < 2) throw std::invalid_argument("named_class needs s >= 2");
    HomologyClass h(s);
    switch (family) {
        case CurveFamily::E:
            check_index(index, 1, s, "e");
            h.eps[index - 1] = 1;
            break;
        case CurveFamily::EPrime:
            // e'_i runs over 2..s and is homologous to e_i.
            check_index(index, 2, s, "e'");
            h.eps[index - 1] = 1;
            break;
        case CurveFamily::F:
            check_index(index, 1, s, "f");
            h.phi[index - 1] = 1;
            break;
        case CurveFamily::FPrime:
            // f'_i runs over 1..s-1 and is homologous to f_i.
            check_index(index, 1, s - 1, "f'");
            h.phi[index - 1] = 1;
            break;
        case CurveFamily::Alpha:
            // Core of the i-th row cylinder.
            check_index(index, 1, s, "alpha");
            h.eps[index - 1] = 1;
            if (index < s) h.eps[index] = 1;
            break;
        case CurveFamily::Beta:
            // Core of the i-th column cylinder.
            check_index(index, 1, s, "beta");
            h.phi[index - 1] = 1;
            if (index > 1) h.phi[index - 2] = 1;
            break;
        case CurveFamily::G:
            check_index(index, 1, s, "g");
            h.eps[index - 1] = 1;
            h.phi[index - 1] = 1;
            break;
        case CurveFamily::GPrime:
            check_index(index, 1, s - 1, "g'");
            h.eps[index] = 1;
            h.phi[index - 1] = 1;
            break;
    }
    return h;
}

HomologyClass named_class(const std::string& name, int s) {
    auto us = name.find('_');
    if (us == std::string::npos || us + 1 >= name.size())
        throw std::invalid_argument("cannot parse curve name '" + name + "'");
    const std::string head = name.substr(0, us);
    int index = 0;
    try {
        size_t used = 0;
        index = std::stoi(name.substr(us + 1), &used);
        if (us + 1 + used != name.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse curve index in '" + name + "'");
    }
    CurveFamily fam;
    if (head == "e") fam = CurveFamily::E;
    else if (head == "e'") fam = CurveFamily::EPrime;
    else if (head == "f") fam = CurveFamily::F;
    else if (head == "f'") fam = CurveFamily::FPrime;
    else if (head == "alpha") fam = CurveFamily::Alpha;
    else if (head == "beta") fam = CurveFamily::Beta;
    else if (head == "g") fam = CurveFamily::G;
    else if (head == "g'") fam = CurveFamily::GPrime;
    else throw std::invalid_argument("unknown curve family '" + head + "'");
    return named_class(fam, index, s);
}

HomologyClass coords_from_pairings(const IntersectionForm& form, const HomologyClass& h) {
    const int s = form.s();
    HomologyClass out(s);
    for (int i = 1; i <= s; ++i) {
        out.eps[i - 1] = form.pair(h, named_class(CurveFamily::Beta, i, s));
        out.phi[i - 1] = -form.pair(h, named_class(CurveFamily::Alpha, i, s));
    }
    return out;
}

std::string Label::str() const {
    switch (family) {
        case CurveFamily::E: return "e_" + std::to_string(index);
        case CurveFamily::EPrime: return "e'_" + std::to_string(index);
        case CurveFamily::F: return "f_" + std::to_string(index);
        case CurveFamily::FPrime: return "f'_" + std::to_string(index);
        case CurveFamily::G: return "g_" + std::to_string(index);
        case CurveFamily::GPrime: return "g'_" + std::to_string(index);
        default: break;
    }
    throw std::logic_error("label family has no edge notation");
}

Label bottom_edge_label(int square) {
    if (square < 1) throw std::invalid_argument("square index must be positive");
    if (square == 1) return {CurveFamily::E, 1};
    if (square % 2 == 0) return {CurveFamily::E, square / 2 + 1};
    return {CurveFamily::EPrime, (square + 1) / 2};
}

Label left_edge_label(int square) {
    if (square < 1) throw std::invalid_argument("square index must be positive");
    if (square == 1) return {CurveFamily::F, 1};
    if (square % 2 == 0) return {CurveFamily::FPrime, square / 2};
    return {CurveFamily::F, (square + 1) / 2};
}

Label diagonal_label(int square) {
    if (square < 1) throw std::invalid_argument("square index must be positive");
    if (square % 2 == 1) return {CurveFamily::G, (square + 1) / 2};
    return {CurveFamily::GPrime, square / 2};
}

} // namespace staircase

#include <doctest.h>

#include <staircase/origami.hpp>

#include <stdexcept>
#include <vector>

using namespace staircase;

TEST_CASE("staircase permutations for s = 2") {
    const StaircaseSurface sf = build_staircase(2);
    CHECK(sf.n == 3);
    CHECK(sf.sigma_right == std::vector<int>{0, 2, 1, 3});
    CHECK(sf.sigma_up == std::vector<int>{0, 1, 3, 2});
    CHECK(sf.row_of == std::vector<int>{0, 1, 1, 2});
    CHECK(sf.col_of == std::vector<int>{0, 1, 2, 2});
    CHECK(sf.row_cylinders == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(sf.column_cylinders == std::vector<std::vector<int>>{{1}, {2, 3}});
}

TEST_CASE("staircase permutations for s = 3") {
    const StaircaseSurface sf = build_staircase(3);
    CHECK(sf.n == 5);
    CHECK(sf.sigma_right == std::vector<int>{0, 2, 1, 4, 3, 5});
    CHECK(sf.sigma_up == std::vector<int>{0, 1, 3, 2, 5, 4});
    for (int c = 1; c <= 5; ++c) {
        CHECK(sf.sigma_right_inv[sf.sigma_right[c]] == c);
        CHECK(sf.sigma_up_inv[sf.sigma_up[c]] == c);
    }
    CHECK(sf.row_cylinders == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}});
    CHECK(sf.column_cylinders == std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5}});
}

TEST_CASE("single cone point for all small sizes") {
    for (int s = 2; s <= 10; ++s) {
        const StaircaseSurface sf = build_staircase(s);
        CHECK(sf.n == 2 * s - 1);
    }
    CHECK_THROWS_AS(build_staircase(1), std::invalid_argument);
    CHECK_THROWS_AS(build_staircase(0), std::invalid_argument);
}

TEST_CASE("intersection matrix for s = 2") {
    const IntersectionForm form(2);
    CHECK(form.dim() == 4);
    // basis order e_1, f_1, e_2, f_2
    const long long want[4][4] = {
        {0, 1, 0, -1},
        {-1, 0, 0, 0},
        {0, 0, 0, 1},
        {1, 0, -1, 0},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(form.entry(i, j) == want[i][j]);
    CHECK(form.determinant() == 1);
}

TEST_CASE("intersection matrix for s = 4") {
    const IntersectionForm form(4);
    CHECK(form.dim() == 8);
    const long long want[8][8] = {
        {0, 1, 0, -1, 0, 1, 0, -1},
        {-1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, -1, 0, 1},
        {1, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, -1},
        {-1, 0, 1, 0, -1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
        {1, 0, -1, 0, 1, 0, -1, 0},
    };
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(form.entry(i, j) == want[i][j]);
    CHECK(form.determinant() == 1);
}

TEST_CASE("unimodular for all small sizes") {
    for (int s = 2; s <= 8; ++s) CHECK(intersection_form(s).determinant() == 1);
}

TEST_CASE("pairing of named classes") {
    const int s = 5;
    const IntersectionForm form(s);
    const auto e = [&](int i) { return named_class(CurveFamily::E, i, s); };
    const auto f = [&](int i) { return named_class(CurveFamily::F, i, s); };
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) {
            CHECK(form.pair(e(i), e(j)) == 0);
            CHECK(form.pair(f(i), f(j)) == 0);
            const long long want = j >= i ? ((j - i) % 2 == 0 ? 1 : -1) : 0;
            CHECK(form.pair(e(i), f(j)) == want);
            CHECK(form.pair(f(j), e(i)) == -want);
        }
}

TEST_CASE("pairing of diagonal classes") {
    const int s = 5;
    const IntersectionForm form(s);
    const auto g = [&](int i) { return named_class(CurveFamily::G, i, s); };
    const auto gp = [&](int i) { return named_class(CurveFamily::GPrime, i, s); };
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) {
            const long long sign = (j - i) % 2 == 0 ? 1 : -1;
            CHECK(form.pair(g(i), g(j)) == sign);
            CHECK(form.pair(g(i), gp(j - 1)) == -sign);
        }
}

TEST_CASE("named classes by example") {
    {
        const HomologyClass h = named_class("beta_2", 3);
        CHECK(h.eps == std::vector<long long>{0, 0, 0});
        CHECK(h.phi == std::vector<long long>{1, 1, 0});
    }
    {
        const HomologyClass h = named_class("g'_1", 2);
        CHECK(h.eps == std::vector<long long>{0, 1});
        CHECK(h.phi == std::vector<long long>{1, 0});
    }
    {
        const HomologyClass h = named_class("alpha_4", 4);
        CHECK(h.eps == std::vector<long long>{0, 0, 0, 1});
        CHECK(h.phi == std::vector<long long>{0, 0, 0, 0});
    }
    CHECK(named_class("e'_2", 3) == named_class("e_2", 3));
    CHECK(named_class("f'_1", 3) == named_class("f_1", 3));
    CHECK(named_class("g_2", 3) ==
          named_class("e_2", 3) + named_class("f_2", 3));

    CHECK_THROWS_AS(named_class("e_0", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_class("e_4", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_class("e'_1", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_class("f'_3", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_class("q_1", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_class("e_x", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_class("e", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_class("e_1", 1), std::invalid_argument);
}

TEST_CASE("coordinates recovered from pairings") {
    for (int s = 2; s <= 8; ++s) {
        const IntersectionForm form(s);
        std::vector<HomologyClass> classes;
        for (int i = 1; i <= s; ++i) {
            classes.push_back(named_class(CurveFamily::E, i, s));
            classes.push_back(named_class(CurveFamily::F, i, s));
            classes.push_back(named_class(CurveFamily::Alpha, i, s));
            classes.push_back(named_class(CurveFamily::Beta, i, s));
            classes.push_back(named_class(CurveFamily::G, i, s));
            if (i < s) classes.push_back(named_class(CurveFamily::GPrime, i, s));
        }
        // a couple of composite classes as well
        classes.push_back(classes[0] + classes[3] - 2 * classes[4]);
        classes.push_back(3 * classes[1] - classes[2]);
        for (const auto& h : classes) CHECK(coords_from_pairings(form, h) == h);
    }
}

TEST_CASE("homology arithmetic and formatting") {
    const HomologyClass a = named_class("e_1", 2);
    const HomologyClass b = named_class("f_2", 2);
    HomologyClass c = a + b;
    CHECK(c.eps == std::vector<long long>{1, 0});
    CHECK(c.phi == std::vector<long long>{0, 1});
    c -= a;
    CHECK(c == b);
    CHECK((0 * a).is_zero());
    CHECK_FALSE(a.is_zero());
    CHECK((a + a) == 2 * a);
    CHECK_THROWS_AS(a + named_class("e_1", 3), std::invalid_argument);
    CHECK(a.str() == "e_1");
    CHECK((a - 3 * b).str() == "e_1 - 3f_2");
    CHECK((b - b).str() == "0");
}

TEST_CASE("edge and diagonal labels") {
    CHECK(bottom_edge_label(1).str() == "e_1");
    CHECK(bottom_edge_label(2).str() == "e_2");
    CHECK(bottom_edge_label(3).str() == "e'_2");
    CHECK(bottom_edge_label(4).str() == "e_3");
    CHECK(bottom_edge_label(5).str() == "e'_3");
    CHECK(left_edge_label(1).str() == "f_1");
    CHECK(left_edge_label(2).str() == "f'_1");
    CHECK(left_edge_label(3).str() == "f_2");
    CHECK(left_edge_label(4).str() == "f'_2");
    CHECK(left_edge_label(5).str() == "f_3");
    CHECK(diagonal_label(1).str() == "g_1");
    CHECK(diagonal_label(2).str() == "g'_1");
    CHECK(diagonal_label(3).str() == "g_2");
    CHECK(diagonal_label(4).str() == "g'_2");
    CHECK(diagonal_label(5).str() == "g_3");
    CHECK_THROWS_AS(bottom_edge_label(0), std::invalid_argument);

    // the label of an edge names the homology class of the matching loop
    const int s = 3;
    CHECK(named_class(bottom_edge_label(3).str(), s) == named_class("e_2", s));
    CHECK(named_class(left_edge_label(4).str(), s) == named_class("f_2", s));
    CHECK(named_class(diagonal_label(4).str(), s) ==
          named_class("e_3", s) + named_class("f_2", s));
}

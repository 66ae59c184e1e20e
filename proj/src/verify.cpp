#include <staircase/verify.hpp>

#include <staircase/kvol.hpp>
#include <staircase/saddle.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

namespace staircase {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Checker {
    bool ok = true;
    long long checks = 0;
    std::string details;

    void expect(bool cond, const std::string& msg) {
        ++checks;
        if (cond) return;
        ok = false;
        if (details.size() < 500) {
            if (!details.empty()) details += "; ";
            details += msg;
        }
    }
    void note(const std::string& msg) {
        if (!details.empty()) details += "; ";
        details += msg;
    }
};

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Slopes with |numerator| and denominator up to the bound, plus infinity.
std::vector<Slope> slopes_up_to(int bound) {
    std::vector<Slope> out;
    out.push_back(Slope::infinity());
    for (int q = 1; q <= bound; ++q)
        for (int p = -bound; p <= bound; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            out.push_back(Slope(p, q));
        }
    return out;
}

// Intersection ratios with the per-direction traces cached.
struct RatioTable {
    StaircaseSurface sf;
    IntersectionForm form;
    std::map<std::pair<long long, long long>, std::vector<HomologyClass>> cache;

    explicit RatioTable(int s) : sf(build_staircase(s)), form(intersection_form(s)) {}

    const std::vector<HomologyClass>& traces(const Slope& r) {
        const Direction d = direction_of_slope(r);
        auto it = cache.find({d.p, d.q});
        if (it == cache.end()) {
            std::vector<HomologyClass> hs;
            for (const auto& conn : trace_direction(sf, d)) hs.push_back(conn.homology);
            it = cache.emplace(std::make_pair(d.p, d.q), std::move(hs)).first;
        }
        return it->second;
    }

    BigRat ratio(const Slope& r, const Slope& rp) {
        const Direction d = direction_of_slope(r);
        const Direction dp = direction_of_slope(rp);
        const long long det = d.p * dp.q - dp.p * d.q;
        const auto& ta = traces(r);
        const auto& tb = traces(rp);
        long long best = 0;
        for (const auto& a : ta)
            for (const auto& b : tb) best = std::max(best, std::llabs(form.pair(a, b)));
        return BigRat(best, std::llabs(det));
    }
};

Slope random_slope(std::mt19937& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(0, bound);
    for (;;) {
        const int p = num(rng), q = den(rng);
        if (p == 0 && q == 0) continue;
        return Slope(p, q);
    }
}

GroupElement random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, 2);
    GroupElement g = identity_element();
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (pick(rng)) {
            case 0: g = mul(g, gen_T()); break;
            case 1: g = mul(g, t_power(-1)); break;
            default: g = mul(g, gen_R()); break;
        }
    }
    return g;
}

const double kMinValue = 3.0 * std::sqrt(143.0 / 144.0);
const double kIncenterX = 9.0 / 14.0;
const double kIncenterY = std::sqrt(143.0) / 14.0;

CriterionResult criterion_corollary_values(VerifyLevel level) {
    Checker c;
    const int s_hi = level == VerifyLevel::Full ? 5 : 3;
    std::string vals;
    for (int s = 2; s <= s_hi; ++s) {
        const double v = kvol_at(s, disk_point(0.0, 1.0)).value;
        c.expect(approx(v, 2.0 * s - 1.0, 1e-10),
                 "value at i for s=" + std::to_string(s) + " was " + fmt(v));
        vals += (vals.empty() ? "" : ",") + fmt(v);
    }
    c.note("values at i: " + vals);
    return {1, "area-normalized value at the square point is 2s-1", c.ok, c.details, 0};
}

CriterionResult criterion_minimum(VerifyLevel level) {
    Checker c;
    if (level == VerifyLevel::Quick) {
        c.note("skipped at quick level");
        return {2, "global minimum over the disk (s=2)", true, c.details, 0};
    }
    const MinimumResult m = find_minimum(2);
    c.expect(approx(m.value, kMinValue, 1e-6),
             "minimum value " + fmt(m.value) + " vs " + fmt(kMinValue));
    c.expect(approx(m.point.x, kIncenterX, 1e-4) && approx(m.point.y, kIncenterY, 1e-4),
             "minimizer (" + fmt(m.point.x) + ", " + fmt(m.point.y) + ")");
    const double mirror = kvol_at(2, disk_point(-m.point.x, m.point.y)).value;
    c.expect(approx(mirror, m.value, 1e-8), "mirror value " + fmt(mirror));
    c.note("min " + fmt(m.value) + " at (" + fmt(m.point.x) + ", " + fmt(m.point.y) + ")");
    return {2, "global minimum over the disk (s=2)", c.ok, c.details, 0};
}

CriterionResult criterion_incenter(VerifyLevel) {
    Checker c;
    const Geodesic g1 = geodesic(Slope(-1, 1), Slope(1, 1));
    const Geodesic g2 = geodesic(Slope(-2, 1), Slope(1, 1));
    const Geodesic g3 = geodesic(Slope(0, 1), Slope(2, 1));
    const DiskPoint k = incenter(g1, g2, g3);
    c.expect(approx(k.x, kIncenterX, 1e-9) && approx(k.y, kIncenterY, 1e-9),
             "incenter (" + fmt(k.x) + ", " + fmt(k.y) + ")");
    const double d1 = dist_to_geodesic(k, g1);
    const double d2 = dist_to_geodesic(k, g2);
    const double d3 = dist_to_geodesic(k, g3);
    c.expect(approx(d1, d2, 1e-12) && approx(d2, d3, 1e-12),
             "distances " + fmt(d1) + ", " + fmt(d2) + ", " + fmt(d3));
    c.expect(approx(1.0 / std::cosh(d1), std::sqrt(143.0 / 144.0), 1e-12),
             "sech distance " + fmt(1.0 / std::cosh(d1)));
    c.note("incenter (" + fmt(k.x) + ", " + fmt(k.y) + "), sech d = " + fmt(1.0 / std::cosh(d1)));
    return {3, "equidistant point of the three bounding geodesics", c.ok, c.details, 0};
}

CriterionResult criterion_ratio_gap(VerifyLevel level) {
    Checker c;
    const int bound = 12;
    const int s_hi = level == VerifyLevel::Full ? 3 : 2;
    const auto slopes = slopes_up_to(bound);
    const BigRat one(1), gap(9, 10);
    long long end_pairs = 0, other_pairs = 0;
    for (int s = 2; s <= s_hi; ++s) {
        RatioTable table(s);
        for (size_t i = 0; i < slopes.size(); ++i)
            for (size_t j = i + 1; j < slopes.size(); ++j) {
                const BigRat I = table.ratio(slopes[i], slopes[j]);
                const bool end = is_end_of_Z_group(slopes[i], slopes[j]);
                if (end) {
                    ++end_pairs;
                    c.expect(I == one, "ratio at orbit pair " + slopes[i].str() + "," +
                                           slopes[j].str() + " was " + I.str());
                } else {
                    ++other_pairs;
                    c.expect(I <= gap, "ratio at off-orbit pair " + slopes[i].str() + "," +
                                           slopes[j].str() + " was " + I.str());
                }
            }
    }
    c.note(std::to_string(end_pairs) + " orbit pairs at ratio 1, " +
           std::to_string(other_pairs) + " others below 9/10");
    return {4, "intersection ratio separates the orbit with a 9/10 gap", c.ok, c.details, 0};
}

CriterionResult criterion_horizontal_ratios(VerifyLevel level) {
    Checker c;
    const int qmax = level == VerifyLevel::Full ? 30 : 15;
    RatioTable table(2);
    const Slope horizontal = Slope::infinity();
    const BigRat two_thirds(2, 3), five_sevenths(5, 7);
    BigRat top(0);
    std::vector<std::string> at_top;
    std::string excess;
    int n_excess = 0;
    for (int q = 1; q <= qmax; ++q)
        for (int p = -q + 1; p <= q; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            const Slope r(p, q);
            if (is_end_of_Z_group(r, horizontal)) continue;
            const BigRat I = table.ratio(r, horizontal);
            if (I > top) {
                top = I;
                at_top.clear();
            }
            if (I == top) at_top.push_back(r.str());
            if (I > two_thirds && I != five_sevenths) {
                ++n_excess;
                excess += (excess.empty() ? "" : ", ") + ("I(" + r.str() + ",inf)=" + I.str());
            }
        }
    c.expect(top == five_sevenths, "sweep max was " + top.str());
    std::string tops;
    for (const auto& t : at_top) tops += (tops.empty() ? "" : ",") + t;
    c.expect(at_top.size() == 2 &&
                 std::find(at_top.begin(), at_top.end(), "3/7") != at_top.end() &&
                 std::find(at_top.begin(), at_top.end(), "-3/7") != at_top.end(),
             "maximum attained at {" + tops + "}");
    c.expect(n_excess == 0, "pairs above 2/3 besides the 5/7 peaks: " + excess);
    c.note("sweep max " + top.str() + " at {" + tops + "}; " + std::to_string(n_excess) +
           " further pairs above 2/3");
    return {5, "pairs against the horizontal peak at 5/7", c.ok, c.details, 0};
}

CriterionResult criterion_region_dichotomy(VerifyLevel level) {
    Checker c;
    const int grid = level == VerifyLevel::Full ? 50 : 20;
    int inside = 0, outside = 0, skipped = 0;
    for (int i = 0; i < grid; ++i) {
        const double x = -1.0 + 2.0 * i / (grid - 1);
        const double floor_y = std::sqrt(std::max(1.0 - x * x, 0.0));
        for (int j = 0; j < grid; ++j) {
            const double y = floor_y + (3.0 - floor_y) * j / (grid - 1);
            if (y <= 1e-9) continue;
            const double m1 = (x - 1.0) * (x - 1.0) + (y - 0.5) * (y - 0.5) - 0.25;
            const double m2 = (x + 1.0) * (x + 1.0) + (y - 0.5) * (y - 0.5) - 0.25;
            if (std::abs(m1) <= 1e-9 || std::abs(m2) <= 1e-9) {
                ++skipped;
                continue;
            }
            const double v = kvol_at(2, disk_point(x, y)).value;
            if (m1 < 0.0 || m2 < 0.0) {
                ++inside;
                c.expect(v > 3.0, "horodisk point (" + fmt(x) + ", " + fmt(y) +
                                      ") gave only " + fmt(v));
            } else {
                ++outside;
                c.expect(v <= 3.0 + 1e-9,
                         "outside point (" + fmt(x) + ", " + fmt(y) + ") gave " + fmt(v));
            }
        }
    }
    const std::pair<double, double> on_orbit[] = {
        {0.0, 1.0},  {0.0, 1.5}, {0.0, 2.0},   {1.0, 1.0}, {1.0, 2.0},
        {-1.0, 1.5}, {0.5, 1.0}, {-0.5, 1.25}, {0.6, 0.8}, {-0.6, 0.8},
    };
    for (auto [x, y] : on_orbit) {
        const double v = kvol_at(2, disk_point(x, y)).value;
        c.expect(approx(v, 3.0, 1e-9),
                 "orbit-geodesic point (" + fmt(x) + ", " + fmt(y) + ") gave " + fmt(v));
    }
    c.note(std::to_string(inside) + " excess points, " + std::to_string(outside) +
           " bounded points, " + std::to_string(skipped) + " near-boundary skips");
    return {6, "excess exactly on the two horodisks, equality on the orbit", c.ok, c.details, 0};
}

CriterionResult criterion_limits(VerifyLevel) {
    Checker c;
    double prev = 0.0;
    bool first = true;
    std::string seq;
    for (double t : {0.4, 0.3, 0.2, 0.15, 0.12}) {
        const double v = kvol_at(2, disk_point(0.98, t)).value;
        if (!first)
            c.expect(v > prev, "cusp sequence not increasing at t=" + fmt(t));
        prev = v;
        first = false;
        seq += (seq.empty() ? "" : ",") + fmt(v);
    }
    c.note("cusp values " + seq);
    const double caps[] = {0.35, 0.18, 0.09};
    int idx = 0;
    for (double t : {5.0, 10.0, 20.0}) {
        const double v = kvol_at(2, disk_point(0.3, t)).value;
        c.expect(std::abs(v - 3.0) < caps[idx],
                 "high point y=" + fmt(t) + " off by " + fmt(std::abs(v - 3.0)));
        ++idx;
    }
    return {7, "blow-up into the cusp, limit 2s-1 at height", c.ok, c.details, 0};
}

CriterionResult criterion_covering(VerifyLevel level) {
    Checker c;
    if (level == VerifyLevel::Quick) {
        c.note("skipped at quick level");
        return {8, "banana covering of the corner region", true, c.details, 0};
    }
    const CoverReport rep = verify_covering(0.01, 12);
    c.expect(rep.samples > 1000, "only " + std::to_string(rep.samples) + " samples");
    c.expect(rep.ok(), std::to_string(rep.samples - rep.covered) + " uncovered samples");
    c.note(std::to_string(rep.covered) + "/" + std::to_string(rep.samples) +
           " samples covered up to y=" + fmt(rep.y_cap));
    return {8, "banana covering of the corner region", c.ok, c.details, 0};
}

CriterionResult criterion_identities(VerifyLevel level, bool inject_failure) {
    Checker c;
    std::mt19937 rng(20240917);
    const int n_sech = level == VerifyLevel::Full ? 10000 : 1000;
    const int n_inv = level == VerifyLevel::Full ? 500 : 100;

    std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.2, 4.0);
    for (int i = 0; i < n_sech; ++i) {
        const Slope r = random_slope(rng, 12);
        Slope rp = random_slope(rng, 12);
        while (rp == r) rp = random_slope(rng, 12);
        const DiskPoint z = disk_point(ux(rng), uy(rng));
        const double lhs = K(r, rp, z);
        const double rhs = K_via_distance(r, rp, z);
        c.expect(approx(lhs, rhs, 1e-12), "sech identity broke at r=" + r.str() +
                                              ", rp=" + rp.str());
    }

    for (int i = 0; i < n_inv; ++i) {
        const Slope r = random_slope(rng, 9);
        Slope rp = random_slope(rng, 9);
        while (rp == r) rp = random_slope(rng, 9);
        const GroupElement g = random_word(rng, 5);
        // K peaks on the mirrored geodesic gamma(-r, -rp), so the point
        // transports by the mirror conjugate of g (T shifts backwards).
        const GroupElement m{g.a, -g.b, -g.c, g.d, g.word};
        const DiskPoint z = disk_point(ux(rng), uy(rng));
        const double lhs = K(act_on_slope(g, r), act_on_slope(g, rp), act_on_point(m, z));
        const double rhs = K(r, rp, z);
        c.expect(approx(lhs, rhs, 1e-11), "K transport failed for word " + g.word);
        const bool e1 = is_end_of_Z_group(r, rp);
        const bool e2 = is_end_of_Z_group(act_on_slope(g, r), act_on_slope(g, rp));
        c.expect(e1 == e2, "orbit membership not invariant for word " + g.word);
        c.expect(e1 == is_end_of_Z_group(rp, r), "orbit membership not symmetric");
    }

    {
        RatioTable table(2);
        for (int i = 0; i < 60; ++i) {
            const Slope r = random_slope(rng, 6);
            Slope rp = random_slope(rng, 6);
            while (rp == r) rp = random_slope(rng, 6);
            const GroupElement g = random_word(rng, 4);
            c.expect(table.ratio(r, rp) ==
                         table.ratio(act_on_slope(g, r), act_on_slope(g, rp)),
                     "ratio not invariant for word " + g.word);
        }
        // The trace test and the cusp-coordinate test must agree pairwise.
        const auto small = slopes_up_to(6);
        for (size_t i = 0; i < small.size(); ++i)
            for (size_t j = i + 1; j < small.size(); ++j)
                c.expect((table.ratio(small[i], small[j]) == 1) ==
                             is_end_of_Z_group(small[i], small[j]),
                         "orbit tests disagree at " + small[i].str() + "," + small[j].str());
    }

    {
        std::uniform_int_distribution<int> comp(-20, 20);
        for (int s = 2; s <= 4; ++s) {
            for (int i = 0; i < (level == VerifyLevel::Full ? 200 : 40); ++i) {
                Slope r(0, 1), rp(0, 1);
                for (;;) {
                    const int a = comp(rng), b = comp(rng), cc = comp(rng), dd = comp(rng);
                    if ((a == 0 && b == 0) || (cc == 0 && dd == 0)) continue;
                    r = Slope(a, std::abs(b));
                    rp = Slope(cc, std::abs(dd));
                    if (r != rp) break;
                }
                sum_rule_check(s, r, rp);  // throws on violation
            }
        }
    }

    for (int s = 2; s <= 8; ++s) {
        const IntersectionForm form = intersection_form(s);
        c.expect(form.determinant() == 1, "determinant at s=" + std::to_string(s));
        std::vector<std::pair<CurveFamily, std::pair<int, int>>> fams = {
            {CurveFamily::E, {1, s}},      {CurveFamily::EPrime, {2, s}},
            {CurveFamily::F, {1, s}},      {CurveFamily::FPrime, {1, s - 1}},
            {CurveFamily::Alpha, {1, s}},  {CurveFamily::Beta, {1, s}},
            {CurveFamily::G, {1, s}},      {CurveFamily::GPrime, {1, s - 1}},
        };
        for (const auto& [fam, range] : fams)
            for (int idx = range.first; idx <= range.second; ++idx) {
                const HomologyClass h = named_class(fam, idx, s);
                c.expect(coords_from_pairings(form, h) == h,
                         "round-trip failed at s=" + std::to_string(s));
            }
    }

    for (int s = 2; s <= 10; ++s) build_staircase(s);  // validates the cone point

    if (inject_failure) {
        // Feed the suite a corrupted copy of the pairing table; the
        // comparison against the generating rule must flag it.
        const IntersectionForm form(2);
        std::vector<std::vector<long long>> copy(4, std::vector<long long>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) copy[i][j] = form.entry(i, j);
        copy[0][1] += 1;
        bool matches = true;
        for (int i = 0; i < 4 && matches; ++i)
            for (int j = 0; j < 4 && matches; ++j) matches = copy[i][j] == form.entry(i, j);
        c.expect(matches, "injected perturbation detected in the pairing table");
    }

    c.note(std::to_string(c.checks) + " identities checked");
    return {9, "identity suite: sech transport, invariances, sum rule, round-trips",
            c.ok, c.details, 0};
}

} // namespace

std::vector<CriterionResult> run_acceptance(VerifyLevel level, bool inject_failure) {
    std::vector<CriterionResult> out;
    const auto timed = [&](auto&& fn) {
        const auto t0 = Clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out.push_back(std::move(r));
    };
    timed([&] { return criterion_corollary_values(level); });
    timed([&] { return criterion_minimum(level); });
    timed([&] { return criterion_incenter(level); });
    timed([&] { return criterion_ratio_gap(level); });
    timed([&] { return criterion_horizontal_ratios(level); });
    timed([&] { return criterion_region_dichotomy(level); });
    timed([&] { return criterion_limits(level); });
    timed([&] { return criterion_covering(level); });
    timed([&] { return criterion_identities(level, inject_failure); });

    // Wall-clock budgets that are part of the contract.
    if (level == VerifyLevel::Full) {
        const double budget[] = {5.0, 120.0, 30.0, 60.0, 60.0, 300.0, 30.0, 60.0, 120.0};
        for (size_t i = 0; i < out.size(); ++i) {
            if (out[i].seconds > budget[i]) {
                out[i].pass = false;
                out[i].details += (out[i].details.empty() ? "" : "; ") + std::string("over budget: ") +
                                  fmt(out[i].seconds) + "s > " + fmt(budget[i]) + "s";
            }
        }
    }
    return out;
}

} // namespace staircase

#include <staircase/kvol.hpp>

#include <staircase/saddle.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_set>

namespace staircase {

namespace {

void validate_config(const CandidateConfig& cfg) {
    if (cfg.endpoint_bound < 1 || cfg.word_depth < 0 || cfg.stability_rounds < 1 ||
        cfg.tolerance <= 0.0 || cfg.max_deepenings < 0)
        throw std::invalid_argument("invalid candidate search configuration");
}

// Candidate geodesic, endpoints in increasing projective order.
struct Cand {
    Slope u, v;
};

Cand make_cand(Slope a, Slope b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

using CandKey = std::array<long long, 4>;

CandKey key_of(const Cand& c) {
    return {c.u.num(), c.u.den(), c.v.num(), c.v.den()};
}

struct CandKeyHash {
    size_t operator()(const CandKey& k) const {
        size_t h = 1469598103934665603ull;
        for (long long v : k) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// sinh^2 of the distance from (x, y) to the candidate geodesic.
double sinh_sq(const Cand& c, double x, double y) {
    if (c.v.is_infinite()) {
        const double t = (x - c.u.to_double()) / y;
        return t * t;
    }
    const double ua = c.u.to_double();
    const double ub = c.v.to_double();
    const double ctr = 0.5 * (ua + ub);
    const double rho = 0.5 * (ub - ua);
    const double dx = x - ctr;
    const double t = (dx * dx + y * y - rho * rho) / (2.0 * rho * y);
    return t * t;
}

std::vector<Cand> build_seeds(int bound) {
    std::vector<Cand> seeds;
    for (int n = -bound; n <= bound; ++n)
        for (int m = n + 1; m <= bound; ++m) seeds.push_back(make_cand(Slope(n, 1), Slope(m, 1)));
    for (int n = -bound; n <= bound; ++n) seeds.push_back(make_cand(Slope(n, 1), Slope::infinity()));
    for (int o = -bound; o <= bound; ++o)
        if (o % 2 != 0) seeds.push_back(make_cand(Slope(o, 2), Slope::infinity()));
    return seeds;
}

// One closure pass at fixed seed bound and word depth. Children compete
// against the incumbent with a generous slack so that near-optimal
// branches stay alive.
struct RoundResult {
    double best_k = 0.0;
    std::vector<GeodesicWitness> winners;
    long long examined = 0;
};

constexpr double kExpandSlack = 0.05;
constexpr long long kRoundBudget = 2'000'000;

RoundResult run_round(double x, double y, int bound, int depth, double tol) {
    RoundResult rr;
    std::unordered_set<CandKey, CandKeyHash> seen;
    std::deque<std::pair<Cand, int>> queue;
    for (const Cand& c : build_seeds(bound)) {
        if (seen.insert(key_of(c)).second) queue.emplace_back(c, 0);
    }
    while (!queue.empty()) {
        auto [c, dep] = queue.front();
        queue.pop_front();
        ++rr.examined;
        if (rr.examined > kRoundBudget)
            throw SearchInstability("candidate closure exceeded its budget");
        const double s2 = sinh_sq(c, x, y);
        const double k = 1.0 / std::sqrt(1.0 + s2);
        if (k > rr.best_k + tol) {
            rr.best_k = k;
            std::erase_if(rr.winners,
                          [&](const GeodesicWitness& w) { return w.k < rr.best_k - tol; });
        }
        if (k >= rr.best_k - tol) rr.winners.push_back({c.u, c.v, k});
        if (dep >= depth || k <= rr.best_k - kExpandSlack) continue;
        const Cand children[3] = {
            make_cand(c.u.shifted(2), c.v.shifted(2)),
            make_cand(c.u.shifted(-2), c.v.shifted(-2)),
            make_cand(c.u.inverted_neg(), c.v.inverted_neg()),
        };
        for (const Cand& ch : children)
            if (seen.insert(key_of(ch)).second) queue.emplace_back(ch, dep + 1);
    }
    std::sort(rr.winners.begin(), rr.winners.end(), [](const auto& a, const auto& b) {
        if (a.r != b.r) return a.r < b.r;
        return a.rp < b.rp;
    });
    return rr;
}

} // namespace

SupResult sup_K_over_Z(const DiskPoint& z, const CandidateConfig& cfg) {
    validate_config(cfg);
    if (!(z.y > 0.0)) throw std::invalid_argument("query point must have y > 0");

    // Recenter horizontally; the family is translation invariant, so the
    // winners just shift back at the end.
    const long long shift = std::llround(z.x / 2.0);
    const double x = z.x - 2.0 * shift;
    const double y = z.y;

    SupResult out;
    double prev = -1.0;
    int quiet = 0;
    for (int round = 0;; ++round) {
        if (round > cfg.max_deepenings)
            throw SearchInstability("supremum still improving after " +
                                    std::to_string(cfg.max_deepenings) + " deepenings");
        const int bound = cfg.endpoint_bound + 4 * round;
        const int depth = cfg.word_depth + 4 * round;
        RoundResult rr = run_round(x, y, bound, depth, cfg.tolerance);
        out.diagnostics.candidates_examined += rr.examined;
        out.diagnostics.deepenings = round;
        out.diagnostics.final_endpoint_bound = bound;
        out.diagnostics.final_word_depth = depth;
        out.value = rr.best_k;
        out.winners = std::move(rr.winners);
        quiet = (round > 0 && std::abs(rr.best_k - prev) <= cfg.tolerance) ? quiet + 1 : 0;
        prev = rr.best_k;
        if (quiet >= cfg.stability_rounds) break;
    }
    if (shift != 0) {
        for (auto& w : out.winners) {
            w.r = w.r.shifted(2 * shift);
            w.rp = w.rp.shifted(2 * shift);
        }
    }
    return out;
}

KVolResult kvol_at(int s, const DiskPoint& z, const CandidateConfig& cfg) {
    if (s < 2) throw std::invalid_argument("kvol_at needs s >= 2");
    validate_config(cfg);
    auto [zr, g] = reduce_to_fundamental_domain(z);
    KVolResult res;
    res.reduced = zr;
    res.j_plus = J(Slope(1, 1), zr);
    res.j_minus = J(Slope(-1, 1), zr);
    SupResult sup = sup_K_over_Z(zr, cfg);
    res.k_star = sup.value;
    res.winners = std::move(sup.winners);
    res.diagnostics = sup.diagnostics;
    const double jmax = std::max(res.j_plus, res.j_minus);
    res.value = (2.0 * s - 1.0) * std::max(jmax, res.k_star);
    res.witness_kind =
        jmax > res.k_star + cfg.tolerance ? WitnessKind::JTerm : WitnessKind::GeodesicPair;
    return res;
}

Region classify_region(const DiskPoint& z) {
    if (z.exact) {
        const BigRat half(1, 2), quarter(1, 4);
        const BigRat dy = z.exact->y - half;
        for (int sgn : {-1, 1}) {
            const BigRat dx = z.exact->x - sgn;
            if (dx * dx + dy * dy < quarter) return Region::InsideV;
        }
        return Region::Outside;
    }
    const double dy = z.y - 0.5;
    for (int sgn : {-1, 1}) {
        const double dx = z.x - sgn;
        if (dx * dx + dy * dy < 0.25) return Region::InsideV;
    }
    return Region::Outside;
}

std::vector<ScanRow> scan(int s, double x0, double x1, double y0, double y1, double step,
                          const CandidateConfig& cfg) {
    if (s < 2) throw std::invalid_argument("scan needs s >= 2");
    if (!(step > 0.0)) throw std::invalid_argument("scan needs a positive step");
    if (!(y0 > 0.0)) throw std::invalid_argument("scan needs y > 0");
    std::vector<ScanRow> rows;
    if (x1 < x0 || y1 < y0) return rows;
    const auto count = [&](double lo, double hi) {
        return static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    };
    const long long nx = count(x0, x1), ny = count(y0, y1);
    for (long long j = 0; j < ny; ++j) {
        const double y = y0 + static_cast<double>(j) * step;
        for (long long i = 0; i < nx; ++i) {
            const double x = x0 + static_cast<double>(i) * step;
            ScanRow row;
            row.x = x;
            row.y = y;
            try {
                KVolResult res = kvol_at(s, disk_point(x, y), cfg);
                row.kvol = res.value;
                row.witness_kind = res.witness_kind;
                if (res.witness_kind == WitnessKind::GeodesicPair && !res.winners.empty())
                    row.witness = res.winners.front();
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

MinimumResult find_minimum(int s, const CandidateConfig& cfg) {
    if (s < 2) throw std::invalid_argument("find_minimum needs s >= 2");
    validate_config(cfg);

    const auto value_at = [&](double x, double y) {
        return kvol_at(s, disk_point(x, y), cfg).value;
    };

    // Coarse pass over the right half of the fundamental domain.
    double bx = 0.0, by = 1.0, best = std::numeric_limits<double>::infinity();
    for (double x = 0.0; x <= 1.0 + 1e-12; x += 0.05) {
        const double ylo = std::sqrt(std::max(1.0 - x * x, 0.0));
        for (double y = std::max(ylo, 0.55); y <= 2.5 + 1e-12; y += 0.05) {
            const double v = value_at(x, y);
            if (v < best) {
                best = v;
                bx = x;
                by = y;
            }
        }
    }

    // Shrinking grid refinement.
    double w = 0.06;
    for (int round = 0; round < 9; ++round) {
        double nbx = bx, nby = by;
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j) {
                const double x = std::clamp(bx + w * i / 4.0, 0.0, 1.0);
                const double y = std::max(by + w * j / 4.0, 0.05);
                const double v = value_at(x, y);
                if (v < best) {
                    best = v;
                    nbx = x;
                    nby = y;
                }
            }
        bx = nbx;
        by = nby;
        w /= 3.0;
    }

    MinimumResult out;
    out.detail = kvol_at(s, disk_point(bx, by), cfg);
    out.point = disk_point(bx, by);
    out.value = out.detail.value;

    const double mirror = value_at(-bx, by);
    if (std::abs(mirror - out.value) > 1e-8)
        throw SearchInstability("minimum is not mirror symmetric");
    return out;
}

CoverReport verify_covering(double grid_step, int n_max) {
    if (!(grid_step > 0.0) || grid_step > 0.5)
        throw std::invalid_argument("covering grid step must lie in (0, 0.5]");
    if (n_max < 1) throw std::invalid_argument("covering needs n_max >= 1");

    const long long denom = std::llround(1.0 / grid_step);
    CoverReport rep;
    rep.grid_step = 1.0 / static_cast<double>(denom);
    rep.n_max = n_max;
    rep.y_cap = (1.0 + n_max) / std::sqrt(143.0);

    std::vector<Geodesic> arcs;
    arcs.push_back(geodesic(Slope(0, 1), Slope(2, 1)));
    for (int n = 1; n <= n_max; ++n) arcs.push_back(geodesic(Slope(-n, 1), Slope(1, 1)));

    const BigRat threshold(1, 143);
    const double kx = 9.0 / 14.0, ky = std::sqrt(143.0) / 14.0;

    const long long i_lo = (denom + 1) / 2;
    for (long long i = i_lo; i <= denom; ++i) {
        const BigRat x(i, denom);
        const double xd = static_cast<double>(i) / static_cast<double>(denom);
        for (long long j = 1;; ++j) {
            const double yd = static_cast<double>(j) / static_cast<double>(denom);
            if (yd > rep.y_cap) break;
            const BigRat y(j, denom);
            if (x * x + y * y < 1) continue;  // below the bottom arc of the region
            const double dx = xd - kx, dy = yd - ky;
            if (dx * dx + dy * dy < 1e-4) continue;  // excluded disk at the triple point
            ++rep.samples;
            const RatPoint z{x, y};
            bool covered = 143 * (x - BigRat(1, 2)) * (x - BigRat(1, 2)) < y * y;
            for (size_t a = 0; !covered && a < arcs.size(); ++a)
                covered = sinh_sq_dist_exact(z, arcs[a]) < threshold;
            if (covered) ++rep.covered;
            else if (rep.uncovered.size() < 64) rep.uncovered.emplace_back(xd, yd);
        }
    }
    return rep;
}

CoverBoundReport general_cover_bound(int n_fold, bool witness_search) {
    if (n_fold < 3 || n_fold % 2 == 0)
        throw std::invalid_argument("the bound check needs an odd fold count >= 3");
    CoverBoundReport rep;
    rep.n_fold = n_fold;
    rep.s = (n_fold + 1) / 2;
    const double bound = static_cast<double>(n_fold);
    const CandidateConfig cfg;

    for (double x = -1.0; x <= 1.0 + 1e-12; x += 0.25) {
        for (double y = 1.0; y <= 2.5 + 1e-12; y += 0.25) {
            if (x * x + y * y < 1.0) continue;
            const double d1 = (x - 1.0) * (x - 1.0) + (y - 0.5) * (y - 0.5);
            const double d2 = (x + 1.0) * (x + 1.0) + (y - 0.5) * (y - 0.5);
            if (d1 <= 0.25 + 1e-9 || d2 <= 0.25 + 1e-9) continue;
            const KVolResult res = kvol_at(rep.s, disk_point(x, y), cfg);
            ++rep.grid_points;
            rep.max_outside_value = std::max(rep.max_outside_value, res.value);
            if (res.value > bound + 1e-8) ++rep.grid_violations;
            if (witness_search && res.witness_kind == WitnessKind::GeodesicPair &&
                !res.winners.empty()) {
                ++rep.witness_checks;
                const auto& w = res.winners.front();
                if (!is_end_of_Z_group(w.r, w.rp)) ++rep.witness_failures;
            }
        }
    }

    const std::pair<double, double> on_orbit[] = {
        {0.0, 1.0},  {0.0, 1.5},  {0.0, 2.0}, {1.0, 1.0},   {1.0, 2.0},
        {-1.0, 1.5}, {0.5, 1.0},  {-0.5, 1.25}, {0.6, 0.8}, {-0.6, 0.8},
    };
    for (auto [x, y] : on_orbit) {
        ++rep.z_points;
        const double v = kvol_at(rep.s, disk_point(x, y), cfg).value;
        if (std::abs(v - bound) > 1e-8) ++rep.z_point_failures;
    }

    rep.horodisk_point_exceeds =
        kvol_at(rep.s, disk_point(0.9, 0.46), cfg).value > bound + 1e-6;

    double prev = 0.0;
    rep.cusp_sequence_increases = true;
    bool first = true;
    for (double t : {0.4, 0.25, 0.15}) {
        const double v = kvol_at(rep.s, disk_point(0.99, t), cfg).value;
        if (!first && v <= prev) rep.cusp_sequence_increases = false;
        prev = v;
        first = false;
    }
    return rep;
}

} // namespace staircase

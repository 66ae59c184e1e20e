#include <staircase/saddle.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace staircase {

std::string Direction::str() const {
    return "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
}

Direction make_direction(long long p, long long q) {
    if (p == 0 && q == 0) throw std::invalid_argument("zero direction");
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

bool is_canonical(const Direction& d) {
    if (d.p == 0 && d.q == 0) return false;
    if (std::gcd(std::llabs(d.p), std::llabs(d.q)) != 1) return false;
    return d.q > 0 || (d.q == 0 && d.p == 1);
}

Direction direction_of_slope(const Slope& r) {
    return make_direction(r.num(), r.den());
}

Slope slope_of_direction(const Direction& d) {
    return Slope(d.p, d.q);
}

namespace {

// Crossing times along one period, as exact fractions in (0, 1]. The rank
// breaks ties: cylinder midlines are crossed strictly inside a square, so
// they are resolved before the edge events that share the same time (the
// vertical gluing preserves columns and the horizontal gluing preserves
// rows, so the midline contribution is the same on either side).
enum EventRank { RankXMid = 0, RankYMid = 1, RankDiag = 2, RankVEdge = 3, RankHEdge = 4 };

struct Event {
    long long num, den;  // time = num/den
    int rank;
};

bool event_less(const Event& a, const Event& b) {
    auto lhs = static_cast<__int128>(a.num) * b.den;
    auto rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs != rhs) return lhs < rhs;
    return a.rank < b.rank;
}

std::vector<Event> build_events(const Direction& d, bool want_diagonals) {
    const long long a = std::llabs(d.p);
    const long long q = d.q;
    std::vector<Event> ev;
    ev.reserve(static_cast<size_t>(2 * (a + q)));
    for (long long j = 1; j <= a; ++j) ev.push_back({j, a, RankVEdge});
    for (long long i = 1; i <= q; ++i) ev.push_back({i, q, RankHEdge});
    for (long long k = 0; k < a; ++k) ev.push_back({2 * k + 1, 2 * a, RankXMid});
    for (long long i = 0; i < q; ++i) ev.push_back({2 * i + 1, 2 * q, RankYMid});
    if (want_diagonals) {
        const long long dd = std::llabs(d.q - d.p);
        for (long long m = 1; m < dd; ++m) ev.push_back({m, dd, RankDiag});
    }
    std::sort(ev.begin(), ev.end(), event_less);
    return ev;
}

struct TraceOutcome {
    HomologyClass homology;
    std::vector<Crossing> crossings;
    std::vector<Label> diagonals;
};

TraceOutcome run_trace(const StaircaseSurface& sf, const Direction& d, int start_square,
                       const std::vector<Event>& events) {
    TraceOutcome out;
    out.homology = HomologyClass(sf.s);
    const int step = d.p >= 0 ? 1 : -1;
    int cur = start_square;
    for (const Event& e : events) {
        switch (e.rank) {
            case RankXMid:
                out.homology.eps[sf.col_of[cur] - 1] += step;
                break;
            case RankYMid:
                out.homology.phi[sf.row_of[cur] - 1] += 1;
                break;
            case RankDiag:
                out.diagonals.push_back(diagonal_label(cur));
                break;
            case RankVEdge:
                cur = step > 0 ? sf.sigma_right[cur] : sf.sigma_right_inv[cur];
                out.crossings.push_back({EdgeKind::Right, cur});
                break;
            case RankHEdge:
                cur = sf.sigma_up[cur];
                out.crossings.push_back({EdgeKind::Top, cur});
                break;
        }
    }
    return out;
}

void require_canonical(const Direction& d) {
    if (!is_canonical(d))
        throw std::invalid_argument("direction " + d.str() + " is not canonical");
}

} // namespace

std::vector<SaddleConnection> trace_direction(const StaircaseSurface& sf, const Direction& d) {
    require_canonical(d);
    const auto events = build_events(d, false);
    std::vector<SaddleConnection> conns;
    conns.reserve(sf.n);
    for (int c = 1; c <= sf.n; ++c) {
        auto res = run_trace(sf, d, c, events);
        conns.push_back({d, c, std::move(res.crossings), std::move(res.homology)});
    }
    return conns;
}

HomologyClass homology_of_trace(const StaircaseSurface& sf, const Direction& d,
                                int start_square, const std::vector<Crossing>& crossings) {
    require_canonical(d);
    if (start_square < 1 || start_square > sf.n)
        throw std::invalid_argument("start square out of range");
    auto res = run_trace(sf, d, start_square, build_events(d, false));
    if (res.crossings != crossings)
        throw std::invalid_argument("open or inconsistent trace");
    return res.homology;
}

IntersectionRatio intersection_ratio(int s, const Slope& r, const Slope& rp) {
    if (r == rp) throw std::invalid_argument("intersection ratio needs distinct slopes");
    const auto sf = build_staircase(s);
    const auto form = intersection_form(s);
    const Direction d = direction_of_slope(r);
    const Direction dp = direction_of_slope(rp);
    const auto ta = trace_direction(sf, d);
    const auto tb = trace_direction(sf, dp);
    const long long det = d.p * dp.q - dp.p * d.q;
    long long best = 0;
    std::pair<int, int> witness{1, 1};
    for (int i = 0; i < sf.n; ++i)
        for (int j = 0; j < sf.n; ++j) {
            long long v = std::llabs(form.pair(ta[i].homology, tb[j].homology));
            if (v > best) {
                best = v;
                witness = {i + 1, j + 1};
            }
        }
    IntersectionRatio out{BigRat(best, std::llabs(det)), witness};
    if (out.value > 1) throw std::logic_error("intersection ratio exceeded 1");
    return out;
}

std::vector<Label> crossing_word(const StaircaseSurface& sf, const SaddleConnection& conn,
                                 WordFamily family) {
    require_canonical(conn.direction);
    if (family == WordFamily::EFamily) {
        if (conn.direction.q == 0)
            throw std::invalid_argument("family mismatch: horizontal traces have no bottom-edge word");
        // Bottom-edge labels at interior horizontal crossings; the final
        // crossing lands on the corner and is not part of the word.
        std::vector<Label> word;
        long long tops = 0;
        for (const Crossing& c : conn.crossings)
            if (c.kind == EdgeKind::Top) ++tops;
        if (tops != conn.direction.q)
            throw std::invalid_argument("open or inconsistent trace");
        long long seen = 0;
        for (const Crossing& c : conn.crossings) {
            if (c.kind != EdgeKind::Top) continue;
            ++seen;
            if (seen < tops) word.push_back(bottom_edge_label(c.square));
        }
        return word;
    }
    // Diagonal words exist for odd-odd directions only.
    if (conn.direction.p % 2 == 0 || conn.direction.q % 2 == 0)
        throw std::invalid_argument("family mismatch: diagonal words need an odd-odd direction");
    auto res = run_trace(sf, conn.direction, conn.start_square,
                         build_events(conn.direction, true));
    if (res.crossings != conn.crossings)
        throw std::invalid_argument("open or inconsistent trace");
    return res.diagonals;
}

long long sum_rule_check(int s, const Slope& r, const Slope& rp) {
    if (r == rp) throw std::invalid_argument("sum rule needs distinct slopes");
    const auto sf = build_staircase(s);
    const auto form = intersection_form(s);
    const Direction d = direction_of_slope(r);
    const Direction dp = direction_of_slope(rp);
    const auto ta = trace_direction(sf, d);
    const auto tb = trace_direction(sf, dp);
    long long sum = 0;
    for (const auto& ca : ta)
        for (const auto& cb : tb) sum += form.pair(ca.homology, cb.homology);
    const long long expected = static_cast<long long>(sf.n) * (d.p * dp.q - dp.p * d.q);
    if (sum != expected)
        throw std::logic_error("trace pairing sum violated the determinant identity");
    return sum;
}

} // namespace staircase

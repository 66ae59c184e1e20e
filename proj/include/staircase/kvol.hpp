#pragma once

#include <staircase/hyper.hpp>
#include <staircase/veech.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace staircase {

// Knobs for the candidate-geodesic search. The search widens itself until
// the supremum is stable, so these are starting sizes, not caps on
// correctness; max_deepenings caps the widening.
struct CandidateConfig {
    int endpoint_bound = 8;
    int word_depth = 12;
    int stability_rounds = 2;
    double tolerance = 1e-10;
    // Near x = +-1 the best approximant can sit at endpoints ~40, which
    // needs nine rounds of widening; sixteen leaves room beyond that.
    int max_deepenings = 16;
};

// Raised when the candidate search cannot stabilize within its budget.
class SearchInstability : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchDiagnostics {
    long long candidates_examined = 0;
    int deepenings = 0;
    int final_endpoint_bound = 0;
    int final_word_depth = 0;
};

// A geodesic from the distinguished family, named by its endpoints, with
// the sech-distance value it realizes at the query point.
struct GeodesicWitness {
    Slope r, rp;
    double k = 0.0;
};

struct SupResult {
    double value = 0.0;
    std::vector<GeodesicWitness> winners;  // everything within tolerance of value
    SearchDiagnostics diagnostics;
};

// sup over the integer-orbit geodesic family of sech dist(z, gamma).
SupResult sup_K_over_Z(const DiskPoint& z, const CandidateConfig& cfg = {});

enum class WitnessKind { JTerm, GeodesicPair };

struct KVolResult {
    double value = 0.0;
    double j_plus = 0.0;   // J at slope 1
    double j_minus = 0.0;  // J at slope -1
    double k_star = 0.0;
    WitnessKind witness_kind = WitnessKind::GeodesicPair;
    std::vector<GeodesicWitness> winners;
    DiskPoint reduced;
    SearchDiagnostics diagnostics;
};

// KVol on the (2s-1)-square staircase disk at z, normalized by area:
// (2s-1) * max(J(1), J(-1), sup K). The point is reduced first.
KVolResult kvol_at(int s, const DiskPoint& z, const CandidateConfig& cfg = {});

/// The two excess horodisks: open disks of radius 1/2 around (+-1, 1/2).
enum class Region { InsideV, Outside };
Region classify_region(const DiskPoint& z);

struct ScanRow {
    double x = 0.0, y = 0.0;
    double kvol = 0.0;
    WitnessKind witness_kind = WitnessKind::GeodesicPair;
    std::optional<GeodesicWitness> witness;
    std::string error;  // nonempty if this sample failed
};

// Row-major sweep: y ascending outside, x ascending inside. Per-sample
// failures are recorded in the row instead of aborting the sweep.
std::vector<ScanRow> scan(int s, double x0, double x1, double y0, double y1, double step,
                          const CandidateConfig& cfg = {});

struct MinimumResult {
    DiskPoint point;
    double value = 0.0;
    KVolResult detail;
};

// Grid-plus-zoom minimization over the half x >= 0 of the fundamental
// domain, cross-checked against the mirror image.
MinimumResult find_minimum(int s, const CandidateConfig& cfg = {});

struct CoverReport {
    double grid_step = 0.0;
    int n_max = 0;
    double y_cap = 0.0;  // sampling cap; above it the vertical wedge covers
    long long samples = 0;
    long long covered = 0;
    std::vector<std::pair<double, double>> uncovered;  // at most 64 entries kept
    bool ok() const { return samples > 0 && covered == samples; }
};

// Exact-arithmetic check that the corner region 1/2 <= x <= 1 above the
// unit circle, minus a small disk at the equidistant point, is covered by
// the wedge at 1/2 plus the banana neighborhoods with index <= n_max.
CoverReport verify_covering(double grid_step, int n_max);

struct CoverBoundReport {
    int n_fold = 0;
    int s = 0;
    int grid_points = 0;
    int grid_violations = 0;
    double max_outside_value = 0.0;
    int z_points = 0;
    int z_point_failures = 0;
    bool horodisk_point_exceeds = false;
    bool cusp_sequence_increases = false;
    int witness_checks = 0;
    int witness_failures = 0;

    bool ok() const {
        return grid_points > 0 && grid_violations == 0 && z_points > 0 &&
               z_point_failures == 0 && horodisk_point_exceeds &&
               cusp_sequence_increases && witness_failures == 0;
    }
};

// Samples the bound value <= n_fold outside the excess horodisks, equality
// on the distinguished geodesics, and strict excess inside a horodisk.
CoverBoundReport general_cover_bound(int n_fold, bool witness_search);

} // namespace staircase

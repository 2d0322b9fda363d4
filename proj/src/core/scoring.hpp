#pragma once
// Aggregation core: AMRS normalization, multi-metric utility scores, the
// three ranking strategies, Pareto dominance, and weight-simplex sweeps.
//
// The score of an entry is sum_j w_j * mu_j / AMRS(mu_j), where mu_j are
// oriented metric values (lower-better metrics negated) and AMRS is the
// average marginal rate of substitution against the anchor accuracy metric:
// the mean of |delta metric / delta accuracy| over consecutive
// accuracy-sorted rows. Equal-accuracy rows make that ratio undefined, and
// the three conventions below resolve them differently.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/submissions.hpp"

namespace irledger::scoring {

// How equal-accuracy rows are handled inside AMRS:
//   skip_tied_pairs — frame is one row per entry, sorted by (accuracy,
//       system, hardware description); pairs with zero accuracy delta are
//       dropped and the divisor is the retained pair count.
//   merge_tied_rows — rows sharing an accuracy value are merged (metric
//       columns averaged) before pairing; every remaining pair has a
//       nonzero accuracy delta.
//   system_mean — each system's rows are first aggregated by arithmetic
//       mean (one row per system); over the accuracy-sorted aggregates,
//       pairs with equal aggregate accuracy contribute zero and the
//       divisor is (system count - 1). Within an equal-accuracy run the
//       aggregate with the better value of the column under evaluation
//       sits first, so the pair crossing into the run is taken against
//       the run's best value.
//
// system_mean is the convention that reproduces the published reference
// leaderboards this engine is calibrated against and is the default for
// leaderboard commands; skip_tied_pairs is the documented default of the
// low-level amrs() operation. The anchor metric's own AMRS is identically 1
// under every convention (tied anchor pairs are 0/0 and excluded; every
// retained ratio is exactly 1).
enum class AmrsConvention { skip_tied_pairs, merge_tied_rows, system_mean };

const char* convention_name(AmrsConvention c);
AmrsConvention parse_convention(const std::string& name);

struct WeightVector {
    // (metric name, weight), in declaration order.
    std::vector<std::pair<std::string, double>> entries;
    std::string anchor;  // the unique accuracy-class metric among the entries

    // Validates: known metric names, no duplicates, weights in [0,1] summing
    // to 1 within 1e-9, exactly one accuracy-class metric. The anchor weight
    // must be positive unless `require_positive_anchor` is false (weight
    // sweeps legitimately visit zero-accuracy-weight cells).
    static WeightVector make(std::vector<std::pair<std::string, double>> entries,
                             bool require_positive_anchor = true);

    // Parse "mrr_at_10=0.5,cost_usd_per_1m=0.25,latency_ms=0.25".
    static WeightVector parse(const std::string& text);

    // {mrr_at_10: 0.5, cost_usd_per_1m: 0.25, latency_ms: 0.25}.
    static WeightVector defaults();

    std::optional<double> weight_of(const std::string& metric) const;
    std::string describe() const;  // canonical "a=0.5,b=0.25" form
};

struct MatrixRow {
    std::string system;
    std::string hardware_desc;
    double anchor_value = 0.0;                // raw accuracy points
    std::map<std::string, double> oriented;   // weighted columns, lower-better negated
    std::map<std::string, double> raw;        // unoriented values for display/tie-breaks
};

struct Exclusion {
    std::string system;
    std::string hardware_desc;
    std::string reason;
};

struct MetricMatrix {
    std::string anchor;
    std::vector<std::string> columns;  // the weighted metric names
    std::vector<MatrixRow> rows;
};

// One row per record that carries every weighted metric; rows lacking one
// are reported through `excluded` (when non-null) rather than failing.
MetricMatrix build_matrix(const std::vector<submissions::SubmissionRecord>& records,
                          const WeightVector& weights,
                          std::vector<Exclusion>* excluded = nullptr);

// AMRS of one column against the anchor, over raw oriented values.
double amrs(const MetricMatrix& matrix, const std::string& metric,
            AmrsConvention convention = AmrsConvention::skip_tied_pairs);

// Per-row scores (same order as matrix.rows). Non-anchor columns are
// canonicalized by their maximum absolute value before AMRS and scoring —
// algebraically a no-op (AMRS is degree-1 homogeneous, so the factor
// cancels), but it makes exactly-representable metric rescalings produce
// bit-identical scores.
std::vector<double> dynascore(const MetricMatrix& matrix, const WeightVector& weights,
                              AmrsConvention convention);

struct RankedEntry {
    int rank = 0;
    std::string system;
    std::string hardware_desc;
    double score = 0.0;
    std::map<std::string, double> raw_metrics;
};

struct RankedLeaderboard {
    std::string strategy;  // human-readable descriptor
    std::optional<AmrsConvention> convention;  // set for score-aggregated boards
    std::vector<RankedEntry> entries;
    std::vector<Exclusion> excluded;
};

struct ScoreFilters {
    std::optional<double> min_accuracy;   // anchor metric >=
    std::optional<double> max_latency_ms;  // latency_ms <=
    std::optional<double> max_cost;        // cost_usd_per_1m <=
};

// Strategy 3: filter, score, rank by descending score. Ties break by higher
// anchor accuracy, then lower cost, then system/hardware name.
RankedLeaderboard rank_dynascore(const std::vector<submissions::SubmissionRecord>& records,
                                 const WeightVector& weights,
                                 const ScoreFilters& filters = {},
                                 AmrsConvention convention = AmrsConvention::system_mean);

// Strategy 1: keep entries whose efficiency metric is within `threshold`
// (raw units), rank by anchor accuracy descending.
RankedLeaderboard rank_by_accuracy_under_budget(
    const std::vector<submissions::SubmissionRecord>& records, const std::string& metric,
    double threshold, const std::string& anchor = "mrr_at_10");

// Strategy 2: keep entries with anchor accuracy >= floor, rank ascending by
// the efficiency metric's raw value.
RankedLeaderboard rank_by_efficiency_over_floor(
    const std::vector<submissions::SubmissionRecord>& records, double accuracy_floor,
    const std::string& metric, const std::string& anchor = "mrr_at_10");

struct ParetoPoint {
    std::string system;
    std::string hardware_desc;
    double x = 0.0;  // lower-better raw value (e.g. cost)
    double y = 0.0;  // higher-better raw value (e.g. accuracy)
    bool dominated = false;
};

// All points, sorted by x ascending (ties: y descending, then name), with
// dominance flags: a point is dominated iff another has x <= and y >= with
// at least one strict.
std::vector<ParetoPoint> pareto_frontier(
    const std::vector<submissions::SubmissionRecord>& records, const std::string& x_metric,
    const std::string& y_metric);

struct SweepCell {
    double w_accuracy = 0.0;
    double w_latency = 0.0;
    double w_cost = 0.0;
    bool scorable = false;
    std::string winner_system;
    std::string winner_hardware;
    double score = 0.0;
};

// Evaluate the winner over the grid {(w_acc, w_lat) multiples of grid_step,
// w_acc + w_lat <= 1}, with w_cost = 1 - w_acc - w_lat. Axes are fixed to
// (mrr_at_10, latency_ms, cost_usd_per_1m). Cells where scoring is
// undefined (e.g. a constant metric) are marked unscorable rather than
// aborting the sweep. Results are ordered by grid coordinates.
std::vector<SweepCell> weight_sweep(const std::vector<submissions::SubmissionRecord>& records,
                                    double grid_step,
                                    AmrsConvention convention = AmrsConvention::system_mean);

}  // namespace irledger::scoring

#include "core/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "core/numfmt.hpp"

namespace irledger::scoring {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double raw_or_inf(const MatrixRow& row, const std::string& metric) {
    auto it = row.raw.find(metric);
    return it == row.raw.end() ? std::numeric_limits<double>::infinity() : it->second;
}

// Shared ordering for scored boards: higher score first, ties broken by
// higher anchor accuracy, then lower cost, then lexical identity.
bool scored_before(const MatrixRow& a, double score_a, const MatrixRow& b, double score_b) {
    if (score_a != score_b) return score_a > score_b;
    if (a.anchor_value != b.anchor_value) return a.anchor_value > b.anchor_value;
    double ca = raw_or_inf(a, "cost_usd_per_1m");
    double cb = raw_or_inf(b, "cost_usd_per_1m");
    if (ca != cb) return ca < cb;
    if (a.system != b.system) return a.system < b.system;
    return a.hardware_desc < b.hardware_desc;
}

// One row of the pairing frame AMRS averages over.
struct FrameRow {
    double anchor = 0.0;
    std::map<std::string, double> cols;
};

// Build the accuracy-sorted frame for a convention. For skip_tied_pairs the
// frame is the entries themselves; merge_tied_rows collapses equal-accuracy
// entries by column means; system_mean collapses each system to its
// column-wise mean row.
std::vector<FrameRow> build_frame(const MetricMatrix& matrix, AmrsConvention convention) {
    struct Keyed {
        std::string system, hardware;
        FrameRow row;
    };
    std::vector<Keyed> entries;
    entries.reserve(matrix.rows.size());
    for (const auto& r : matrix.rows) {
        Keyed k;
        k.system = r.system;
        k.hardware = r.hardware_desc;
        k.row.anchor = r.anchor_value;
        k.row.cols = r.oriented;
        entries.push_back(std::move(k));
    }
    std::sort(entries.begin(), entries.end(), [](const Keyed& a, const Keyed& b) {
        if (a.row.anchor != b.row.anchor) return a.row.anchor < b.row.anchor;
        if (a.system != b.system) return a.system < b.system;
        return a.hardware < b.hardware;
    });

    if (convention == AmrsConvention::skip_tied_pairs) {
        std::vector<FrameRow> frame;
        frame.reserve(entries.size());
        for (auto& e : entries) frame.push_back(std::move(e.row));
        return frame;
    }

    if (convention == AmrsConvention::merge_tied_rows) {
        std::vector<FrameRow> frame;
        std::size_t i = 0;
        while (i < entries.size()) {
            std::size_t j = i;
            FrameRow merged;
            merged.anchor = entries[i].row.anchor;
            std::map<std::string, double> sums;
            while (j < entries.size() && entries[j].row.anchor == merged.anchor) {
                for (const auto& [name, v] : entries[j].row.cols) sums[name] += v;
                ++j;
            }
            double n = static_cast<double>(j - i);
            for (const auto& [name, total] : sums) merged.cols[name] = total / n;
            frame.push_back(std::move(merged));
            i = j;
        }
        return frame;
    }

    // system_mean: aggregate by system name, then sort the aggregates.
    std::map<std::string, std::pair<FrameRow, int>> by_system;
    for (const auto& e : entries) {
        auto& [sum, count] = by_system[e.system];
        sum.anchor += e.row.anchor;
        for (const auto& [name, v] : e.row.cols) sum.cols[name] += v;
        ++count;
    }
    struct Agg {
        std::string system;
        FrameRow row;
    };
    std::vector<Agg> aggregates;
    aggregates.reserve(by_system.size());
    for (auto& [system, entry] : by_system) {
        auto& [sum, count] = entry;
        FrameRow mean;
        mean.anchor = sum.anchor / count;
        for (const auto& [name, total] : sum.cols) mean.cols[name] = total / count;
        aggregates.push_back({system, std::move(mean)});
    }
    std::sort(aggregates.begin(), aggregates.end(), [](const Agg& a, const Agg& b) {
        if (a.row.anchor != b.row.anchor) return a.row.anchor < b.row.anchor;
        return a.system < b.system;
    });
    std::vector<FrameRow> frame;
    frame.reserve(aggregates.size());
    for (auto& a : aggregates) frame.push_back(std::move(a.row));
    return frame;
}

// Mean |delta column / delta anchor| over consecutive frame rows. Pairs with
// zero anchor delta are skipped when `skip_zero_delta` (the anchor's own
// column always uses this mode, which is why its AMRS is exactly 1), and
// otherwise contribute zero against a fixed divisor of (rows - 1).
//
// When `better_first_on_ties` is set, equal-anchor runs are re-ordered per
// column so the better (higher oriented) value sits first. The tied pairs
// themselves contribute zero either way, but the re-ordering decides which
// tied row abuts the next distinct anchor value, and the calibrated
// system-mean normalizers require that boundary pair to use the tie group's
// best value, not its lexically-first system.
double amrs_over_frame(std::vector<FrameRow> frame, const std::string& metric,
                       bool skip_zero_delta, bool better_first_on_ties, bool is_anchor) {
    if (frame.size() < 2)
        fail(errc::scoring, "AMRS needs at least two rows after aggregation, got " +
                                std::to_string(frame.size()));
    if (better_first_on_ties) {
        std::stable_sort(frame.begin(), frame.end(), [&](const FrameRow& a, const FrameRow& b) {
            if (a.anchor != b.anchor) return a.anchor < b.anchor;
            return a.cols.at(metric) > b.cols.at(metric);
        });
    }
    double sum = 0.0;
    long retained = 0;
    for (std::size_t i = 0; i + 1 < frame.size(); ++i) {
        double da = frame[i + 1].anchor - frame[i].anchor;
        if (da == 0.0) {
            if (skip_zero_delta) continue;
            ++retained;  // contributes zero
            continue;
        }
        // The anchor's marginal rate against itself is 1 by definition; an
        // aggregated frame's averaged anchor column can carry one-ulp error
        // from sum/count, so never reconstruct the identity through it.
        double dm = is_anchor ? da : frame[i + 1].cols.at(metric) - frame[i].cols.at(metric);
        sum += std::fabs(dm / da);
        ++retained;
    }
    if (retained == 0)
        fail(errc::scoring, "AMRS is undefined: fewer than two distinct anchor values");
    return sum / static_cast<double>(retained);
}

MetricMatrix canonicalized(const MetricMatrix& matrix) {
    MetricMatrix out = matrix;
    for (const auto& column : out.columns) {
        if (column == out.anchor) continue;
        double scale = 0.0;
        for (const auto& row : out.rows)
            scale = std::max(scale, std::fabs(row.oriented.at(column)));
        if (scale == 0.0) continue;  // constant-zero column; AMRS will reject it
        for (auto& row : out.rows) row.oriented.at(column) /= scale;
    }
    return out;
}

void require_column(const MetricMatrix& matrix, const std::string& metric) {
    if (std::find(matrix.columns.begin(), matrix.columns.end(), metric) == matrix.columns.end())
        fail(errc::validation, "metric \"" + metric + "\" is not a column of this matrix");
}

std::string entry_label(const submissions::SubmissionRecord& r) {
    return "\"" + r.system + "\" on \"" + r.hardware.description() + "\"";
}

}  // namespace

const char* convention_name(AmrsConvention c) {
    switch (c) {
        case AmrsConvention::skip_tied_pairs: return "skip-tied-pairs";
        case AmrsConvention::merge_tied_rows: return "merge-tied-rows";
        case AmrsConvention::system_mean: return "system-mean";
    }
    return "?";
}

AmrsConvention parse_convention(const std::string& name) {
    if (name == "skip-tied-pairs") return AmrsConvention::skip_tied_pairs;
    if (name == "merge-tied-rows") return AmrsConvention::merge_tied_rows;
    if (name == "system-mean") return AmrsConvention::system_mean;
    fail(errc::usage, "unknown tie convention \"" + name +
                          "\"; expected skip-tied-pairs, merge-tied-rows, or system-mean");
}

WeightVector WeightVector::make(std::vector<std::pair<std::string, double>> entries,
                                bool require_positive_anchor) {
    if (entries.empty()) fail(errc::validation, "weight vector is empty");
    WeightVector wv;
    wv.entries = std::move(entries);
    double sum = 0.0;
    std::set<std::string> seen;
    for (const auto& [name, weight] : wv.entries) {
        auto info = submissions::metric_info(name);  // rejects unknown metrics
        if (!seen.insert(name).second)
            fail(errc::validation, "metric \"" + name + "\" appears twice in weight vector");
        if (!std::isfinite(weight) || weight < 0.0)
            fail(errc::validation, "weight for \"" + name + "\" must be a finite value >= 0, got " +
                                       numfmt::shortest(weight));
        sum += weight;
        if (info.cls == submissions::MetricClass::accuracy) {
            if (!wv.anchor.empty())
                fail(errc::validation, "weight vector names two accuracy metrics (\"" + wv.anchor +
                                           "\" and \"" + name + "\"); exactly one anchor is required");
            wv.anchor = name;
        }
    }
    if (wv.anchor.empty())
        fail(errc::validation, "weight vector names no accuracy metric to anchor on");
    if (std::fabs(sum - 1.0) > kWeightSumTolerance)
        fail(errc::validation,
             "weights must sum to 1 (got " + numfmt::shortest(sum) + ")");
    if (require_positive_anchor && wv.weight_of(wv.anchor).value_or(0.0) <= 0.0)
        fail(errc::validation, "anchor metric \"" + wv.anchor + "\" must carry positive weight");
    return wv;
}

WeightVector WeightVector::parse(const std::string& text) {
    std::vector<std::pair<std::string, double>> entries;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part = trim(part);
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos || eq == 0)
            fail(errc::usage, "bad weight term \"" + part + "\"; expected metric=value");
        std::string name = trim(part.substr(0, eq));
        std::string value = trim(part.substr(eq + 1));
        double w;
        if (!numfmt::parse_double(value, w))
            fail(errc::usage, "bad weight value \"" + value + "\" for metric \"" + name + "\"");
        entries.emplace_back(name, w);
    }
    if (entries.empty()) fail(errc::usage, "empty weight specification");
    return make(std::move(entries));
}

WeightVector WeightVector::defaults() {
    return make({{"mrr_at_10", 0.5}, {"cost_usd_per_1m", 0.25}, {"latency_ms", 0.25}});
}

std::optional<double> WeightVector::weight_of(const std::string& metric) const {
    for (const auto& [name, w] : entries)
        if (name == metric) return w;
    return std::nullopt;
}

std::string WeightVector::describe() const {
    std::string out;
    for (const auto& [name, w] : entries) {
        if (!out.empty()) out += ",";
        out += name + "=" + numfmt::shortest(w);
    }
    return out;
}

MetricMatrix build_matrix(const std::vector<submissions::SubmissionRecord>& records,
                          const WeightVector& weights, std::vector<Exclusion>* excluded) {
    MetricMatrix matrix;
    matrix.anchor = weights.anchor;
    for (const auto& [name, _] : weights.entries) matrix.columns.push_back(name);

    for (const auto& rec : records) {
        MatrixRow row;
        row.system = rec.system;
        row.hardware_desc = rec.hardware.description();
        row.raw = rec.metrics;
        std::string missing;
        for (const auto& column : matrix.columns) {
            auto value = rec.metric(column);
            if (!value) {
                missing = column;
                break;
            }
            auto info = submissions::metric_info(column);
            double oriented = info.orientation == submissions::Orientation::lower_better
                                  ? -*value
                                  : *value;
            row.oriented[column] = oriented;
            if (column == matrix.anchor) row.anchor_value = *value;
        }
        if (!missing.empty()) {
            if (excluded)
                excluded->push_back(
                    {rec.system, rec.hardware.description(), "missing metric \"" + missing + "\""});
            continue;
        }
        matrix.rows.push_back(std::move(row));
    }
    return matrix;
}

double amrs(const MetricMatrix& matrix, const std::string& metric, AmrsConvention convention) {
    require_column(matrix, metric);
    auto frame = build_frame(matrix, convention);
    bool system_mean = convention == AmrsConvention::system_mean;
    bool anchor = metric == matrix.anchor;
    bool skip = anchor || !system_mean;
    return amrs_over_frame(std::move(frame), metric, skip, system_mean, anchor);
}

std::vector<double> dynascore(const MetricMatrix& matrix, const WeightVector& weights,
                              AmrsConvention convention) {
    for (const auto& [name, _] : weights.entries) require_column(matrix, name);
    MetricMatrix canon = canonicalized(matrix);
    auto frame = build_frame(canon, convention);

    // A zero-weight column contributes nothing to any score, so its
    // regret normalizer is never needed; computing it anyway would make a
    // degenerate column (all values tied) poison weightings that ignore it.
    std::map<std::string, double> normalizer;
    bool system_mean = convention == AmrsConvention::system_mean;
    for (const auto& [name, weight] : weights.entries) {
        if (weight == 0.0) continue;
        bool anchor = name == canon.anchor;
        bool skip = anchor || !system_mean;
        double a = amrs_over_frame(frame, name, skip, system_mean, anchor);
        if (a == 0.0)
            fail(errc::scoring, "AMRS of \"" + name + "\" is zero; scores are undefined");
        normalizer[name] = a;
    }

    std::vector<double> scores;
    scores.reserve(canon.rows.size());
    for (const auto& row : canon.rows) {
        double s = 0.0;
        for (const auto& [name, weight] : weights.entries) {
            if (weight == 0.0) continue;
            s += weight * row.oriented.at(name) / normalizer.at(name);
        }
        scores.push_back(s);
    }
    return scores;
}

namespace {

RankedLeaderboard assemble_board(std::string strategy, std::optional<AmrsConvention> convention,
                                 std::vector<std::pair<const MatrixRow*, double>> scored,
                                 std::vector<Exclusion> excluded) {
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        return scored_before(*a.first, a.second, *b.first, b.second);
    });
    RankedLeaderboard board;
    board.strategy = std::move(strategy);
    board.convention = convention;
    board.excluded = std::move(excluded);
    int rank = 0;
    for (const auto& [row, score] : scored) {
        RankedEntry e;
        e.rank = ++rank;
        e.system = row->system;
        e.hardware_desc = row->hardware_desc;
        e.score = score;
        e.raw_metrics = row->raw;
        board.entries.push_back(std::move(e));
    }
    return board;
}

}  // namespace

RankedLeaderboard rank_dynascore(const std::vector<submissions::SubmissionRecord>& records,
                                 const WeightVector& weights, const ScoreFilters& filters,
                                 AmrsConvention convention) {
    std::vector<Exclusion> excluded;
    std::vector<submissions::SubmissionRecord> kept;
    kept.reserve(records.size());
    for (const auto& rec : records) {
        auto reject = [&](const std::string& reason) {
            excluded.push_back({rec.system, rec.hardware.description(), reason});
        };
        if (filters.min_accuracy) {
            auto a = rec.metric(weights.anchor);
            if (!a) {
                reject("missing metric \"" + weights.anchor + "\" required by accuracy filter");
                continue;
            }
            if (*a < *filters.min_accuracy) {
                reject(weights.anchor + " " + numfmt::shortest(*a) + " below minimum " +
                       numfmt::shortest(*filters.min_accuracy));
                continue;
            }
        }
        if (filters.max_latency_ms) {
            auto v = rec.metric("latency_ms");
            if (!v) {
                reject("missing metric \"latency_ms\" required by latency filter");
                continue;
            }
            if (*v > *filters.max_latency_ms) {
                reject("latency_ms " + numfmt::shortest(*v) + " above maximum " +
                       numfmt::shortest(*filters.max_latency_ms));
                continue;
            }
        }
        if (filters.max_cost) {
            auto v = rec.metric("cost_usd_per_1m");
            if (!v) {
                reject("missing metric \"cost_usd_per_1m\" required by cost filter");
                continue;
            }
            if (*v > *filters.max_cost) {
                reject("cost_usd_per_1m " + numfmt::shortest(*v) + " above maximum " +
                       numfmt::shortest(*filters.max_cost));
                continue;
            }
        }
        kept.push_back(rec);
    }

    MetricMatrix matrix = build_matrix(kept, weights, &excluded);
    if (matrix.rows.empty())
        fail(errc::empty_result, "no entries remain after filters and exclusions");
    auto scores = dynascore(matrix, weights, convention);

    std::vector<std::pair<const MatrixRow*, double>> scored;
    scored.reserve(matrix.rows.size());
    for (std::size_t i = 0; i < matrix.rows.size(); ++i)
        scored.emplace_back(&matrix.rows[i], scores[i]);
    return assemble_board("weighted score (" + weights.describe() + ")", convention,
                          std::move(scored), std::move(excluded));
}

RankedLeaderboard rank_by_accuracy_under_budget(
    const std::vector<submissions::SubmissionRecord>& records, const std::string& metric,
    double threshold, const std::string& anchor) {
    auto metric_i = submissions::metric_info(metric);
    if (metric_i.cls != submissions::MetricClass::efficiency)
        fail(errc::validation, "budget ranking needs an efficiency metric, got \"" + metric + "\"");
    auto anchor_i = submissions::metric_info(anchor);
    if (anchor_i.cls != submissions::MetricClass::accuracy)
        fail(errc::validation, "budget ranking needs an accuracy anchor, got \"" + anchor + "\"");
    if (!std::isfinite(threshold) && threshold != std::numeric_limits<double>::infinity())
        fail(errc::validation, "budget threshold must be finite or unbounded");

    std::vector<Exclusion> excluded;
    std::vector<MatrixRow> rows;
    for (const auto& rec : records) {
        auto a = rec.metric(anchor);
        auto m = rec.metric(metric);
        if (!a) {
            excluded.push_back(
                {rec.system, rec.hardware.description(), "missing metric \"" + anchor + "\""});
            continue;
        }
        if (!m) {
            excluded.push_back(
                {rec.system, rec.hardware.description(), "missing metric \"" + metric + "\""});
            continue;
        }
        if (*m > threshold) {
            excluded.push_back({rec.system, rec.hardware.description(),
                                metric + " " + numfmt::shortest(*m) + " exceeds budget " +
                                    numfmt::shortest(threshold)});
            continue;
        }
        MatrixRow row;
        row.system = rec.system;
        row.hardware_desc = rec.hardware.description();
        row.anchor_value = *a;
        row.raw = rec.metrics;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(errc::empty_result, "no entries satisfy the budget");

    // Sort by accuracy descending; scored_before already does that when the
    // score is the anchor value itself.
    std::vector<std::pair<const MatrixRow*, double>> scored;
    scored.reserve(rows.size());
    for (const auto& r : rows) scored.emplace_back(&r, r.anchor_value);
    return assemble_board(
        "highest " + anchor + " with " + metric + " <= " + numfmt::shortest(threshold),
        std::nullopt, std::move(scored), std::move(excluded));
}

RankedLeaderboard rank_by_efficiency_over_floor(
    const std::vector<submissions::SubmissionRecord>& records, double accuracy_floor,
    const std::string& metric, const std::string& anchor) {
    auto metric_i = submissions::metric_info(metric);
    if (metric_i.cls != submissions::MetricClass::efficiency)
        fail(errc::validation, "floor ranking needs an efficiency metric, got \"" + metric + "\"");
    auto anchor_i = submissions::metric_info(anchor);
    if (anchor_i.cls != submissions::MetricClass::accuracy)
        fail(errc::validation, "floor ranking needs an accuracy anchor, got \"" + anchor + "\"");
    if (!std::isfinite(accuracy_floor))
        fail(errc::validation, "accuracy floor must be finite");

    std::vector<Exclusion> excluded;
    std::vector<MatrixRow> rows;
    for (const auto& rec : records) {
        auto a = rec.metric(anchor);
        auto m = rec.metric(metric);
        if (!a) {
            excluded.push_back(
                {rec.system, rec.hardware.description(), "missing metric \"" + anchor + "\""});
            continue;
        }
        if (!m) {
            excluded.push_back(
                {rec.system, rec.hardware.description(), "missing metric \"" + metric + "\""});
            continue;
        }
        if (*a < accuracy_floor) {
            excluded.push_back({rec.system, rec.hardware.description(),
                                anchor + " " + numfmt::shortest(*a) + " below floor " +
                                    numfmt::shortest(accuracy_floor)});
            continue;
        }
        MatrixRow row;
        row.system = rec.system;
        row.hardware_desc = rec.hardware.description();
        row.anchor_value = *a;
        row.raw = rec.metrics;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(errc::empty_result, "no entries reach the accuracy floor");

    // Lower efficiency value is better: sort ascending on the metric, then
    // higher accuracy, then lexical identity.
    std::vector<const MatrixRow*> order;
    order.reserve(rows.size());
    for (const auto& r : rows) order.push_back(&r);
    std::sort(order.begin(), order.end(), [&](const MatrixRow* a, const MatrixRow* b) {
        double ma = a->raw.at(metric), mb = b->raw.at(metric);
        if (ma != mb) return ma < mb;
        if (a->anchor_value != b->anchor_value) return a->anchor_value > b->anchor_value;
        if (a->system != b->system) return a->system < b->system;
        return a->hardware_desc < b->hardware_desc;
    });

    RankedLeaderboard board;
    board.strategy = "lowest " + metric + " with " + anchor + " >= " +
                     numfmt::shortest(accuracy_floor);
    board.excluded = std::move(excluded);
    int rank = 0;
    for (const MatrixRow* row : order) {
        RankedEntry e;
        e.rank = ++rank;
        e.system = row->system;
        e.hardware_desc = row->hardware_desc;
        e.score = row->raw.at(metric);
        e.raw_metrics = row->raw;
        board.entries.push_back(std::move(e));
    }
    return board;
}

std::vector<ParetoPoint> pareto_frontier(
    const std::vector<submissions::SubmissionRecord>& records, const std::string& x_metric,
    const std::string& y_metric) {
    auto xi = submissions::metric_info(x_metric);
    auto yi = submissions::metric_info(y_metric);
    if (xi.orientation != submissions::Orientation::lower_better)
        fail(errc::usage,
             "frontier x axis must be a lower-is-better metric, got \"" + x_metric + "\"");
    if (yi.orientation != submissions::Orientation::higher_better)
        fail(errc::usage,
             "frontier y axis must be a higher-is-better metric, got \"" + y_metric + "\"");
    if (records.empty()) fail(errc::empty_result, "no entries to place on the frontier");

    std::vector<ParetoPoint> points;
    points.reserve(records.size());
    for (const auto& rec : records) {
        auto x = rec.metric(x_metric);
        auto y = rec.metric(y_metric);
        if (!x || !y)
            fail(errc::validation, "entry " + entry_label(rec) + " lacks metric \"" +
                                       (x ? y_metric : x_metric) + "\"");
        points.push_back({rec.system, rec.hardware.description(), *x, *y, false});
    }

    std::sort(points.begin(), points.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y > b.y;
        if (a.system != b.system) return a.system < b.system;
        return a.hardware_desc < b.hardware_desc;
    });

    // Sweep left to right: a point is dominated iff something strictly
    // cheaper is at least as good, or something equally cheap is strictly
    // better. Within one x value the group leader (max y) is first.
    double best_y_cheaper = -std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (i < points.size()) {
        std::size_t j = i;
        double group_max_y = points[i].y;
        while (j < points.size() && points[j].x == points[i].x) {
            points[j].dominated =
                best_y_cheaper >= points[j].y || points[j].y < group_max_y;
            ++j;
        }
        best_y_cheaper = std::max(best_y_cheaper, group_max_y);
        i = j;
    }
    return points;
}

std::vector<SweepCell> weight_sweep(const std::vector<submissions::SubmissionRecord>& records,
                                    double grid_step, AmrsConvention convention) {
    if (!std::isfinite(grid_step) || grid_step <= 0.0 || grid_step > 0.5)
        fail(errc::usage, "grid step must lie in (0, 0.5], got " + numfmt::shortest(grid_step));
    // Work on an integer micro-grid so cell weights render as exact short
    // decimals (0.05, 0.15, ...) instead of accumulated floating drift.
    constexpr long long kOne = 1'000'000;
    long long step_micro = std::llround(grid_step * 1e6);
    if (step_micro <= 0 || std::fabs(grid_step * 1e6 - static_cast<double>(step_micro)) > 1e-3)
        fail(errc::usage, "grid step must be a multiple of 0.000001");

    WeightVector probe_columns = WeightVector::make(
        {{"mrr_at_10", 1.0}, {"latency_ms", 0.0}, {"cost_usd_per_1m", 0.0}});
    MetricMatrix matrix = build_matrix(records, probe_columns, nullptr);

    std::vector<SweepCell> cells;
    for (long long ia = 0; ia * step_micro <= kOne; ++ia) {
        for (long long il = 0; ia * step_micro + il * step_micro <= kOne; ++il) {
            long long micro_acc = ia * step_micro;
            long long micro_lat = il * step_micro;
            long long micro_cost = kOne - micro_acc - micro_lat;
            SweepCell cell;
            cell.w_accuracy = static_cast<double>(micro_acc) / 1e6;
            cell.w_latency = static_cast<double>(micro_lat) / 1e6;
            cell.w_cost = static_cast<double>(micro_cost) / 1e6;
            try {
                auto weights = WeightVector::make({{"mrr_at_10", cell.w_accuracy},
                                                   {"latency_ms", cell.w_latency},
                                                   {"cost_usd_per_1m", cell.w_cost}},
                                                  /*require_positive_anchor=*/false);
                auto scores = dynascore(matrix, weights, convention);
                std::size_t best = 0;
                for (std::size_t r = 1; r < matrix.rows.size(); ++r)
                    if (scored_before(matrix.rows[r], scores[r], matrix.rows[best], scores[best]))
                        best = r;
                cell.scorable = true;
                cell.winner_system = matrix.rows[best].system;
                cell.winner_hardware = matrix.rows[best].hardware_desc;
                cell.score = scores[best];
            } catch (const error&) {
                cell.scorable = false;
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

}  // namespace irledger::scoring

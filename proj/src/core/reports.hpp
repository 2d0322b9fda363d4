#pragma once
// Report emitters: leaderboard tables, Pareto point sets, and sweep grids in
// byte-stable markdown / CSV / JSON. Markdown rounds scores to 3 decimals
// for table display; CSV and JSON carry full precision.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/costing.hpp"
#include "core/irmetrics.hpp"
#include "core/scoring.hpp"

namespace irledger::reports {

enum class Format { markdown, csv, json };

Format parse_format(const std::string& name);  // usage error on unknown names

struct LeaderboardDocument {
    std::string title;
    std::string strategy;
    std::vector<std::string> metric_columns;  // raw metric columns, display order
    std::vector<scoring::RankedEntry> rows;
    std::vector<std::string> footnotes;  // convention, catalog snapshot, exclusions
};

// Assemble a document from a ranked board. Footnotes always name the AMRS
// tie convention in force and the pricing catalog snapshot (or its absence),
// then one line per excluded entry — the calibration decisions stay
// auditable on every rendering.
LeaderboardDocument make_document(const std::string& title,
                                  const scoring::RankedLeaderboard& board,
                                  const std::optional<std::string>& catalog_snapshot,
                                  scoring::AmrsConvention convention_in_force);

// Deterministic serialization of a document. CSV carries the data rows only;
// markdown and JSON also carry the strategy line and footnotes.
std::string render(const LeaderboardDocument& doc, Format format);

// Pareto points with dominance flags, x/y columns named after the metrics.
std::string render_pareto(const std::vector<scoring::ParetoPoint>& points,
                          const std::string& x_metric, const std::string& y_metric,
                          Format format);

// Sweep grid as CSV with the fixed header
// "w_acc,w_latency,w_cost,winner_system,winner_hardware,score"; unscorable
// cells leave the winner and score fields empty.
std::string render_sweep_csv(const std::vector<scoring::SweepCell>& cells);

// Accuracy evaluation as "name: value" text or a JSON object.
std::string render_eval(const irmetrics::EvalReport& report, Format format);

// Cost audit lines, one per record:
// "system,hardware,latency_ms,hourly_usd,usd_per_1m" with the dollar figure
// in display (cent-rounded) form. Records must already resolve against the
// catalog; raises like annotate_costs otherwise.
std::string render_cost_audit(const std::vector<submissions::SubmissionRecord>& records,
                              const catalog::PricingCatalog& cat,
                              std::int64_t query_count);

}  // namespace irledger::reports

#include "core/reports.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/numfmt.hpp"
#include "core/submissions.hpp"

namespace irledger::reports {

namespace {

// RFC 4180: quote a field iff it contains a comma, quote, or line break;
// embedded quotes double.
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string metric_cell(const scoring::RankedEntry& row, const std::string& metric) {
    auto it = row.raw_metrics.find(metric);
    if (it == row.raw_metrics.end()) return "";
    return numfmt::shortest(it->second);
}

nlohmann::ordered_json row_json(const scoring::RankedEntry& row,
                                const std::vector<std::string>& metric_columns) {
    nlohmann::ordered_json r;
    r["rank"] = row.rank;
    r["system"] = row.system;
    r["hardware"] = row.hardware_desc;
    r["score"] = row.score;
    nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
    for (const auto& name : metric_columns) {
        auto it = row.raw_metrics.find(name);
        if (it != row.raw_metrics.end()) metrics[name] = it->second;
    }
    r["metrics"] = std::move(metrics);
    return r;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "markdown") return Format::markdown;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    fail(errc::usage, "unknown format \"" + name + "\"; expected markdown, csv, or json");
}

LeaderboardDocument make_document(const std::string& title,
                                  const scoring::RankedLeaderboard& board,
                                  const std::optional<std::string>& catalog_snapshot,
                                  scoring::AmrsConvention convention_in_force) {
    LeaderboardDocument doc;
    doc.title = title;
    doc.strategy = board.strategy;
    doc.rows = board.entries;

    std::set<std::string> names;
    for (const auto& row : doc.rows)
        for (const auto& [name, _] : row.raw_metrics) names.insert(name);
    doc.metric_columns.assign(names.begin(), names.end());
    std::sort(doc.metric_columns.begin(), doc.metric_columns.end(),
              [](const std::string& a, const std::string& b) {
                  int ra = submissions::metric_display_rank(a);
                  int rb = submissions::metric_display_rank(b);
                  return ra != rb ? ra < rb : a < b;
              });

    doc.footnotes.push_back(std::string("AMRS tie convention in force: ") +
                            scoring::convention_name(board.convention.value_or(convention_in_force)));
    doc.footnotes.push_back(catalog_snapshot
                                ? "pricing catalog snapshot: " + *catalog_snapshot
                                : std::string("pricing catalog: none in force"));
    for (const auto& ex : board.excluded)
        doc.footnotes.push_back("excluded \"" + ex.system + "\" on \"" + ex.hardware_desc +
                                "\": " + ex.reason);
    return doc;
}

std::string render(const LeaderboardDocument& doc, Format format) {
    if (format == Format::markdown) {
        std::string out = "# " + doc.title + "\n\n";
        out += "strategy: " + doc.strategy + "\n\n";
        out += "| rank | system | hardware | score |";
        for (const auto& m : doc.metric_columns) out += " " + m + " |";
        out += "\n|---:|---|---|---:|";
        for (std::size_t i = 0; i < doc.metric_columns.size(); ++i) out += "---:|";
        out += "\n";
        for (const auto& row : doc.rows) {
            out += "| " + std::to_string(row.rank) + " | " + row.system + " | " +
                   row.hardware_desc + " | " + numfmt::fixed(row.score, 3) + " |";
            for (const auto& m : doc.metric_columns) out += " " + metric_cell(row, m) + " |";
            out += "\n";
        }
        if (!doc.footnotes.empty()) {
            out += "\n";
            for (const auto& note : doc.footnotes) out += "- " + note + "\n";
        }
        return out;
    }
    if (format == Format::csv) {
        std::string out = "rank,system,hardware,score";
        for (const auto& m : doc.metric_columns) out += "," + csv_field(m);
        out += "\n";
        for (const auto& row : doc.rows) {
            out += std::to_string(row.rank) + "," + csv_field(row.system) + "," +
                   csv_field(row.hardware_desc) + "," + numfmt::shortest(row.score);
            for (const auto& m : doc.metric_columns) out += "," + metric_cell(row, m);
            out += "\n";
        }
        return out;
    }
    nlohmann::ordered_json j;
    j["title"] = doc.title;
    j["strategy"] = doc.strategy;
    j["metric_columns"] = doc.metric_columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) j["rows"].push_back(row_json(row, doc.metric_columns));
    j["footnotes"] = doc.footnotes;
    return j.dump(2) + "\n";
}

std::string render_pareto(const std::vector<scoring::ParetoPoint>& points,
                          const std::string& x_metric, const std::string& y_metric,
                          Format format) {
    if (format == Format::csv) {
        std::string out =
            "system,hardware," + csv_field(x_metric) + "," + csv_field(y_metric) + ",dominated\n";
        for (const auto& p : points)
            out += csv_field(p.system) + "," + csv_field(p.hardware_desc) + "," +
                   numfmt::shortest(p.x) + "," + numfmt::shortest(p.y) + "," +
                   (p.dominated ? "true" : "false") + "\n";
        return out;
    }
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["x_metric"] = x_metric;
        j["y_metric"] = y_metric;
        j["points"] = nlohmann::ordered_json::array();
        for (const auto& p : points) {
            nlohmann::ordered_json pj;
            pj["system"] = p.system;
            pj["hardware"] = p.hardware_desc;
            pj[x_metric] = p.x;
            pj[y_metric] = p.y;
            pj["dominated"] = p.dominated;
            j["points"].push_back(std::move(pj));
        }
        return j.dump(2) + "\n";
    }
    std::string out = "| system | hardware | " + x_metric + " | " + y_metric + " | frontier |\n";
    out += "|---|---|---:|---:|---|\n";
    for (const auto& p : points)
        out += "| " + p.system + " | " + p.hardware_desc + " | " + numfmt::shortest(p.x) + " | " +
               numfmt::shortest(p.y) + " | " + (p.dominated ? "" : "yes") + " |\n";
    return out;
}

std::string render_sweep_csv(const std::vector<scoring::SweepCell>& cells) {
    std::string out = "w_acc,w_latency,w_cost,winner_system,winner_hardware,score\n";
    for (const auto& c : cells) {
        out += numfmt::shortest(c.w_accuracy) + "," + numfmt::shortest(c.w_latency) + "," +
               numfmt::shortest(c.w_cost) + ",";
        if (c.scorable)
            out += csv_field(c.winner_system) + "," + csv_field(c.winner_hardware) + "," +
                   numfmt::shortest(c.score);
        else
            out += ",,";
        out += "\n";
    }
    return out;
}

std::string render_cost_audit(const std::vector<submissions::SubmissionRecord>& records,
                              const catalog::PricingCatalog& cat,
                              std::int64_t query_count) {
    std::string out = "system,hardware,latency_ms,hourly_usd,usd_per_1m\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        auto latency = rec.metric("latency_ms");
        if (!latency)
            fail(errc::validation, "record " + std::to_string(i) + " (" + rec.system + ", " +
                                       rec.hardware.description() +
                                       "): missing latency_ms, cannot cost");
        const auto& inst = catalog::find_instance(cat, rec.hardware.instance);
        auto quote = costing::cost_for_queries(*latency, inst.hourly_usd, query_count);
        out += csv_field(rec.system) + "," + csv_field(rec.hardware.description()) + "," +
               numfmt::shortest(*latency) + "," + numfmt::shortest(inst.hourly_usd) + "," +
               costing::format_usd(quote.usd) + "\n";
    }
    return out;
}

std::string render_eval(const irmetrics::EvalReport& report, Format format) {
    std::string depth = std::to_string(report.k);
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["k"] = report.k;
        j["query_count"] = report.query_count;
        j["mrr_at_" + depth] = report.mrr;
        j["success_at_" + depth] = report.success;
        j["warnings"] = report.warnings;
        return j.dump(2) + "\n";
    }
    if (format == Format::markdown || format == Format::csv) {
        // Both text-y formats share the plain key: value layout.
        std::string out;
        out += "queries: " + std::to_string(report.query_count) + "\n";
        out += "mrr_at_" + depth + ": " + numfmt::shortest(report.mrr) + "\n";
        out += "success_at_" + depth + ": " + numfmt::shortest(report.success) + "\n";
        for (const auto& w : report.warnings) out += "warning: " + w + "\n";
        return out;
    }
    fail(errc::usage, "unsupported eval format");
}

}  // namespace irledger::reports

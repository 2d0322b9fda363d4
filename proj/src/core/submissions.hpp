#pragma once
// Measurement records that populate leaderboards: schema, validation, JSONL
// persistence, and querying. One record = one (system, dataset, hardware)
// measurement row; metrics are a sparse map (absent means unreported, never
// zero).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/catalog.hpp"

namespace irledger::submissions {

enum class Orientation { higher_better, lower_better };
enum class MetricClass { accuracy, efficiency };

struct MetricInfo {
    Orientation orientation;
    MetricClass cls;
};

// Classify a metric name. Known names: "mrr_at_<k>" and "success_at_<k>"
// (higher-better accuracy), "latency_ms", "cost_usd_per_1m" and
// "index_size_gib" (lower-better efficiency). Unknown names raise a
// validation error: scoring needs orientation/class metadata, so records may
// not carry unclassifiable metrics.
MetricInfo metric_info(const std::string& name);
bool is_known_metric(const std::string& name);
bool is_accuracy_metric(const std::string& name);

// Canonical display/serialization order: accuracy metrics before the
// efficiency trio (latency, cost, index size), alphabetical within a group.
// Lower rank sorts first; used by record serialization and report columns.
int metric_display_rank(const std::string& name);

struct HardwareConfig {
    std::string instance;
    int gpus_used = 0;
    int cpu_threads_used = 0;
    int ram_gib_available = 0;

    // Human-readable leaderboard form: "16 CPU, 32 GB memory",
    // "1 GPU, 1 CPU, 4 GB memory" (GPU part omitted when zero).
    std::string description() const;

    friend bool operator==(const HardwareConfig&, const HardwareConfig&) = default;
    friend std::strong_ordering operator<=>(const HardwareConfig&,
                                            const HardwareConfig&) = default;
};

enum class Provenance { reported, measured };

const char* provenance_name(Provenance p);

struct SubmissionRecord {
    std::string system;
    std::string dataset;
    HardwareConfig hardware;
    std::map<std::string, double> metrics;
    Provenance provenance = Provenance::reported;
    std::string source;

    std::optional<double> metric(const std::string& name) const;
};

// Enforce every SubmissionRecord invariant; with a catalog, additionally
// resolve the instance name and bounds-check used resources against its
// shape. `context` prefixes error messages (e.g. "line 7").
void validate(const SubmissionRecord& rec, const catalog::PricingCatalog* cat,
              const std::string& context);

// Parse + validate one JSONL line (exact keys, unknown keys rejected).
SubmissionRecord parse_record(const std::string& json_line,
                              const catalog::PricingCatalog* cat,
                              const std::string& context);

// Canonical one-line serialization (stable key and metric order).
std::string to_jsonl_line(const SubmissionRecord& rec);

// Read a JSONL file; validates every record and rejects duplicate
// (system, dataset, hardware) triples within the file.
std::vector<SubmissionRecord> ingest(const std::string& path,
                                     const catalog::PricingCatalog* cat);

// Append records to a JSONL store (created if absent), atomically per
// record; raises on a (system, dataset, hardware) triple already present.
// Returns the number appended.
std::size_t store_append(const std::string& store_path,
                         const std::vector<SubmissionRecord>& records);

struct QueryFilter {
    std::optional<std::string> dataset;
    std::optional<std::string> system;
};

// Load a store and return records matching all supplied filter fields, in
// insertion order. A missing store file yields an empty result.
std::vector<SubmissionRecord> query(const std::string& store_path,
                                    const QueryFilter& filter);

// In-memory variant of query's filter step.
std::vector<SubmissionRecord> filter_records(const std::vector<SubmissionRecord>& records,
                                             const QueryFilter& filter);

}  // namespace irledger::submissions

#pragma once
// Latency and throughput probing of a live retrieval endpoint.
//
// Latency mode is strictly single-in-flight: the next request starts only
// after the previous response has been fully received. A run executes
// `warmup` untimed requests, then `trials` passes over the same fixed sample
// of queries, timing each request with a monotonic clock from request
// serialization through response decoding. Throughput mode instead keeps
// exactly `batch_size` requests in flight and reports completed queries per
// wall-clock second; the two modes never share a timing session.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/irmetrics.hpp"
#include "core/submissions.hpp"

namespace irledger::probe {

struct ProbeConfig {
    std::string endpoint;       // e.g. "http://127.0.0.1:8080"
    std::string queries_path;   // one query text per line
    int sample_size = 1000;     // queries per trial (first N non-empty lines)
    int trials = 5;
    int warmup = 10;            // untimed requests before the first trial
    int k = 10;                 // results requested per query
    int timeout_ms = 30000;
    std::string system;         // identity echoed into emitted submissions
    std::string dataset;
    submissions::HardwareConfig hardware;  // declared, on the operator's honor
};

struct ProbeReport {
    ProbeConfig config;                    // echo of what ran
    std::vector<double> trial_mean_ms;     // one entry per trial
    double overall_mean_ms = 0.0;          // mean over all successful samples
    double p50_ms = 0.0, p95_ms = 0.0, p99_ms = 0.0;  // nearest-rank percentiles
    long queries_executed = 0;             // timed requests issued
    long failures = 0;
    std::vector<std::string> failure_reasons;  // first few, for diagnosis
    std::string started_utc;               // ISO-8601, seconds precision
    std::string finished_utc;

    // Statistics are trustworthy only when every timed request succeeded.
    bool usable() const { return failures == 0 && queries_executed > 0; }
};

// Aggregate raw per-query latencies into the report statistics. Exposed so
// the aggregation itself is testable without a live endpoint; `samples` is
// one vector per trial, successful measurements only.
void summarize(ProbeReport& report, const std::vector<std::vector<double>>& samples);

// Run the latency protocol against the endpoint. Connection failures during
// warm-up abort with a network error (nothing is timed yet); failures during
// the timed phase are recorded in the report and the run continues.
ProbeReport run_probe(const ProbeConfig& config);

// Keep `batch_size` concurrent requests in flight over trials × sample_size
// total queries; returns completed queries per second. Any timed-phase
// failure raises a network error — a throughput figure over partial
// completions would be meaningless.
double measure_throughput(const ProbeConfig& config, int batch_size);

// Build a measured-provenance submission from a usable probe report and an
// accuracy evaluation of the same run's output. `eval_dataset` is the
// dataset tag the evaluation was computed against and must match the probe
// config's; the mismatch guard keeps latency and accuracy from drifting onto
// different datasets.
submissions::SubmissionRecord emit_submission(const ProbeReport& report,
                                              const irmetrics::EvalReport& accuracy,
                                              const std::string& eval_dataset);

// Probe report serialized as JSON (fields verbatim, stable key order).
std::string report_to_json(const ProbeReport& report);

}  // namespace irledger::probe

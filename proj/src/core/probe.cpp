#include "core/probe.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "core/errors.hpp"
#include "core/numfmt.hpp"

namespace irledger::probe {

namespace {

using json = nlohmann::json;

constexpr std::size_t kMaxRecordedReasons = 20;

void validate_config(const ProbeConfig& c) {
    if (c.endpoint.empty()) fail(errc::validation, "probe endpoint must not be empty");
    if (c.queries_path.empty()) fail(errc::validation, "probe query file must not be empty");
    if (c.sample_size < 1)
        fail(errc::validation, "sample size must be >= 1, got " + std::to_string(c.sample_size));
    if (c.trials < 1)
        fail(errc::validation, "trial count must be >= 1, got " + std::to_string(c.trials));
    if (c.warmup < 0)
        fail(errc::validation, "warm-up count must be >= 0, got " + std::to_string(c.warmup));
    if (c.k < 1) fail(errc::validation, "k must be >= 1, got " + std::to_string(c.k));
    if (c.timeout_ms <= 0)
        fail(errc::validation, "timeout must be positive, got " + std::to_string(c.timeout_ms));
}

// First sample_size non-empty lines, fixed order for every trial.
std::vector<std::string> load_queries(const std::string& path, int sample_size) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open query file \"" + path + "\"");
    std::vector<std::string> queries;
    std::string line;
    while (static_cast<int>(queries.size()) < sample_size && std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) queries.push_back(line);
    }
    if (queries.empty()) fail(errc::validation, "query file \"" + path + "\" has no queries");
    if (static_cast<int>(queries.size()) < sample_size)
        fail(errc::validation, "query file \"" + path + "\" has only " +
                                   std::to_string(queries.size()) + " queries, need sample size " +
                                   std::to_string(sample_size));
    return queries;
}

std::string iso_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

httplib::Client make_client(const ProbeConfig& c) {
    httplib::Client cli(c.endpoint);
    time_t sec = c.timeout_ms / 1000;
    time_t usec = (c.timeout_ms % 1000) * 1000;
    cli.set_connection_timeout(sec, usec);
    cli.set_read_timeout(sec, usec);
    cli.set_write_timeout(sec, usec);
    cli.set_keep_alive(true);
    // Nagle coalescing would add segment-timer delays to every measured
    // request; a latency probe must see the wire, not the batching heuristic.
    cli.set_tcp_nodelay(true);
    return cli;
}

struct RequestOutcome {
    bool ok = false;
    double latency_ms = 0.0;
    std::string reason;
};

// One timed request. The span covers request serialization through response
// decoding — the user-perceived "result returned" boundary.
RequestOutcome timed_request(httplib::Client& cli, const std::string& query, int k) {
    RequestOutcome out;
    auto start = std::chrono::steady_clock::now();
    std::string body = json{{"query", query}, {"k", k}}.dump();
    auto res = cli.Post("/search", body, "application/json");
    if (!res) {
        out.reason = "transport: " + httplib::to_string(res.error());
        return out;
    }
    if (res->status != 200) {
        out.reason = "HTTP " + std::to_string(res->status);
        return out;
    }
    json parsed = json::parse(res->body, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("results") ||
        !parsed["results"].is_array()) {
        out.reason = "malformed response: expected {\"results\": [...]}";
        return out;
    }
    const auto& results = parsed["results"];
    if (results.size() > static_cast<std::size_t>(k)) {
        out.reason = "malformed response: " + std::to_string(results.size()) +
                     " results exceed k=" + std::to_string(k);
        return out;
    }
    for (const auto& item : results) {
        if (!item.is_object() || !item.contains("docid") || !item["docid"].is_string() ||
            !item.contains("score") || !item["score"].is_number()) {
            out.reason = "malformed response: result items need a docid string and score number";
            return out;
        }
    }
    auto end = std::chrono::steady_clock::now();
    out.ok = true;
    out.latency_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return out;
}

void run_warmup(httplib::Client& cli, const std::vector<std::string>& queries,
                const ProbeConfig& c) {
    for (int i = 0; i < c.warmup; ++i) {
        auto outcome = timed_request(cli, queries[i % queries.size()], c.k);
        if (!outcome.ok)
            fail(errc::network, "warm-up request " + std::to_string(i + 1) +
                                    " failed before any timing started: " + outcome.reason);
    }
}

}  // namespace

void summarize(ProbeReport& report, const std::vector<std::vector<double>>& samples) {
    report.trial_mean_ms.clear();
    std::vector<double> pooled;
    for (const auto& trial : samples) {
        double mean = 0.0;
        for (double v : trial) mean += v;
        report.trial_mean_ms.push_back(trial.empty() ? 0.0 : mean / trial.size());
        pooled.insert(pooled.end(), trial.begin(), trial.end());
    }
    if (pooled.empty()) {
        report.overall_mean_ms = report.p50_ms = report.p95_ms = report.p99_ms = 0.0;
        return;
    }
    double total = 0.0;
    for (double v : pooled) total += v;
    report.overall_mean_ms = total / pooled.size();
    std::sort(pooled.begin(), pooled.end());
    auto nearest_rank = [&](double pct) {
        auto n = static_cast<double>(pooled.size());
        auto idx = static_cast<std::size_t>(std::ceil(pct / 100.0 * n));
        idx = std::clamp<std::size_t>(idx, 1, pooled.size());
        return pooled[idx - 1];
    };
    report.p50_ms = nearest_rank(50.0);
    report.p95_ms = nearest_rank(95.0);
    report.p99_ms = nearest_rank(99.0);
}

ProbeReport run_probe(const ProbeConfig& config) {
    validate_config(config);
    auto queries = load_queries(config.queries_path, config.sample_size);

    ProbeReport report;
    report.config = config;
    report.started_utc = iso_utc_now();

    auto cli = make_client(config);
    run_warmup(cli, queries, config);

    std::vector<std::vector<double>> samples;
    samples.reserve(config.trials);
    for (int t = 0; t < config.trials; ++t) {
        std::vector<double> trial;
        trial.reserve(queries.size());
        for (std::size_t q = 0; q < queries.size(); ++q) {
            auto outcome = timed_request(cli, queries[q], config.k);
            ++report.queries_executed;
            if (outcome.ok) {
                trial.push_back(outcome.latency_ms);
            } else {
                ++report.failures;
                if (report.failure_reasons.size() < kMaxRecordedReasons)
                    report.failure_reasons.push_back("trial " + std::to_string(t + 1) + " query " +
                                                     std::to_string(q + 1) + ": " + outcome.reason);
            }
        }
        samples.push_back(std::move(trial));
    }
    report.finished_utc = iso_utc_now();
    summarize(report, samples);
    return report;
}

double measure_throughput(const ProbeConfig& config, int batch_size) {
    validate_config(config);
    if (batch_size < 1)
        fail(errc::validation, "batch size must be >= 1, got " + std::to_string(batch_size));
    auto queries = load_queries(config.queries_path, config.sample_size);

    {
        auto cli = make_client(config);
        run_warmup(cli, queries, config);
    }

    const long total = static_cast<long>(config.trials) * config.sample_size;
    std::atomic<long> next{0};
    std::atomic<long> completed{0};
    std::atomic<long> failed{0};
    std::mutex reason_mutex;
    std::string first_reason;

    auto worker = [&] {
        auto cli = make_client(config);
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= total) break;
            auto outcome = timed_request(cli, queries[i % queries.size()], config.k);
            if (outcome.ok) {
                completed.fetch_add(1);
            } else {
                failed.fetch_add(1);
                std::lock_guard<std::mutex> lock(reason_mutex);
                if (first_reason.empty()) first_reason = outcome.reason;
            }
        }
    };

    auto wall_start = std::chrono::steady_clock::now();
    std::vector<std::thread> threads;
    threads.reserve(batch_size);
    for (int i = 0; i < batch_size; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    auto wall_end = std::chrono::steady_clock::now();

    if (failed.load() > 0)
        fail(errc::network, std::to_string(failed.load()) + " of " + std::to_string(total) +
                                " throughput requests failed; first: " + first_reason);
    double seconds = std::chrono::duration<double>(wall_end - wall_start).count();
    if (seconds <= 0.0) fail(errc::network, "throughput wall time measured as zero");
    return static_cast<double>(completed.load()) / seconds;
}

submissions::SubmissionRecord emit_submission(const ProbeReport& report,
                                              const irmetrics::EvalReport& accuracy,
                                              const std::string& eval_dataset) {
    if (!report.usable())
        fail(errc::validation,
             "probe report is not usable: " + std::to_string(report.failures) + " of " +
                 std::to_string(report.queries_executed) + " timed requests failed");
    const auto& config = report.config;
    if (config.system.empty() || config.dataset.empty())
        fail(errc::validation, "probe config must carry system and dataset tags to emit a record");
    if (eval_dataset != config.dataset)
        fail(errc::validation, "accuracy was evaluated on \"" + eval_dataset +
                                   "\" but the probe ran against \"" + config.dataset +
                                   "\"; refusing to mix datasets in one record");

    submissions::SubmissionRecord rec;
    rec.system = config.system;
    rec.dataset = config.dataset;
    rec.hardware = config.hardware;
    std::string depth = std::to_string(accuracy.k);
    rec.metrics["mrr_at_" + depth] = accuracy.mrr;
    rec.metrics["success_at_" + depth] = accuracy.success;
    rec.metrics["latency_ms"] = report.overall_mean_ms;
    rec.provenance = submissions::Provenance::measured;
    rec.source = "probe " + config.endpoint + " started " + report.started_utc;
    submissions::validate(rec, nullptr, "emitted probe submission");
    return rec;
}

std::string report_to_json(const ProbeReport& report) {
    nlohmann::ordered_json doc;
    const auto& c = report.config;
    doc["config"] = {{"endpoint", c.endpoint},
                     {"queries", c.queries_path},
                     {"sample_size", c.sample_size},
                     {"trials", c.trials},
                     {"warmup", c.warmup},
                     {"k", c.k},
                     {"timeout_ms", c.timeout_ms},
                     {"system", c.system},
                     {"dataset", c.dataset},
                     {"hardware",
                      {{"instance", c.hardware.instance},
                       {"gpus_used", c.hardware.gpus_used},
                       {"cpu_threads_used", c.hardware.cpu_threads_used},
                       {"ram_gib_available", c.hardware.ram_gib_available}}}};
    doc["started_utc"] = report.started_utc;
    doc["finished_utc"] = report.finished_utc;
    doc["trial_mean_ms"] = report.trial_mean_ms;
    doc["overall_mean_ms"] = report.overall_mean_ms;
    doc["p50_ms"] = report.p50_ms;
    doc["p95_ms"] = report.p95_ms;
    doc["p99_ms"] = report.p99_ms;
    doc["queries_executed"] = report.queries_executed;
    doc["failures"] = report.failures;
    doc["failure_reasons"] = report.failure_reasons;
    doc["usable"] = report.usable();
    return doc.dump(2) + "\n";
}

}  // namespace irledger::probe

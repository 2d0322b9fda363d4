// C boundary of the engine: opaque handles over the core types, exceptions
// mapped to status codes, and a thread-local last-error message. Returned
// strings are malloc'd so C callers pair them with irl_string_free.

#include "irledger.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/catalog.hpp"
#include "core/costing.hpp"
#include "core/errors.hpp"
#include "core/irmetrics.hpp"
#include "core/probe.hpp"
#include "core/reports.hpp"
#include "core/scoring.hpp"
#include "core/submissions.hpp"

using irledger::errc;
namespace catalog = irledger::catalog;
namespace costing = irledger::costing;
namespace irmetrics = irledger::irmetrics;
namespace probe = irledger::probe;
namespace reports = irledger::reports;
namespace scoring = irledger::scoring;
namespace submissions = irledger::submissions;

struct irl_catalog {
    catalog::PricingCatalog value;
};

struct irl_records {
    std::vector<submissions::SubmissionRecord> value;
};

namespace {

thread_local std::string t_last_error;

irl_status map_errc(errc c) {
    switch (c) {
        case errc::io: return IRL_ERR_IO;
        case errc::parse: return IRL_ERR_PARSE;
        case errc::validation: return IRL_ERR_VALIDATION;
        case errc::not_found: return IRL_ERR_NOT_FOUND;
        case errc::infeasible: return IRL_ERR_INFEASIBLE;
        case errc::duplicate: return IRL_ERR_DUPLICATE;
        case errc::empty_result: return IRL_ERR_EMPTY_RESULT;
        case errc::scoring: return IRL_ERR_SCORING;
        case errc::network: return IRL_ERR_NETWORK;
        case errc::usage: return IRL_ERR_USAGE;
    }
    return IRL_ERR_INTERNAL;
}

// Run `body`, translating exceptions into status codes + last-error text.
template <typename F>
irl_status guarded(F&& body) noexcept {
    try {
        body();
        t_last_error.clear();
        return IRL_OK;
    } catch (const irledger::error& e) {
        t_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return IRL_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown failure";
        return IRL_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) irledger::fail(errc::usage, std::string(what) + " must not be NULL");
}

std::string or_default(const char* value, const char* fallback) {
    return value ? value : fallback;
}

nlohmann::ordered_json instance_json(const catalog::InstanceType& inst) {
    nlohmann::ordered_json j;
    j["name"] = inst.name;
    j["vcpu"] = inst.vcpu;
    j["gpu_count"] = inst.gpu_count;
    j["gpu_model"] = inst.gpu_model ? nlohmann::ordered_json(*inst.gpu_model)
                                    : nlohmann::ordered_json(nullptr);
    j["ram_gib"] = inst.ram_gib;
    j["hourly_usd"] = inst.hourly_usd;
    j["arch"] = inst.arch ? nlohmann::ordered_json(*inst.arch) : nlohmann::ordered_json(nullptr);
    return j;
}

std::optional<std::string> snapshot_of(const irl_catalog* cat) {
    if (!cat) return std::nullopt;
    return cat->value.snapshot_date;
}

scoring::AmrsConvention convention_or_default(const char* name) {
    return name ? scoring::parse_convention(name) : scoring::AmrsConvention::system_mean;
}

reports::Format format_or_default(const char* name) {
    return name ? reports::parse_format(name) : reports::Format::markdown;
}

probe::ProbeConfig parse_probe_config(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        irledger::fail(errc::parse, "probe config must be a JSON object");
    probe::ProbeConfig c;
    auto get_string = [&](const char* key, std::string& out, bool required) {
        if (!j.contains(key)) {
            if (required) irledger::fail(errc::validation,
                                         std::string("probe config needs \"") + key + "\"");
            return;
        }
        if (!j[key].is_string())
            irledger::fail(errc::validation, std::string("probe config \"") + key +
                                                 "\" must be a string");
        out = j[key].get<std::string>();
    };
    auto get_int = [&](const nlohmann::json& obj, const char* key, int& out) {
        if (!obj.contains(key)) return;
        if (!obj[key].is_number_integer())
            irledger::fail(errc::validation, std::string("probe config \"") + key +
                                                 "\" must be an integer");
        out = obj[key].get<int>();
    };
    get_string("endpoint", c.endpoint, true);
    get_string("queries", c.queries_path, true);
    get_int(j, "sample_size", c.sample_size);
    get_int(j, "trials", c.trials);
    get_int(j, "warmup", c.warmup);
    get_int(j, "k", c.k);
    get_int(j, "timeout_ms", c.timeout_ms);
    get_string("system", c.system, false);
    get_string("dataset", c.dataset, false);
    if (j.contains("hardware")) {
        const auto& h = j["hardware"];
        if (!h.is_object())
            irledger::fail(errc::validation, "probe config \"hardware\" must be an object");
        if (h.contains("instance")) {
            if (!h["instance"].is_string())
                irledger::fail(errc::validation, "hardware \"instance\" must be a string");
            c.hardware.instance = h["instance"].get<std::string>();
        }
        get_int(h, "gpus_used", c.hardware.gpus_used);
        get_int(h, "cpu_threads_used", c.hardware.cpu_threads_used);
        get_int(h, "ram_gib_available", c.hardware.ram_gib_available);
    }
    return c;
}

// Rebuild the report fields emit_submission depends on from its JSON form.
probe::ProbeReport parse_probe_report(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object() || !j.contains("config") ||
        !j["config"].is_object())
        irledger::fail(errc::parse, "probe report must be a JSON object with a \"config\" echo");
    probe::ProbeReport r;
    r.config = parse_probe_config(j["config"].dump());
    auto need_number = [&](const char* key) -> double {
        if (!j.contains(key) || !j[key].is_number())
            irledger::fail(errc::validation,
                           std::string("probe report needs numeric \"") + key + "\"");
        return j[key].get<double>();
    };
    r.overall_mean_ms = need_number("overall_mean_ms");
    r.queries_executed = static_cast<long>(need_number("queries_executed"));
    r.failures = static_cast<long>(need_number("failures"));
    if (j.contains("p50_ms")) r.p50_ms = need_number("p50_ms");
    if (j.contains("p95_ms")) r.p95_ms = need_number("p95_ms");
    if (j.contains("p99_ms")) r.p99_ms = need_number("p99_ms");
    if (j.contains("trial_mean_ms") && j["trial_mean_ms"].is_array())
        for (const auto& v : j["trial_mean_ms"])
            if (v.is_number()) r.trial_mean_ms.push_back(v.get<double>());
    if (j.contains("started_utc") && j["started_utc"].is_string())
        r.started_utc = j["started_utc"].get<std::string>();
    if (j.contains("finished_utc") && j["finished_utc"].is_string())
        r.finished_utc = j["finished_utc"].get<std::string>();
    return r;
}

}  // namespace

extern "C" {

const char* irl_version(void) { return "0.1.0"; }

const char* irl_status_name(irl_status status) {
    switch (status) {
        case IRL_OK: return "ok";
        case IRL_ERR_IO: return "io";
        case IRL_ERR_PARSE: return "parse";
        case IRL_ERR_VALIDATION: return "validation";
        case IRL_ERR_NOT_FOUND: return "not-found";
        case IRL_ERR_INFEASIBLE: return "infeasible";
        case IRL_ERR_DUPLICATE: return "duplicate";
        case IRL_ERR_EMPTY_RESULT: return "empty-result";
        case IRL_ERR_SCORING: return "scoring";
        case IRL_ERR_NETWORK: return "network";
        case IRL_ERR_USAGE: return "usage";
        case IRL_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* irl_last_error(void) { return t_last_error.c_str(); }

void irl_string_free(char* s) { std::free(s); }

irl_status irl_catalog_load(const char* path, irl_catalog** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        auto handle = std::make_unique<irl_catalog>();
        handle->value = catalog::load_catalog(path);
        *out = handle.release();
    });
}

void irl_catalog_free(irl_catalog* cat) { delete cat; }

size_t irl_catalog_size(const irl_catalog* cat) {
    return cat ? cat->value.instances.size() : 0;
}

irl_status irl_catalog_snapshot_date(const irl_catalog* cat, char** out) {
    return guarded([&] {
        require(cat, "catalog");
        require(out, "out");
        *out = dup_string(cat->value.snapshot_date);
    });
}

irl_status irl_catalog_instance_json(const irl_catalog* cat, const char* name,
                                     char** out_json) {
    return guarded([&] {
        require(cat, "catalog");
        require(name, "name");
        require(out_json, "out");
        const auto& inst = catalog::find_instance(cat->value, name);
        *out_json = dup_string(instance_json(inst).dump());
    });
}

irl_status irl_catalog_min_viable(const irl_catalog* cat, int gpu_count, int cpu_threads,
                                  int ram_gib, char** out_json) {
    return guarded([&] {
        require(cat, "catalog");
        require(out_json, "out");
        catalog::ResourceRequirement req;
        req.gpu_count = gpu_count;
        req.cpu_threads = cpu_threads;
        req.ram_gib = ram_gib;
        const auto& inst = catalog::select_min_viable(cat->value, req);
        *out_json = dup_string(instance_json(inst).dump());
    });
}

irl_status irl_records_ingest(const char* path, const irl_catalog* cat_or_null,
                              irl_records** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        auto handle = std::make_unique<irl_records>();
        handle->value =
            submissions::ingest(path, cat_or_null ? &cat_or_null->value : nullptr);
        *out = handle.release();
    });
}

irl_status irl_records_query(const char* store_path, const char* dataset_or_null,
                             const char* system_or_null, irl_records** out) {
    return guarded([&] {
        require(store_path, "store path");
        require(out, "out");
        submissions::QueryFilter filter;
        if (dataset_or_null) filter.dataset = dataset_or_null;
        if (system_or_null) filter.system = system_or_null;
        auto handle = std::make_unique<irl_records>();
        handle->value = submissions::query(store_path, filter);
        *out = handle.release();
    });
}

void irl_records_free(irl_records* records) { delete records; }

size_t irl_records_count(const irl_records* records) {
    return records ? records->value.size() : 0;
}

irl_status irl_records_to_jsonl(const irl_records* records, char** out) {
    return guarded([&] {
        require(records, "records");
        require(out, "out");
        std::string text;
        for (const auto& rec : records->value) text += submissions::to_jsonl_line(rec) + "\n";
        *out = dup_string(text);
    });
}

irl_status irl_records_append_store(const char* store_path, const irl_records* records,
                                    size_t* appended_or_null) {
    return guarded([&] {
        require(store_path, "store path");
        require(records, "records");
        std::size_t n = submissions::store_append(store_path, records->value);
        if (appended_or_null) *appended_or_null = n;
    });
}

irl_status irl_store_append_jsonl(const char* store_path, const char* jsonl,
                                  const irl_catalog* cat_or_null, size_t* appended_or_null) {
    return guarded([&] {
        require(store_path, "store path");
        require(jsonl, "jsonl");
        std::vector<submissions::SubmissionRecord> parsed;
        std::string text(jsonl);
        std::size_t start = 0, lineno = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            std::string line = text.substr(
                start, end == std::string::npos ? std::string::npos : end - start);
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty())
                parsed.push_back(submissions::parse_record(
                    line, cat_or_null ? &cat_or_null->value : nullptr,
                    "line " + std::to_string(lineno)));
            if (end == std::string::npos) break;
            start = end + 1;
        }
        if (parsed.empty()) irledger::fail(errc::validation, "no records in JSONL text");
        std::size_t n = submissions::store_append(store_path, parsed);
        if (appended_or_null) *appended_or_null = n;
    });
}

irl_status irl_cost_for_queries(double latency_ms, double hourly_usd, int64_t query_count,
                                double* out_usd, char** out_display) {
    return guarded([&] {
        auto quote = costing::cost_for_queries(latency_ms, hourly_usd, query_count);
        if (out_usd) *out_usd = static_cast<double>(quote.usd);
        if (out_display) *out_display = dup_string(costing::format_usd(quote.usd));
    });
}

irl_status irl_records_annotate_costs(irl_records* records, const irl_catalog* cat,
                                      int64_t query_count, char** out_audit_csv,
                                      char** out_notes_json) {
    return guarded([&] {
        require(records, "records");
        require(cat, "catalog");
        auto notes = costing::annotate_costs(records->value, cat->value, query_count);
        if (out_audit_csv)
            *out_audit_csv =
                dup_string(reports::render_cost_audit(records->value, cat->value, query_count));
        if (out_notes_json) {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& note : notes) {
                nlohmann::ordered_json n;
                n["record_index"] = note.record_index;
                n["message"] = note.message;
                j.push_back(std::move(n));
            }
            *out_notes_json = dup_string(j.dump());
        }
    });
}

irl_status irl_eval_files(const char* qrels_path, const char* run_path, int k,
                          const char* format, char** out) {
    return guarded([&] {
        require(qrels_path, "qrels path");
        require(run_path, "run path");
        require(out, "out");
        auto qrels = irmetrics::parse_qrels(qrels_path);
        auto run = irmetrics::parse_run(run_path);
        auto report = irmetrics::evaluate(qrels, run, static_cast<std::size_t>(k));
        *out = dup_string(reports::render_eval(report, format_or_default(format)));
    });
}

irl_status irl_eval_values(const char* qrels_path, const char* run_path, int k,
                           double* out_mrr, double* out_success) {
    return guarded([&] {
        require(qrels_path, "qrels path");
        require(run_path, "run path");
        auto qrels = irmetrics::parse_qrels(qrels_path);
        auto run = irmetrics::parse_run(run_path);
        auto report = irmetrics::evaluate(qrels, run, static_cast<std::size_t>(k));
        if (out_mrr) *out_mrr = report.mrr;
        if (out_success) *out_success = report.success;
    });
}

irl_status irl_rank_dynascore(const irl_records* records, const irl_catalog* cat_or_null,
                              const char* title, const char* weights_or_null,
                              const char* convention_or_null, const double* min_accuracy,
                              const double* max_latency_ms, const double* max_cost,
                              const char* format, char** out) {
    return guarded([&] {
        require(records, "records");
        require(out, "out");
        auto weights = weights_or_null ? scoring::WeightVector::parse(weights_or_null)
                                       : scoring::WeightVector::defaults();
        auto convention = convention_or_default(convention_or_null);
        scoring::ScoreFilters filters;
        if (min_accuracy) filters.min_accuracy = *min_accuracy;
        if (max_latency_ms) filters.max_latency_ms = *max_latency_ms;
        if (max_cost) filters.max_cost = *max_cost;
        auto board = scoring::rank_dynascore(records->value, weights, filters, convention);
        auto doc = reports::make_document(or_default(title, "leaderboard"), board,
                                          snapshot_of(cat_or_null), convention);
        *out = dup_string(reports::render(doc, format_or_default(format)));
    });
}

irl_status irl_rank_budget(const irl_records* records, const irl_catalog* cat_or_null,
                           const char* title, const char* metric, double threshold,
                           const char* anchor_or_null, const char* convention_or_null,
                           const char* format, char** out) {
    return guarded([&] {
        require(records, "records");
        require(metric, "metric");
        require(out, "out");
        auto board = scoring::rank_by_accuracy_under_budget(
            records->value, metric, threshold, or_default(anchor_or_null, "mrr_at_10"));
        auto doc = reports::make_document(or_default(title, "leaderboard"), board,
                                          snapshot_of(cat_or_null),
                                          convention_or_default(convention_or_null));
        *out = dup_string(reports::render(doc, format_or_default(format)));
    });
}

irl_status irl_rank_floor(const irl_records* records, const irl_catalog* cat_or_null,
                          const char* title, double accuracy_floor, const char* metric,
                          const char* anchor_or_null, const char* convention_or_null,
                          const char* format, char** out) {
    return guarded([&] {
        require(records, "records");
        require(metric, "metric");
        require(out, "out");
        auto board = scoring::rank_by_efficiency_over_floor(
            records->value, accuracy_floor, metric, or_default(anchor_or_null, "mrr_at_10"));
        auto doc = reports::make_document(or_default(title, "leaderboard"), board,
                                          snapshot_of(cat_or_null),
                                          convention_or_default(convention_or_null));
        *out = dup_string(reports::render(doc, format_or_default(format)));
    });
}

irl_status irl_pareto(const irl_records* records, const char* x_metric, const char* y_metric,
                      const char* format, char** out) {
    return guarded([&] {
        require(records, "records");
        require(x_metric, "x metric");
        require(y_metric, "y metric");
        require(out, "out");
        auto points = scoring::pareto_frontier(records->value, x_metric, y_metric);
        *out = dup_string(
            reports::render_pareto(points, x_metric, y_metric, format_or_default(format)));
    });
}

irl_status irl_weight_sweep(const irl_records* records, double grid_step,
                            const char* convention_or_null, char** out_csv) {
    return guarded([&] {
        require(records, "records");
        require(out_csv, "out");
        auto cells = scoring::weight_sweep(records->value, grid_step,
                                           convention_or_default(convention_or_null));
        *out_csv = dup_string(reports::render_sweep_csv(cells));
    });
}

irl_status irl_probe_run(const char* config_json, char** out_report_json) {
    return guarded([&] {
        require(config_json, "config");
        require(out_report_json, "out");
        auto config = parse_probe_config(config_json);
        auto report = probe::run_probe(config);
        *out_report_json = dup_string(probe::report_to_json(report));
    });
}

irl_status irl_probe_throughput(const char* config_json, int batch_size, double* out_qps) {
    return guarded([&] {
        require(config_json, "config");
        require(out_qps, "out");
        auto config = parse_probe_config(config_json);
        *out_qps = probe::measure_throughput(config, batch_size);
    });
}

irl_status irl_probe_emit_submission(const char* report_json, const char* qrels_path,
                                     const char* run_path, int k, const char* eval_dataset,
                                     char** out_jsonl) {
    return guarded([&] {
        require(report_json, "report");
        require(qrels_path, "qrels path");
        require(run_path, "run path");
        require(eval_dataset, "eval dataset");
        require(out_jsonl, "out");
        auto report = parse_probe_report(report_json);
        auto qrels = irmetrics::parse_qrels(qrels_path);
        auto run = irmetrics::parse_run(run_path);
        auto eval = irmetrics::evaluate(qrels, run, static_cast<std::size_t>(k));
        auto rec = probe::emit_submission(report, eval, eval_dataset);
        *out_jsonl = dup_string(submissions::to_jsonl_line(rec));
    });
}

}  // extern "C"

#include "core/submissions.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/numfmt.hpp"

namespace irledger::submissions {
namespace {

using nlohmann::ordered_json;

// "mrr_at_10" -> true when `name` is `prefix` + positive integer.
bool matches_at_k(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
        return false;
    }
    std::string suffix = name.substr(prefix.size());
    if (suffix.empty() || suffix[0] == '0') return false;
    return std::all_of(suffix.begin(), suffix.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

std::tuple<std::string, std::string, HardwareConfig> record_key(const SubmissionRecord& r) {
    return {r.system, r.dataset, r.hardware};
}

}  // namespace

int metric_display_rank(const std::string& name) {
    if (matches_at_k(name, "mrr_at_")) return 0;
    if (matches_at_k(name, "success_at_")) return 1;
    if (name == "latency_ms") return 2;
    if (name == "cost_usd_per_1m") return 3;
    if (name == "index_size_gib") return 4;
    return 5;
}

MetricInfo metric_info(const std::string& name) {
    if (matches_at_k(name, "mrr_at_") || matches_at_k(name, "success_at_")) {
        return {Orientation::higher_better, MetricClass::accuracy};
    }
    if (name == "latency_ms" || name == "cost_usd_per_1m" || name == "index_size_gib") {
        return {Orientation::lower_better, MetricClass::efficiency};
    }
    fail(errc::validation, "unknown metric name \"" + name + "\"");
}

bool is_known_metric(const std::string& name) {
    return matches_at_k(name, "mrr_at_") || matches_at_k(name, "success_at_") ||
           name == "latency_ms" || name == "cost_usd_per_1m" || name == "index_size_gib";
}

bool is_accuracy_metric(const std::string& name) {
    return is_known_metric(name) && metric_info(name).cls == MetricClass::accuracy;
}

std::string HardwareConfig::description() const {
    std::string out;
    if (gpus_used > 0) {
        out += std::to_string(gpus_used) + " GPU, ";
    }
    out += std::to_string(cpu_threads_used) + " CPU, " +
           std::to_string(ram_gib_available) + " GB memory";
    return out;
}

const char* provenance_name(Provenance p) {
    return p == Provenance::reported ? "reported" : "measured";
}

std::optional<double> SubmissionRecord::metric(const std::string& name) const {
    auto it = metrics.find(name);
    if (it == metrics.end()) return std::nullopt;
    return it->second;
}

void validate(const SubmissionRecord& rec, const catalog::PricingCatalog* cat,
              const std::string& context) {
    auto bad = [&context](const std::string& msg) -> void {
        fail(errc::validation, context.empty() ? msg : context + ": " + msg);
    };
    if (rec.system.empty()) bad("system must be non-empty");
    if (rec.dataset.empty()) bad("dataset must be non-empty");
    if (rec.hardware.instance.empty()) bad("hardware.instance must be non-empty");
    if (rec.hardware.gpus_used < 0) bad("hardware.gpus_used must be >= 0");
    if (rec.hardware.cpu_threads_used < 1) bad("hardware.cpu_threads_used must be >= 1");
    if (rec.hardware.ram_gib_available < 0) bad("hardware.ram_gib_available must be >= 0");

    bool has_accuracy = false;
    for (const auto& [name, value] : rec.metrics) {
        MetricInfo info = metric_info(name);  // raises on unknown names
        if (!std::isfinite(value)) bad("metric \"" + name + "\" must be finite");
        if (info.cls == MetricClass::accuracy) {
            has_accuracy = true;
            if (value < 0.0 || value > 100.0) {
                bad("accuracy metric \"" + name + "\" must lie in [0, 100], got " +
                    numfmt::shortest(value));
            }
        } else if (value < 0.0) {
            bad("efficiency metric \"" + name + "\" must be >= 0, got " +
                numfmt::shortest(value));
        }
    }
    if (!has_accuracy) bad("metrics must contain at least one accuracy-class metric");
    if (auto lat = rec.metric("latency_ms"); lat && *lat <= 0.0) {
        bad("latency_ms must be > 0 when present");
    }

    if (cat != nullptr) {
        const auto& inst = catalog::find_instance(*cat, rec.hardware.instance);
        if (rec.hardware.gpus_used > inst.gpu_count) {
            bad("hardware.gpus_used " + std::to_string(rec.hardware.gpus_used) +
                " exceeds " + inst.name + " shape (" + std::to_string(inst.gpu_count) +
                " GPU)");
        }
        if (rec.hardware.cpu_threads_used > inst.vcpu) {
            bad("hardware.cpu_threads_used " + std::to_string(rec.hardware.cpu_threads_used) +
                " exceeds " + inst.name + " shape (" + std::to_string(inst.vcpu) + " vCPU)");
        }
        if (rec.hardware.ram_gib_available > inst.ram_gib) {
            bad("hardware.ram_gib_available " + std::to_string(rec.hardware.ram_gib_available) +
                " exceeds " + inst.name + " shape (" + std::to_string(inst.ram_gib) +
                " GiB)");
        }
    }
}

SubmissionRecord parse_record(const std::string& json_line,
                              const catalog::PricingCatalog* cat,
                              const std::string& context) {
    ordered_json doc = ordered_json::parse(json_line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) {
        fail(errc::parse, context + ": not a JSON object");
    }
    auto reject_unknown = [&context](const ordered_json& obj,
                                     const std::set<std::string>& allowed,
                                     const std::string& what) -> void {
        for (const auto& [key, value] : obj.items()) {
            (void)value;
            if (!allowed.contains(key)) {
                fail(errc::parse, context + ": unknown key \"" + key + "\" in " + what);
            }
        }
    };
    auto require = [&context](const ordered_json& obj, const char* key,
                              const std::string& what) -> const ordered_json& {
        if (!obj.contains(key)) {
            fail(errc::parse,
                 context + ": missing required key \"" + std::string(key) + "\" in " + what);
        }
        return obj.at(key);
    };
    auto as_int = [&context](const ordered_json& v, const char* key) -> int {
        if (!v.is_number_integer()) {
            fail(errc::parse, context + ": field \"" + std::string(key) +
                                  "\" must be an integer");
        }
        return v.get<int>();
    };

    reject_unknown(doc, {"system", "dataset", "hardware", "metrics", "provenance", "source"},
                   "record");

    SubmissionRecord rec;
    rec.system = require(doc, "system", "record").get<std::string>();
    rec.dataset = require(doc, "dataset", "record").get<std::string>();

    const auto& hw = require(doc, "hardware", "record");
    if (!hw.is_object()) fail(errc::parse, context + ": \"hardware\" must be an object");
    reject_unknown(hw, {"instance", "gpus_used", "cpu_threads_used", "ram_gib_available"},
                   "hardware");
    rec.hardware.instance = require(hw, "instance", "hardware").get<std::string>();
    rec.hardware.gpus_used = as_int(require(hw, "gpus_used", "hardware"), "gpus_used");
    rec.hardware.cpu_threads_used =
        as_int(require(hw, "cpu_threads_used", "hardware"), "cpu_threads_used");
    rec.hardware.ram_gib_available =
        as_int(require(hw, "ram_gib_available", "hardware"), "ram_gib_available");

    const auto& metrics = require(doc, "metrics", "record");
    if (!metrics.is_object()) fail(errc::parse, context + ": \"metrics\" must be an object");
    for (const auto& [name, value] : metrics.items()) {
        if (!value.is_number()) {
            fail(errc::parse, context + ": metric \"" + name + "\" must be a number");
        }
        rec.metrics[name] = value.get<double>();
    }

    std::string prov = require(doc, "provenance", "record").get<std::string>();
    if (prov == "reported") {
        rec.provenance = Provenance::reported;
    } else if (prov == "measured") {
        rec.provenance = Provenance::measured;
    } else {
        fail(errc::parse,
             context + ": provenance must be \"reported\" or \"measured\", got \"" + prov + "\"");
    }
    rec.source = require(doc, "source", "record").get<std::string>();

    validate(rec, cat, context);
    return rec;
}

std::string to_jsonl_line(const SubmissionRecord& rec) {
    ordered_json doc;
    doc["system"] = rec.system;
    doc["dataset"] = rec.dataset;
    doc["hardware"] = {{"instance", rec.hardware.instance},
                       {"gpus_used", rec.hardware.gpus_used},
                       {"cpu_threads_used", rec.hardware.cpu_threads_used},
                       {"ram_gib_available", rec.hardware.ram_gib_available}};
    ordered_json metrics = ordered_json::object();
    std::vector<std::string> names;
    names.reserve(rec.metrics.size());
    for (const auto& [name, value] : rec.metrics) {
        (void)value;
        names.push_back(name);
    }
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        int ra = metric_display_rank(a), rb = metric_display_rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    for (const auto& name : names) {
        metrics[name] = rec.metrics.at(name);
    }
    doc["metrics"] = std::move(metrics);
    doc["provenance"] = provenance_name(rec.provenance);
    doc["source"] = rec.source;
    return doc.dump();
}

std::vector<SubmissionRecord> ingest(const std::string& path,
                                     const catalog::PricingCatalog* cat) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(errc::io, "cannot open submissions file: " + path);
    }
    std::vector<SubmissionRecord> records;
    std::set<std::tuple<std::string, std::string, HardwareConfig>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::string context = path + ":" + std::to_string(lineno);
        SubmissionRecord rec = parse_record(line, cat, context);
        if (!seen.insert(record_key(rec)).second) {
            fail(errc::duplicate,
                 context + ": duplicate (system, dataset, hardware) triple: " + rec.system +
                     " / " + rec.dataset + " / " + rec.hardware.description());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::size_t store_append(const std::string& store_path,
                         const std::vector<SubmissionRecord>& records) {
    std::set<std::tuple<std::string, std::string, HardwareConfig>> seen;
    if (std::filesystem::exists(store_path)) {
        for (const auto& existing : ingest(store_path, nullptr)) {
            seen.insert(record_key(existing));
        }
    }
    for (const auto& rec : records) {
        if (seen.contains(record_key(rec))) {
            fail(errc::duplicate,
                 "store already contains (system, dataset, hardware) triple: " + rec.system +
                     " / " + rec.dataset + " / " + rec.hardware.description());
        }
    }

    std::ofstream out(store_path, std::ios::binary | std::ios::app);
    if (!out) {
        fail(errc::io, "cannot open store for append: " + store_path);
    }
    std::size_t appended = 0;
    for (const auto& rec : records) {
        if (!seen.insert(record_key(rec)).second) {
            fail(errc::duplicate,
                 "duplicate (system, dataset, hardware) triple within batch: " + rec.system +
                     " / " + rec.dataset + " / " + rec.hardware.description());
        }
        // One line per record, flushed immediately: a crash mid-batch leaves
        // only whole records behind.
        out << to_jsonl_line(rec) << '\n';
        out.flush();
        if (!out) {
            fail(errc::io, "write failure appending to store: " + store_path);
        }
        ++appended;
    }
    return appended;
}

std::vector<SubmissionRecord> query(const std::string& store_path,
                                    const QueryFilter& filter) {
    if (!std::filesystem::exists(store_path)) {
        return {};
    }
    return filter_records(ingest(store_path, nullptr), filter);
}

std::vector<SubmissionRecord> filter_records(const std::vector<SubmissionRecord>& records,
                                             const QueryFilter& filter) {
    std::vector<SubmissionRecord> out;
    for (const auto& rec : records) {
        if (filter.dataset && rec.dataset != *filter.dataset) continue;
        if (filter.system && rec.system != *filter.system) continue;
        out.push_back(rec);
    }
    return out;
}

}  // namespace irledger::submissions

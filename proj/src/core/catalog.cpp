#include "core/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace irledger::catalog {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& origin, const std::string& what) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            fail(errc::parse, origin + ": unknown key \"" + key + "\" in " + what);
        }
    }
}

int require_int(const json& obj, const std::string& key, const std::string& origin) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
        fail(errc::parse, origin + ": field \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

// Levenshtein distance, for "did you mean" suggestions on unknown names.
std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

PricingCatalog parse_catalog(const std::string& json_text, const std::string& origin) {
    json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        fail(errc::parse, origin + ": not valid JSON");
    }
    if (!doc.is_object()) {
        fail(errc::parse, origin + ": catalog document must be a JSON object");
    }
    reject_unknown_keys(doc, {"snapshot_date", "currency", "instances"}, origin, "catalog");
    for (const char* key : {"snapshot_date", "currency", "instances"}) {
        if (!doc.contains(key)) {
            fail(errc::parse, origin + ": missing required key \"" + std::string(key) + "\"");
        }
    }

    PricingCatalog cat;
    cat.snapshot_date = doc.at("snapshot_date").get<std::string>();
    cat.currency = doc.at("currency").get<std::string>();
    if (cat.snapshot_date.empty()) {
        fail(errc::validation, origin + ": snapshot_date must be present and non-empty");
    }
    if (cat.currency != "USD") {
        fail(errc::validation, origin + ": currency must be \"USD\", got \"" + cat.currency + "\"");
    }
    const auto& instances = doc.at("instances");
    if (!instances.is_array() || instances.empty()) {
        fail(errc::validation, origin + ": instances must be a non-empty array");
    }

    std::set<std::string> seen;
    for (const auto& item : instances) {
        if (!item.is_object()) {
            fail(errc::parse, origin + ": each instance must be a JSON object");
        }
        reject_unknown_keys(item,
                            {"name", "vcpu", "gpu_count", "gpu_model", "ram_gib",
                             "hourly_usd", "arch"},
                            origin, "instance");
        for (const char* key : {"name", "vcpu", "gpu_count", "ram_gib", "hourly_usd"}) {
            if (!item.contains(key)) {
                fail(errc::parse, origin + ": instance missing required key \"" +
                                      std::string(key) + "\"");
            }
        }
        InstanceType inst;
        inst.name = item.at("name").get<std::string>();
        inst.vcpu = require_int(item, "vcpu", origin);
        inst.gpu_count = require_int(item, "gpu_count", origin);
        inst.ram_gib = require_int(item, "ram_gib", origin);
        if (!item.at("hourly_usd").is_number()) {
            fail(errc::parse, origin + ": field \"hourly_usd\" must be a number");
        }
        inst.hourly_usd = item.at("hourly_usd").get<double>();
        if (item.contains("gpu_model") && !item.at("gpu_model").is_null()) {
            inst.gpu_model = item.at("gpu_model").get<std::string>();
        }
        if (item.contains("arch") && !item.at("arch").is_null()) {
            inst.arch = item.at("arch").get<std::string>();
        }

        if (inst.name.empty()) {
            fail(errc::validation, origin + ": instance name must be non-empty");
        }
        if (inst.vcpu < 1) {
            fail(errc::validation, origin + ": instance \"" + inst.name +
                                       "\": vcpu must be >= 1");
        }
        if (inst.gpu_count < 0) {
            fail(errc::validation, origin + ": instance \"" + inst.name +
                                       "\": gpu_count must be >= 0");
        }
        if (inst.ram_gib <= 0) {
            fail(errc::validation, origin + ": instance \"" + inst.name +
                                       "\": ram_gib must be > 0");
        }
        if (inst.hourly_usd < 0) {
            fail(errc::validation, origin + ": instance \"" + inst.name +
                                       "\": hourly_usd must be >= 0");
        }
        // Prices are decimal with at most 6 fractional digits.
        long double micro = static_cast<long double>(inst.hourly_usd) * 1e6L;
        if (std::fabs(micro - static_cast<long double>(llroundl(micro))) > 1e-4L) {
            fail(errc::validation, origin + ": instance \"" + inst.name +
                                       "\": hourly_usd has more than 6 fractional digits");
        }
        if (!seen.insert(inst.name).second) {
            fail(errc::duplicate, origin + ": duplicate instance name \"" + inst.name + "\"");
        }
        cat.instances.push_back(std::move(inst));
    }
    return cat;
}

PricingCatalog load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(errc::io, "cannot open catalog file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str(), path);
}

const InstanceType& find_instance(const PricingCatalog& cat, const std::string& name) {
    for (const auto& inst : cat.instances) {
        if (inst.name == name) return inst;
    }
    // Unknown: list the closest names to help catch typos.
    std::vector<std::pair<std::size_t, const std::string*>> ranked;
    ranked.reserve(cat.instances.size());
    for (const auto& inst : cat.instances) {
        ranked.emplace_back(edit_distance(name, inst.name), &inst.name);
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) {
                  return a.first != b.first ? a.first < b.first : *a.second < *b.second;
              });
    std::string nearest;
    for (std::size_t i = 0; i < ranked.size() && i < 3; ++i) {
        if (!nearest.empty()) nearest += ", ";
        nearest += *ranked[i].second;
    }
    fail(errc::not_found,
         "unknown instance name \"" + name + "\"; nearest: " + nearest);
}

const InstanceType& select_min_viable(const PricingCatalog& cat,
                                      const ResourceRequirement& req) {
    if (req.gpu_count < 0 || req.cpu_threads < 1 || req.ram_gib < 0) {
        fail(errc::usage,
             "invalid requirement: gpu_count >= 0, cpu_threads >= 1, ram_gib >= 0 required");
    }
    const InstanceType* best = nullptr;
    for (const auto& inst : cat.instances) {
        if (inst.vcpu < req.cpu_threads || inst.gpu_count < req.gpu_count ||
            inst.ram_gib < req.ram_gib) {
            continue;
        }
        if (best == nullptr || inst.hourly_usd < best->hourly_usd ||
            (inst.hourly_usd == best->hourly_usd && inst.name < best->name)) {
            best = &inst;
        }
    }
    if (best == nullptr) {
        fail(errc::infeasible,
             "no catalog instance satisfies requirement (gpu_count=" +
                 std::to_string(req.gpu_count) + ", cpu_threads=" +
                 std::to_string(req.cpu_threads) + ", ram_gib=" +
                 std::to_string(req.ram_gib) + ")");
    }
    return *best;
}

}  // namespace irledger::catalog

#pragma once
// Dated cloud-instance pricing catalog: load/validate a pricing snapshot,
// look instances up by name, and select the cheapest instance satisfying a
// GPU/CPU/RAM requirement.

#include <optional>
#include <string>
#include <vector>

namespace irledger::catalog {

struct InstanceType {
    std::string name;
    int vcpu = 0;
    int gpu_count = 0;
    std::optional<std::string> gpu_model;
    int ram_gib = 0;
    double hourly_usd = 0.0;
    std::optional<std::string> arch;
};

struct PricingCatalog {
    std::string snapshot_date;  // ISO calendar date of the price snapshot
    std::string currency;       // "USD" in v1
    std::vector<InstanceType> instances;
};

struct ResourceRequirement {
    int gpu_count = 0;
    int cpu_threads = 1;
    int ram_gib = 0;
};

// Parse + validate a catalog JSON document. `origin` names the source in
// error messages (a path or "<inline>").
PricingCatalog parse_catalog(const std::string& json_text, const std::string& origin);

PricingCatalog load_catalog(const std::string& path);

// Exact-name lookup; unknown names raise not-found listing nearest names.
const InstanceType& find_instance(const PricingCatalog& cat, const std::string& name);

// Cheapest instance with vcpu >= cpu_threads, gpu_count >= gpu_count and
// ram_gib >= ram_gib; price ties broken by lexicographic name. Raises
// infeasible when nothing qualifies.
const InstanceType& select_min_viable(const PricingCatalog& cat,
                                      const ResourceRequirement& req);

}  // namespace irledger::catalog

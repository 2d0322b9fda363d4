#pragma once
// Sequential-occupancy dollar-cost model: a query stream occupies its
// instance for latency_ms per query, so cost = latency_ms x query_count /
// 3,600,000 x hourly rate. Arithmetic in long double (>= 18 significant
// decimal digits); rounding to cents happens only at display time.

#include <cstdint>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/submissions.hpp"

namespace irledger::costing {

inline constexpr std::int64_t kDefaultQueryCount = 1'000'000;

// Fractional deviation between a recorded and recomputed cost above which
// annotate_costs emits an audit note.
inline constexpr double kVerifyTolerance = 0.02;

struct CostQuote {
    long double usd = 0.0L;
    std::int64_t query_count = 0;
    std::string instance_name;   // empty when quoting a bare rate
    double latency_ms = 0.0;
    double hourly_usd = 0.0;
    std::string snapshot_date;   // empty when quoting a bare rate
};

CostQuote cost_for_queries(double latency_ms, double hourly_usd,
                           std::int64_t query_count);

// Cents, rounded half-up (half away from zero).
long long usd_to_cents(long double usd);

// "183.60" — two decimals, half-up.
std::string format_usd(long double usd);

struct AuditNote {
    std::size_t record_index = 0;
    std::string message;
};

// Fill each record's "cost_usd_per_1m" from its latency and instance rate;
// values already present are left unchanged but verified, with an audit note
// when they deviate from the recomputation by more than kVerifyTolerance.
// Raises on missing latency_ms or an instance name absent from the catalog.
std::vector<AuditNote> annotate_costs(std::vector<submissions::SubmissionRecord>& records,
                                      const catalog::PricingCatalog& cat,
                                      std::int64_t query_count = kDefaultQueryCount);

}  // namespace irledger::costing

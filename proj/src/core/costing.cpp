#include "core/costing.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/numfmt.hpp"

namespace irledger::costing {

CostQuote cost_for_queries(double latency_ms, double hourly_usd,
                           std::int64_t query_count) {
    if (latency_ms < 0.0) {
        fail(errc::validation, "latency_ms must be >= 0, got " + numfmt::shortest(latency_ms));
    }
    if (hourly_usd < 0.0) {
        fail(errc::validation, "hourly_usd must be >= 0, got " + numfmt::shortest(hourly_usd));
    }
    if (query_count < 1) {
        fail(errc::validation, "query_count must be >= 1, got " + std::to_string(query_count));
    }
    CostQuote quote;
    quote.latency_ms = latency_ms;
    quote.hourly_usd = hourly_usd;
    quote.query_count = query_count;
    quote.usd = static_cast<long double>(latency_ms) *
                static_cast<long double>(query_count) / 3'600'000.0L *
                static_cast<long double>(hourly_usd);
    return quote;
}

long long usd_to_cents(long double usd) {
    return llroundl(usd * 100.0L);
}

std::string format_usd(long double usd) {
    long long cents = usd_to_cents(usd);
    bool negative = cents < 0;
    unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(cents)
                                      : static_cast<unsigned long long>(cents);
    std::string out;
    if (negative) out += '-';
    out += std::to_string(mag / 100);
    out += '.';
    std::string frac = std::to_string(mag % 100);
    if (frac.size() < 2) out += '0';
    out += frac;
    return out;
}

std::vector<AuditNote> annotate_costs(std::vector<submissions::SubmissionRecord>& records,
                                      const catalog::PricingCatalog& cat,
                                      std::int64_t query_count) {
    std::vector<AuditNote> notes;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto& rec = records[i];
        auto latency = rec.metric("latency_ms");
        if (!latency) {
            fail(errc::validation,
                 "record " + std::to_string(i) + " (" + rec.system + ", " +
                     rec.hardware.description() + "): missing latency_ms, cannot cost");
        }
        const auto& inst = catalog::find_instance(cat, rec.hardware.instance);
        CostQuote quote = cost_for_queries(*latency, inst.hourly_usd, query_count);
        quote.instance_name = inst.name;
        quote.snapshot_date = cat.snapshot_date;

        double computed = static_cast<double>(quote.usd);
        if (auto existing = rec.metric("cost_usd_per_1m")) {
            double reference = std::max(std::abs(*existing), 1e-12);
            double deviation = std::abs(*existing - computed) / reference;
            if (deviation > kVerifyTolerance) {
                notes.push_back(
                    {i, rec.system + " (" + rec.hardware.description() + "): recorded cost " +
                            numfmt::shortest(*existing) + " deviates " +
                            numfmt::fixed(deviation * 100.0, 2) + "% from recomputed " +
                            numfmt::fixed(computed, 4) + " (" + numfmt::shortest(*latency) +
                            " ms x " + numfmt::shortest(inst.hourly_usd) + "/h, " +
                            cat.snapshot_date + ")"});
            }
        } else {
            rec.metrics["cost_usd_per_1m"] = computed;
        }
    }
    return notes;
}

}  // namespace irledger::costing

#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/errors.hpp"
#include "core/submissions.hpp"
#include "support/paths.hpp"

using irledger::errc;
using namespace irledger::submissions;

namespace {

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const irledger::error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::io;
}

const std::string kRecordLine =
    R"({"system": "BM25", "dataset": "msmarco-dev",)"
    R"( "hardware": {"instance": "m6g.medium", "gpus_used": 0,)"
    R"( "cpu_threads_used": 1, "ram_gib_available": 4},)"
    R"( "metrics": {"mrr_at_10": 18.4, "latency_ms": 4.0},)"
    R"( "provenance": "reported", "source": "table"})";

SubmissionRecord sample_record() { return parse_record(kRecordLine, nullptr, "test"); }

}  // namespace

TEST_CASE("metric names classify into accuracy and efficiency families") {
    CHECK(metric_info("mrr_at_10").cls == MetricClass::accuracy);
    CHECK(metric_info("mrr_at_10").orientation == Orientation::higher_better);
    CHECK(metric_info("success_at_5").cls == MetricClass::accuracy);
    CHECK(metric_info("latency_ms").cls == MetricClass::efficiency);
    CHECK(metric_info("latency_ms").orientation == Orientation::lower_better);
    CHECK(metric_info("cost_usd_per_1m").orientation == Orientation::lower_better);
    CHECK(metric_info("index_size_gib").cls == MetricClass::efficiency);
    CHECK(is_accuracy_metric("mrr_at_100"));
    CHECK_FALSE(is_accuracy_metric("latency_ms"));

    for (const char* bad : {"ndcg_at_10", "mrr_at_0", "mrr_at_007", "mrr_at_", "mrr"})
        CHECK(code_of([bad] { metric_info(bad); }) == errc::validation);
}

TEST_CASE("display rank orders accuracy metrics before the efficiency trio") {
    CHECK(metric_display_rank("mrr_at_10") < metric_display_rank("success_at_10"));
    CHECK(metric_display_rank("success_at_10") < metric_display_rank("latency_ms"));
    CHECK(metric_display_rank("latency_ms") < metric_display_rank("cost_usd_per_1m"));
    CHECK(metric_display_rank("cost_usd_per_1m") < metric_display_rank("index_size_gib"));
}

TEST_CASE("hardware descriptions render the leaderboard form") {
    CHECK(HardwareConfig{"c7g.4xlarge", 0, 16, 32}.description() ==
          "16 CPU, 32 GB memory");
    CHECK(HardwareConfig{"p3.2xlarge", 1, 1, 4}.description() ==
          "1 GPU, 1 CPU, 4 GB memory");
    CHECK(HardwareConfig{"m6g.medium", 0, 1, 4}.description() == "1 CPU, 4 GB memory");
}

TEST_CASE("measurement fixtures ingest completely") {
    CHECK(ingest(testsupport::fixture("msmarco_measurements.jsonl"), nullptr).size() == 28);
    CHECK(ingest(testsupport::fixture("xor_measurements.jsonl"), nullptr).size() == 24);
    CHECK(ingest(testsupport::fixture("posthoc_leaderboard.jsonl"), nullptr).size() == 10);
    for (const auto& rec : ingest(testsupport::fixture("msmarco_measurements.jsonl"), nullptr))
        CHECK(rec.dataset == "msmarco-dev");
}

TEST_CASE("records round-trip through the canonical line form byte-stably") {
    auto rec = sample_record();
    std::string once = to_jsonl_line(rec);
    auto back = parse_record(once, nullptr, "round-trip");
    CHECK(back.system == rec.system);
    CHECK(back.hardware == rec.hardware);
    CHECK(back.metrics == rec.metrics);
    CHECK(back.provenance == rec.provenance);
    CHECK(to_jsonl_line(back) == once);
}

TEST_CASE("record validation rejects schema and domain violations") {
    auto mutate = [](const std::string& from, const std::string& to) {
        std::string text = kRecordLine;
        auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        return text;
    };

    SUBCASE("unknown top-level key") {
        CHECK(code_of([&] {
                  parse_record(mutate(R"("source": "table")",
                                      R"("source": "table", "extra": 1)"),
                               nullptr, "t");
              }) == errc::parse);
    }
    SUBCASE("unknown metric name") {
        CHECK(code_of([&] {
                  parse_record(mutate(R"("mrr_at_10": 18.4)", R"("ndcg_at_10": 18.4)"),
                               nullptr, "t");
              }) == errc::validation);
    }
    SUBCASE("accuracy out of percentage range") {
        CHECK(code_of([&] {
                  parse_record(mutate(R"("mrr_at_10": 18.4)", R"("mrr_at_10": 150)"),
                               nullptr, "t");
              }) == errc::validation);
    }
    SUBCASE("non-positive latency") {
        CHECK(code_of([&] {
                  parse_record(mutate(R"("latency_ms": 4.0)", R"("latency_ms": 0)"),
                               nullptr, "t");
              }) == errc::validation);
    }
    SUBCASE("bad provenance") {
        CHECK(code_of([&] {
                  parse_record(mutate(R"("provenance": "reported")",
                                      R"("provenance": "guessed")"),
                               nullptr, "t");
              }) == errc::parse);
    }
    SUBCASE("empty system name") {
        CHECK(code_of([&] {
                  parse_record(mutate(R"("system": "BM25")", R"("system": "")"), nullptr,
                               "t");
              }) == errc::validation);
    }
    SUBCASE("malformed JSON is a parse error") {
        CHECK(code_of([&] { parse_record("{oops", nullptr, "t"); }) == errc::parse);
    }
    SUBCASE("context string prefixes the message") {
        try {
            parse_record(mutate(R"("mrr_at_10": 18.4)", R"("mrr_at_10": 150)"), nullptr,
                         "line 7");
            FAIL("expected validation");
        } catch (const irledger::error& e) {
            CHECK(std::string(e.what()).find("line 7") != std::string::npos);
        }
    }
}

TEST_CASE("a catalog bounds-checks claimed hardware against the instance shape") {
    auto cat = irledger::catalog::load_catalog(
        testsupport::fixture("catalog_aws_2022-11.json"));
    auto rec = sample_record();
    CHECK_NOTHROW(validate(rec, &cat, "t"));

    SUBCASE("more threads than the instance has") {
        rec.hardware.cpu_threads_used = 2;  // m6g.medium has 1 vcpu
        CHECK(code_of([&] { validate(rec, &cat, "t"); }) == errc::validation);
    }
    SUBCASE("GPU claimed on a CPU-only instance") {
        rec.hardware.gpus_used = 1;
        CHECK(code_of([&] { validate(rec, &cat, "t"); }) == errc::validation);
    }
    SUBCASE("more memory than the instance has") {
        rec.hardware.ram_gib_available = 8;  // m6g.medium has 4 GiB
        CHECK(code_of([&] { validate(rec, &cat, "t"); }) == errc::validation);
    }
    SUBCASE("instance missing from the catalog") {
        rec.hardware.instance = "z9.mega";
        CHECK(code_of([&] { validate(rec, &cat, "t"); }) == errc::not_found);
    }
    SUBCASE("without a catalog the same record passes") {
        rec.hardware.instance = "z9.mega";
        CHECK_NOTHROW(validate(rec, nullptr, "t"));
    }
}

TEST_CASE("ingest rejects duplicate measurement triples within a file") {
    testsupport::TempFile dup("tmp_sub_dup.jsonl", kRecordLine + "\n" + kRecordLine + "\n");
    CHECK(code_of([&] { ingest(dup.path(), nullptr); }) == errc::duplicate);
}

TEST_CASE("a store accumulates records and enforces triple uniqueness") {
    testsupport::TempFile store("tmp_sub_store.jsonl");
    std::remove(store.path().c_str());  // store_append creates it

    auto rec = sample_record();
    CHECK(store_append(store.path(), {rec}) == 1);

    auto other = rec;
    other.system = "DPR";
    CHECK(store_append(store.path(), {other}) == 1);

    SUBCASE("re-appending an existing triple fails") {
        CHECK(code_of([&] { store_append(store.path(), {rec}); }) == errc::duplicate);
    }
    SUBCASE("duplicates inside one batch fail") {
        auto third = rec;
        third.system = "ANCE";
        CHECK(code_of([&] { store_append(store.path(), {third, third}); }) ==
              errc::duplicate);
    }
    SUBCASE("query filters by dataset and system in insertion order") {
        CHECK(query(store.path(), {}).size() == 2);
        CHECK(query(store.path(), {std::nullopt, std::string("DPR")}).size() == 1);
        CHECK(query(store.path(), {std::string("msmarco-dev"), std::nullopt}).size() == 2);
        CHECK(query(store.path(), {std::string("other"), std::nullopt}).empty());
        auto all = query(store.path(), {});
        CHECK(all[0].system == "BM25");
        CHECK(all[1].system == "DPR");
    }
    SUBCASE("a missing store file reads as empty") {
        CHECK(query("no/such/store.jsonl", {}).empty());
    }
}

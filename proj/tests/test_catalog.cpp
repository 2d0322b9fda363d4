#include <doctest.h>

#include <functional>
#include <string>

#include "core/catalog.hpp"
#include "core/errors.hpp"
#include "support/paths.hpp"

using irledger::errc;
using namespace irledger::catalog;

namespace {

const PricingCatalog& aws_catalog() {
    static PricingCatalog cat = load_catalog(testsupport::fixture("catalog_aws_2022-11.json"));
    return cat;
}

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const irledger::error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::io;
}

}  // namespace

TEST_CASE("pricing snapshot fixture loads with its date and twelve instances") {
    const auto& cat = aws_catalog();
    CHECK(cat.snapshot_date == "2022-11-01");
    CHECK(cat.currency == "USD");
    CHECK(cat.instances.size() == 12);
}

TEST_CASE("instances resolve by exact name") {
    const auto& inst = find_instance(aws_catalog(), "p3.8xlarge");
    CHECK(inst.vcpu == 32);
    CHECK(inst.gpu_count == 4);
    CHECK(inst.hourly_usd == doctest::Approx(12.24));
    REQUIRE(inst.gpu_model.has_value());
    CHECK(*inst.gpu_model == "V100");
}

TEST_CASE("unknown instance names raise not-found with nearest suggestions") {
    try {
        find_instance(aws_catalog(), "p3.9xlarge");
        FAIL("expected not-found");
    } catch (const irledger::error& e) {
        CHECK(e.code() == errc::not_found);
        CHECK(std::string(e.what()).find("p3.8xlarge") != std::string::npos);
    }
}

TEST_CASE("minimum-viable selection picks the cheapest satisfying instance") {
    const auto& cat = aws_catalog();
    CHECK(select_min_viable(cat, {0, 1, 4}).name == "m6g.medium");
    CHECK(select_min_viable(cat, {1, 8, 61}).name == "p3.2xlarge");
    CHECK(select_min_viable(cat, {0, 8, 32}).name == "m6g.2xlarge");
    CHECK(select_min_viable(cat, {0, 1, 0}).name == "m6g.medium");
}

TEST_CASE("infeasible requirements are reported as such") {
    CHECK(code_of([] { select_min_viable(aws_catalog(), {0, 1, 10000}); }) ==
          errc::infeasible);
    CHECK(code_of([] { select_min_viable(aws_catalog(), {16, 1, 4}); }) ==
          errc::infeasible);
}

TEST_CASE("price ties break to the lexicographically first name") {
    auto cat = parse_catalog(R"({
      "snapshot_date": "2024-01-01",
      "currency": "USD",
      "instances": [
        {"name": "b.twin", "vcpu": 4, "gpu_count": 0, "gpu_model": null,
         "ram_gib": 16, "hourly_usd": 0.5},
        {"name": "a.twin", "vcpu": 4, "gpu_count": 0, "gpu_model": null,
         "ram_gib": 16, "hourly_usd": 0.5}
      ]})",
                             "<inline>");
    CHECK(select_min_viable(cat, {0, 2, 8}).name == "a.twin");
}

TEST_CASE("catalog document validation rejects malformed snapshots") {
    auto base = [](const std::string& patch) {
        return R"({"snapshot_date": "2024-01-01", "currency": "USD", "instances": [)" +
               patch + "]}";
    };
    const std::string good =
        R"({"name": "x.large", "vcpu": 2, "gpu_count": 0, "gpu_model": null,
            "ram_gib": 8, "hourly_usd": 0.25})";

    SUBCASE("not JSON at all") {
        CHECK(code_of([&] { parse_catalog("{nope", "<inline>"); }) == errc::parse);
    }
    SUBCASE("duplicate instance names") {
        CHECK(code_of([&] { parse_catalog(base(good + "," + good), "<inline>"); }) ==
              errc::duplicate);
    }
    SUBCASE("unknown instance key") {
        CHECK(code_of([&] {
                  parse_catalog(base(R"({"name": "x", "vcpu": 2, "gpu_count": 0,
                                         "gpu_model": null, "ram_gib": 8,
                                         "hourly_usd": 0.25, "color": "blue"})"),
                                "<inline>");
              }) == errc::parse);
    }
    SUBCASE("non-USD currency") {
        CHECK(code_of([&] {
                  parse_catalog(R"({"snapshot_date": "2024-01-01", "currency": "EUR",
                                    "instances": [)" +
                                    good + "]}",
                                "<inline>");
              }) == errc::validation);
    }
    SUBCASE("zero vcpu") {
        CHECK(code_of([&] {
                  parse_catalog(base(R"({"name": "x", "vcpu": 0, "gpu_count": 0,
                                         "gpu_model": null, "ram_gib": 8,
                                         "hourly_usd": 0.25})"),
                                "<inline>");
              }) == errc::validation);
    }
    SUBCASE("negative price") {
        CHECK(code_of([&] {
                  parse_catalog(base(R"({"name": "x", "vcpu": 2, "gpu_count": 0,
                                         "gpu_model": null, "ram_gib": 8,
                                         "hourly_usd": -0.25})"),
                                "<inline>");
              }) == errc::validation);
    }
    SUBCASE("price with more than six fractional digits") {
        CHECK(code_of([&] {
                  parse_catalog(base(R"({"name": "x", "vcpu": 2, "gpu_count": 0,
                                         "gpu_model": null, "ram_gib": 8,
                                         "hourly_usd": 0.12345678})"),
                                "<inline>");
              }) == errc::validation);
    }
    SUBCASE("empty snapshot date") {
        CHECK(code_of([&] {
                  parse_catalog(R"({"snapshot_date": "", "currency": "USD",
                                    "instances": [)" +
                                    good + "]}",
                                "<inline>");
              }) == errc::validation);
    }
    SUBCASE("empty instance list") {
        CHECK(code_of([&] { parse_catalog(base(""), "<inline>"); }) == errc::validation);
    }
}

TEST_CASE("missing catalog files surface as io errors naming the path") {
    try {
        load_catalog("no/such/catalog.json");
        FAIL("expected io error");
    } catch (const irledger::error& e) {
        CHECK(e.code() == errc::io);
        CHECK(std::string(e.what()).find("no/such/catalog.json") != std::string::npos);
    }
}

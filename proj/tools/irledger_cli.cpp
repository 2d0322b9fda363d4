// irledger command-line tool. Thin shell over the C API in irledger.h: it
// parses flags, resolves defaults (flag > IRLEDGER_CATALOG environment >
// config file > built-ins), calls the library, and streams results —
// data on stdout, diagnostics on stderr. Exit codes: 0 success, 1
// validation/domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irledger.h"

namespace {

struct CliError {
    int code;
    std::string message;
};

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { irl_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct CatalogHandle {
    irl_catalog* p = nullptr;
    ~CatalogHandle() { irl_catalog_free(p); }
};

struct RecordsHandle {
    irl_records* p = nullptr;
    ~RecordsHandle() { irl_records_free(p); }
};

// Raise a CliError for a failed library call; 2 for usage, 1 otherwise.
[[noreturn]] void raise(irl_status st) {
    throw CliError{st == IRL_ERR_USAGE ? 2 : 1,
                   std::string("error (") + irl_status_name(st) + "): " + irl_last_error()};
}

void check(irl_status st) {
    if (st != IRL_OK) raise(st);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// Optional key=value config file supplying defaults for store, catalog and
// weights. '#' starts a comment.
struct FileDefaults {
    std::string store;
    std::string catalog;
    std::string weights;
};

FileDefaults load_defaults(const std::string& path) {
    FileDefaults d;
    if (path.empty()) return d;
    std::ifstream in(path);
    if (!in) throw CliError{1, "error (io): cannot open config file \"" + path + "\""};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CliError{1, "error (parse): " + path + ":" + std::to_string(lineno) +
                                  ": expected key=value"};
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "store")
            d.store = value;
        else if (key == "catalog")
            d.catalog = value;
        else if (key == "weights")
            d.weights = value;
        else
            throw CliError{1, "error (validation): " + path + ":" + std::to_string(lineno) +
                                  ": unknown config key \"" + key +
                                  "\" (expected store, catalog, or weights)"};
    }
    return d;
}

std::string resolve_catalog_path(const std::string& flag_value, const FileDefaults& d) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("IRLEDGER_CATALOG"); env && *env) return env;
    return d.catalog;
}

// Shared --store/--input/--dataset/--system source options.
struct SourceArgs {
    std::string store;
    std::string input;
    std::string dataset;
    std::string system;

    void attach(CLI::App* cmd) {
        cmd->add_option("--store", store, "JSONL record store to read");
        cmd->add_option("--input", input, "JSONL file to read directly (validated on load)");
        cmd->add_option("--dataset", dataset, "keep records with this dataset tag");
        cmd->add_option("--system", system, "keep records with this system name");
    }
};

// Load records per the source flags. --input ingests (and validates) a file;
// --store queries a store with the optional dataset/system filters.
void acquire_records(const SourceArgs& src, const FileDefaults& defaults,
                     const irl_catalog* cat, RecordsHandle& out) {
    if (!src.input.empty() && !src.store.empty())
        throw CliError{2, "error (usage): pass --input or --store, not both"};
    if (!src.input.empty()) {
        if (!src.dataset.empty() || !src.system.empty())
            throw CliError{2,
                           "error (usage): --dataset/--system filter a store; with --input, "
                           "pre-filter the file instead"};
        check(irl_records_ingest(src.input.c_str(), cat, &out.p));
        return;
    }
    std::string store = !src.store.empty() ? src.store : defaults.store;
    if (store.empty())
        throw CliError{2, "error (usage): no record source; pass --store or --input "
                          "(or set store= in the config file)"};
    check(irl_records_query(store.c_str(), src.dataset.empty() ? nullptr : src.dataset.c_str(),
                            src.system.empty() ? nullptr : src.system.c_str(), &out.p));
}

void load_catalog_or_throw(const std::string& path, CatalogHandle& cat) {
    check(irl_catalog_load(path.c_str(), &cat.p));
}

std::string default_title(const std::string& dataset) {
    return dataset.empty() ? "leaderboard" : dataset + " leaderboard";
}

std::string shortest_double(double v) {
    return nlohmann::json(v).dump();  // shortest round-trip form
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"IR leaderboard engine: priced hardware, submission records, "
                 "cost/accuracy scoring, and latency probing"};
    app.set_version_flag("--version", []() { return std::string(irl_version()); });
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "key=value file supplying defaults for store, catalog, weights")
        ->envname("IRLEDGER_CONFIG");

    int exit_code = 0;

    // ---- ingest --------------------------------------------------------
    auto* ingest = app.add_subcommand(
        "ingest", "validate submission JSONL and append it to a store (or echo it)");
    std::string ingest_input, ingest_catalog, ingest_store;
    ingest->add_option("--input", ingest_input, "JSONL file of submission records")->required();
    ingest->add_option("--catalog", ingest_catalog,
                       "pricing catalog for hardware bounds checking");
    ingest->add_option("--store", ingest_store, "store file to append to");
    ingest->callback([&] {
        auto defaults = load_defaults(config_path);
        CatalogHandle cat;
        std::string cat_path = resolve_catalog_path(ingest_catalog, defaults);
        if (!cat_path.empty()) load_catalog_or_throw(cat_path, cat);
        RecordsHandle records;
        check(irl_records_ingest(ingest_input.c_str(), cat.p, &records.p));
        std::cerr << "ingested " << irl_records_count(records.p) << " records from "
                  << ingest_input << "\n";
        std::string store = !ingest_store.empty() ? ingest_store : defaults.store;
        if (!store.empty()) {
            size_t appended = 0;
            check(irl_records_append_store(store.c_str(), records.p, &appended));
            std::cerr << "appended " << appended << " records to " << store << "\n";
        } else {
            OwnedString jsonl;
            check(irl_records_to_jsonl(records.p, &jsonl.p));
            std::cout << jsonl.str();
        }
    });

    // ---- cost ----------------------------------------------------------
    auto* cost = app.add_subcommand(
        "cost", "price records under the sequential-occupancy model; prints audit lines");
    SourceArgs cost_src;
    cost_src.attach(cost);
    std::string cost_catalog, cost_output;
    std::int64_t cost_query_count = 1'000'000;
    cost->add_option("--catalog", cost_catalog, "pricing catalog (falls back to "
                                                "IRLEDGER_CATALOG, then the config file)");
    cost->add_option("--query-count", cost_query_count, "queries to price (default 1,000,000)");
    cost->add_option("--output", cost_output, "write the annotated records to this JSONL file");
    cost->callback([&] {
        auto defaults = load_defaults(config_path);
        std::string cat_path = resolve_catalog_path(cost_catalog, defaults);
        if (cat_path.empty())
            throw CliError{2, "error (usage): cost needs a pricing catalog (--catalog, "
                              "IRLEDGER_CATALOG, or catalog= in the config file)"};
        CatalogHandle cat;
        load_catalog_or_throw(cat_path, cat);
        RecordsHandle records;
        // The catalog prices the records here; it does not re-validate them.
        // Published tables legitimately declare rounded resource figures that
        // overshoot the matched instance's precise shape, and an audit that
        // refuses such rows could never audit them.
        acquire_records(cost_src, defaults, nullptr, records);
        OwnedString audit, notes;
        check(irl_records_annotate_costs(records.p, cat.p, cost_query_count, &audit.p,
                                         &notes.p));
        auto notes_json = nlohmann::json::parse(notes.str());
        for (const auto& note : notes_json)
            std::cerr << "audit note: " << note.at("message").get<std::string>() << "\n";
        std::cout << audit.str();
        if (!cost_output.empty()) {
            OwnedString jsonl;
            check(irl_records_to_jsonl(records.p, &jsonl.p));
            std::ofstream out(cost_output, std::ios::binary);
            if (!out)
                throw CliError{1, "error (io): cannot write \"" + cost_output + "\""};
            out << jsonl.str();
            std::cerr << "wrote " << irl_records_count(records.p) << " annotated records to "
                      << cost_output << "\n";
        }
    });

    // ---- eval ----------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "score a ranked run against relevance judgments");
    std::string eval_qrels, eval_run, eval_format = "markdown";
    int eval_k = 10;
    eval->add_option("--qrels", eval_qrels, "relevance judgments file")->required();
    eval->add_option("--run", eval_run, "ranked run file")->required();
    eval->add_option("--k", eval_k, "evaluation depth (default 10)");
    eval->add_option("--format", eval_format, "markdown (text), csv, or json");
    eval->callback([&] {
        OwnedString out;
        check(irl_eval_files(eval_qrels.c_str(), eval_run.c_str(), eval_k, eval_format.c_str(),
                             &out.p));
        std::cout << out.str();
    });

    // ---- rank ----------------------------------------------------------
    auto* rank = app.add_subcommand("rank", "render a leaderboard under a ranking strategy");
    SourceArgs rank_src;
    rank_src.attach(rank);
    std::string rank_catalog, rank_weights, rank_convention, rank_format = "markdown";
    std::string rank_strategy = "score", rank_metric, rank_anchor = "mrr_at_10", rank_title;
    double rank_min_accuracy = 0.0, rank_max_latency = 0.0, rank_max_cost = 0.0;
    double rank_limit = 0.0, rank_floor = 0.0;
    rank->add_option("--catalog", rank_catalog, "pricing catalog (snapshot named in footnotes)");
    rank->add_option("--weights", rank_weights,
                     "metric=weight list, e.g. mrr_at_10=0.5,cost_usd_per_1m=0.25,latency_ms=0.25");
    rank->add_option("--convention", rank_convention,
                     "AMRS tie convention: skip-tied-pairs, merge-tied-rows, or system-mean "
                     "(default system-mean)");
    auto* opt_min_acc =
        rank->add_option("--min-accuracy", rank_min_accuracy, "drop entries below this anchor value");
    auto* opt_max_lat =
        rank->add_option("--max-latency", rank_max_latency, "drop entries above this latency_ms");
    auto* opt_max_cost =
        rank->add_option("--max-cost", rank_max_cost, "drop entries above this cost_usd_per_1m");
    rank->add_option("--strategy", rank_strategy,
                     "score (weighted), budget (accuracy under a budget), or floor "
                     "(efficiency over an accuracy floor)");
    rank->add_option("--metric", rank_metric, "efficiency metric for budget/floor strategies");
    auto* opt_limit = rank->add_option("--limit", rank_limit, "budget threshold (raw units)");
    auto* opt_floor = rank->add_option("--floor", rank_floor, "accuracy floor (points)");
    rank->add_option("--anchor", rank_anchor,
                     "accuracy metric for budget/floor strategies (default mrr_at_10)");
    rank->add_option("--title", rank_title, "document title (default \"<dataset> leaderboard\")");
    rank->add_option("--format", rank_format, "markdown, csv, or json");
    rank->callback([&] {
        auto defaults = load_defaults(config_path);
        CatalogHandle cat;
        std::string cat_path = resolve_catalog_path(rank_catalog, defaults);
        if (!cat_path.empty()) load_catalog_or_throw(cat_path, cat);
        RecordsHandle records;
        // Catalog supplies the snapshot footnote only; read-paths do not
        // re-validate records that were checked when they entered a store.
        acquire_records(rank_src, defaults, nullptr, records);
        std::string title = !rank_title.empty() ? rank_title : default_title(rank_src.dataset);
        const char* convention =
            rank_convention.empty() ? nullptr : rank_convention.c_str();
        OwnedString out;
        if (rank_strategy == "score") {
            std::string weights = !rank_weights.empty() ? rank_weights : defaults.weights;
            double min_acc = rank_min_accuracy, max_lat = rank_max_latency,
                   max_cost = rank_max_cost;
            check(irl_rank_dynascore(records.p, cat.p, title.c_str(),
                                     weights.empty() ? nullptr : weights.c_str(), convention,
                                     opt_min_acc->count() ? &min_acc : nullptr,
                                     opt_max_lat->count() ? &max_lat : nullptr,
                                     opt_max_cost->count() ? &max_cost : nullptr,
                                     rank_format.c_str(), &out.p));
        } else if (rank_strategy == "budget") {
            if (rank_metric.empty() || !opt_limit->count())
                throw CliError{2,
                               "error (usage): budget strategy needs --metric and --limit"};
            check(irl_rank_budget(records.p, cat.p, title.c_str(), rank_metric.c_str(),
                                  rank_limit, rank_anchor.c_str(), convention,
                                  rank_format.c_str(), &out.p));
        } else if (rank_strategy == "floor") {
            if (rank_metric.empty() || !opt_floor->count())
                throw CliError{2, "error (usage): floor strategy needs --metric and --floor"};
            check(irl_rank_floor(records.p, cat.p, title.c_str(), rank_floor,
                                 rank_metric.c_str(), rank_anchor.c_str(), convention,
                                 rank_format.c_str(), &out.p));
        } else {
            throw CliError{2, "error (usage): unknown strategy \"" + rank_strategy +
                                  "\"; expected score, budget, or floor"};
        }
        std::cout << out.str();
    });

    // ---- pareto --------------------------------------------------------
    auto* pareto = app.add_subcommand("pareto",
                                      "emit cost/accuracy points with dominance flags");
    SourceArgs pareto_src;
    pareto_src.attach(pareto);
    std::string pareto_x = "cost_usd_per_1m", pareto_y = "mrr_at_10", pareto_format = "csv";
    pareto->add_option("--x", pareto_x, "lower-is-better x metric (default cost_usd_per_1m)");
    pareto->add_option("--y", pareto_y, "higher-is-better y metric (default mrr_at_10)");
    pareto->add_option("--format", pareto_format, "csv, json, or markdown (default csv)");
    pareto->callback([&] {
        auto defaults = load_defaults(config_path);
        RecordsHandle records;
        acquire_records(pareto_src, defaults, nullptr, records);
        OwnedString out;
        check(irl_pareto(records.p, pareto_x.c_str(), pareto_y.c_str(), pareto_format.c_str(),
                         &out.p));
        std::cout << out.str();
    });

    // ---- sweep ---------------------------------------------------------
    auto* sweep = app.add_subcommand(
        "sweep", "winner per weight cell over the accuracy/latency/cost simplex (CSV)");
    SourceArgs sweep_src;
    sweep_src.attach(sweep);
    double sweep_step = 0.0;
    std::string sweep_convention;
    sweep->add_option("--step", sweep_step, "grid step in (0, 0.5], e.g. 0.05")->required();
    sweep->add_option("--convention", sweep_convention,
                      "AMRS tie convention (default system-mean)");
    sweep->callback([&] {
        auto defaults = load_defaults(config_path);
        RecordsHandle records;
        acquire_records(sweep_src, defaults, nullptr, records);
        OwnedString out;
        check(irl_weight_sweep(records.p, sweep_step,
                               sweep_convention.empty() ? nullptr : sweep_convention.c_str(),
                               &out.p));
        std::cout << out.str();
    });

    // ---- probe ---------------------------------------------------------
    auto* probe = app.add_subcommand(
        "probe", "measure a live endpoint's per-query latency (or batch throughput)");
    std::string probe_endpoint, probe_queries, probe_system, probe_dataset;
    std::string probe_instance, probe_qrels, probe_run, probe_emit_store;
    int probe_sample = 1000, probe_trials = 5, probe_warmup = 10, probe_k = 10;
    int probe_timeout = 30000, probe_gpus = 0, probe_cpus = 1, probe_ram = 0;
    int probe_batch = 0;
    probe->add_option("--endpoint", probe_endpoint, "base URL, e.g. http://127.0.0.1:8080")
        ->required();
    probe->add_option("--queries", probe_queries, "query file, one query per line")->required();
    probe->add_option("--sample", probe_sample, "queries per trial (default 1000)");
    probe->add_option("--trials", probe_trials, "timed passes over the sample (default 5)");
    probe->add_option("--warmup", probe_warmup, "untimed warm-up requests (default 10)");
    probe->add_option("--k", probe_k, "results requested per query (default 10)");
    probe->add_option("--timeout-ms", probe_timeout, "per-request timeout (default 30000)");
    probe->add_option("--system", probe_system, "system name for emitted submissions");
    probe->add_option("--dataset", probe_dataset, "dataset tag for emitted submissions");
    probe->add_option("--instance", probe_instance, "declared instance name");
    probe->add_option("--gpus", probe_gpus, "declared GPUs used");
    probe->add_option("--cpus", probe_cpus, "declared CPU threads used");
    probe->add_option("--ram", probe_ram, "declared RAM GiB available");
    probe->add_option("--throughput-batch", probe_batch,
                      "measure throughput with this many requests in flight instead of latency");
    probe->add_option("--qrels", probe_qrels, "with --run: also emit a submission record");
    probe->add_option("--run", probe_run, "ranked run produced by the probed endpoint");
    probe->add_option("--emit-store", probe_emit_store,
                      "append the emitted submission to this store");
    probe->callback([&] {
        // Argument-contract failures must precede the (potentially long)
        // probe run, not surface after it.
        if (!probe_qrels.empty() || !probe_run.empty()) {
            if (probe_qrels.empty() || probe_run.empty())
                throw CliError{2, "error (usage): emitting a submission needs both "
                                  "--qrels and --run"};
        }
        nlohmann::ordered_json config;
        config["endpoint"] = probe_endpoint;
        config["queries"] = probe_queries;
        config["sample_size"] = probe_sample;
        config["trials"] = probe_trials;
        config["warmup"] = probe_warmup;
        config["k"] = probe_k;
        config["timeout_ms"] = probe_timeout;
        config["system"] = probe_system;
        config["dataset"] = probe_dataset;
        config["hardware"] = {{"instance", probe_instance},
                              {"gpus_used", probe_gpus},
                              {"cpu_threads_used", probe_cpus},
                              {"ram_gib_available", probe_ram}};
        std::string config_text = config.dump();

        if (probe_batch > 0) {
            double qps = 0.0;
            check(irl_probe_throughput(config_text.c_str(), probe_batch, &qps));
            std::cout << shortest_double(qps) << "\n";
            return;
        }

        OwnedString report;
        check(irl_probe_run(config_text.c_str(), &report.p));
        std::cout << report.str();

        if (!probe_qrels.empty() && !probe_run.empty()) {
            OwnedString line;
            check(irl_probe_emit_submission(report.p, probe_qrels.c_str(), probe_run.c_str(),
                                            probe_k, probe_dataset.c_str(), &line.p));
            if (!probe_emit_store.empty()) {
                size_t appended = 0;
                check(irl_store_append_jsonl(probe_emit_store.c_str(), line.str().c_str(),
                                             nullptr, &appended));
                std::cerr << "appended measured record to " << probe_emit_store << "\n";
            } else {
                std::cout << line.str() << "\n";
            }
        }
    });

    // ---- min-instance --------------------------------------------------
    auto* min_instance = app.add_subcommand(
        "min-instance", "cheapest catalog instance satisfying a resource requirement");
    std::string mi_catalog;
    int mi_gpus = 0, mi_cpus = 1, mi_ram = 0;
    min_instance->add_option("--catalog", mi_catalog, "pricing catalog");
    min_instance->add_option("--gpus", mi_gpus, "GPUs required (default 0)");
    min_instance->add_option("--cpus", mi_cpus, "CPU threads required (default 1)");
    min_instance->add_option("--ram", mi_ram, "RAM GiB required (default 0)");
    min_instance->callback([&] {
        auto defaults = load_defaults(config_path);
        std::string cat_path = resolve_catalog_path(mi_catalog, defaults);
        if (cat_path.empty())
            throw CliError{2, "error (usage): min-instance needs a pricing catalog "
                              "(--catalog, IRLEDGER_CATALOG, or the config file)"};
        CatalogHandle cat;
        load_catalog_or_throw(cat_path, cat);
        OwnedString out;
        check(irl_catalog_min_viable(cat.p, mi_gpus, mi_cpus, mi_ram, &out.p));
        std::cout << out.str() << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "error (usage): " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    } catch (const CliError& e) {
        std::cerr << e.message << "\n";
        return e.code;
    }
    return exit_code;
}

/* irledger — IR-benchmark leaderboard engine, C API.
 *
 * The engine lives in a shared library behind this flat extern-C surface:
 * opaque handles, integer status codes, and UTF-8 strings. Every function
 * returns irl_status; on failure a thread-local message is retrievable via
 * irl_last_error() and output parameters are left untouched. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with irl_string_free().
 *
 * JSON/CSV/markdown payload shapes are documented next to each function;
 * all of them are byte-stable for identical inputs.
 */

#ifndef IRLEDGER_H
#define IRLEDGER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef IRL_API
#if defined(_WIN32)
#ifdef IRLEDGER_EXPORTS
#define IRL_API __declspec(dllexport)
#else
#define IRL_API __declspec(dllimport)
#endif
#else
#define IRL_API __attribute__((visibility("default")))
#endif
#endif

typedef enum irl_status {
    IRL_OK = 0,
    IRL_ERR_IO = 1,           /* file unreadable or unwritable */
    IRL_ERR_PARSE = 2,        /* malformed input text */
    IRL_ERR_VALIDATION = 3,   /* well-formed input violating an invariant */
    IRL_ERR_NOT_FOUND = 4,    /* lookup by name failed */
    IRL_ERR_INFEASIBLE = 5,   /* no catalog instance satisfies a requirement */
    IRL_ERR_DUPLICATE = 6,    /* uniqueness violation */
    IRL_ERR_EMPTY_RESULT = 7, /* an operation requiring survivors found none */
    IRL_ERR_SCORING = 8,      /* AMRS / score undefined for the inputs */
    IRL_ERR_NETWORK = 9,      /* probe connection-level failure */
    IRL_ERR_USAGE = 10,       /* invalid arguments */
    IRL_ERR_INTERNAL = 11     /* unexpected failure inside the library */
} irl_status;

/* Opaque handles. */
typedef struct irl_catalog irl_catalog;
typedef struct irl_records irl_records;

/* ---- library ---------------------------------------------------------- */

IRL_API const char* irl_version(void);
IRL_API const char* irl_status_name(irl_status status);

/* Message for the most recent failure on this thread ("" when none). The
 * pointer stays valid until the next failing call on the same thread. */
IRL_API const char* irl_last_error(void);

IRL_API void irl_string_free(char* s);

/* ---- pricing catalog -------------------------------------------------- */

IRL_API irl_status irl_catalog_load(const char* path, irl_catalog** out);
IRL_API void irl_catalog_free(irl_catalog* cat);
IRL_API size_t irl_catalog_size(const irl_catalog* cat);
IRL_API irl_status irl_catalog_snapshot_date(const irl_catalog* cat, char** out);

/* Instance as JSON: {"name","vcpu","gpu_count","gpu_model","ram_gib",
 * "hourly_usd","arch"} (gpu_model/arch null when unspecified). */
IRL_API irl_status irl_catalog_instance_json(const irl_catalog* cat, const char* name,
                                             char** out_json);

/* Cheapest instance with at least the requested GPUs, CPU threads and RAM;
 * same JSON shape as irl_catalog_instance_json. */
IRL_API irl_status irl_catalog_min_viable(const irl_catalog* cat, int gpu_count,
                                          int cpu_threads, int ram_gib, char** out_json);

/* ---- submission records ----------------------------------------------- */

/* Read a JSONL file of submission records, validating every line (against
 * the catalog's instance shapes when one is supplied). */
IRL_API irl_status irl_records_ingest(const char* path, const irl_catalog* cat_or_null,
                                      irl_records** out);

/* Load a store and keep records matching the non-null filters. A missing
 * store file yields an empty handle. */
IRL_API irl_status irl_records_query(const char* store_path, const char* dataset_or_null,
                                     const char* system_or_null, irl_records** out);

IRL_API void irl_records_free(irl_records* records);
IRL_API size_t irl_records_count(const irl_records* records);

/* Canonical JSONL, one record per line. */
IRL_API irl_status irl_records_to_jsonl(const irl_records* records, char** out);

/* Append to a JSONL store (created if absent); duplicate (system, dataset,
 * hardware) triples are rejected. */
IRL_API irl_status irl_records_append_store(const char* store_path,
                                            const irl_records* records,
                                            size_t* appended_or_null);

/* Parse JSONL text (validated against the catalog when one is supplied) and
 * append the records to a store; same duplicate rules as above. */
IRL_API irl_status irl_store_append_jsonl(const char* store_path, const char* jsonl,
                                          const irl_catalog* cat_or_null,
                                          size_t* appended_or_null);

/* ---- costing ---------------------------------------------------------- */

/* usd = latency_ms x query_count / 3,600,000 x hourly_usd. out_usd carries
 * full precision; out_display the cent-rounded "183.60" form. Either output
 * pointer may be NULL. */
IRL_API irl_status irl_cost_for_queries(double latency_ms, double hourly_usd,
                                        int64_t query_count, double* out_usd,
                                        char** out_display);

/* Fill each record's cost_usd_per_1m from its latency and instance rate
 * (existing values verified within 2%, audit note on deviation).
 * out_notes_json: [{"record_index":N,"message":"..."}, ...]
 * out_audit_csv: "system,hardware,latency_ms,hourly_usd,usd_per_1m" lines.
 * Either output pointer may be NULL. */
IRL_API irl_status irl_records_annotate_costs(irl_records* records, const irl_catalog* cat,
                                              int64_t query_count, char** out_audit_csv,
                                              char** out_notes_json);

/* ---- accuracy evaluation ---------------------------------------------- */

/* Score a run file against a relevance-judgments file at depth k and render
 * per `format` ("markdown"/"csv" -> "name: value" text, "json"). */
IRL_API irl_status irl_eval_files(const char* qrels_path, const char* run_path, int k,
                                  const char* format, char** out);

/* Bare metric values in percentage points; either pointer may be NULL. */
IRL_API irl_status irl_eval_values(const char* qrels_path, const char* run_path, int k,
                                   double* out_mrr, double* out_success);

/* ---- leaderboards ----------------------------------------------------- */

/* Weighted-score board. weights: "mrr_at_10=0.5,cost_usd_per_1m=0.25,..."
 * (NULL for the defaults); convention: "skip-tied-pairs", "merge-tied-rows"
 * or "system-mean" (NULL for system-mean); optional filters by pointer
 * (NULL = no bound); format as in irl_eval_files. The catalog is used only
 * for the snapshot-date footnote and may be NULL. */
IRL_API irl_status irl_rank_dynascore(const irl_records* records,
                                      const irl_catalog* cat_or_null, const char* title,
                                      const char* weights_or_null,
                                      const char* convention_or_null,
                                      const double* min_accuracy, const double* max_latency_ms,
                                      const double* max_cost, const char* format, char** out);

/* Accuracy board under an efficiency budget (metric <= threshold). */
IRL_API irl_status irl_rank_budget(const irl_records* records, const irl_catalog* cat_or_null,
                                   const char* title, const char* metric, double threshold,
                                   const char* anchor_or_null,
                                   const char* convention_or_null, const char* format,
                                   char** out);

/* Efficiency board over an accuracy floor (anchor >= floor, metric asc). */
IRL_API irl_status irl_rank_floor(const irl_records* records, const irl_catalog* cat_or_null,
                                  const char* title, double accuracy_floor, const char* metric,
                                  const char* anchor_or_null, const char* convention_or_null,
                                  const char* format, char** out);

/* All points with dominance flags; x lower-better, y higher-better. */
IRL_API irl_status irl_pareto(const irl_records* records, const char* x_metric,
                              const char* y_metric, const char* format, char** out);

/* Winner per weight cell as CSV
 * "w_acc,w_latency,w_cost,winner_system,winner_hardware,score". */
IRL_API irl_status irl_weight_sweep(const irl_records* records, double grid_step,
                                    const char* convention_or_null, char** out_csv);

/* ---- latency probe ---------------------------------------------------- */

/* config_json: {"endpoint","queries","sample_size","trials","warmup","k",
 * "timeout_ms","system","dataset","hardware":{"instance","gpus_used",
 * "cpu_threads_used","ram_gib_available"}} — unspecified fields take the
 * documented defaults (sample 1000, trials 5, warmup 10, k 10, timeout
 * 30000 ms). Returns the probe report as JSON. */
IRL_API irl_status irl_probe_run(const char* config_json, char** out_report_json);

/* Completed queries per second with batch_size requests kept in flight. */
IRL_API irl_status irl_probe_throughput(const char* config_json, int batch_size,
                                        double* out_qps);

/* Build a measured-provenance submission (canonical JSONL line) from a
 * usable probe report and an accuracy evaluation over the same run's
 * output. eval_dataset must match the dataset the probe ran against. */
IRL_API irl_status irl_probe_emit_submission(const char* report_json, const char* qrels_path,
                                             const char* run_path, int k,
                                             const char* eval_dataset, char** out_jsonl);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IRLEDGER_H */

#pragma once
// Accuracy metrics the leaderboards consume: MRR@k and Success@k over
// standard whitespace-delimited relevance-judgment and ranked-run files.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace irledger::irmetrics {

// query-id -> set of relevant doc-ids (graded labels > 0 count as relevant).
struct Qrels {
    std::map<std::string, std::set<std::string>> relevant;
};

struct ScoredDoc {
    std::string docid;
    double score = 0.0;
};

// query-id -> documents ordered by descending score, ties by file order.
struct RankedRun {
    std::map<std::string, std::vector<ScoredDoc>> ranking;
    std::vector<std::string> warnings;  // e.g. rank-field/score-order mismatches
};

// Parse "qid 0 docid rel" lines; duplicate (query, doc) pairs rejected.
Qrels parse_qrels(const std::string& path);

// Parse "qid Q0 docid rank score tag" lines; the rank field is ignored in
// favor of score ordering and a mismatch adds a warning.
RankedRun parse_run(const std::string& path);

struct PerQueryResult {
    std::string query_id;
    std::size_t first_relevant_rank = 0;  // 1-based; 0 = none within k
    double reciprocal_rank = 0.0;         // in [0, 1]
    bool success = false;
    bool boundary_tie = false;  // scores tied across the rank-k boundary
};

struct EvalReport {
    std::size_t k = 0;
    std::size_t query_count = 0;  // queries in the qrels (the denominator)
    double mrr = 0.0;             // percentage points (x100)
    double success = 0.0;         // percentage points (x100)
    std::vector<PerQueryResult> per_query;
    std::vector<std::string> warnings;
};

// Score a run against qrels at depth k. Every query in the qrels counts;
// queries missing from the run contribute 0. Queries only in the run are
// ignored (nothing is known about their relevance).
EvalReport evaluate(const Qrels& qrels, const RankedRun& run, std::size_t k);

double mrr_at_k(const Qrels& qrels, const RankedRun& run, std::size_t k);
double success_at_k(const Qrels& qrels, const RankedRun& run, std::size_t k);

}  // namespace irledger::irmetrics

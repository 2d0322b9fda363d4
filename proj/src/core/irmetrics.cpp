#include "core/irmetrics.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "core/numfmt.hpp"

namespace irledger::irmetrics {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(std::move(field));
    return fields;
}

bool parse_int(const std::string& text, long long& out) {
    if (text.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(text, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == text.size();
}

}  // namespace

Qrels parse_qrels(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(errc::io, "cannot open qrels file: " + path);
    }
    Qrels qrels;
    std::set<std::pair<std::string, std::string>> judged;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split_ws(line);
        std::string context = path + ":" + std::to_string(lineno);
        if (fields.size() != 4) {
            fail(errc::parse, context + ": expected 4 fields (qid 0 docid rel), got " +
                                  std::to_string(fields.size()));
        }
        const std::string& qid = fields[0];
        const std::string& docid = fields[2];
        long long label = 0;
        if (!parse_int(fields[3], label)) {
            fail(errc::parse, context + ": relevance label must be an integer, got \"" +
                                  fields[3] + "\"");
        }
        if (qid.empty()) {
            fail(errc::parse, context + ": query id must be non-empty");
        }
        if (!judged.insert({qid, docid}).second) {
            fail(errc::duplicate,
                 context + ": duplicate (query, doc) pair: " + qid + " / " + docid);
        }
        // Every judged query participates in evaluation, even if nothing
        // relevant was found for it; graded labels > 0 count as relevant.
        auto& docs = qrels.relevant[qid];
        if (label > 0) {
            docs.insert(docid);
        }
    }
    return qrels;
}

RankedRun parse_run(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(errc::io, "cannot open run file: " + path);
    }
    RankedRun run;
    struct RawEntry {
        std::string docid;
        long long printed_rank;
        double score;
    };
    std::map<std::string, std::vector<RawEntry>> raw;
    std::vector<std::string> query_order;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split_ws(line);
        std::string context = path + ":" + std::to_string(lineno);
        if (fields.size() != 6) {
            fail(errc::parse, context +
                                  ": expected 6 fields (qid Q0 docid rank score tag), got " +
                                  std::to_string(fields.size()));
        }
        const std::string& qid = fields[0];
        const std::string& docid = fields[2];
        long long printed_rank = 0;
        if (!parse_int(fields[3], printed_rank)) {
            fail(errc::parse,
                 context + ": rank must be an integer, got \"" + fields[3] + "\"");
        }
        double score = 0.0;
        if (!numfmt::parse_double(fields[4], score)) {
            fail(errc::parse,
                 context + ": score must be a number, got \"" + fields[4] + "\"");
        }
        auto [it, inserted] = raw.try_emplace(qid);
        if (inserted) query_order.push_back(qid);
        for (const auto& entry : it->second) {
            if (entry.docid == docid) {
                fail(errc::duplicate,
                     context + ": duplicate doc \"" + docid + "\" for query \"" + qid + "\"");
            }
        }
        it->second.push_back({docid, printed_rank, score});
    }

    for (const auto& qid : query_order) {
        auto& entries = raw.at(qid);
        // Descending score; stable keeps file order for ties.
        std::stable_sort(entries.begin(), entries.end(),
                         [](const RawEntry& a, const RawEntry& b) { return a.score > b.score; });
        auto& out = run.ranking[qid];
        out.reserve(entries.size());
        for (std::size_t pos = 0; pos < entries.size(); ++pos) {
            const auto& entry = entries[pos];
            if (entry.printed_rank != static_cast<long long>(pos + 1) &&
                run.warnings.size() < 100) {
                run.warnings.push_back(
                    path + ": query \"" + qid + "\": rank field " +
                    std::to_string(entry.printed_rank) + " for doc \"" + entry.docid +
                    "\" disagrees with score ordering (position " + std::to_string(pos + 1) +
                    "); score ordering wins");
            }
            out.push_back({entry.docid, entry.score});
        }
    }
    return run;
}

EvalReport evaluate(const Qrels& qrels, const RankedRun& run, std::size_t k) {
    if (k < 1) {
        fail(errc::usage, "k must be >= 1");
    }
    if (qrels.relevant.empty()) {
        fail(errc::validation, "qrels contain no queries");
    }
    EvalReport report;
    report.k = k;
    report.warnings = run.warnings;
    double rr_sum = 0.0;
    std::size_t success_count = 0;
    for (const auto& [qid, relevant] : qrels.relevant) {
        PerQueryResult result;
        result.query_id = qid;
        auto it = run.ranking.find(qid);
        if (it != run.ranking.end()) {
            const auto& docs = it->second;
            std::size_t depth = std::min(k, docs.size());
            for (std::size_t pos = 0; pos < depth; ++pos) {
                if (relevant.contains(docs[pos].docid)) {
                    result.first_relevant_rank = pos + 1;
                    result.reciprocal_rank = 1.0 / static_cast<double>(pos + 1);
                    result.success = true;
                    break;
                }
            }
            // Tied scores across the k boundary mean file order decided what
            // made the cutoff; surface that.
            if (docs.size() > k && docs[k - 1].score == docs[k].score) {
                result.boundary_tie = true;
                report.warnings.push_back("query \"" + qid +
                                          "\": score tie across the rank-" + std::to_string(k) +
                                          " boundary; file order decided the cutoff");
            }
        }
        rr_sum += result.reciprocal_rank;
        success_count += result.success ? 1 : 0;
        report.per_query.push_back(std::move(result));
    }
    report.query_count = qrels.relevant.size();
    report.mrr = rr_sum / static_cast<double>(report.query_count) * 100.0;
    report.success =
        static_cast<double>(success_count) / static_cast<double>(report.query_count) * 100.0;
    return report;
}

double mrr_at_k(const Qrels& qrels, const RankedRun& run, std::size_t k) {
    return evaluate(qrels, run, k).mrr;
}

double success_at_k(const Qrels& qrels, const RankedRun& run, std::size_t k) {
    return evaluate(qrels, run, k).success;
}

}  // namespace irledger::irmetrics

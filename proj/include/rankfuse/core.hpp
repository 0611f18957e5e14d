#pragma once

/** \file core.hpp
 *  \brief Domain types shared by every other module: ranked lists, runs,
 *  relevance judgments and the fusion configuration.
 */

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rankfuse {

/// One (label, score) candidate inside a ranked list.
struct Entry {
    std::string label;
    double score;

    friend bool operator==(const Entry& a, const Entry& b) {
        return a.label == b.label && a.score == b.score;
    }
};

struct DuplicateLabelError : std::runtime_error {
    explicit DuplicateLabelError(const std::string& label)
        : std::runtime_error("duplicate label: " + label), label(label) {}
    std::string label;
};

struct NonFiniteScoreError : std::runtime_error {
    explicit NonFiniteScoreError(const std::string& label)
        : std::runtime_error("non-finite score for label: " + label), label(label) {}
    std::string label;
};

struct EmptyListError : std::runtime_error {
    EmptyListError() : std::runtime_error("empty ranked list") {}
};

/// Canonical ordering of entries: score descending, label ascending (bytewise).
inline bool canonical_less(const Entry& a, const Entry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.label < b.label;
}

/** One query's ordered candidates from one system.
 *
 * Entries are always held in canonical order; the 1-based position of an
 * entry is its rank. Immutable after construction.
 */
class RankedList {
public:
    RankedList() = default;

    /// Validates, sorts canonically and rejects duplicate labels.
    static RankedList make(std::string query_id, std::vector<Entry> pairs);

    /// Trusted constructor for entries already in canonical order (normalizers).
    static RankedList from_sorted(std::string query_id, std::vector<Entry> entries) {
        RankedList list;
        list.query_id_ = std::move(query_id);
        list.entries_ = std::move(entries);
        return list;
    }

    const std::string& query_id() const { return query_id_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::string query_id_;
    std::vector<Entry> entries_;
};

inline RankedList make_ranked_list(std::string query_id, std::vector<Entry> pairs) {
    return RankedList::make(std::move(query_id), std::move(pairs));
}

/// A system's ranked lists keyed by query id, plus the system tag.
struct Run {
    std::string system_tag;
    std::map<std::string, RankedList> lists;
};

/// Ground-truth relevant label sets per query.
struct Qrels {
    std::map<std::string, std::set<std::string>> judgments;
};

/// Summary statistics of a dataset, as reported alongside benchmarks.
struct DatasetStats {
    std::size_t n_instances = 0;
    std::size_t n_labels = 0;
    double avg_tail_relevant = 0.0;
    double avg_head_relevant = 0.0;
    double avg_instances_per_label = 0.0;
};

enum class NormStrategy { MinMax, Max, Sum, ZMUV, Rank, Borda, None };

enum class FusionMethod {
    CombMIN,
    CombMAX,
    CombMED,
    CombSUM,
    CombANZ,
    CombMNZ,
    ISR,
    LogISR,
    BordaFuse,
    Condorcet,
};

/// How to fuse: normalization applied per input list, the fusion method,
/// and the output truncation depth.
struct FusionConfig {
    NormStrategy normalization = NormStrategy::None;
    FusionMethod method = FusionMethod::CombSUM;
    std::size_t depth = 128;
};

}  // namespace rankfuse

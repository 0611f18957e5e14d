#include "rankfuse/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rankfuse {

LabelPartition partition_labels(const std::map<std::string, long long>& frequencies) {
    if (frequencies.empty()) throw EmptyLabelSpaceError();

    std::vector<std::pair<std::string, long long>> by_freq(frequencies.begin(), frequencies.end());
    std::sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    LabelPartition partition;
    partition.frequencies = frequencies;
    partition.threshold_h =
        static_cast<std::size_t>(std::ceil(0.2 * static_cast<double>(by_freq.size())));
    for (std::size_t i = 0; i < by_freq.size(); ++i) {
        if (i < partition.threshold_h) partition.head.insert(by_freq[i].first);
        else partition.tail.insert(by_freq[i].first);
    }
    return partition;
}

double precision_at_k(const RankedList& fused, const std::set<std::string>& gold,
                      std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    std::size_t hits = 0;
    const std::size_t top = std::min(k, fused.size());
    for (std::size_t i = 0; i < top; ++i) {
        if (gold.count(fused.entries()[i].label)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(k);
}

double ndcg_at_k(const RankedList& fused, const std::set<std::string>& gold, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    if (gold.empty()) throw EmptyGoldError();

    double dcg = 0.0;
    const std::size_t top = std::min(k, fused.size());
    for (std::size_t i = 0; i < top; ++i) {
        if (gold.count(fused.entries()[i].label)) {
            dcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
        }
    }
    double idcg = 0.0;
    const std::size_t ideal = std::min(k, gold.size());
    for (std::size_t i = 0; i < ideal; ++i) {
        idcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
    }
    return dcg / idcg;
}

namespace {

RankedList restrict_list(const RankedList& list, const std::set<std::string>& keep) {
    std::vector<Entry> entries;
    for (const auto& e : list.entries()) {
        if (keep.count(e.label)) entries.push_back(e);
    }
    return RankedList::from_sorted(list.query_id(), std::move(entries));
}

std::set<std::string> restrict_gold(const std::set<std::string>& gold,
                                    const std::set<std::string>& keep) {
    std::set<std::string> out;
    for (const auto& label : gold) {
        if (keep.count(label)) out.insert(label);
    }
    return out;
}

}  // namespace

double evaluate(const std::map<std::string, RankedList>& lists, const Qrels& qrels,
                const LabelPartition& partition, const MetricSpec& spec) {
    double total = 0.0;
    std::size_t counted = 0;

    for (const auto& [qid, gold] : qrels.judgments) {
        std::set<std::string> view_gold;
        RankedList view_list;
        auto it = lists.find(qid);
        const RankedList empty_list;
        const RankedList& candidate = it != lists.end() ? it->second : empty_list;

        switch (spec.view) {
            case PartitionView::All:
                view_gold = gold;
                view_list = candidate;
                break;
            case PartitionView::Head:
                view_gold = restrict_gold(gold, partition.head);
                view_list = restrict_list(candidate, partition.head);
                break;
            case PartitionView::Tail:
                view_gold = restrict_gold(gold, partition.tail);
                view_list = restrict_list(candidate, partition.tail);
                break;
        }
        if (view_gold.empty()) continue;

        double value = 0.0;
        switch (spec.metric) {
            case Metric::PrecisionAtK:
                value = precision_at_k(view_list, view_gold, spec.k);
                break;
            case Metric::NDCGAtK:
                value = ndcg_at_k(view_list, view_gold, spec.k);
                break;
        }
        total += value;
        ++counted;
    }

    if (counted == 0) throw NoEvaluableQueriesError();
    return total / static_cast<double>(counted);
}

std::string render_cell(double mean, double std_dev) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f(%.1f)", mean * 100.0, std_dev * 100.0);
    // golden files require '.' regardless of the process locale
    for (char* p = buf; *p; ++p) {
        if (*p == ',') *p = '.';
    }
    return buf;
}

FoldAggregate aggregate_folds(const std::vector<double>& fold_values) {
    if (fold_values.size() < 2) throw TooFewFoldsError();

    const double n = static_cast<double>(fold_values.size());
    double mean = 0.0;
    for (double v : fold_values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : fold_values) ss += (v - mean) * (v - mean);
    const double std_dev = std::sqrt(ss / (n - 1.0));

    return {mean, std_dev, render_cell(mean, std_dev)};
}

PartitionView parse_partition_view(const std::string& token) {
    if (token == "head") return PartitionView::Head;
    if (token == "tail") return PartitionView::Tail;
    if (token == "all") return PartitionView::All;
    throw std::invalid_argument("unknown partition view: " + token);
}

std::string partition_view_token(PartitionView view) {
    switch (view) {
        case PartitionView::Head: return "head";
        case PartitionView::Tail: return "tail";
        case PartitionView::All: return "all";
    }
    throw std::logic_error("unreachable");
}

std::string metric_token(Metric metric) {
    switch (metric) {
        case Metric::PrecisionAtK: return "p";
        case Metric::NDCGAtK: return "ndcg";
    }
    throw std::logic_error("unreachable");
}

}  // namespace rankfuse

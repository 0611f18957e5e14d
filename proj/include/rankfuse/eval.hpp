#pragma once

/** \file eval.hpp
 *  \brief Head/tail label partitioning, Precision@k and nDCG@k, and
 *  fold aggregation into mean(std) report cells.
 */

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rankfuse/core.hpp"

namespace rankfuse {

struct EmptyLabelSpaceError : std::runtime_error {
    EmptyLabelSpaceError() : std::runtime_error("empty label space") {}
};

struct EmptyGoldError : std::runtime_error {
    EmptyGoldError() : std::runtime_error("empty gold label set") {}
};

struct NoEvaluableQueriesError : std::runtime_error {
    NoEvaluableQueriesError()
        : std::runtime_error("no query has a non-empty gold set under this view") {}
};

struct TooFewFoldsError : std::runtime_error {
    TooFewFoldsError() : std::runtime_error("fold aggregation needs at least 2 values") {}
};

/// Pareto head/tail split of the label universe: the most frequent 20%
/// of labels are head, the remaining 80% tail.
struct LabelPartition {
    std::map<std::string, long long> frequencies;
    std::set<std::string> head;
    std::set<std::string> tail;
    std::size_t threshold_h = 0;  // |head|
};

enum class Metric { PrecisionAtK, NDCGAtK };
enum class PartitionView { Head, Tail, All };

struct MetricSpec {
    Metric metric = Metric::NDCGAtK;
    std::size_t k = 5;
    PartitionView view = PartitionView::All;
};

/// One report cell: per-fold metric values plus their mean and sample std.
struct EvalCell {
    std::string normalization;
    std::string method;
    std::string metric;
    std::string partition;
    std::size_t k = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    std::vector<double> fold_values;
};

struct EvalReport {
    std::vector<EvalCell> cells;
};

/// Sort labels by (frequency desc, label asc); head = first ceil(0.2 * L).
LabelPartition partition_labels(const std::map<std::string, long long>& frequencies);

/// |top-k intersect gold| / k. Denominator stays k for short lists.
double precision_at_k(const RankedList& fused, const std::set<std::string>& gold, std::size_t k);

/// Binary-gain DCG@k with log2(i+1) discount over IDCG@k; in [0, 1].
double ndcg_at_k(const RankedList& fused, const std::set<std::string>& gold, std::size_t k);

/** Mean of the per-query metric over `lists`.
 *
 * Under a Head or Tail view both the gold set and the prediction list
 * are restricted to that partition before scoring; queries whose
 * restricted gold set is empty are skipped, not counted as zero.
 */
double evaluate(const std::map<std::string, RankedList>& lists, const Qrels& qrels,
                const LabelPartition& partition, const MetricSpec& spec);

/// Mean, sample standard deviation and the rendered "M(S)" cell
/// (both scaled by 100, one decimal each).
struct FoldAggregate {
    double mean = 0.0;
    double std_dev = 0.0;
    std::string cell;
};

FoldAggregate aggregate_folds(const std::vector<double>& fold_values);

/// "M(S)" rendering used by report cells, locale-independent.
std::string render_cell(double mean, double std_dev);

PartitionView parse_partition_view(const std::string& token);
std::string partition_view_token(PartitionView view);
std::string metric_token(Metric metric);

}  // namespace rankfuse

#pragma once

/** \file pipeline.hpp
 *  \brief Batch driver: fuse every query of several runs, evaluate over
 *  folds, and aggregate into a report grid.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "rankfuse/core.hpp"
#include "rankfuse/eval.hpp"
#include "rankfuse/fuse.hpp"

namespace rankfuse {

/** Fuse all queries present in any of the runs. Queries missing from
 *  some runs are fused over the lists that do exist. `threads` 0 means
 *  hardware concurrency; output is keyed by query id, so the thread
 *  count never changes the result.
 */
std::map<std::string, RankedList> fuse_runs(const std::vector<Run>& runs,
                                            const FusionConfig& config,
                                            std::size_t threads = 0);

/// One fold's artifacts, already parsed.
struct Fold {
    std::vector<Run> runs;
    Qrels qrels;
    LabelPartition partition;
};

struct PipelineOptions {
    std::vector<NormStrategy> norms;
    std::vector<FusionMethod> methods;
    std::vector<PartitionView> views;
    std::vector<std::size_t> ks;
    std::size_t depth = 128;
    std::size_t threads = 0;
};

/// Full grid: per (norm, method) fuse each fold, evaluate every
/// (metric, view, k) cell, and aggregate fold values into mean(std).
EvalReport run_pipeline(const std::vector<Fold>& folds, const PipelineOptions& options);

/** Loads folds from a directory tree: each subdirectory of `dir` is one
 *  fold and must contain one or more "*.run" files, a "qrels.txt" and a
 *  "freqs.tsv" (optionally gzipped). Subdirectories are visited in name
 *  order.
 */
std::vector<Fold> load_folds(const std::string& dir);

}  // namespace rankfuse

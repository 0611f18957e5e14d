#include "rankfuse/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <stdexcept>
#include <thread>

#include "rankfuse/io.hpp"
#include "rankfuse/normalize.hpp"

namespace fs = std::filesystem;

namespace rankfuse {

std::map<std::string, RankedList> fuse_runs(const std::vector<Run>& runs,
                                            const FusionConfig& config,
                                            std::size_t threads) {
    if (runs.empty()) throw NoListsError();

    std::vector<std::string> query_ids;
    for (const auto& run : runs) {
        for (const auto& [qid, _] : run.lists) query_ids.push_back(qid);
    }
    std::sort(query_ids.begin(), query_ids.end());
    query_ids.erase(std::unique(query_ids.begin(), query_ids.end()), query_ids.end());

    std::vector<RankedList> fused(query_ids.size());
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Lists lists;
            for (const auto& run : runs) {
                auto it = run.lists.find(query_ids[i]);
                if (it != run.lists.end() && !it->second.empty()) lists.push_back(it->second);
            }
            if (!lists.empty()) fused[i] = fuse(lists, config).list;
        }
    };

    std::size_t n_threads = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min(n_threads, std::max<std::size_t>(query_ids.size(), 1));

    if (n_threads <= 1 || query_ids.size() < 2) {
        worker(0, query_ids.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (query_ids.size() + n_threads - 1) / n_threads;
        for (std::size_t t = 0; t < n_threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(begin + chunk, query_ids.size());
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::map<std::string, RankedList> out;
    for (std::size_t i = 0; i < query_ids.size(); ++i) {
        if (!fused[i].query_id().empty()) out.emplace(query_ids[i], std::move(fused[i]));
    }
    return out;
}

EvalReport run_pipeline(const std::vector<Fold>& folds, const PipelineOptions& options) {
    if (folds.empty()) throw std::invalid_argument("no folds");
    if (folds.size() < 2) throw TooFewFoldsError();

    EvalReport report;
    for (NormStrategy norm : options.norms) {
        for (FusionMethod method : options.methods) {
            FusionConfig config{norm, method, options.depth};

            // metric values per fold, indexed like the cell list below
            std::vector<std::vector<double>> values;
            const std::size_t n_cells =
                options.views.size() * options.ks.size() * 2;  // both metrics
            values.assign(n_cells, {});

            for (const auto& fold : folds) {
                auto fused = fuse_runs(fold.runs, config, options.threads);
                std::size_t cell = 0;
                for (PartitionView view : options.views) {
                    for (Metric metric : {Metric::NDCGAtK, Metric::PrecisionAtK}) {
                        for (std::size_t k : options.ks) {
                            MetricSpec spec{metric, k, view};
                            values[cell++].push_back(
                                evaluate(fused, fold.qrels, fold.partition, spec));
                        }
                    }
                }
            }

            std::size_t cell = 0;
            for (PartitionView view : options.views) {
                for (Metric metric : {Metric::NDCGAtK, Metric::PrecisionAtK}) {
                    for (std::size_t k : options.ks) {
                        auto agg = aggregate_folds(values[cell]);
                        EvalCell out;
                        out.normalization = norm_strategy_token(norm);
                        out.method = fusion_method_token(method);
                        out.metric = metric_token(metric);
                        out.partition = partition_view_token(view);
                        out.k = k;
                        out.mean = agg.mean;
                        out.std_dev = agg.std_dev;
                        out.fold_values = values[cell];
                        report.cells.push_back(std::move(out));
                        ++cell;
                    }
                }
            }
        }
    }
    return report;
}

std::vector<Fold> load_folds(const std::string& dir) {
    std::vector<fs::path> fold_dirs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_directory()) fold_dirs.push_back(entry.path());
    }
    std::sort(fold_dirs.begin(), fold_dirs.end());
    if (fold_dirs.empty()) throw IoFailureError(dir + " (no fold subdirectories)");

    std::vector<Fold> folds;
    for (const auto& fold_dir : fold_dirs) {
        Fold fold;
        std::vector<fs::path> run_files;
        fs::path qrels_path;
        fs::path freqs_path;
        for (const auto& entry : fs::directory_iterator(fold_dir)) {
            const std::string name = entry.path().filename().string();
            if (name.ends_with(".run") || name.ends_with(".run.gz")) {
                run_files.push_back(entry.path());
            } else if (name == "qrels.txt" || name == "qrels.txt.gz") {
                qrels_path = entry.path();
            } else if (name == "freqs.tsv" || name == "freqs.tsv.gz") {
                freqs_path = entry.path();
            }
        }
        std::sort(run_files.begin(), run_files.end());
        if (run_files.empty() || qrels_path.empty() || freqs_path.empty()) {
            throw IoFailureError(fold_dir.string() + " (missing run/qrels/freqs artifacts)");
        }
        for (const auto& path : run_files) fold.runs.push_back(parse_run_file(path.string()));
        fold.qrels = parse_qrels_file(qrels_path.string());
        fold.partition = partition_labels(parse_label_frequencies_file(freqs_path.string()));
        folds.push_back(std::move(fold));
    }
    return folds;
}

}  // namespace rankfuse

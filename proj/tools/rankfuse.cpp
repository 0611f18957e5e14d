// rankfuse: fuse ranked label lists from multiple systems and evaluate
// them with head/tail nDCG@k / Precision@k, fold aggregation and paired
// significance testing.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rankfuse/eval.hpp"
#include "rankfuse/fuse.hpp"
#include "rankfuse/io.hpp"
#include "rankfuse/normalize.hpp"
#include "rankfuse/pipeline.hpp"
#include "rankfuse/stats.hpp"
#include "rankfuse/synth.hpp"

namespace fs = std::filesystem;
using namespace rankfuse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::size_t default_threads() {
    if (const char* env = std::getenv("RANKFUSE_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 0;  // hardware concurrency
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

std::vector<std::size_t> parse_ks(const std::string& s) {
    std::vector<std::size_t> ks;
    for (const auto& tok : split_csv(s)) {
        const long v = std::stol(tok);
        if (v < 1) throw std::invalid_argument("k must be >= 1");
        ks.push_back(static_cast<std::size_t>(v));
    }
    if (ks.empty()) throw std::invalid_argument("no k values");
    return ks;
}

/// Fold values: one number per line, or CSV rows whose last field is the
/// value (header rows are skipped).
std::vector<double> read_fold_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailureError(path);
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.rfind(',');
        const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
        try {
            std::size_t pos = 0;
            const double v = std::stod(field, &pos);
            if (pos == field.size()) values.push_back(v);
        } catch (...) {
            // header or non-numeric row
        }
    }
    return values;
}

int cmd_fuse(const std::vector<std::string>& run_paths, const std::string& norm_token,
             const std::string& method_token, std::size_t depth, const std::string& out_path,
             std::size_t threads) {
    FusionConfig config;
    try {
        config.normalization = parse_norm_strategy(norm_token);
        config.method = parse_fusion_method(method_token);
        config.depth = depth;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::vector<Run> runs;
    for (const auto& path : run_paths) runs.push_back(parse_run_file(path));

    Run fused;
    fused.system_tag = norm_token + "+" + method_token;
    fused.lists = fuse_runs(runs, config, threads);
    write_run_file(fused, out_path);
    return kExitOk;
}

int cmd_eval(const std::string& run_path, const std::string& qrels_path,
             const std::string& freqs_path, const std::string& views_token,
             const std::string& ks_token) {
    std::vector<PartitionView> views;
    std::vector<std::size_t> ks;
    try {
        for (const auto& tok : split_csv(views_token)) views.push_back(parse_partition_view(tok));
        ks = parse_ks(ks_token);
        if (views.empty()) throw std::invalid_argument("no views");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const Run run = parse_run_file(run_path);
    const Qrels qrels = parse_qrels_file(qrels_path);
    const LabelPartition partition = partition_labels(parse_label_frequencies_file(freqs_path));

    std::cout << "view,metric,k,value\n";
    for (PartitionView view : views) {
        for (Metric metric : {Metric::NDCGAtK, Metric::PrecisionAtK}) {
            for (std::size_t k : ks) {
                MetricSpec spec{metric, k, view};
                const double value = evaluate(run.lists, qrels, partition, spec);
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.6f", value);
                for (char* p = buf; *p; ++p)
                    if (*p == ',') *p = '.';
                std::cout << partition_view_token(view) << ',' << metric_token(metric) << '@'
                          << k << ',' << k << ',' << buf << '\n';
            }
        }
    }
    return kExitOk;
}

int cmd_split_labels(const std::string& freqs_path) {
    const auto freqs = parse_label_frequencies_file(freqs_path);
    const LabelPartition partition = partition_labels(freqs);
    for (const auto& [label, count] : freqs) {
        std::cout << label << '\t' << count << '\t'
                  << (partition.head.count(label) ? "head" : "tail") << '\n';
    }
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    const auto a = read_fold_values(path_a);
    const auto b = read_fold_values(path_b);
    const TTestResult r = paired_t_test(a, b);
    std::cout << "t=" << format_score(r.t_statistic) << " df=" << r.degrees_of_freedom
              << " p=" << format_score(r.p_value)
              << (r.significant_at_05 ? " significant" : " not-significant")
              << (r.degenerate_variance ? " (degenerate-variance)" : "") << '\n';
    return kExitOk;
}

int cmd_pipeline(const std::string& folds_dir, const std::string& norms_token,
                 const std::string& methods_token, const std::string& views_token,
                 const std::string& ks_token, std::size_t depth, const std::string& format_token,
                 const std::string& out_path, std::size_t threads) {
    PipelineOptions options;
    ReportFormat format;
    try {
        for (const auto& tok : split_csv(norms_token)) options.norms.push_back(parse_norm_strategy(tok));
        for (const auto& tok : split_csv(methods_token))
            options.methods.push_back(parse_fusion_method(tok));
        for (const auto& tok : split_csv(views_token))
            options.views.push_back(parse_partition_view(tok));
        options.ks = parse_ks(ks_token);
        options.depth = depth;
        options.threads = threads;
        if (options.norms.empty() || options.methods.empty() || options.views.empty())
            throw std::invalid_argument("empty norm/method/view list");
        if (format_token == "csv") format = ReportFormat::Csv;
        else if (format_token == "table") format = ReportFormat::Table;
        else throw std::invalid_argument("unknown format: " + format_token);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const auto folds = load_folds(folds_dir);
    const EvalReport report = run_pipeline(folds, options);
    const std::string text = render_report(report, format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoFailureError(out_path);
        out << text;
    }
    return kExitOk;
}

int cmd_synth(const std::string& out_dir, std::size_t n_folds, synth::SynthSpec spec) {
    const auto freqs = gen_label_space(spec);
    const LabelPartition partition = partition_labels(freqs);

    for (std::size_t f = 0; f < n_folds; ++f) {
        synth::SynthSpec fold_spec = spec;
        fold_spec.seed = spec.seed + f;
        const fs::path dir = fs::path(out_dir) / ("fold" + std::to_string(f + 1));
        fs::create_directories(dir);

        std::ofstream freqs_out(dir / "freqs.tsv");
        for (const auto& [label, count] : freqs) freqs_out << label << '\t' << count << '\n';

        const Qrels qrels = gen_qrels(fold_spec, partition);
        std::ofstream qrels_out(dir / "qrels.txt");
        for (const auto& [qid, gold] : qrels.judgments) {
            for (const auto& label : gold) qrels_out << qid << " 0 " << label << " 1\n";
        }

        auto [head_run, tail_run] = gen_run_pair(fold_spec, qrels, partition);
        write_run_file(head_run, (dir / "head.run").string());
        write_run_file(tail_run, (dir / "tail.run").string());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank fusion and head/tail ranked evaluation"};
    app.require_subcommand(1);

    // fuse
    auto* fuse_cmd = app.add_subcommand("fuse", "fuse run files into one ranking");
    std::vector<std::string> run_paths;
    std::string norm_token = "none";
    std::string method_token;
    std::size_t depth = 128;
    std::string out_path;
    std::size_t threads = default_threads();
    fuse_cmd->add_option("--run", run_paths, "input run file (repeatable)")->required();
    fuse_cmd->add_option("--norm", norm_token, "normalization strategy");
    fuse_cmd->add_option("--method", method_token, "fusion method")->required();
    fuse_cmd->add_option("--depth", depth, "output truncation depth");
    fuse_cmd->add_option("--out", out_path, "output run file")->required();
    fuse_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a run against qrels");
    std::string eval_run, eval_qrels, eval_freqs;
    std::string views_token = "all";
    std::string ks_token = "1,5,10";
    eval_cmd->add_option("--run", eval_run)->required();
    eval_cmd->add_option("--qrels", eval_qrels)->required();
    eval_cmd->add_option("--freqs", eval_freqs)->required();
    eval_cmd->add_option("--views", views_token, "comma list of head,tail,all");
    eval_cmd->add_option("--k", ks_token, "comma list of cutoffs");

    // split-labels
    auto* split_cmd = app.add_subcommand("split-labels", "print the head/tail partition");
    std::string split_freqs;
    split_cmd->add_option("--freqs", split_freqs)->required();

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "paired t-test on two fold-value files");
    std::vector<std::string> cell_paths;
    compare_cmd->add_option("--cells", cell_paths, "two fold-value files")
        ->expected(2)
        ->required();

    // pipeline
    auto* pipe_cmd = app.add_subcommand("pipeline", "fuse + evaluate + aggregate over folds");
    std::string folds_dir, pipe_out;
    std::string pipe_norms = "zmuv";
    std::string pipe_methods = "combmnz";
    std::string pipe_views = "all,head,tail";
    std::string pipe_ks = "1,5,10";
    std::string pipe_format = "table";
    std::size_t pipe_depth = 128;
    std::size_t pipe_threads = default_threads();
    pipe_cmd->add_option("--folds", folds_dir, "directory of fold subdirectories")->required();
    pipe_cmd->add_option("--norm", pipe_norms, "comma list of normalizations");
    pipe_cmd->add_option("--method", pipe_methods, "comma list of fusion methods");
    pipe_cmd->add_option("--views", pipe_views, "comma list of head,tail,all");
    pipe_cmd->add_option("--k", pipe_ks, "comma list of cutoffs");
    pipe_cmd->add_option("--depth", pipe_depth, "fusion truncation depth");
    pipe_cmd->add_option("--format", pipe_format, "csv or table");
    pipe_cmd->add_option("--out", pipe_out, "output file (default stdout)");
    pipe_cmd->add_option("--threads", pipe_threads, "worker threads (0 = all cores)");

    // synth (dev tool)
    auto* synth_cmd =
        app.add_subcommand("synth", "emit a synthetic fold benchmark (dev tool)");
    synth_cmd->group("");  // hidden
    std::string synth_out;
    std::size_t synth_folds = 5;
    synth::SynthSpec spec;
    synth_cmd->add_option("--out", synth_out)->required();
    synth_cmd->add_option("--folds", synth_folds);
    synth_cmd->add_option("--queries", spec.n_queries);
    synth_cmd->add_option("--labels", spec.n_labels);
    synth_cmd->add_option("--zipf-exp", spec.zipf_exponent);
    synth_cmd->add_option("--gold", spec.gold_per_query);
    synth_cmd->add_option("--noise", spec.noise);
    synth_cmd->add_option("--seed", spec.seed);
    synth_cmd->add_option("--run-depth", spec.run_depth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (*fuse_cmd)
            return cmd_fuse(run_paths, norm_token, method_token, depth, out_path, threads);
        if (*eval_cmd) return cmd_eval(eval_run, eval_qrels, eval_freqs, views_token, ks_token);
        if (*split_cmd) return cmd_split_labels(split_freqs);
        if (*compare_cmd) return cmd_compare(cell_paths[0], cell_paths[1]);
        if (*pipe_cmd)
            return cmd_pipeline(folds_dir, pipe_norms, pipe_methods, pipe_views, pipe_ks,
                                pipe_depth, pipe_format, pipe_out, pipe_threads);
        if (*synth_cmd) return cmd_synth(synth_out, synth_folds, spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

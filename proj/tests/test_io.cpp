#include <doctest.h>

#include "rankfuse/io.hpp"
#include "rankfuse/synth.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace rankfuse;

TEST_CASE("parse single run line") {
    std::istringstream in("q1 Q0 L123 1 12.7 bm25\n");
    auto run = parse_run(in);
    CHECK(run.system_tag == "bm25");
    REQUIRE(run.lists.count("q1"));
    CHECK(run.lists.at("q1").entries()[0].label == "L123");
    CHECK(run.lists.at("q1").entries()[0].score == doctest::Approx(12.7));
}

TEST_CASE("run parser rejects duplicates, short lines and mixed tags") {
    {
        std::istringstream in("q1 Q0 L123 1 12.7 bm25\nq1 Q0 L123 2 3.0 bm25\n");
        CHECK_THROWS_AS(parse_run(in), DuplicateLabelError);
    }
    {
        std::istringstream in("q1 Q0 L1 1\n");
        CHECK_THROWS_WITH_AS(parse_run(in), "line 1: expected 6 fields, got 4",
                             MalformedLineError);
    }
    {
        std::istringstream in("q1 Q0 L1 1 1.0 bm25\nq1 Q0 L2 2 0.5 dense\n");
        CHECK_THROWS_AS(parse_run(in), MixedSystemTagsError);
    }
    {
        std::istringstream in("q1 Q0 L1 1 1.0 bm25\nq2 Q0 L1 x 1.0 bm25\n");
        CHECK_THROWS_WITH_AS(parse_run(in), "line 2: bad integer: x", MalformedLineError);
    }
}

TEST_CASE("qrels parsing") {
    std::istringstream in("q1 0 L123 1\nq1 0 L9 0\nq2 0 La 1\nq2 0 Lb 1\nq2 0 Lc 1\n");
    auto qrels = parse_qrels(in);
    CHECK(qrels.judgments.at("q1") == std::set<std::string>{"L123"});
    CHECK(qrels.judgments.at("q2").size() == 3);

    std::istringstream dup("q1 0 L1 1\nq1 0 L1 0\n");
    CHECK_THROWS_AS(parse_qrels(dup), DuplicateJudgmentError);
}

TEST_CASE("label frequency parsing") {
    std::istringstream in("L1\t100\nL2\t3\n");
    auto freqs = parse_label_frequencies(in);
    CHECK(freqs.at("L1") == 100);
    CHECK(freqs.at("L2") == 3);

    std::istringstream neg("L1\t-3\n");
    CHECK_THROWS_AS(parse_label_frequencies(neg), NegativeCountError);
    std::istringstream dup("L1\t1\nL1\t2\n");
    CHECK_THROWS_AS(parse_label_frequencies(dup), DuplicateLabelError);
    std::istringstream bad("L1 3\n");
    CHECK_THROWS_AS(parse_label_frequencies(bad), MalformedLineError);
}

TEST_CASE("write then parse is the identity on random runs") {
    synth::SplitMix rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Run run;
        run.system_tag = "sys" + std::to_string(trial);
        const std::size_t n_queries = 1 + rng.next_below(5);
        for (std::size_t q = 0; q < n_queries; ++q) {
            std::vector<Entry> pairs;
            std::set<std::string> used;
            const std::size_t len = 1 + rng.next_below(20);
            while (used.size() < len) {
                std::string label = "L" + std::to_string(rng.next_below(40));
                if (used.insert(label).second) {
                    // scores quantized so 6 significant digits round-trip
                    const double score =
                        static_cast<double>(rng.next_below(1000000)) / 1000.0;
                    pairs.push_back({label, score});
                }
            }
            const std::string qid = "q" + std::to_string(q);
            run.lists.emplace(qid, make_ranked_list(qid, pairs));
        }

        std::ostringstream out;
        write_run(run, out);
        std::istringstream in(out.str());
        auto parsed = parse_run(in);
        CHECK(parsed.system_tag == run.system_tag);
        REQUIRE(parsed.lists.size() == run.lists.size());
        for (const auto& [qid, list] : run.lists) {
            const auto& back = parsed.lists.at(qid);
            REQUIRE(back.size() == list.size());
            for (std::size_t i = 0; i < list.size(); ++i) {
                CHECK(back.entries()[i].label == list.entries()[i].label);
                CHECK(back.entries()[i].score == doctest::Approx(list.entries()[i].score));
            }
        }
    }
}

TEST_CASE("gzip input is accepted by suffix") {
    std::remove("io_gz_test.run.gz");
    {
        std::ofstream plain("io_gz_test.run");
        plain << "q1 Q0 L1 1 2.5 sys\n";
    }
    REQUIRE(std::system("gzip -f io_gz_test.run") == 0);
    auto run = parse_run_file("io_gz_test.run.gz");
    CHECK(run.lists.at("q1").entries()[0].score == doctest::Approx(2.5));
    std::remove("io_gz_test.run.gz");
}

TEST_CASE("missing file raises IoFailure") {
    CHECK_THROWS_AS(parse_run_file("does-not-exist.run"), IoFailureError);
}

TEST_CASE("report rendering") {
    EvalReport report;
    EvalCell cell;
    cell.normalization = "zmuv";
    cell.method = "combmnz";
    cell.metric = "ndcg";
    cell.partition = "tail";
    cell.k = 1;
    cell.mean = 0.515;
    cell.std_dev = 0.017;
    cell.fold_values = {0.515, 0.515};
    report.cells.push_back(cell);

    const std::string csv = render_report(report, ReportFormat::Csv);
    CHECK(csv.find("normalization,method,metric,partition,k,mean,std,cell") == 0);
    CHECK(csv.find("zmuv,combmnz,ndcg,tail,1,0.515,0.017,51.5(1.7)") != std::string::npos);

    const std::string table = render_report(report, ReportFormat::Table);
    CHECK(table.find("== zmuv ==") != std::string::npos);
    CHECK(table.find("51.5(1.7)") != std::string::npos);

    CHECK_THROWS_AS(render_report(EvalReport{}, ReportFormat::Csv), EmptyReportError);
}

TEST_CASE("rendering is deterministic") {
    EvalReport report;
    for (int i = 0; i < 4; ++i) {
        EvalCell cell;
        cell.normalization = i < 2 ? "zmuv" : "min-max";
        cell.method = i % 2 ? "combsum" : "combmnz";
        cell.metric = "p";
        cell.partition = "all";
        cell.k = 5;
        cell.mean = 0.25 * (i + 1);
        cell.std_dev = 0.01;
        report.cells.push_back(cell);
    }
    CHECK(render_report(report, ReportFormat::Table) ==
          render_report(report, ReportFormat::Table));
    CHECK(render_report(report, ReportFormat::Csv) == render_report(report, ReportFormat::Csv));
}

#pragma once

/** \file io.hpp
 *  \brief Run / qrels / label-frequency file parsing and writing, plus
 *  report rendering (CSV and paper-style mean(std) tables).
 *
 * Run files use the 6-column whitespace format
 *   query_id Q0 label_id rank score system_tag
 * qrels the 4-column
 *   query_id 0 label_id relevance
 * and label frequencies "label<TAB>count". Inputs whose filename ends
 * in ".gz" are decompressed transparently.
 */

#include <iosfwd>
#include <map>
#include <string>

#include "rankfuse/core.hpp"
#include "rankfuse/eval.hpp"

namespace rankfuse {

struct MalformedLineError : std::runtime_error {
    MalformedLineError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line_no(line_no) {}
    std::size_t line_no;
};

struct DuplicateJudgmentError : std::runtime_error {
    DuplicateJudgmentError(const std::string& query, const std::string& label)
        : std::runtime_error("duplicate judgment for (" + query + ", " + label + ")") {}
};

struct MixedSystemTagsError : std::runtime_error {
    MixedSystemTagsError(const std::string& a, const std::string& b)
        : std::runtime_error("mixed system tags in one run file: " + a + " vs " + b) {}
};

struct NegativeCountError : std::runtime_error {
    explicit NegativeCountError(const std::string& label)
        : std::runtime_error("negative frequency for label: " + label) {}
};

struct IoFailureError : std::runtime_error {
    explicit IoFailureError(const std::string& path)
        : std::runtime_error("i/o failure: " + path) {}
};

struct EmptyReportError : std::runtime_error {
    EmptyReportError() : std::runtime_error("report has no cells") {}
};

Run parse_run_file(const std::string& path);
Run parse_run(std::istream& in);

Qrels parse_qrels_file(const std::string& path);
Qrels parse_qrels(std::istream& in);

std::map<std::string, long long> parse_label_frequencies_file(const std::string& path);
std::map<std::string, long long> parse_label_frequencies(std::istream& in);

/// Ranks re-emitted 1..N, scores printed with 6 significant digits.
void write_run_file(const Run& run, const std::string& path);
void write_run(const Run& run, std::ostream& out);

/// Locale-independent score rendering, 6 significant digits.
std::string format_score(double score);

enum class ReportFormat { Csv, Table };

/// CSV columns: normalization,method,metric,partition,k,mean,std,cell.
/// Table format groups rows into per-normalization blocks.
std::string render_report(const EvalReport& report, ReportFormat format);

}  // namespace rankfuse

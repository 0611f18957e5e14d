#include "rankfuse/io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace rankfuse {

namespace {

bool has_gz_suffix(const std::string& path) {
    return path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

std::string read_all(const std::string& path) {
    if (has_gz_suffix(path)) {
        gzFile gz = gzopen(path.c_str(), "rb");
        if (!gz) throw IoFailureError(path);
        std::string data;
        char buf[1 << 16];
        int n;
        while ((n = gzread(gz, buf, sizeof(buf))) > 0) data.append(buf, static_cast<std::size_t>(n));
        const bool bad = n < 0;
        gzclose(gz);
        if (bad) throw IoFailureError(path);
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailureError(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) fields.push_back(tok);
    return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw MalformedLineError(line_no, "bad number: " + s);
        return v;
    } catch (const MalformedLineError&) {
        throw;
    } catch (...) {
        throw MalformedLineError(line_no, "bad number: " + s);
    }
}

long long parse_ll(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw MalformedLineError(line_no, "bad integer: " + s);
        return v;
    } catch (const MalformedLineError&) {
        throw;
    } catch (...) {
        throw MalformedLineError(line_no, "bad integer: " + s);
    }
}

}  // namespace

Run parse_run(std::istream& in) {
    Run run;
    std::map<std::string, std::vector<Entry>> pending;
    std::map<std::string, std::map<std::string, long long>> stated_ranks;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_ws(line);
        if (fields.size() != 6) {
            throw MalformedLineError(line_no, "expected 6 fields, got " +
                                                  std::to_string(fields.size()));
        }
        const std::string& qid = fields[0];
        const std::string& label = fields[2];
        const long long rank = parse_ll(fields[3], line_no);
        const double score = parse_double(fields[4], line_no);
        const std::string& tag = fields[5];
        if (rank < 1) throw MalformedLineError(line_no, "rank must be >= 1");
        if (!std::isfinite(score)) throw MalformedLineError(line_no, "non-finite score");

        if (run.system_tag.empty()) run.system_tag = tag;
        else if (run.system_tag != tag) throw MixedSystemTagsError(run.system_tag, tag);

        auto& ranks = stated_ranks[qid];
        if (!ranks.emplace(label, rank).second) {
            throw DuplicateLabelError(qid + "/" + label);
        }
        pending[qid].push_back({label, score});
    }

    bool warned = false;
    for (auto& [qid, entries] : pending) {
        RankedList list = RankedList::make(qid, std::move(entries));
        if (!warned) {
            const auto& ranks = stated_ranks[qid];
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (ranks.at(list.entries()[i].label) != static_cast<long long>(i + 1)) {
                    std::cerr << "warning: stated ranks disagree with canonical score "
                                 "order (query " << qid << "); canonical order kept\n";
                    warned = true;
                    break;
                }
            }
        }
        run.lists.emplace(qid, std::move(list));
    }
    return run;
}

Run parse_run_file(const std::string& path) {
    std::istringstream in(read_all(path));
    return parse_run(in);
}

Qrels parse_qrels(std::istream& in) {
    Qrels qrels;
    std::map<std::string, std::set<std::string>> seen;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_ws(line);
        if (fields.size() != 4) {
            throw MalformedLineError(line_no, "expected 4 fields, got " +
                                                  std::to_string(fields.size()));
        }
        const std::string& qid = fields[0];
        const std::string& label = fields[2];
        const long long rel = parse_ll(fields[3], line_no);
        if (rel < 0) throw MalformedLineError(line_no, "negative relevance");

        if (!seen[qid].insert(label).second) throw DuplicateJudgmentError(qid, label);
        auto& gold = qrels.judgments[qid];  // relevance-0 lines still register the query
        if (rel > 0) gold.insert(label);
    }
    return qrels;
}

Qrels parse_qrels_file(const std::string& path) {
    std::istringstream in(read_all(path));
    return parse_qrels(in);
}

std::map<std::string, long long> parse_label_frequencies(std::istream& in) {
    std::map<std::string, long long> freqs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw MalformedLineError(line_no, "expected label<TAB>count");
        const std::string label = line.substr(0, tab);
        const long long count = parse_ll(line.substr(tab + 1), line_no);
        if (count < 0) throw NegativeCountError(label);
        if (!freqs.emplace(label, count).second) throw DuplicateLabelError(label);
    }
    return freqs;
}

std::map<std::string, long long> parse_label_frequencies_file(const std::string& path) {
    std::istringstream in(read_all(path));
    return parse_label_frequencies(in);
}

std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", score);
    for (char* p = buf; *p; ++p) {
        if (*p == ',') *p = '.';
    }
    return buf;
}

void write_run(const Run& run, std::ostream& out) {
    for (const auto& [qid, list] : run.lists) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& e = list.entries()[i];
            out << qid << " Q0 " << e.label << ' ' << i + 1 << ' ' << format_score(e.score)
                << ' ' << run.system_tag << '\n';
        }
    }
}

void write_run_file(const Run& run, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailureError(path);
    write_run(run, out);
    out.flush();
    if (!out) throw IoFailureError(path);
}

namespace {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    for (char* p = buf; *p; ++p) {
        if (*p == ',') *p = '.';
    }
    return buf;
}

std::string column_key(const EvalCell& cell) {
    return cell.metric + "@" + std::to_string(cell.k) + "/" + cell.partition;
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
    if (report.cells.empty()) throw EmptyReportError();

    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "normalization,method,metric,partition,k,mean,std,cell\n";
        for (const auto& c : report.cells) {
            out << c.normalization << ',' << c.method << ',' << c.metric << ','
                << c.partition << ',' << c.k << ',' << format_real(c.mean) << ','
                << format_real(c.std_dev) << ',' << render_cell(c.mean, c.std_dev) << '\n';
        }
        return out.str();
    }

    // table: one block per normalization, methods as rows, (metric@k, view) columns
    std::vector<std::string> norms;
    std::vector<std::string> methods;
    std::vector<std::string> columns;
    for (const auto& c : report.cells) {
        if (std::find(norms.begin(), norms.end(), c.normalization) == norms.end())
            norms.push_back(c.normalization);
        if (std::find(methods.begin(), methods.end(), c.method) == methods.end())
            methods.push_back(c.method);
        const std::string key = column_key(c);
        if (std::find(columns.begin(), columns.end(), key) == columns.end())
            columns.push_back(key);
    }

    std::map<std::string, std::string> grid;
    for (const auto& c : report.cells) {
        grid[c.normalization + "|" + c.method + "|" + column_key(c)] = render_cell(c.mean, c.std_dev);
    }

    const int name_width = 14;
    const int cell_width = 16;
    for (const auto& norm : norms) {
        out << "== " << norm << " ==\n";
        out << std::string(name_width, ' ');
        for (const auto& col : columns) {
            out << col << std::string(col.size() < cell_width ? cell_width - col.size() : 1, ' ');
        }
        out << '\n';
        for (const auto& method : methods) {
            out << method
                << std::string(method.size() < name_width ? name_width - method.size() : 1, ' ');
            for (const auto& col : columns) {
                auto it = grid.find(norm + "|" + method + "|" + col);
                const std::string cell = it == grid.end() ? "-" : it->second;
                out << cell
                    << std::string(cell.size() < cell_width ? cell_width - cell.size() : 1, ' ');
            }
            out << '\n';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace rankfuse

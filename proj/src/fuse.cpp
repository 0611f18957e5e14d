#include "rankfuse/fuse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "rankfuse/normalize.hpp"

namespace rankfuse {

namespace {

void require_lists(const Lists& lists) {
    if (lists.empty()) throw NoListsError();
}

/// Per-label scores gathered from the lists that contain the label.
std::map<std::string, std::vector<double>> collect_scores(const Lists& lists) {
    std::map<std::string, std::vector<double>> scores;
    for (const auto& list : lists) {
        for (const auto& e : list.entries()) scores[e.label].push_back(e.score);
    }
    return scores;
}

/// Per-label 1-based canonical ranks from the lists that contain the label.
std::map<std::string, std::vector<std::size_t>> collect_ranks(const Lists& lists) {
    std::map<std::string, std::vector<std::size_t>> ranks;
    for (const auto& list : lists) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            ranks[list.entries()[i].label].push_back(i + 1);
        }
    }
    return ranks;
}

FusedList finalize(const std::string& qid, std::vector<Entry> entries, std::size_t depth,
                   const std::map<std::string, std::size_t>& presence) {
    std::sort(entries.begin(), entries.end(), canonical_less);
    if (entries.size() > depth) entries.resize(depth);

    FusedList fused;
    for (const auto& e : entries) fused.presence[e.label] = presence.at(e.label);
    fused.list = RankedList::from_sorted(qid, std::move(entries));
    return fused;
}

template <typename Reduce>
FusedList score_based(const Lists& lists, std::size_t depth, Reduce reduce) {
    require_lists(lists);
    std::vector<Entry> entries;
    std::map<std::string, std::size_t> presence;
    for (auto& [label, scores] : collect_scores(lists)) {
        presence[label] = scores.size();
        entries.push_back({label, reduce(scores)});
    }
    return finalize(lists.front().query_id(), std::move(entries), depth, presence);
}

double inverse_square_rank_sum(const std::vector<std::size_t>& ranks) {
    double sum = 0.0;
    for (std::size_t r : ranks) sum += 1.0 / (static_cast<double>(r) * static_cast<double>(r));
    return sum;
}

}  // namespace

FusedList comb_min(const Lists& lists, std::size_t depth) {
    return score_based(lists, depth, [](const std::vector<double>& s) {
        return *std::min_element(s.begin(), s.end());
    });
}

FusedList comb_max(const Lists& lists, std::size_t depth) {
    return score_based(lists, depth, [](const std::vector<double>& s) {
        return *std::max_element(s.begin(), s.end());
    });
}

FusedList comb_med(const Lists& lists, std::size_t depth) {
    return score_based(lists, depth, [](std::vector<double> s) {
        std::sort(s.begin(), s.end());
        const std::size_t n = s.size();
        if (n % 2 == 1) return s[n / 2];
        return (s[n / 2 - 1] + s[n / 2]) / 2.0;
    });
}

FusedList comb_sum(const Lists& lists, std::size_t depth) {
    return score_based(lists, depth, [](const std::vector<double>& s) {
        double sum = 0.0;
        for (double v : s) sum += v;
        return sum;
    });
}

FusedList comb_anz(const Lists& lists, std::size_t depth) {
    return score_based(lists, depth, [](const std::vector<double>& s) {
        double sum = 0.0;
        for (double v : s) sum += v;
        return sum / static_cast<double>(s.size());
    });
}

FusedList comb_mnz(const Lists& lists, std::size_t depth) {
    return score_based(lists, depth, [](const std::vector<double>& s) {
        double sum = 0.0;
        for (double v : s) sum += v;
        return sum * static_cast<double>(s.size());
    });
}

FusedList isr(const Lists& lists, std::size_t depth) {
    require_lists(lists);
    std::vector<Entry> entries;
    std::map<std::string, std::size_t> presence;
    for (auto& [label, ranks] : collect_ranks(lists)) {
        const double freq = static_cast<double>(ranks.size());
        presence[label] = ranks.size();
        entries.push_back({label, freq * inverse_square_rank_sum(ranks)});
    }
    return finalize(lists.front().query_id(), std::move(entries), depth, presence);
}

FusedList log_isr(const Lists& lists, std::size_t depth) {
    require_lists(lists);
    std::vector<Entry> entries;
    std::map<std::string, std::size_t> presence;
    for (auto& [label, ranks] : collect_ranks(lists)) {
        const double freq = static_cast<double>(ranks.size());
        presence[label] = ranks.size();
        entries.push_back({label, std::log1p(freq) * inverse_square_rank_sum(ranks)});
    }
    return finalize(lists.front().query_id(), std::move(entries), depth, presence);
}

FusedList borda_fuse(const Lists& lists, std::size_t depth) {
    require_lists(lists);
    std::map<std::string, double> points;
    std::map<std::string, std::size_t> presence;
    for (const auto& list : lists) {
        const double n = static_cast<double>(list.size());
        for (std::size_t i = 0; i < list.size(); ++i) {
            points[list.entries()[i].label] += n - static_cast<double>(i + 1);
            ++presence[list.entries()[i].label];
        }
    }
    std::vector<Entry> entries;
    for (const auto& [label, score] : points) entries.push_back({label, score});
    return finalize(lists.front().query_id(), std::move(entries), depth, presence);
}

FusedList condorcet(const Lists& lists, std::size_t depth) {
    require_lists(lists);

    auto by_label = collect_ranks(lists);
    std::vector<std::string> labels;
    labels.reserve(by_label.size());
    for (const auto& [label, _] : by_label) labels.push_back(label);

    // rank lookup per list; labels missing from a list are absent from its map
    std::vector<std::unordered_map<std::string, std::size_t>> rank_of(lists.size());
    for (std::size_t li = 0; li < lists.size(); ++li) {
        for (std::size_t i = 0; i < lists[li].size(); ++i) {
            rank_of[li][lists[li].entries()[i].label] = i + 1;
        }
    }

    std::vector<double> points(labels.size(), 0.0);
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            int votes_a = 0;
            int votes_b = 0;
            for (const auto& ranks : rank_of) {
                auto ita = ranks.find(labels[a]);
                auto itb = ranks.find(labels[b]);
                const bool has_a = ita != ranks.end();
                const bool has_b = itb != ranks.end();
                if (has_a && has_b) {
                    if (ita->second < itb->second) ++votes_a;
                    else ++votes_b;
                } else if (has_a) {
                    ++votes_a;
                } else if (has_b) {
                    ++votes_b;
                }
            }
            if (votes_a > votes_b) {
                points[a] += 1.0;
            } else if (votes_b > votes_a) {
                points[b] += 1.0;
            } else {
                points[a] += 0.5;
                points[b] += 0.5;
            }
        }
    }

    std::vector<Entry> entries;
    entries.reserve(labels.size());
    std::map<std::string, std::size_t> presence;
    for (const auto& [label, ranks] : by_label) presence[label] = ranks.size();
    for (std::size_t i = 0; i < labels.size(); ++i) entries.push_back({labels[i], points[i]});
    return finalize(lists.front().query_id(), std::move(entries), depth, presence);
}

FusedList fuse(const Lists& lists, const FusionConfig& config) {
    require_lists(lists);
    Lists normalized;
    normalized.reserve(lists.size());
    for (const auto& list : lists) normalized.push_back(normalize(list, config.normalization));

    switch (config.method) {
        case FusionMethod::CombMIN: return comb_min(normalized, config.depth);
        case FusionMethod::CombMAX: return comb_max(normalized, config.depth);
        case FusionMethod::CombMED: return comb_med(normalized, config.depth);
        case FusionMethod::CombSUM: return comb_sum(normalized, config.depth);
        case FusionMethod::CombANZ: return comb_anz(normalized, config.depth);
        case FusionMethod::CombMNZ: return comb_mnz(normalized, config.depth);
        case FusionMethod::ISR: return isr(normalized, config.depth);
        case FusionMethod::LogISR: return log_isr(normalized, config.depth);
        case FusionMethod::BordaFuse: return borda_fuse(normalized, config.depth);
        case FusionMethod::Condorcet: return condorcet(normalized, config.depth);
    }
    throw std::logic_error("unreachable");
}

FusionMethod parse_fusion_method(const std::string& token) {
    if (token == "combmin") return FusionMethod::CombMIN;
    if (token == "combmax") return FusionMethod::CombMAX;
    if (token == "combmed") return FusionMethod::CombMED;
    if (token == "combsum") return FusionMethod::CombSUM;
    if (token == "combanz") return FusionMethod::CombANZ;
    if (token == "combmnz") return FusionMethod::CombMNZ;
    if (token == "isr") return FusionMethod::ISR;
    if (token == "logisr") return FusionMethod::LogISR;
    if (token == "bordafuse") return FusionMethod::BordaFuse;
    if (token == "condorcet") return FusionMethod::Condorcet;
    throw std::invalid_argument("unknown fusion method: " + token);
}

std::string fusion_method_token(FusionMethod method) {
    switch (method) {
        case FusionMethod::CombMIN: return "combmin";
        case FusionMethod::CombMAX: return "combmax";
        case FusionMethod::CombMED: return "combmed";
        case FusionMethod::CombSUM: return "combsum";
        case FusionMethod::CombANZ: return "combanz";
        case FusionMethod::CombMNZ: return "combmnz";
        case FusionMethod::ISR: return "isr";
        case FusionMethod::LogISR: return "logisr";
        case FusionMethod::BordaFuse: return "bordafuse";
        case FusionMethod::Condorcet: return "condorcet";
    }
    throw std::logic_error("unreachable");
}

}  // namespace rankfuse

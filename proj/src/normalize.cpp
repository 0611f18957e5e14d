#include "rankfuse/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rankfuse {

namespace {

void require_non_empty(const RankedList& list) {
    if (list.empty()) throw EmptyListError();
}

template <typename Fn>
RankedList map_scores(const RankedList& list, Fn fn) {
    std::vector<Entry> out;
    out.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        out.push_back({list.entries()[i].label, fn(list.entries()[i].score, i)});
    }
    return RankedList::from_sorted(list.query_id(), std::move(out));
}

}  // namespace

RankedList norm_min_max(const RankedList& list) {
    require_non_empty(list);
    const double max = list.entries().front().score;
    const double min = list.entries().back().score;
    if (max == min) {
        return map_scores(list, [](double, std::size_t) { return 1.0; });
    }
    return map_scores(list, [&](double s, std::size_t) { return (s - min) / (max - min); });
}

RankedList norm_max(const RankedList& list) {
    require_non_empty(list);
    const double max = list.entries().front().score;
    if (max == 0.0) return list;
    return map_scores(list, [&](double s, std::size_t) { return s / max; });
}

RankedList norm_sum(const RankedList& list) {
    require_non_empty(list);
    const double min = list.entries().back().score;
    double total = 0.0;
    for (const auto& e : list.entries()) total += e.score - min;
    if (total == 0.0) {
        const double uniform = 1.0 / static_cast<double>(list.size());
        return map_scores(list, [&](double, std::size_t) { return uniform; });
    }
    return map_scores(list, [&](double s, std::size_t) { return (s - min) / total; });
}

RankedList norm_zmuv(const RankedList& list) {
    require_non_empty(list);
    const double n = static_cast<double>(list.size());
    double mean = 0.0;
    for (const auto& e : list.entries()) mean += e.score;
    mean /= n;
    double var = 0.0;
    for (const auto& e : list.entries()) var += (e.score - mean) * (e.score - mean);
    var /= n;  // population variance
    if (var == 0.0) {
        return map_scores(list, [](double, std::size_t) { return 0.0; });
    }
    const double sd = std::sqrt(var);
    return map_scores(list, [&](double s, std::size_t) { return (s - mean) / sd; });
}

RankedList norm_rank(const RankedList& list) {
    require_non_empty(list);
    const double n = static_cast<double>(list.size());
    return map_scores(list, [&](double, std::size_t i) {
        return (n - static_cast<double>(i)) / n;
    });
}

RankedList norm_borda(const RankedList& list) {
    require_non_empty(list);
    if (list.size() == 1) {
        return map_scores(list, [](double, std::size_t) { return 1.0; });
    }
    const double n = static_cast<double>(list.size());
    return map_scores(list, [&](double, std::size_t i) {
        return (n - 1.0 - static_cast<double>(i)) / (n - 1.0);
    });
}

RankedList normalize(const RankedList& list, NormStrategy strategy) {
    switch (strategy) {
        case NormStrategy::MinMax: return norm_min_max(list);
        case NormStrategy::Max: return norm_max(list);
        case NormStrategy::Sum: return norm_sum(list);
        case NormStrategy::ZMUV: return norm_zmuv(list);
        case NormStrategy::Rank: return norm_rank(list);
        case NormStrategy::Borda: return norm_borda(list);
        case NormStrategy::None: return list;
    }
    throw std::logic_error("unreachable");
}

NormStrategy parse_norm_strategy(const std::string& token) {
    if (token == "min-max") return NormStrategy::MinMax;
    if (token == "max") return NormStrategy::Max;
    if (token == "sum") return NormStrategy::Sum;
    if (token == "zmuv") return NormStrategy::ZMUV;
    if (token == "rank") return NormStrategy::Rank;
    if (token == "borda") return NormStrategy::Borda;
    if (token == "none") return NormStrategy::None;
    throw std::invalid_argument("unknown normalization strategy: " + token);
}

std::string norm_strategy_token(NormStrategy strategy) {
    switch (strategy) {
        case NormStrategy::MinMax: return "min-max";
        case NormStrategy::Max: return "max";
        case NormStrategy::Sum: return "sum";
        case NormStrategy::ZMUV: return "zmuv";
        case NormStrategy::Rank: return "rank";
        case NormStrategy::Borda: return "borda";
        case NormStrategy::None: return "none";
    }
    throw std::logic_error("unreachable");
}

}  // namespace rankfuse

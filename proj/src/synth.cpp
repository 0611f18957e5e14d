#include "rankfuse/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace rankfuse::synth {

std::uint64_t SplitMix::next() {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * ++counter_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix::next_below(std::uint64_t bound) {
    return next() % bound;
}

namespace {

std::string padded_id(const char* prefix, std::size_t i, std::size_t width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*zu", prefix, static_cast<int>(width), i);
    return buf;
}

std::size_t id_width(std::size_t n) {
    std::size_t w = 1;
    while (n >= 10) {
        n /= 10;
        ++w;
    }
    return w;
}

}  // namespace

std::map<std::string, long long> gen_label_space(const SynthSpec& spec) {
    std::map<std::string, long long> freqs;
    const std::size_t width = id_width(spec.n_labels);
    for (std::size_t i = 1; i <= spec.n_labels; ++i) {
        const double f = spec.zipf_scale / std::pow(static_cast<double>(i), spec.zipf_exponent);
        freqs[padded_id("L", i, width)] = std::max(1LL, std::llround(f));
    }
    return freqs;
}

Qrels gen_qrels(const SynthSpec& spec, const LabelPartition& partition) {
    std::vector<std::string> head(partition.head.begin(), partition.head.end());
    std::vector<std::string> tail(partition.tail.begin(), partition.tail.end());

    Qrels qrels;
    SplitMix rng(spec.seed ^ 0x71e15ULL);
    const std::size_t qwidth = id_width(spec.n_queries);
    for (std::size_t q = 1; q <= spec.n_queries; ++q) {
        std::set<std::string> gold;
        std::size_t attempts = 0;
        while (gold.size() < spec.gold_per_query && attempts < spec.gold_per_query * 50) {
            // alternate head/tail draws so both views stay evaluable
            const bool pick_head = (gold.size() % 2 == 0) ? !head.empty() : tail.empty();
            const auto& pool = pick_head ? head : tail;
            gold.insert(pool[rng.next_below(pool.size())]);
            ++attempts;
        }
        qrels.judgments[padded_id("q", q, qwidth)] = std::move(gold);
    }
    return qrels;
}

namespace {

Run build_run(const SynthSpec& spec, const Qrels& qrels, const LabelPartition& partition,
              bool favor_head, const std::string& tag, std::uint64_t stream) {
    std::vector<std::string> all_labels;
    all_labels.reserve(partition.frequencies.size());
    for (const auto& [label, _] : partition.frequencies) all_labels.push_back(label);

    Run run;
    run.system_tag = tag;
    SplitMix rng(spec.seed ^ stream);

    for (const auto& [qid, gold] : qrels.judgments) {
        std::vector<Entry> entries;
        std::set<std::string> used;

        for (const auto& label : gold) {
            const bool favored = partition.head.count(label) ? favor_head : !favor_head;
            const double signal = favored ? 1.0 : 0.35;
            const double score =
                (1.0 - spec.noise) * signal + spec.noise * rng.next_double();
            entries.push_back({label, score});
            used.insert(label);
        }
        while (used.size() < std::min(spec.run_depth, all_labels.size())) {
            const std::string& label = all_labels[rng.next_below(all_labels.size())];
            if (!used.insert(label).second) continue;
            const double signal = 0.5 * rng.next_double();
            const double score =
                (1.0 - spec.noise) * signal + spec.noise * rng.next_double();
            entries.push_back({label, score});
        }
        run.lists.emplace(qid, RankedList::make(qid, std::move(entries)));
    }
    return run;
}

}  // namespace

std::pair<Run, Run> gen_run_pair(const SynthSpec& spec, const Qrels& qrels,
                                 const LabelPartition& partition) {
    Run head_run = build_run(spec, qrels, partition, true, "head-sys", 0x5eadULL);
    Run tail_run = build_run(spec, qrels, partition, false, "tail-sys", 0x7a11ULL);
    return {std::move(head_run), std::move(tail_run)};
}

std::vector<std::string> oracle_condorcet(const std::vector<RankedList>& lists) {
    std::set<std::string> union_set;
    for (const auto& list : lists) {
        for (const auto& e : list.entries()) union_set.insert(e.label);
    }
    std::vector<std::string> labels(union_set.begin(), union_set.end());

    // literal position lookup: linear scan, -1 when missing
    auto position = [](const RankedList& list, const std::string& label) -> long {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list.entries()[i].label == label) return static_cast<long>(i);
        }
        return -1;
    };

    std::map<std::string, double> points;
    for (const auto& label : labels) points[label] = 0.0;

    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            int wins_a = 0;
            int wins_b = 0;
            for (const auto& list : lists) {
                const long pa = position(list, labels[a]);
                const long pb = position(list, labels[b]);
                if (pa >= 0 && pb >= 0) {
                    if (pa < pb) ++wins_a;
                    else ++wins_b;
                } else if (pa >= 0) {
                    ++wins_a;
                } else if (pb >= 0) {
                    ++wins_b;
                }
            }
            if (wins_a > wins_b) points[labels[a]] += 1.0;
            else if (wins_b > wins_a) points[labels[b]] += 1.0;
            else {
                points[labels[a]] += 0.5;
                points[labels[b]] += 0.5;
            }
        }
    }

    std::sort(labels.begin(), labels.end(), [&](const std::string& x, const std::string& y) {
        if (points[x] != points[y]) return points[x] > points[y];
        return x < y;
    });
    return labels;
}

OracleMetrics oracle_metrics(const RankedList& fused, const std::set<std::string>& gold,
                             std::size_t k) {
    OracleMetrics out;

    std::size_t hits = 0;
    for (std::size_t i = 0; i < fused.size() && i < k; ++i) {
        for (const auto& g : gold) {
            if (fused.entries()[i].label == g) {
                ++hits;
                break;
            }
        }
    }
    out.precision = static_cast<double>(hits) / static_cast<double>(k);

    if (!gold.empty()) {
        double dcg = 0.0;
        for (std::size_t i = 0; i < fused.size() && i < k; ++i) {
            bool relevant = false;
            for (const auto& g : gold) {
                if (fused.entries()[i].label == g) relevant = true;
            }
            if (relevant) dcg += std::log(2.0) / std::log(static_cast<double>(i + 2));
        }
        double idcg = 0.0;
        for (std::size_t i = 0; i < gold.size() && i < k; ++i) {
            idcg += std::log(2.0) / std::log(static_cast<double>(i + 2));
        }
        out.ndcg = dcg / idcg;
    }
    return out;
}

}  // namespace rankfuse::synth

#pragma once

/** \file synth.hpp
 *  \brief Test-support generators and oracles: Zipf long-tail label
 *  spaces, complementary run pairs, and brute-force references used by
 *  the property tests.
 *
 * All randomness comes from a counter-based splitmix64 stream so that
 * fixtures are bitwise reproducible across platforms.
 */

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rankfuse/core.hpp"
#include "rankfuse/eval.hpp"

namespace rankfuse::synth {

/// Counter-based deterministic generator (splitmix64 of seed + counter).
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next();
    /// Uniform double in [0, 1).
    double next_double();
    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

struct SynthSpec {
    std::size_t n_labels = 100;
    std::size_t n_queries = 100;
    double zipf_exponent = 1.0;
    std::size_t gold_per_query = 5;
    double noise = 0.0;  // in [0, 1]
    std::uint64_t seed = 0;
    double zipf_scale = 1000.0;  // frequency of the most frequent label
    std::size_t run_depth = 128;
};

/// Zipf frequencies: count_i proportional to 1/i^exponent, scaled so the
/// top label has frequency zipf_scale; every count at least 1.
std::map<std::string, long long> gen_label_space(const SynthSpec& spec);

/// Gold sets drawn per query: half head labels, half tail labels where
/// possible, so both partition views stay evaluable.
Qrels gen_qrels(const SynthSpec& spec, const LabelPartition& partition);

/** Two complementary runs: the first scores head gold labels highly, the
 *  second tail gold labels; `noise` blends in seed-determined uniform
 *  scores (noise 1 means scores carry no gold signal at all).
 */
std::pair<Run, Run> gen_run_pair(const SynthSpec& spec, const Qrels& qrels,
                                 const LabelPartition& partition);

/// Exhaustive pairwise-majority Copeland ordering; independent of fuse::condorcet.
std::vector<std::string> oracle_condorcet(const std::vector<RankedList>& lists);

/// Literal-summation P@k and nDCG@k reference.
struct OracleMetrics {
    double precision = 0.0;
    double ndcg = 0.0;
};
OracleMetrics oracle_metrics(const RankedList& fused, const std::set<std::string>& gold,
                             std::size_t k);

}  // namespace rankfuse::synth

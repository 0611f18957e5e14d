#pragma once

/** \file fuse.hpp
 *  \brief Ten fusion algorithms combining the ranked lists of several
 *  systems for one query into a single fused list.
 *
 * Score-based: CombMIN/MAX/MED/SUM/ANZ/MNZ. Rank-based: ISR, Log-ISR.
 * Voting-based: BordaFuse, Condorcet (realized as Copeland scoring).
 *
 * A label absent from a run contributes no term to the score-based
 * aggregates; it is not treated as an implicit zero.
 */

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rankfuse/core.hpp"

namespace rankfuse {

struct NoListsError : std::runtime_error {
    NoListsError() : std::runtime_error("no input lists to fuse") {}
};

/// Fusion output: a ranked list plus, per label, the number of input
/// lists that contained it.
struct FusedList {
    RankedList list;
    std::map<std::string, std::size_t> presence;
};

using Lists = std::vector<RankedList>;

FusedList comb_min(const Lists& lists, std::size_t depth);
FusedList comb_max(const Lists& lists, std::size_t depth);
FusedList comb_med(const Lists& lists, std::size_t depth);
FusedList comb_sum(const Lists& lists, std::size_t depth);
FusedList comb_anz(const Lists& lists, std::size_t depth);
FusedList comb_mnz(const Lists& lists, std::size_t depth);

/// score(d) = |R(d)| * sum over lists containing d of 1/rank^2.
FusedList isr(const Lists& lists, std::size_t depth);

/// score(d) = ln(1 + |R(d)|) * sum over lists containing d of 1/rank^2.
FusedList log_isr(const Lists& lists, std::size_t depth);

/// score(d) = sum over lists r containing d of (N_r - rank_r(d)).
FusedList borda_fuse(const Lists& lists, std::size_t depth);

/// Copeland count over pairwise majorities; a present label beats a
/// missing one, vote ties split the point.
FusedList condorcet(const Lists& lists, std::size_t depth);

/// Normalize each list per config, apply config.method, truncate to depth.
FusedList fuse(const Lists& lists, const FusionConfig& config);

/// CLI tokens: combmin, combmax, combmed, combsum, combanz, combmnz,
/// isr, logisr, bordafuse, condorcet.
FusionMethod parse_fusion_method(const std::string& token);
std::string fusion_method_token(FusionMethod method);

}  // namespace rankfuse

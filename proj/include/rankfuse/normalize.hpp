#pragma once

/** \file normalize.hpp
 *  \brief Six score-normalization strategies. Each maps a non-empty
 *  RankedList to a RankedList over the same labels in the same canonical
 *  order, with transformed scores.
 */

#include <string>

#include "rankfuse/core.hpp"

namespace rankfuse {

/// s' = (s - min) / (max - min); all-equal input maps to all 1.0.
RankedList norm_min_max(const RankedList& list);

/// s' = s / max; identity when max == 0.
RankedList norm_max(const RankedList& list);

/// Shift so the minimum is 0, then divide by the total; all-equal input
/// maps to the uniform 1/N. Outputs sum to 1.
RankedList norm_sum(const RankedList& list);

/// Zero-mean, unit-variance (population std). Zero variance maps to all 0.
RankedList norm_zmuv(const RankedList& list);

/// Position-based: rank i of N gets (N - i + 1) / N. Top 1, bottom 1/N.
RankedList norm_rank(const RankedList& list);

/// Borda points: rank i of N gets (N - i) / (N - 1); single entry gets 1.
RankedList norm_borda(const RankedList& list);

/// Applies the strategy; None returns the input unchanged.
RankedList normalize(const RankedList& list, NormStrategy strategy);

/// CLI tokens: min-max, max, sum, zmuv, rank, borda, none.
NormStrategy parse_norm_strategy(const std::string& token);
std::string norm_strategy_token(NormStrategy strategy);

}  // namespace rankfuse

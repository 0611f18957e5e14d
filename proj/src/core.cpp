#include "rankfuse/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace rankfuse {

RankedList RankedList::make(std::string query_id, std::vector<Entry> pairs) {
    std::unordered_set<std::string> seen;
    seen.reserve(pairs.size());
    for (const auto& e : pairs) {
        if (!std::isfinite(e.score)) throw NonFiniteScoreError(e.label);
        if (!seen.insert(e.label).second) throw DuplicateLabelError(e.label);
    }
    std::sort(pairs.begin(), pairs.end(), canonical_less);
    RankedList list;
    list.query_id_ = std::move(query_id);
    list.entries_ = std::move(pairs);
    return list;
}

}  // namespace rankfuse

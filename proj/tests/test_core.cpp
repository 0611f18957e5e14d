#include <doctest.h>

#include "rankfuse/core.hpp"
#include "rankfuse/synth.hpp"

#include <limits>

using namespace rankfuse;

TEST_CASE("make_ranked_list sorts by score descending") {
    auto list = make_ranked_list("q1", {{"B", 3.0}, {"A", 5.0}});
    REQUIRE(list.size() == 2);
    CHECK(list.entries()[0].label == "A");
    CHECK(list.entries()[1].label == "B");
}

TEST_CASE("score ties break by label ascending") {
    auto list = make_ranked_list("q1", {{"B", 5.0}, {"A", 5.0}});
    CHECK(list.entries()[0].label == "A");
    CHECK(list.entries()[1].label == "B");
}

TEST_CASE("duplicate labels are rejected") {
    CHECK_THROWS_AS(make_ranked_list("q1", {{"A", 1.0}, {"A", 2.0}}), DuplicateLabelError);
}

TEST_CASE("non-finite scores are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(make_ranked_list("q1", {{"A", nan}}), NonFiniteScoreError);
    CHECK_THROWS_AS(make_ranked_list("q1", {{"A", inf}}), NonFiniteScoreError);
}

TEST_CASE("empty ranked list is legal") {
    auto list = make_ranked_list("q1", {});
    CHECK(list.empty());
    CHECK(list.query_id() == "q1");
}

TEST_CASE("random lists come back in canonical order") {
    synth::SplitMix rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Entry> pairs;
        const std::size_t n = 1 + rng.next_below(50);
        for (std::size_t i = 0; i < n; ++i) {
            pairs.push_back({"L" + std::to_string(i), rng.next_double() * 10.0 - 5.0});
        }
        auto list = make_ranked_list("q", pairs);
        for (std::size_t i = 1; i < list.size(); ++i) {
            CHECK(!canonical_less(list.entries()[i], list.entries()[i - 1]));
        }
    }
}

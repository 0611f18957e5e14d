#include <doctest.h>

#include "rankfuse/normalize.hpp"
#include "rankfuse/synth.hpp"

#include <cmath>

using namespace rankfuse;

namespace {

RankedList abc(double a, double b, double c) {
    return make_ranked_list("q", {{"A", a}, {"B", b}, {"C", c}});
}

RankedList random_list(synth::SplitMix& rng, std::size_t max_size = 200) {
    const std::size_t n = 1 + rng.next_below(max_size);
    std::vector<Entry> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        pairs.push_back({"L" + std::to_string(i), rng.next_double() * 200.0 - 100.0});
    }
    return make_ranked_list("q", pairs);
}

std::vector<std::string> labels_of(const RankedList& list) {
    std::vector<std::string> out;
    for (const auto& e : list.entries()) out.push_back(e.label);
    return out;
}

}  // namespace

TEST_CASE("min-max examples") {
    auto out = norm_min_max(abc(5, 3, 2));
    CHECK(out.entries()[0].score == doctest::Approx(1.0));
    CHECK(out.entries()[1].score == doctest::Approx(1.0 / 3.0));
    CHECK(out.entries()[2].score == doctest::Approx(0.0));

    auto flat = norm_min_max(make_ranked_list("q", {{"A", 4}, {"B", 4}}));
    CHECK(flat.entries()[0].score == 1.0);
    CHECK(flat.entries()[1].score == 1.0);

    auto one = norm_min_max(make_ranked_list("q", {{"A", 7}}));
    CHECK(one.entries()[0].score == 1.0);

    CHECK_THROWS_AS(norm_min_max(make_ranked_list("q", {})), EmptyListError);
}

TEST_CASE("max norm examples") {
    auto out = norm_max(abc(5, 3, 2));
    CHECK(out.entries()[0].score == doctest::Approx(1.0));
    CHECK(out.entries()[1].score == doctest::Approx(0.6));
    CHECK(out.entries()[2].score == doctest::Approx(0.4));

    auto neg = norm_max(make_ranked_list("q", {{"A", 2}, {"B", -2}}));
    CHECK(neg.entries()[0].score == doctest::Approx(1.0));
    CHECK(neg.entries()[1].score == doctest::Approx(-1.0));

    auto one = norm_max(make_ranked_list("q", {{"A", 7}}));
    CHECK(one.entries()[0].score == 1.0);

    // max == 0 leaves scores unchanged
    auto zero = norm_max(make_ranked_list("q", {{"A", 0}, {"B", -1}}));
    CHECK(zero.entries()[0].score == 0.0);
    CHECK(zero.entries()[1].score == -1.0);
}

TEST_CASE("sum norm examples") {
    auto out = norm_sum(abc(5, 3, 2));
    CHECK(out.entries()[0].score == doctest::Approx(0.75));
    CHECK(out.entries()[1].score == doctest::Approx(0.25));
    CHECK(out.entries()[2].score == doctest::Approx(0.0));

    auto flat = norm_sum(make_ranked_list("q", {{"A", 4}, {"B", 4}}));
    CHECK(flat.entries()[0].score == doctest::Approx(0.5));

    auto two = norm_sum(make_ranked_list("q", {{"A", 1}, {"B", 0}}));
    CHECK(two.entries()[0].score == doctest::Approx(1.0));
    CHECK(two.entries()[1].score == doctest::Approx(0.0));
}

TEST_CASE("zmuv examples") {
    auto out = norm_zmuv(abc(3, 2, 1));
    CHECK(out.entries()[0].score == doctest::Approx(1.2247).epsilon(1e-4));
    CHECK(out.entries()[1].score == doctest::Approx(0.0));
    CHECK(out.entries()[2].score == doctest::Approx(-1.2247).epsilon(1e-4));

    auto flat = norm_zmuv(make_ranked_list("q", {{"A", 4}, {"B", 4}}));
    CHECK(flat.entries()[0].score == 0.0);

    auto two = norm_zmuv(make_ranked_list("q", {{"A", 4}, {"B", 2}}));
    CHECK(two.entries()[0].score == doctest::Approx(1.0));
    CHECK(two.entries()[1].score == doctest::Approx(-1.0));
}

TEST_CASE("rank norm examples") {
    auto out = norm_rank(make_ranked_list("q", {{"A", 9}, {"B", 7}, {"C", 5}, {"D", 1}}));
    CHECK(out.entries()[0].score == doctest::Approx(1.0));
    CHECK(out.entries()[1].score == doctest::Approx(0.75));
    CHECK(out.entries()[2].score == doctest::Approx(0.5));
    CHECK(out.entries()[3].score == doctest::Approx(0.25));

    auto one = norm_rank(make_ranked_list("q", {{"A", 7}}));
    CHECK(one.entries()[0].score == 1.0);

    auto tie = norm_rank(make_ranked_list("q", {{"B", 5}, {"A", 5}}));
    CHECK(tie.entries()[0].label == "A");
    CHECK(tie.entries()[0].score == doctest::Approx(1.0));
    CHECK(tie.entries()[1].score == doctest::Approx(0.5));
}

TEST_CASE("borda norm examples") {
    auto out = norm_borda(abc(5, 3, 2));
    CHECK(out.entries()[0].score == doctest::Approx(1.0));
    CHECK(out.entries()[1].score == doctest::Approx(0.5));
    CHECK(out.entries()[2].score == doctest::Approx(0.0));

    auto two = norm_borda(make_ranked_list("q", {{"A", 5}, {"B", 3}}));
    CHECK(two.entries()[0].score == doctest::Approx(1.0));
    CHECK(two.entries()[1].score == doctest::Approx(0.0));

    auto one = norm_borda(make_ranked_list("q", {{"A", 7}}));
    CHECK(one.entries()[0].score == 1.0);
}

TEST_CASE("all strategies preserve canonical label order") {
    synth::SplitMix rng(42);
    const NormStrategy all[] = {NormStrategy::MinMax, NormStrategy::Max, NormStrategy::Sum,
                                NormStrategy::ZMUV, NormStrategy::Rank, NormStrategy::Borda};
    for (int trial = 0; trial < 200; ++trial) {
        auto list = random_list(rng, 50);
        for (NormStrategy s : all) {
            auto out = normalize(list, s);
            CHECK(labels_of(out) == labels_of(list));
        }
    }
}

TEST_CASE("sum norm outputs always sum to 1") {
    synth::SplitMix rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto out = norm_sum(random_list(rng, 100));
        double total = 0.0;
        for (const auto& e : out.entries()) total += e.score;
        CHECK(std::fabs(total - 1.0) <= 1e-9);
    }
}

TEST_CASE("zmuv output has zero mean and unit population variance") {
    synth::SplitMix rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto list = random_list(rng, 100);
        if (list.size() < 2) continue;
        auto out = norm_zmuv(list);
        double mean = 0.0;
        for (const auto& e : out.entries()) mean += e.score;
        mean /= static_cast<double>(out.size());
        double var = 0.0;
        for (const auto& e : out.entries()) var += (e.score - mean) * (e.score - mean);
        var /= static_cast<double>(out.size());
        CHECK(std::fabs(mean) <= 1e-9);
        CHECK(std::fabs(var - 1.0) <= 1e-9);
    }
}

TEST_CASE("min-max then max is idempotent when max > min") {
    synth::SplitMix rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        auto list = random_list(rng, 50);
        if (list.size() < 2) continue;
        auto mm = norm_min_max(list);
        auto chained = norm_max(mm);
        for (std::size_t i = 0; i < mm.size(); ++i) {
            CHECK(std::fabs(chained.entries()[i].score - mm.entries()[i].score) <= 1e-12);
        }
    }
}

TEST_CASE("strategy token round trip") {
    const NormStrategy all[] = {NormStrategy::MinMax, NormStrategy::Max,  NormStrategy::Sum,
                                NormStrategy::ZMUV,   NormStrategy::Rank, NormStrategy::Borda,
                                NormStrategy::None};
    for (NormStrategy s : all) CHECK(parse_norm_strategy(norm_strategy_token(s)) == s);
    CHECK_THROWS_AS(parse_norm_strategy("minmax"), std::invalid_argument);
}

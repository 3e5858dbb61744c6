#include <gtest/gtest.h>

#include <algorithm>

#include "betscan/selection.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace betscan {
namespace {

Candidate cand(std::size_t start, std::size_t end, double err) {
    Candidate c;
    c.fit.range = {start, end};
    c.fit.n_points = end - start + 1;
    c.pc_error = err;
    return c;
}

TEST(SelectKnee, Examples) {
    const std::vector<Candidate> three{cand(0, 5, 1.0), cand(1, 7, 3.0), cand(2, 7, 2.0)};
    const auto pick = select_knee(three);
    ASSERT_TRUE(pick);
    EXPECT_EQ(pick->fit.range.end, 7u);
    EXPECT_EQ(pick->pc_error, 2.0);

    EXPECT_FALSE(select_knee({}));

    const std::vector<Candidate> one{cand(3, 9, 4.0)};
    EXPECT_EQ(select_knee(one), one.front());

    const std::vector<Candidate> tie{cand(3, 7, 2.0), cand(1, 7, 2.0)};
    EXPECT_EQ(select_knee(tie)->fit.range.start, 1u);
}

std::vector<Candidate> random_set(testing::Rng& rng) {
    std::vector<Candidate> out;
    const std::size_t n = rng.index(0, 25);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t end = rng.index(1, 8);
        const std::size_t start = rng.index(0, end - 1);
        // Coarse error grid so ties on (end, error) are common.
        out.push_back(cand(start, end, static_cast<double>(rng.index(0, 4)) * 0.5));
    }
    return out;
}

TEST(SelectKnee, MatchesBruteForceOracle) {
    testing::Rng rng(71);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto set = random_set(rng);
        const auto got = select_knee(set);
        const auto want = testing::oracle_select(set);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (!got) continue;
        ASSERT_EQ(got->fit.range, want->fit.range);
        ASSERT_EQ(got->pc_error, want->pc_error);
    }
}

TEST(SelectKnee, SoundnessProperties) {
    testing::Rng rng(72);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto set = random_set(rng);
        const auto got = select_knee(set);
        if (set.empty()) continue;
        ASSERT_TRUE(got);
        ASSERT_NE(std::find(set.begin(), set.end(), *got), set.end());
        for (const auto& c : set) {
            ASSERT_LE(c.fit.range.end, got->fit.range.end);
            if (c.fit.range.end == got->fit.range.end) ASSERT_GE(c.pc_error, got->pc_error);
        }
    }
}

TEST(SelectKnee, PermutationInvariant) {
    testing::Rng rng(73);
    for (int trial = 0; trial < 1000; ++trial) {
        auto set = random_set(rng);
        const auto base = select_knee(set);
        std::shuffle(set.begin(), set.end(), rng.engine());
        const auto shuffled = select_knee(set);
        ASSERT_EQ(base.has_value(), shuffled.has_value());
        if (!base) continue;
        ASSERT_EQ(base->fit.range, shuffled->fit.range);
        ASSERT_EQ(base->pc_error, shuffled->pc_error);
    }
}

}  // namespace
}  // namespace betscan

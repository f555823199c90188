#include "vtab/bumping.hpp"
#include "vtab/error.hpp"
#include "vtab/max_index.hpp"
#include "vtab/sequence.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace vtab;

TEST(BumpingCriterion, Examples) {
    EXPECT_TRUE(bumping_criterion({4, 3, 7, 5}, 8));
    EXPECT_EQ(interior_gaps({4, 3, 7, 5}), (std::vector<int>{6}));
    EXPECT_FALSE(bumping_criterion({2, 3}, 4));
    EXPECT_THROW(bumping_criterion({2, 2}, 4), Error);
    EXPECT_THROW(bumping_criterion({2, 5}, 4), Error);
}

TEST(SuffixCriterion, Examples) {
    EXPECT_TRUE(suffix_criterion({3, 1, 6, 2}, 8));
    EXPECT_EQ(interior_gaps({3, 1, 6, 2}), (std::vector<int>{4, 5}));
    for (int n = 2; n <= 6; ++n)
        EXPECT_FALSE(suffix_criterion({n}, n));
    EXPECT_THROW(suffix_criterion({1, 1}, 4), Error);
}

TEST(Criteria, AgreeWithBruteForceMembership) {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n && k <= 4; ++k) {
            std::set<std::vector<int>> bumps, suffixes;
            for (const auto& w : enumerate_rnk(n, k)) {
                std::vector<int> a(w.word().end() - k, w.word().end());
                bumps.insert(bumps_from_suffix(a));
                suffixes.insert(a);
            }
            for_each_sequence(n, k, [&](const IntegerSequence& s) {
                if (s.has_repeats())
                    return;
                const auto& x = s.as_vector();
                ASSERT_EQ(bumping_criterion(x, n), bumps.count(x) > 0) << s.to_string();
                ASSERT_EQ(suffix_criterion(x, n), suffixes.count(x) > 0) << s.to_string();
                ASSERT_EQ(bumping_criterion(x, n), suffix_criterion(reverse_complement(x, n), n));
            });
        }
}

TEST(Repark, WorkedExample) {
    const ReparkingInstance inst(11, {3, 2, 5, 8, 9});
    const auto right = repark(inst, Direction::Right);
    EXPECT_TRUE(right.success);
    EXPECT_TRUE(right.predicted);
    EXPECT_EQ(right.positions, (std::vector<int>{4, 3, 6, 10, 11}));
    const auto left = repark(inst, Direction::Left);
    EXPECT_TRUE(left.success);
    EXPECT_EQ(left.positions, (std::vector<int>{2, 1, 4, 6, 7}));
}

TEST(Repark, FailuresAtStreetEnds) {
    const auto r = repark(ReparkingInstance(10, {3, 2, 5, 8, 9}), Direction::Right);
    EXPECT_FALSE(r.success);
    EXPECT_FALSE(r.predicted);
    EXPECT_EQ(r.failed_car, 5);
    const auto l = repark(ReparkingInstance(5, {1, 3}), Direction::Left);
    EXPECT_FALSE(l.success);
    EXPECT_EQ(l.failed_car, 1);
    EXPECT_EQ(repark(ReparkingInstance(4, {1}), Direction::Right).positions, (std::vector<int>{2}));
}

TEST(Repark, InvalidInstances) {
    EXPECT_THROW(ReparkingInstance(4, {1, 1}), Error);
    EXPECT_THROW(ReparkingInstance(4, {5}), Error);
    EXPECT_THROW(ReparkingInstance(0, {}), Error);
}

TEST(Repark, SimulationMatchesPredictionExhaustively) {
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= 4 && k <= n; ++k)
            for_each_sequence(n, k, [&](const IntegerSequence& s) {
                if (s.has_repeats())
                    return;
                const ReparkingInstance inst(n, s.as_vector());
                for (auto dir : {Direction::Right, Direction::Left}) {
                    const auto r = repark(inst, dir);
                    ASSERT_EQ(r.success, r.predicted) << n << " " << s.to_string();
                }
            });
}

#include "oracles.hpp"

#include "vtab/di_map.hpp"
#include "vtab/error.hpp"
#include "vtab/max_index.hpp"
#include "vtab/rsk.hpp"
#include "vtab/tableau.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace vtab;

namespace {

std::set<std::string> words(const std::vector<Permutation>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) {
        std::string s;
        for (int x : w.word())
            s += std::to_string(x);
        out.insert(s);
    }
    return out;
}

} // namespace

TEST(Rnk, FourTwo) {
    EXPECT_EQ(words(enumerate_rnk(4, 2)), (std::set<std::string>{"1432", "2413", "2431", "3412", "3421"}));
}

TEST(Rnk, EnumerationMatchesBruteForceFilter) {
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k < n; ++k) {
            std::vector<Permutation> brute;
            for (const auto& w : all_permutations(n))
                if (oracle::in_rnk(w.as_vector(), k))
                    brute.push_back(w);
            ASSERT_EQ(enumerate_rnk(n, k), brute) << n << "," << k;
            for (const auto& w : brute)
                ASSERT_TRUE(is_in_rnk(w, k));
        }
}

TEST(Rnk, FibreSizesAreProductOfTableauCounts) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& shape : partitions_of(n)) {
            const int k = n - shape.first();
            if (k >= n)
                continue;
            EXPECT_EQ(rk_of_shape(n, k, shape).size(), count_syt(shape) * count_syt(shape.star()))
                << shape.to_string();
        }
}

TEST(AlgorithmA, WorkedExample) {
    const auto r = algorithm_a(Permutation({4, 5, 7, 8, 3, 1, 6, 2}), 4);
    EXPECT_EQ(r.t, (std::vector<int>{4, 3, 7, 5}));
    EXPECT_EQ(r.i, IntegerSequence(8, {3, 2, 6, 2}));
    EXPECT_THROW(algorithm_a(Permutation({1, 2, 3}), 1), Error);
}

TEST(AlgorithmA, BumpsMatchRowInsertion) {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n && k <= 4; ++k)
            for (const auto& w : enumerate_rnk(n, k)) {
                const std::vector<int> a(w.word().end() - k, w.word().end());
                ASSERT_EQ(bumps_from_suffix(a), oracle::first_row_bumps(w.as_vector(), k)) << w.to_string();
                ASSERT_EQ(algorithm_a(w, k).t, bumps_from_suffix(a));
            }
}

TEST(AlgorithmB, WorkedExampleAndFailureModes) {
    const auto ok = algorithm_b(IntegerSequence(8, {3, 2, 6, 2}));
    ASSERT_TRUE(ok.ok());
    EXPECT_EQ(ok.t, (std::vector<int>{4, 3, 7, 5}));
    EXPECT_EQ(ok.a, (std::vector<int>{3, 1, 6, 2}));
    EXPECT_EQ(*ok.w, Permutation({4, 5, 7, 8, 3, 1, 6, 2}));

    const auto overflow = algorithm_b(IntegerSequence(4, {4, 4}));
    EXPECT_EQ(overflow.status, AlgorithmBStatus::BumpOverflow);
    EXPECT_EQ(overflow.t, (std::vector<int>{5, 6}));

    const auto underflow = algorithm_b(IntegerSequence(4, {1, 1}));
    EXPECT_EQ(underflow.status, AlgorithmBStatus::SlotUnderflow);
    EXPECT_EQ(underflow.t, (std::vector<int>{2, 3}));
    EXPECT_EQ(underflow.a, (std::vector<int>{0, 1}));
    EXPECT_EQ(sequence_from_bumps(underflow.t), (std::vector<int>{1, 1}));
}

TEST(AlgorithmB, SucceedsWithoutMaxIndex) {
    const IntegerSequence i(4, {1, 2});
    const auto r = algorithm_b(i);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.t, (std::vector<int>{3, 4}));
    EXPECT_EQ(*r.w, Permutation({3, 4, 1, 2}));
    EXPECT_EQ(vt_index(i), 1);
    EXPECT_FALSE(has_max_vt_index(i));
    EXPECT_EQ(psi_inverse(Permutation({3, 4, 1, 2}), 2), IntegerSequence(4, {2, 2}));
}

TEST(Psi, WorkedExample) {
    EXPECT_EQ(psi(IntegerSequence(8, {3, 2, 6, 2})), Permutation({4, 5, 7, 8, 3, 1, 6, 2}));
    EXPECT_THROW(psi(IntegerSequence(6, {3, 2, 6, 2})), Error);
}

TEST(Psi, FourTwoSequences) {
    std::set<IntegerSequence> with_max;
    for_each_sequence(4, 2, [&](const IntegerSequence& i) {
        if (vt_index(i) == 2)
            with_max.insert(i);
    });
    const std::set<IntegerSequence> expected{IntegerSequence(4, {2, 2}), IntegerSequence(4, {1, 3}),
                                             IntegerSequence(4, {3, 2}), IntegerSequence(4, {3, 1}),
                                             IntegerSequence(4, {2, 1})};
    EXPECT_EQ(with_max, expected);
    for (const auto& i : expected)
        EXPECT_EQ(vt_shape(i).first(), 2);
    EXPECT_EQ(vt_shape(IntegerSequence(4, {2, 2})), Partition({2, 2}));
    EXPECT_EQ(vt_shape(IntegerSequence(4, {3, 1})), Partition({2, 1, 1}));
}

TEST(Psi, BijectionAndAlgorithmsAgree) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < n && k <= 4; ++k) {
            std::set<Permutation> images;
            for_each_sequence(n, k, [&](const IntegerSequence& i) {
                const bool max = vt_index(i) == k;
                ASSERT_EQ(has_max_vt_index(i), max) << i.to_string();
                if (!max)
                    return;
                const auto w = psi(i);
                ASSERT_TRUE(is_in_rnk(w, k));
                ASSERT_EQ(psi_inverse(w, k), i);
                ASSERT_EQ(*algorithm_b(i).w, w);
                ASSERT_EQ(algorithm_a(w, k).i, i);
                ASSERT_EQ(rsk(w).p.shape(), vt_shape(i));
                images.insert(w);
            });
            EXPECT_EQ(images.size(), enumerate_rnk(n, k).size());
        }
}

TEST(Grids, RenderShadedCells) {
    const auto a = render_grid_a(Permutation({4, 5, 7, 8, 3, 1, 6, 2}), 4);
    EXPECT_NE(a.find(" 8 |"), std::string::npos);
    EXPECT_NE(a.find('#'), std::string::npos);
    const auto b = render_grid_b(IntegerSequence(4, {1, 1}));
    EXPECT_NE(b.find("slot-underflow"), std::string::npos);
}

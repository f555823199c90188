#include "vtab/counting.hpp"
#include "vtab/error.hpp"
#include "vtab/partition.hpp"
#include "vtab/sequence.hpp"
#include "vtab/tableau.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace vtab;

TEST(Counting, Binomials) {
    EXPECT_EQ(binomial(8, 4), 70u);
    EXPECT_EQ(binomial(4, 5), 0u);
    EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
    EXPECT_THROW(binomial(70, 35), Error);
}

TEST(Counting, StirlingAndBellAgainstSetPartitionEnumeration) {
    // Count set partitions of [k] by number of blocks through the
    // restricted-growth strings.
    for (int k = 0; k <= 7; ++k) {
        std::map<int, std::uint64_t> by_blocks;
        std::vector<int> rgs(static_cast<std::size_t>(k), 0);
        const auto rec = [&](auto&& self, int pos, int used) -> void {
            if (pos == k) {
                ++by_blocks[used];
                return;
            }
            for (int b = 0; b <= used; ++b) {
                rgs[pos] = b;
                self(self, pos + 1, std::max(used, b + 1));
            }
        };
        rec(rec, 0, 0);
        std::uint64_t total = 0;
        for (int i = 0; i <= k; ++i) {
            EXPECT_EQ(stirling2(k, i), by_blocks[i]) << k << "," << i;
            total += by_blocks[i];
        }
        EXPECT_EQ(bell(k), total);
        EXPECT_EQ(bounded_bell(k, 2), by_blocks[0] + by_blocks[1] + by_blocks[2]);
    }
}

TEST(Counting, BallotEqualsTwoRowSyt) {
    for (int n = 0; n <= 14; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            EXPECT_EQ(ballot(n, k), count_syt(two_row_shape(n, k))) << n << "," << k;
}

TEST(Counting, CatalanIsSquareShape) {
    for (int m = 0; m <= 7; ++m)
        EXPECT_EQ(catalan(m), count_syt(m == 0 ? Partition() : Partition({m, m})));
    EXPECT_EQ(catalan(5), 42u);
}

TEST(Counting, BallotFraction) {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; 2 * k <= n; ++k) {
            const auto f = ballot_fraction(n, k);
            EXPECT_TRUE(f.is_integer());
            EXPECT_EQ(static_cast<std::uint64_t>(f.num), ballot(n, k));
        }
    }
    // (6-4-1)/(6-2+1) * C(6,2) = 15/5 = 3, against the true value 9.
    EXPECT_EQ(ballot_fraction(6, 2, -2), (Fraction{3, 1}));
    EXPECT_EQ(ballot(6, 2), 9u);
}

TEST(Counting, ParseKind) {
    EXPECT_EQ(parse_count_kind("bell"), CountKind::Bell);
    EXPECT_FALSE(parse_count_kind("fibonacci").has_value());
    EXPECT_EQ(count_reference(CountKind::Stirling2, 4, 2), 7u);
    EXPECT_EQ(count_reference(CountKind::Catalan, 4), 14u);
}

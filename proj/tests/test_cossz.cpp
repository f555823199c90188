#include "vtab/bumping.hpp"
#include "vtab/cossz.hpp"
#include "vtab/di_map.hpp"
#include "vtab/error.hpp"
#include "vtab/tableau.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

using namespace vtab;

using Cells = std::vector<std::vector<MultisetCell>>;

TEST(Cossz, FirstExample) {
    const auto r = cossz_forward(IntegerSequence(6, {3, 2, 6, 2}));
    EXPECT_EQ(r.s.rows(), (Rows{{1, 2, 5, 6}, {3}, {4}}));
    EXPECT_EQ(r.t.rows(), (Cells{{{}, {}, {}, {3}}, {{1}}, {{2, 4}}}));
    EXPECT_FALSE(cossz_maxshape(IntegerSequence(6, {3, 2, 6, 2})));
    EXPECT_EQ(cossz_inverse(r.s, r.t), IntegerSequence(6, {3, 2, 6, 2}));
}

TEST(Cossz, SecondExample) {
    const IntegerSequence i(8, {3, 1, 6, 2});
    const auto r = cossz_forward(i);
    EXPECT_EQ(r.s.rows(), (Rows{{1, 2, 6, 8}, {3, 5}, {4, 7}}));
    EXPECT_EQ(r.t.rows(), (Cells{{{}, {}, {}, {}}, {{1}, {3}}, {{2}, {4}}}));
    EXPECT_TRUE(cossz_maxshape(i));
}

TEST(Cossz, EmptySequence) {
    const auto r = cossz_forward(IntegerSequence(3, {}));
    EXPECT_EQ(r.s.rows(), (Rows{{1, 2, 3}}));
    EXPECT_EQ(r.t.rows(), (Cells{{{}, {}, {}}}));
    EXPECT_EQ(cossz_inverse(r.s, r.t), IntegerSequence(3, {}));
}

TEST(MultisetTableau, Validation) {
    EXPECT_THROW(MultisetTableau(Cells{{{1}, {1}}}), Error);          // not disjoint
    EXPECT_THROW(MultisetTableau(Cells{{{2}}}), Error);               // misses 1
    EXPECT_THROW(MultisetTableau(Cells{{{2}, {1}}}), Error);          // row decreases
    EXPECT_THROW(MultisetTableau(Cells{{{}}, {{}}}), Error);          // column of empties
    EXPECT_THROW(MultisetTableau(Cells{{{2}, {}}, {{1}}}), Error);    // empty after nonempty
    EXPECT_NO_THROW(MultisetTableau(Cells{{{}, {2, 1}}, {{3}}}));
    EXPECT_EQ(MultisetTableau(Cells{{{}, {2, 1}}, {{3}}}).rows()[0][1], (MultisetCell{1, 2}));
}

TEST(Cossz, InverseRejectsForeignPairs) {
    const StandardTableau s(Rows{{1, 2}, {3}});
    EXPECT_THROW(cossz_inverse(s, MultisetTableau(Cells{{{}, {}, {}}})), Error);
}

TEST(Cossz, BijectionWithDiShapeCounts) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            std::map<Partition, std::uint64_t> cossz_shapes, di_shapes;
            std::set<std::pair<Rows, Cells>> images;
            for_each_sequence(n, k, [&](const IntegerSequence& i) {
                const auto r = cossz_forward(i);
                ASSERT_EQ(r.s.shape(), r.t.shape());
                ASSERT_EQ(cossz_inverse(r.s, r.t), i) << i.to_string();
                ++cossz_shapes[r.s.shape()];
                ++di_shapes[vt_shape(i)];
                images.insert({r.s.rows(), r.t.rows()});
            });
            EXPECT_EQ(cossz_shapes, di_shapes) << n << "," << k;
            EXPECT_EQ(images.size(), static_cast<std::size_t>(std::pow(n, k)));
        }
}

TEST(Cossz, MaxShapeIffDistinctSuffix) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < n && k <= 3; ++k)
            for_each_sequence(n, k, [&](const IntegerSequence& i) {
                const bool expected = !i.has_repeats() && suffix_criterion(i.as_vector(), n);
                ASSERT_EQ(cossz_maxshape(i), expected) << i.to_string();
            });
}

#include "altrun/perm_stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "altrun/errors.hpp"

namespace altrun {
namespace {

TEST(PermStats, AltRuns) {
    EXPECT_EQ(stat_of(Permutation{{1, 3, 2}}, Statistic::alt_runs), 2);
    EXPECT_EQ(stat_of(Permutation{{1, 2, 3}}, Statistic::alt_runs), 1);
    EXPECT_EQ(stat_of(Permutation{{1}}, Statistic::alt_runs), 0);
    EXPECT_EQ(stat_of(Permutation{{2, 1, 3, 4}}, Statistic::alt_runs), 2);
}

TEST(PermStats, Peaks) {
    EXPECT_EQ(stat_of(Permutation{{2, 1, 3}}, Statistic::pk), 0);
    EXPECT_EQ(stat_of(Permutation{{1, 3, 2}}, Statistic::pk), 1);
    EXPECT_EQ(stat_of(Permutation{{2, 1, 3}}, Statistic::lpk), 1);
    EXPECT_EQ(stat_of(Permutation{{1, 2, 3}}, Statistic::lpk), 0);
}

TEST(PermStats, SignedRuns) {
    EXPECT_EQ(stat_of(SignedPermutation{{1, -2}}, Statistic::signed_runs), 2);
    EXPECT_EQ(stat_of(SignedPermutation{{1, 2}}, Statistic::signed_runs), 1);
    EXPECT_EQ(stat_of(SignedPermutation{{-1, 2}}, Statistic::signed_runs), 2);
}

TEST(PermStats, SnakeZigzag) {
    EXPECT_EQ(stat_of(SignedPermutation{{2, -1}}, Statistic::is_snake), 1);
    EXPECT_EQ(stat_of(SignedPermutation{{-2, 1}}, Statistic::is_snake), 0);
    EXPECT_EQ(stat_of(Permutation{{2, 1, 3}}, Statistic::is_zigzag), 1);
    EXPECT_EQ(stat_of(Permutation{{1, 2, 3}}, Statistic::is_zigzag), 0);
}

TEST(PermStats, KindMismatch) {
    EXPECT_THROW(stat_of(Permutation{{1, 2}}, Statistic::signed_runs), KindMismatch);
    EXPECT_THROW(stat_of(Permutation{{1, 2}}, Statistic::is_snake), KindMismatch);
    EXPECT_THROW(stat_of(SignedPermutation{{1, 2}}, Statistic::pk), KindMismatch);
}

TEST(PermStats, AltRunsRow) {
    StatRow row = oracle_row(4, RowStatistic::alt_runs);
    EXPECT_EQ(row.counts, (std::vector<Integer>{0, 2, 12, 10}));
}

TEST(PermStats, SignedRunsUpRow) {
    StatRow row = oracle_row(2, RowStatistic::signed_runs_up);
    EXPECT_EQ(row.counts, (std::vector<Integer>{0, 1, 3}));
}

TEST(PermStats, ZigzagTotals) {
    // Tangent/secant numbers E_1..E_6.
    const long expected[] = {1, 1, 2, 5, 16, 61};
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_EQ(oracle_row(n, RowStatistic::zigzag_count).counts[0],
                  expected[n - 1]);
}

TEST(PermStats, SnakeTotals) {
    // Springer numbers s_1..s_5.
    const long expected[] = {1, 3, 11, 57, 361};
    for (std::size_t n = 1; n <= 5; ++n)
        EXPECT_EQ(oracle_row(n, RowStatistic::snake_count).counts[0],
                  expected[n - 1]);
}

TEST(PermStats, RowSums) {
    for (std::size_t n = 2; n <= 7; ++n) {
        Integer sum = 0;
        for (const Integer& c : oracle_row(n, RowStatistic::alt_runs).counts)
            sum += c;
        EXPECT_EQ(sum, factorial(n));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        Integer sum = 0;
        for (const Integer& c : oracle_row(n, RowStatistic::signed_runs_up).counts)
            sum += c;
        EXPECT_EQ(sum, int_pow(2, n - 1) * factorial(n));
    }
}

TEST(PermStats, MaxStatisticValues) {
    for (std::size_t n = 2; n <= 7; ++n) {
        EXPECT_EQ(oracle_row(n, RowStatistic::pk).counts.size(), (n - 1) / 2 + 1);
        EXPECT_EQ(oracle_row(n, RowStatistic::lpk).counts.size(), n / 2 + 1);
    }
}

TEST(PermStats, ReversalSymmetryProperty) {
    for (std::size_t n = 2; n <= 6; ++n) {
        detail::for_each_permutation(n, [](const std::vector<int>& w) {
            std::vector<int> rev(w.rbegin(), w.rend());
            EXPECT_EQ(detail::monotone_runs(w), detail::monotone_runs(rev));
        });
    }
}

TEST(PermStats, ZigzagConventionIndependence) {
    // Complementation maps down-up words onto up-down words.
    for (std::size_t n = 2; n <= 7; ++n) {
        long down_up = 0, up_down = 0;
        detail::for_each_permutation(n, [&](const std::vector<int>& w) {
            if (detail::alternates(w, false)) ++down_up;
            if (detail::alternates(w, true)) ++up_down;
        });
        EXPECT_EQ(down_up, up_down);
    }
}

TEST(PermStats, Bounds) {
    EXPECT_THROW(oracle_row(kPermOracleBound + 1, RowStatistic::alt_runs),
                 BoundExceeded);
    EXPECT_THROW(oracle_row(kSignedOracleBound + 1, RowStatistic::snake_count),
                 BoundExceeded);
}

}  // namespace
}  // namespace altrun

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "altrun/errors.hpp"
#include "altrun/numbers.hpp"

namespace altrun {

// Word of a plain permutation of [n].
struct Permutation {
    std::vector<int> word;
};

// Word pi(1)..pi(n) of a signed permutation; |word| is a permutation of [n].
// The implicit prefix pi(0) = 0 is applied by the statistics, never stored.
struct SignedPermutation {
    std::vector<int> word;
};

struct StatRow {
    std::size_t n = 0;
    std::string statistic;
    std::vector<Integer> counts;  // counts[k] = #words with statistic value k
};

enum class Statistic { alt_runs, pk, lpk, signed_runs, is_snake, is_zigzag };

enum class RowStatistic {
    alt_runs,
    pk,
    lpk,
    signed_runs_up,
    snake_count,
    zigzag_count
};

inline constexpr std::size_t kPermOracleBound = 10;    // S_n statistics
inline constexpr std::size_t kSignedOracleBound = 7;   // B_n statistics

namespace detail {

// Number of maximal monotone segments of a word (1 + #direction changes);
// 0 for a single-element word.
inline long monotone_runs(const std::vector<int>& w) {
    if (w.size() < 2) return 0;
    long runs = 1;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        bool peak = w[i - 1] < w[i] && w[i] > w[i + 1];
        bool valley = w[i - 1] > w[i] && w[i] < w[i + 1];
        if (peak || valley) ++runs;
    }
    return runs;
}

inline long peaks_from(const std::vector<int>& w, std::size_t first) {
    long count = 0;
    for (std::size_t i = first; i + 1 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1]) ++count;
    return count;
}

// Strictly alternating word; first_up picks whether w[0] < w[1] or w[0] > w[1].
inline bool alternates(const std::vector<int>& w, bool first_up) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        bool up = (i % 2 == 0) ? first_up : !first_up;
        if (up ? w[i] >= w[i + 1] : w[i] <= w[i + 1]) return false;
    }
    return true;
}

}  // namespace detail

inline long alt_runs(const Permutation& p) { return detail::monotone_runs(p.word); }

inline long interior_peaks(const Permutation& p) {
    return detail::peaks_from(p.word, 1);
}

inline long left_peaks(const Permutation& p) {
    std::vector<int> w;
    w.reserve(p.word.size() + 1);
    w.push_back(0);
    w.insert(w.end(), p.word.begin(), p.word.end());
    return detail::peaks_from(w, 1);
}

inline long signed_runs(const SignedPermutation& p) {
    std::vector<int> w;
    w.reserve(p.word.size() + 1);
    w.push_back(0);
    w.insert(w.end(), p.word.begin(), p.word.end());
    long runs = 1;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        bool peak = w[i - 1] < w[i] && w[i] > w[i + 1];
        bool valley = w[i - 1] > w[i] && w[i] < w[i + 1];
        if (peak || valley) ++runs;
    }
    return runs;
}

// 0 < pi(1) > pi(2) < pi(3) > ...
inline bool is_snake(const SignedPermutation& p) {
    if (p.word.empty() || p.word[0] <= 0) return false;
    std::vector<int> w;
    w.push_back(0);
    w.insert(w.end(), p.word.begin(), p.word.end());
    return detail::alternates(w, true);
}

// Down-up zigzag: pi(1) > pi(2) < pi(3) > ...  The complementation
// bijection makes the count convention-independent (asserted in tests).
inline bool is_zigzag(const Permutation& p) {
    return detail::alternates(p.word, false);
}

inline long stat_of(const Permutation& p, Statistic s) {
    switch (s) {
        case Statistic::alt_runs: return alt_runs(p);
        case Statistic::pk: return interior_peaks(p);
        case Statistic::lpk: return left_peaks(p);
        case Statistic::is_zigzag: return is_zigzag(p) ? 1 : 0;
        default:
            throw KindMismatch("statistic requires a signed permutation");
    }
}

inline long stat_of(const SignedPermutation& p, Statistic s) {
    switch (s) {
        case Statistic::signed_runs: return signed_runs(p);
        case Statistic::is_snake: return is_snake(p) ? 1 : 0;
        default:
            throw KindMismatch("statistic requires a plain permutation");
    }
}

namespace detail {

// Exhaustive sweep of S_n in lexicographic order.
template <typename F>
inline void for_each_permutation(std::size_t n, F&& f) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        f(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

// B_n as S_n crossed with sign masks.
template <typename F>
inline void for_each_signed_permutation(std::size_t n, F&& f) {
    for_each_permutation(n, [&](const std::vector<int>& base) {
        std::vector<int> w(n);
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            for (std::size_t i = 0; i < n; ++i)
                w[i] = (mask >> i) & 1 ? -base[i] : base[i];
            f(w);
        }
    });
}

inline void bump(std::vector<Integer>& counts, long k) {
    if (static_cast<std::size_t>(k) >= counts.size()) counts.resize(k + 1, 0);
    counts[static_cast<std::size_t>(k)] += 1;
}

}  // namespace detail

inline const char* row_statistic_name(RowStatistic s) {
    switch (s) {
        case RowStatistic::alt_runs: return "alt_runs";
        case RowStatistic::pk: return "pk";
        case RowStatistic::lpk: return "lpk";
        case RowStatistic::signed_runs_up: return "signed_runs_up";
        case RowStatistic::snake_count: return "snake_count";
        case RowStatistic::zigzag_count: return "zigzag_count";
    }
    return "?";
}

// Exhaustive distribution of a statistic over S_n or B_n.  counts[k] is the
// number of words with statistic value k; snake_count and zigzag_count
// return a single total.
inline StatRow oracle_row(std::size_t n, RowStatistic stat) {
    const bool signed_stat = stat == RowStatistic::signed_runs_up ||
                             stat == RowStatistic::snake_count;
    if (signed_stat && n > kSignedOracleBound)
        throw BoundExceeded("oracle_row: B_n bound is n <= " +
                            std::to_string(kSignedOracleBound));
    if (!signed_stat && n > kPermOracleBound)
        throw BoundExceeded("oracle_row: S_n bound is n <= " +
                            std::to_string(kPermOracleBound));
    StatRow row{n, row_statistic_name(stat), {}};
    switch (stat) {
        case RowStatistic::alt_runs:
            detail::for_each_permutation(n, [&](const std::vector<int>& w) {
                detail::bump(row.counts, detail::monotone_runs(w));
            });
            break;
        case RowStatistic::pk:
            detail::for_each_permutation(n, [&](const std::vector<int>& w) {
                detail::bump(row.counts, detail::peaks_from(w, 1));
            });
            break;
        case RowStatistic::lpk:
            detail::for_each_permutation(n, [&](const std::vector<int>& w) {
                detail::bump(row.counts, left_peaks(Permutation{w}));
            });
            break;
        case RowStatistic::signed_runs_up:
            row.counts.assign(1, 0);
            detail::for_each_signed_permutation(n, [&](const std::vector<int>& w) {
                if (w[0] > 0)
                    detail::bump(row.counts, signed_runs(SignedPermutation{w}));
            });
            break;
        case RowStatistic::snake_count: {
            Integer total = 0;
            detail::for_each_signed_permutation(n, [&](const std::vector<int>& w) {
                if (is_snake(SignedPermutation{w})) total += 1;
            });
            row.counts = {total};
            break;
        }
        case RowStatistic::zigzag_count: {
            Integer total = 0;
            detail::for_each_permutation(n, [&](const std::vector<int>& w) {
                if (is_zigzag(Permutation{w})) total += 1;
            });
            row.counts = {total};
            break;
        }
    }
    return row;
}

}  // namespace altrun

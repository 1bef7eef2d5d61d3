#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "altrun/errors.hpp"
#include "altrun/numbers.hpp"
#include "altrun/polynomial.hpp"
#include "altrun/report.hpp"

namespace altrun {

inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

enum class Method { recurrence, explicit_formula };

// Ragged number triangle with declared index offsets: values[r][c] is the
// entry at (row_start + r, col_start + c).
struct Triangle {
    std::string name;
    long row_start = 0;
    long col_start = 0;
    std::vector<std::vector<Integer>> values;
};

namespace detail {

// Row-at-a-time memo for triangle recurrences.  Fill is idempotent and
// guarded for concurrent first access.
class RowMemo {
  public:
    explicit RowMemo(std::function<std::vector<Integer>(
                         const std::vector<std::vector<Integer>>&)>
                         next_row)
        : next_row_(std::move(next_row)) {}

    std::vector<Integer> row(std::size_t r) {
        std::lock_guard<std::mutex> lock(mu_);
        while (rows_.size() <= r) rows_.push_back(next_row_(rows_));
        return rows_[r];
    }

  private:
    std::mutex mu_;
    std::vector<std::vector<Integer>> rows_;
    std::function<std::vector<Integer>(const std::vector<std::vector<Integer>>&)>
        next_row_;
};

// U(n,k) rows for n >= 1, entries k = 1..n.
inline RowMemo& u_memo() {
    static RowMemo memo([](const std::vector<std::vector<Integer>>& rows) {
        std::size_t n = rows.size() + 1;
        if (n == 1) return std::vector<Integer>{1};
        const auto& prev = rows.back();
        std::vector<Integer> row(n);
        auto prev_at = [&](std::size_t k) {
            return (k >= 1 && k <= n - 1) ? prev[k - 1] : Integer(0);
        };
        for (std::size_t k = 1; k <= n; ++k)
            row[k - 1] = prev_at(k - 1) + Integer(static_cast<long>(k * k)) * prev_at(k);
        return row;
    });
    return memo;
}

// V(n,k) rows for n >= 0, entries k = 0..n.
inline RowMemo& v_memo() {
    static RowMemo memo([](const std::vector<std::vector<Integer>>& rows) {
        std::size_t n = rows.size();
        if (n == 0) return std::vector<Integer>{1};
        const auto& prev = rows.back();
        std::vector<Integer> row(n + 1);
        auto prev_at = [&](long k) {
            return (k >= 0 && k < static_cast<long>(n)) ? prev[k] : Integer(0);
        };
        for (long k = 0; k <= static_cast<long>(n); ++k)
            row[k] = prev_at(k - 1) + Integer((2 * k + 1) * (2 * k + 1)) * prev_at(k);
        return row;
    });
    return memo;
}

// Stirling-2 rows for n >= 0, entries k = 0..n.
inline RowMemo& s2_memo() {
    static RowMemo memo([](const std::vector<std::vector<Integer>>& rows) {
        std::size_t n = rows.size();
        if (n == 0) return std::vector<Integer>{1};
        const auto& prev = rows.back();
        std::vector<Integer> row(n + 1);
        auto prev_at = [&](long k) {
            return (k >= 0 && k < static_cast<long>(n)) ? prev[k] : Integer(0);
        };
        for (long k = 0; k <= static_cast<long>(n); ++k)
            row[k] = prev_at(k - 1) + Integer(k) * prev_at(k);
        row[0] = (n == 0) ? Integer(1) : Integer(0);
        return row;
    });
    return memo;
}

// Alternating-run counts R(n,k) for n >= 1, entries k = 0..n-1, by the
// Andre recurrence R(n,k) = kR(n-1,k) + 2R(n-1,k-1) + (n-k)R(n-1,k-2).
inline RowMemo& r_memo() {
    static RowMemo memo([](const std::vector<std::vector<Integer>>& rows) {
        std::size_t n = rows.size() + 1;
        if (n == 1) return std::vector<Integer>{1};
        const auto& prev = rows.back();
        std::vector<Integer> row(n);
        auto prev_at = [&](long k) {
            return (k >= 0 && k < static_cast<long>(n - 1)) ? prev[k] : Integer(0);
        };
        for (long k = 0; k < static_cast<long>(n); ++k)
            row[k] = Integer(k) * prev_at(k) + Integer(2) * prev_at(k - 1) +
                     Integer(static_cast<long>(n) - k) * prev_at(k - 2);
        return row;
    });
    return memo;
}

}  // namespace detail

inline Integer stirling2(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    return detail::s2_memo().row(n)[k];
}

// Alternating-run count R(n,k) by recurrence, n >= 1.
inline Integer run_count(std::size_t n, long k) {
    if (n < 1) throw UnsupportedIndex("run_count: n must be >= 1");
    if (k < 0 || k >= static_cast<long>(n)) return 0;
    return detail::r_memo().row(n - 1)[static_cast<std::size_t>(k)];
}

// Central factorial numbers of even indices, U(n,k).
inline Integer u_number(std::size_t n, long k, Method method = Method::recurrence) {
    if (n < 1) throw UnsupportedIndex("u_number: n must be >= 1");
    if (k < 1 || k > static_cast<long>(n)) return 0;
    if (method == Method::recurrence)
        return detail::u_memo().row(n - 1)[static_cast<std::size_t>(k - 1)];
    // (1/(2j)!) sum_i (-1)^i C(2j,i) (j-i)^{2n}
    const long j = k;
    Integer sum = 0;
    for (long i = 0; i <= 2 * j; ++i) {
        Integer term = binomial(2 * j, i) *
                       int_pow(Integer(j - i), 2 * static_cast<unsigned long>(n));
        sum += (i % 2 == 0) ? term : -term;
    }
    return require_integer(
        make_rational(sum, factorial(2 * static_cast<unsigned long>(j))),
        "u_number explicit");
}

// Central factorial numbers of odd indices, V(n,k).
inline Integer v_number(std::size_t n, long k, Method method = Method::recurrence) {
    if (k < 0 || k > static_cast<long>(n)) return 0;
    if (method == Method::recurrence)
        return detail::v_memo().row(n)[static_cast<std::size_t>(k)];
    // (1/((2k)! 4^k)) sum_m (-1)^{k-m} (2m+1)^{2n+1}/(k+m+1) C(2k,k+m)
    Rational sum(0);
    for (long m = 0; m <= k; ++m) {
        Rational term =
            make_rational(int_pow(Integer(2 * m + 1),
                                  2 * static_cast<unsigned long>(n) + 1) *
                              binomial(2 * k, k + m),
                          Integer(k + m + 1));
        sum += (((k - m) % 2) == 0) ? term : -term;
    }
    Rational den(factorial(2 * static_cast<unsigned long>(k)) *
                 int_pow(4, static_cast<unsigned long>(k)));
    return require_integer(sum / den, "v_number explicit");
}

// Coefficient families used by the explicit run formulas: M(n,j,.) are the
// coefficients of (1+x)^{n-2}(1-x)^{n-j}, N(n,j,.) those of
// (1+x)^{n-1}(1-x)^{n-j}.
inline std::pair<std::vector<Integer>, std::vector<Integer>> mn_coefficients(
    std::size_t n, std::size_t j) {
    if (j < 1 || j > n) throw UnsupportedIndex("mn_coefficients: need 1 <= j <= n");
    if (n < 2)
        throw UnsupportedIndex("mn_coefficients: M family needs n >= 2");
    const Polynomial one_plus({Rational(1), Rational(1)});
    const Polynomial one_minus({Rational(1), Rational(-1)});
    Polynomial m = one_plus.pow(n - 2) * one_minus.pow(n - j);
    Polynomial nn = one_plus.pow(n - 1) * one_minus.pow(n - j);
    return {m.integer_coeffs(), nn.integer_coeffs()};
}

// Checks x^n = sum_k U(n,k) prod_{i=1..k} (x - (i-1)^2).
inline VerificationReport u_basis_identity(std::size_t n) {
    Polynomial rhs;
    Polynomial basis = Polynomial::constant(Rational(1));
    for (std::size_t k = 1; k <= n; ++k) {
        basis *= Polynomial({Rational(-static_cast<long>((k - 1) * (k - 1))),
                             Rational(1)});
        rhs += Rational(u_number(n, static_cast<long>(k))) * basis;
    }
    Polynomial lhs = Polynomial::monomial(Rational(1), n);
    return make_report("U_BASIS", static_cast<long>(n), lhs, rhs);
}

enum class CfKind { U, V };

inline constexpr std::size_t kCfOracleBoundU = 5;
inline constexpr std::size_t kCfOracleBoundV = 4;

namespace detail {

// Exhaustive set-partition enumeration of {1,-1,...,n,-n} with the pairing
// constraint: in every block, the least absolute value present appears with
// both signs.  Elements are placed in the order 1,-1,2,-2,...; a block's
// least absolute value is therefore fixed by its opener.
inline void u_partitions(std::size_t n, std::size_t pos,
                         std::vector<long>& block_of, std::size_t nblocks,
                         const std::vector<std::size_t>& opener,
                         std::vector<Integer>& counts) {
    if (pos == 2 * n) {
        counts[nblocks - 1] += 1;
        return;
    }
    std::size_t i = pos / 2 + 1;  // absolute value being placed
    bool negative = (pos % 2 == 1);
    if (negative) {
        // -i must keep every opener's pairing satisfiable: it may not open a
        // block, and if +i opened a block it must join it.
        std::size_t i_block = static_cast<std::size_t>(block_of[pos - 1]);
        if (opener[i_block] == pos - 1) {
            block_of[pos] = static_cast<long>(i_block);
            u_partitions(n, pos + 1, block_of, nblocks, opener, counts);
        } else {
            for (std::size_t b = 0; b < nblocks; ++b) {
                block_of[pos] = static_cast<long>(b);
                u_partitions(n, pos + 1, block_of, nblocks, opener, counts);
            }
        }
    } else {
        for (std::size_t b = 0; b < nblocks; ++b) {
            block_of[pos] = static_cast<long>(b);
            u_partitions(n, pos + 1, block_of, nblocks, opener, counts);
        }
        if (nblocks < n) {
            block_of[pos] = static_cast<long>(nblocks);
            std::vector<std::size_t> opener2 = opener;
            opener2.push_back(pos);
            u_partitions(n, pos + 1, block_of, nblocks + 1, opener2, counts);
        }
    }
}

// Restricted-growth enumeration of partitions of [m]; calls sink with block
// sizes for every partition.
template <typename Sink>
inline void all_partitions(std::size_t m, Sink&& sink) {
    std::vector<std::size_t> sizes;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == m) {
            sink(sizes);
            return;
        }
        for (std::size_t b = 0; b < sizes.size(); ++b) {
            ++sizes[b];
            rec(pos + 1);
            --sizes[b];
        }
        sizes.push_back(1);
        rec(pos + 1);
        sizes.pop_back();
    };
    rec(0);
}

}  // namespace detail

// Ground-truth rows for U (partitions of {+-1..+-n}, counts by block count)
// and V (partitions of [2n+1] into 2k+1 odd blocks, counts by k).
inline std::vector<Integer> cf_partition_oracle(CfKind kind, std::size_t n) {
    if (kind == CfKind::U) {
        if (n > kCfOracleBoundU)
            throw BoundExceeded("cf_partition_oracle: U bound is n <= " +
                                std::to_string(kCfOracleBoundU));
        if (n == 0) return {};
        std::vector<Integer> counts(n, 0);
        std::vector<long> block_of(2 * n, -1);
        block_of[0] = 0;
        detail::u_partitions(n, 1, block_of, 1, {0}, counts);
        return counts;
    }
    if (n > kCfOracleBoundV)
        throw BoundExceeded("cf_partition_oracle: V bound is n <= " +
                            std::to_string(kCfOracleBoundV));
    std::vector<Integer> counts(n + 1, 0);
    detail::all_partitions(2 * n + 1, [&](const std::vector<std::size_t>& sizes) {
        for (std::size_t s : sizes)
            if (s % 2 == 0) return;
        if (sizes.size() % 2 == 1) counts[(sizes.size() - 1) / 2] += 1;
    });
    return counts;
}

// Exportable triangles.
inline Triangle triangle_u(std::size_t rows) {
    Triangle t{"U", 1, 1, {}};
    for (std::size_t n = 1; n <= rows; ++n) t.values.push_back(detail::u_memo().row(n - 1));
    return t;
}

inline Triangle triangle_v(std::size_t rows) {
    Triangle t{"V", 0, 0, {}};
    for (std::size_t n = 0; n < rows; ++n) t.values.push_back(detail::v_memo().row(n));
    return t;
}

inline Triangle triangle_s2(std::size_t rows) {
    Triangle t{"S2", 0, 0, {}};
    for (std::size_t n = 0; n < rows; ++n) t.values.push_back(detail::s2_memo().row(n));
    return t;
}

inline Triangle triangle_r(std::size_t rows) {
    Triangle t{"R", 1, 0, {}};
    for (std::size_t n = 1; n <= rows; ++n) t.values.push_back(detail::r_memo().row(n - 1));
    return t;
}

}  // namespace altrun

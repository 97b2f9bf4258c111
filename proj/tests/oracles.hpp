#ifndef QPCHAR_TESTS_ORACLES_HPP
#define QPCHAR_TESTS_ORACLES_HPP

// Reference computations that share no code with the library.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

/// Partitions of n into parts of size at most max_part.
inline std::int64_t partitions(int n, int max_part)
{
    if (n == 0) return 1;
    if (n < 0 || max_part <= 0) return 0;
    return partitions(n - max_part, max_part) + partitions(n, max_part - 1);
}

inline std::int64_t partitions(int n) { return partitions(n, n); }

/// Coefficient of q^n in prod_{m>=1} (1 - q^m), from generalized pentagonal numbers.
inline std::int64_t euler_coefficient(int n)
{
    for (int k = 0;; ++k) {
        for (int s : {1, -1}) {
            const int kk = s * k;
            const int g = kk * (3 * kk - 1) / 2;
            if (g == n) return (k % 2 == 0) ? 1 : -1;
        }
        if (k * (3 * k - 1) / 2 > n) return 0;
    }
}

/// Counts partitions of n into exactly `parts` parts with each part >= min_part
/// and consecutive parts differing by at least 2, by brute force over parts.
inline std::int64_t gap_two_partitions(int n, int parts, int min_part)
{
    std::function<std::int64_t(int, int, int)> go = [&](int rest, int left, int smallest) -> std::int64_t {
        if (left == 0) return rest == 0 ? 1 : 0;
        std::int64_t c = 0;
        for (int part = smallest; part <= rest; ++part) c += go(rest - part, left - 1, part + 2);
        return c;
    };
    return go(n, parts, min_part);
}

/// Graded dimensions of the level one basic A1 module: lattice points m with
/// m^2 at depth, times the Fock space of one boson.
inline std::vector<std::int64_t> basic_a1_dimensions(int N)
{
    std::vector<std::int64_t> dims(N + 1, 0);
    for (int m = -N; m <= N; ++m)
        for (int n = m * m; n <= N; ++n) dims[n] += partitions(n - m * m);
    return dims;
}

/// Coefficients of sum_p q^{p^2/2} / (q;q)_p on the half-integer grid,
/// keyed by twice the exponent.
inline std::map<int, std::int64_t> half_square_sum(int twice_N)
{
    std::map<int, std::int64_t> c;
    for (int p = 0; p * p <= twice_N; ++p)
        for (int n = 0; p * p + 2 * n <= twice_N; ++n) {
            const auto v = partitions(n, p);
            if (v != 0) c[p * p + 2 * n] += v;
        }
    return c;
}

}  // namespace oracle

#endif  // QPCHAR_TESTS_ORACLES_HPP

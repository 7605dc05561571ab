#pragma once

#include <cmath>
#include <mutex>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ferrers/errors.hpp"

namespace ferrers {

using BigInt = boost::multiprecision::cpp_int;
/// At least 50 significant decimal digits.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Exact partition counts p(m) for m <= max_n, plus the restricted counts
/// p(m, largest part <= k) which are materialized on first use.
///
/// p(m) comes from Euler's pentagonal-number recurrence. The restricted
/// table is built from the independent recurrence
/// p(m,k) = p(m,k-1) + p(m-k,k), so the two routes cross-check each other.
/// After construction the table may be shared read-only across threads.
class PartitionCountTable {
public:
    explicit PartitionCountTable(int max_n) : max_n_(max_n) {
        if (max_n < 0)
            throw std::invalid_argument("PartitionCountTable needs max_n >= 0");
        counts_.assign(static_cast<std::size_t>(max_n) + 1, BigInt(0));
        counts_[0] = 1;
        for (int m = 1; m <= max_n; ++m) {
            BigInt acc = 0;
            for (int j = 1;; ++j) {
                const int g1 = j * (3 * j - 1) / 2;
                if (g1 > m)
                    break;
                const int g2 = j * (3 * j + 1) / 2;
                BigInt term = counts_[static_cast<std::size_t>(m - g1)];
                if (g2 <= m)
                    term += counts_[static_cast<std::size_t>(m - g2)];
                if (j % 2 == 1)
                    acc += term;
                else
                    acc -= term;
            }
            counts_[static_cast<std::size_t>(m)] = std::move(acc);
        }
    }

    int max_n() const noexcept { return max_n_; }

    const BigInt& exact_p(int n) const {
        if (n < 0)
            throw std::invalid_argument("exact_p needs n >= 0");
        if (n > max_n_)
            throw CapacityError("partition count table", n, max_n_);
        return counts_[static_cast<std::size_t>(n)];
    }

    /// Number of partitions of m whose largest part is at most k.
    const BigInt& restricted(int m, int k) const {
        if (m < 0 || k < 0)
            throw std::invalid_argument("restricted count needs m, k >= 0");
        if (m > max_n_)
            throw CapacityError("restricted partition table", m, max_n_);
        std::call_once(restricted_once_, [this] { build_restricted(); });
        const auto& row = restricted_[static_cast<std::size_t>(m)];
        return row[static_cast<std::size_t>(std::min(k, m))];
    }

private:
    void build_restricted() const {
        restricted_.resize(static_cast<std::size_t>(max_n_) + 1);
        for (int m = 0; m <= max_n_; ++m) {
            auto& row = restricted_[static_cast<std::size_t>(m)];
            row.assign(static_cast<std::size_t>(m) + 1, BigInt(0));
            if (m == 0) {
                row[0] = 1;
                continue;
            }
            for (int k = 1; k <= m; ++k) {
                // p(m-k, k), clamped because rows only store k <= m.
                const auto& prev = restricted_[static_cast<std::size_t>(m - k)];
                row[static_cast<std::size_t>(k)] =
                    row[static_cast<std::size_t>(k - 1)] +
                    prev[static_cast<std::size_t>(std::min(k, m - k))];
            }
        }
    }

    int max_n_;
    std::vector<BigInt> counts_;
    mutable std::once_flag restricted_once_;
    mutable std::vector<std::vector<BigInt>> restricted_;
};

inline BigInt exact_p(int n) {
    return PartitionCountTable(n).exact_p(n);
}

inline HighPrecision hardy_ramanujan_constant() {
    using boost::multiprecision::sqrt;
    return boost::math::constants::pi<HighPrecision>() * sqrt(HighPrecision(2) / 3);
}

/// First-order Hardy-Ramanujan estimate e^{C sqrt n} / (4 n sqrt 3), C = pi sqrt(2/3).
inline HighPrecision hardy_ramanujan_estimate(int n) {
    using boost::multiprecision::exp;
    using boost::multiprecision::sqrt;
    if (n < 1)
        throw std::invalid_argument("hardy_ramanujan_estimate needs n >= 1");
    const HighPrecision hn(n);
    return exp(hardy_ramanujan_constant() * sqrt(hn)) / (4 * hn * sqrt(HighPrecision(3)));
}

inline HighPrecision to_high_precision(const BigInt& v) { return HighPrecision(v); }

} // namespace ferrers

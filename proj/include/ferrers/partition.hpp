#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/errors.hpp"

namespace ferrers {

inline constexpr int kDefaultEnumerationCap = 60;

/// An integer partition: weakly decreasing positive parts. The empty
/// partition represents n = 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Total number of boxes.
    int size() const noexcept { return n_; }
    /// Number of parts (rows of the Ferrers shape).
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// First part, 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Transpose of the Ferrers shape: column lengths of p.
inline Partition conjugate(const Partition& p) {
    std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
    // parts are sorted, so column j has length = #{i : parts[i] > j}
    int row = p.length();
    for (int j = 0; j < p.largest(); ++j) {
        while (row > 0 && p[static_cast<std::size_t>(row - 1)] <= j)
            --row;
        cols[static_cast<std::size_t>(j)] = row;
    }
    return Partition(std::move(cols));
}

/// Side of the largest square anchored at the apex.
inline int durfee_size(const Partition& p) {
    int d = 0;
    while (d < p.length() && p[static_cast<std::size_t>(d)] >= d + 1)
        ++d;
    return d;
}

inline std::string to_string(const Partition& p) {
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

/// Parses "4,2,1" or "(4,2,1)"; parts may be given in any order.
inline Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("bad partition part '" + token + "'");
        parts.push_back(v);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '(' || ch == ')')
            flush();
        else
            token += ch;
    }
    flush();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

/// Walks the partitions of n in descending lexicographic order, starting
/// at (n) and ending at (1,...,1).
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n) {
        if (n < 0)
            throw std::invalid_argument("partition size must be non-negative");
        if (n > 0)
            parts_.push_back(n);
    }

    std::span<const int> current() const noexcept { return parts_; }

    /// Advances to the next partition; false once the last one was passed.
    bool next() {
        if (done_)
            return false;
        int ones = 0;
        while (!parts_.empty() && parts_.back() == 1) {
            parts_.pop_back();
            ++ones;
        }
        if (parts_.empty()) {
            done_ = true;
            return false;
        }
        const int v = --parts_.back();
        int rem = ones + 1;
        while (rem >= v) {
            parts_.push_back(v);
            rem -= v;
        }
        if (rem > 0)
            parts_.push_back(rem);
        return true;
    }

private:
    std::vector<int> parts_;
    bool done_ = false;
};

/// Calls fn(std::span<const int>) for each partition of n in descending
/// lexicographic order.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    PartitionGenerator gen(n);
    do {
        fn(gen.current());
    } while (gen.next());
}

inline std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap) {
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions requires n >= 1");
    if (n > cap)
        throw CapacityError("partition enumeration cap", n, cap);
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) {
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
}

} // namespace ferrers

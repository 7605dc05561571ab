#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "ferrers/partition.hpp"

namespace ferrers {

// Shape predicates for typical partitions. Logarithms are natural. The
// span overloads take weakly decreasing parts and exist so exhaustive
// audits can run straight off the generator.

/// sqrt(n) * ln(n), the common scale of first row, first column and the square Q.
inline double sqrt_n_log_n(int n) {
    return std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n));
}

/// Both the first part and the number of parts lie strictly inside
/// (c1 sqrt(n) ln n, c2 sqrt(n) ln n).
inline bool check_property_I(std::span<const int> parts, int n, double c1, double c2) {
    const double scale = sqrt_n_log_n(n);
    const double lo = c1 * scale, hi = c2 * scale;
    const double x1 = parts.empty() ? 0 : parts.front();
    const double y1 = static_cast<double>(parts.size());
    return lo < x1 && x1 < hi && lo < y1 && y1 < hi;
}

inline bool check_property_I(const Partition& p, int n, double c1, double c2) {
    return check_property_I(p.parts(), n, c1, c2);
}

/// Side of the apex square Q: floor(epsilon sqrt(n) ln n).
inline int square_side(int n, double epsilon) {
    return static_cast<int>(std::floor(epsilon * sqrt_n_log_n(n)));
}

/// Boxes of the shape outside Q, where Q covers rows and columns 0..s-1.
inline int area_outside_Q(std::span<const int> parts, int n, double epsilon) {
    const int s = std::max(0, square_side(n, epsilon));
    int inside = 0;
    const int rows = std::min<int>(s, static_cast<int>(parts.size()));
    for (int i = 0; i < rows; ++i)
        inside += std::min(parts[static_cast<std::size_t>(i)], s);
    int total = 0;
    for (int x : parts)
        total += x;
    return total - inside;
}

inline int area_outside_Q(const Partition& p, int n, double epsilon) {
    return area_outside_Q(p.parts(), n, epsilon);
}

/// At least c3 sqrt(n) parts of size at least c3 sqrt(n).
inline bool check_property_III(std::span<const int> parts, int n, double c3) {
    const double threshold = c3 * std::sqrt(static_cast<double>(n));
    // parts are sorted, so the qualifying parts form a prefix
    const auto big = std::partition_point(parts.begin(), parts.end(),
                                          [&](int x) { return x >= threshold; }) -
                     parts.begin();
    return static_cast<double>(big) >= threshold;
}

inline bool check_property_III(const Partition& p, int n, double c3) {
    return check_property_III(p.parts(), n, c3);
}

} // namespace ferrers

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ferrers/errors.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

using Coord = std::int64_t;

struct Offset {
    Coord row = 0;
    Coord col = 0;
    friend bool operator==(const Offset&, const Offset&) = default;
    friend auto operator<=>(const Offset&, const Offset&) = default;
};

/// One of the 8 symmetries of the square, acting on offsets from the apex.
/// Bit 2 transposes (row <-> col) first, then bit 0 negates the row and
/// bit 1 negates the column. Index 0 is the canonical drawing (apex top
/// left, rows extend right), index 3 is the half turn.
class Orientation {
public:
    constexpr Orientation() = default;
    constexpr explicit Orientation(int index) : index_(static_cast<std::uint8_t>(index)) {
        if (index < 0 || index > 7)
            throw std::invalid_argument("orientation index must be in 0..7");
    }

    static constexpr Orientation identity() { return Orientation(0); }
    static constexpr Orientation rot180() { return Orientation(3); }

    constexpr int index() const noexcept { return index_; }
    constexpr bool transposes() const noexcept { return (index_ & 4) != 0; }
    constexpr Coord row_sign() const noexcept { return (index_ & 1) ? -1 : 1; }
    constexpr Coord col_sign() const noexcept { return (index_ & 2) ? -1 : 1; }

    constexpr Offset apply(Offset o) const noexcept {
        if (transposes())
            std::swap(o.row, o.col);
        return {o.row * row_sign(), o.col * col_sign()};
    }

    friend constexpr bool operator==(Orientation, Orientation) = default;

private:
    std::uint8_t index_ = 0;
};

/// The orientation equal to applying `inner` first, then `outer`.
constexpr Orientation compose(Orientation outer, Orientation inner) {
    // (1,2) has a distinct image under each of the 8 symmetries.
    const Offset probe{1, 2};
    const Offset target = outer.apply(inner.apply(probe));
    for (int i = 0; i < 8; ++i)
        if (Orientation(i).apply(probe) == target)
            return Orientation(i);
    return Orientation(0);
}

constexpr Orientation inverse(Orientation o) {
    for (int i = 0; i < 8; ++i)
        if (compose(Orientation(i), o) == Orientation::identity())
            return Orientation(i);
    return Orientation(0);
}

enum class OrientationPolicy { fixed, rot180, free };

inline std::vector<Orientation> allowed_orientations(OrientationPolicy policy) {
    switch (policy) {
    case OrientationPolicy::fixed:
        return {Orientation(0)};
    case OrientationPolicy::rot180:
        return {Orientation(0), Orientation(3)};
    case OrientationPolicy::free:
        break;
    }
    std::vector<Orientation> all;
    for (int i = 0; i < 8; ++i)
        all.emplace_back(i);
    return all;
}

inline std::string_view to_string(OrientationPolicy policy) {
    switch (policy) {
    case OrientationPolicy::fixed:
        return "fixed";
    case OrientationPolicy::rot180:
        return "rot180";
    case OrientationPolicy::free:
        return "free";
    }
    return "free";
}

inline OrientationPolicy parse_policy(std::string_view text) {
    if (text == "fixed")
        return OrientationPolicy::fixed;
    if (text == "rot180")
        return OrientationPolicy::rot180;
    if (text == "free")
        return OrientationPolicy::free;
    throw std::invalid_argument("unknown orientation policy '" + std::string(text) + "'");
}

struct Rect {
    Coord height = 1;
    Coord width = 1;
    friend bool operator==(const Rect&, const Rect&) = default;
};

/// A shape placed in the grid. (row, col) is the cell the apex lands on
/// after orientation, so it is always a cell of the placed shape.
struct Placement {
    Partition shape;
    Orientation orientation;
    Coord row = 0;
    Coord col = 0;
    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Half-open column interval [begin, end) on one grid row.
struct RowInterval {
    Coord row;
    Coord begin;
    Coord end;
    friend bool operator==(const RowInterval&, const RowInterval&) = default;
};

/// Occupied cells of a placement, one interval per row, rows ascending.
inline std::vector<RowInterval> occupied_row_intervals(const Placement& pl) {
    const Orientation o = pl.orientation;
    // After transposition the rows of the oriented shape are the canonical columns.
    const Partition lengths = o.transposes() ? conjugate(pl.shape) : pl.shape;
    std::vector<RowInterval> out;
    out.reserve(static_cast<std::size_t>(lengths.length()));
    for (int t = 0; t < lengths.length(); ++t) {
        const Coord len = lengths[static_cast<std::size_t>(t)];
        const Coord row = pl.row + o.row_sign() * t;
        if (o.col_sign() > 0)
            out.push_back({row, pl.col, pl.col + len});
        else
            out.push_back({row, pl.col - len + 1, pl.col + 1});
    }
    if (o.row_sign() < 0)
        std::reverse(out.begin(), out.end());
    return out;
}

/// Row-interval sweep over two sorted interval lists.
inline bool intervals_intersect(const std::vector<RowInterval>& a, const std::vector<RowInterval>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].row < b[j].row)
            ++i;
        else if (b[j].row < a[i].row)
            ++j;
        else {
            if (a[i].begin < b[j].end && b[j].begin < a[i].end)
                return true;
            ++i;
            ++j;
        }
    }
    return false;
}

inline bool overlaps(const Placement& a, const Placement& b) {
    return intervals_intersect(occupied_row_intervals(a), occupied_row_intervals(b));
}

inline bool inside(const std::vector<RowInterval>& rows, const Rect& rect) {
    return std::all_of(rows.begin(), rows.end(), [&](const RowInterval& iv) {
        return iv.row >= 0 && iv.row < rect.height && iv.begin >= 0 && iv.end <= rect.width;
    });
}

inline bool inside(const Placement& pl, const Rect& rect) {
    return inside(occupied_row_intervals(pl), rect);
}

struct Packing {
    int n = 0;
    Rect rect;
    OrientationPolicy policy = OrientationPolicy::free;
    std::vector<Placement> placements;
    friend bool operator==(const Packing&, const Packing&) = default;
};

struct ValidationReport {
    std::vector<std::size_t> out_of_bounds;
    std::vector<std::size_t> wrong_size;
    std::vector<std::pair<std::size_t, std::size_t>> duplicates;
    std::vector<std::pair<std::size_t, std::size_t>> overlapping;
    bool bad_rect = false;

    bool ok() const noexcept {
        return !bad_rect && out_of_bounds.empty() && wrong_size.empty() && duplicates.empty() &&
               overlapping.empty();
    }

    std::string describe() const {
        if (ok())
            return "valid";
        std::ostringstream os;
        if (bad_rect)
            os << "rectangle has non-positive side\n";
        for (auto i : out_of_bounds)
            os << "placement " << i << " leaves the rectangle\n";
        for (auto i : wrong_size)
            os << "placement " << i << " has the wrong size\n";
        for (auto [a, b] : duplicates)
            os << "placements " << a << " and " << b << " use the same partition\n";
        for (auto [a, b] : overlapping)
            os << "placements " << a << " and " << b << " overlap\n";
        return os.str();
    }
};

inline ValidationReport validate_packing(const Packing& pk) {
    ValidationReport report;
    report.bad_rect = pk.rect.height < 1 || pk.rect.width < 1;

    std::map<Partition, std::size_t> first_use;
    // row -> (begin, end, placement index)
    std::map<Coord, std::vector<std::array<Coord, 3>>> by_row;
    for (std::size_t i = 0; i < pk.placements.size(); ++i) {
        const auto& pl = pk.placements[i];
        if (pl.shape.size() != pk.n)
            report.wrong_size.push_back(i);
        auto [it, fresh] = first_use.emplace(pl.shape, i);
        if (!fresh)
            report.duplicates.emplace_back(it->second, i);
        const auto rows = occupied_row_intervals(pl);
        if (!inside(rows, pk.rect))
            report.out_of_bounds.push_back(i);
        for (const auto& iv : rows)
            by_row[iv.row].push_back({iv.begin, iv.end, static_cast<Coord>(i)});
    }

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (auto& [row, ivs] : by_row) {
        std::sort(ivs.begin(), ivs.end());
        std::vector<std::array<Coord, 3>> active;
        for (const auto& iv : ivs) {
            std::erase_if(active, [&](const auto& a) { return a[1] <= iv[0]; });
            for (const auto& a : active)
                pairs.emplace(std::min(a[2], iv[2]), std::max(a[2], iv[2]));
            active.push_back(iv);
        }
    }
    report.overlapping.assign(pairs.begin(), pairs.end());
    return report;
}

/// Axis-aligned square window with top-left cell (row, col).
struct Window {
    Coord row = 0;
    Coord col = 0;
    Coord side = 1;
};

/// Per-row union of covered intervals with prefix sums; answers exact
/// covered-cell counts for rectangles in O(rows * log intervals).
class CoverageIndex {
public:
    explicit CoverageIndex(const Packing& pk) : height_(pk.rect.height) {
        rows_.resize(static_cast<std::size_t>(std::max<Coord>(height_, 0)));
        for (const auto& pl : pk.placements)
            for (const auto& iv : occupied_row_intervals(pl))
                if (iv.row >= 0 && iv.row < height_)
                    rows_[static_cast<std::size_t>(iv.row)].spans.push_back({iv.begin, iv.end});
        for (auto& r : rows_) {
            std::sort(r.spans.begin(), r.spans.end());
            std::vector<std::pair<Coord, Coord>> merged;
            for (const auto& s : r.spans) {
                if (!merged.empty() && s.first <= merged.back().second)
                    merged.back().second = std::max(merged.back().second, s.second);
                else
                    merged.push_back(s);
            }
            r.spans = std::move(merged);
            r.prefix.assign(r.spans.size() + 1, 0);
            for (std::size_t i = 0; i < r.spans.size(); ++i)
                r.prefix[i + 1] = r.prefix[i] + (r.spans[i].second - r.spans[i].first);
        }
    }

    /// Covered cells of `row` within columns [begin, end).
    Coord covered_in_row(Coord row, Coord begin, Coord end) const {
        if (row < 0 || row >= height_ || begin >= end)
            return 0;
        const auto& r = rows_[static_cast<std::size_t>(row)];
        // first span ending after begin, first span starting at or after end
        auto lo = std::partition_point(r.spans.begin(), r.spans.end(),
                                       [&](const auto& s) { return s.second <= begin; });
        auto hi = std::partition_point(lo, r.spans.end(),
                                       [&](const auto& s) { return s.first < end; });
        if (lo == hi)
            return 0;
        const auto a = static_cast<std::size_t>(lo - r.spans.begin());
        const auto b = static_cast<std::size_t>(hi - r.spans.begin());
        Coord total = r.prefix[b] - r.prefix[a];
        total -= std::max<Coord>(0, begin - lo->first);
        total -= std::max<Coord>(0, std::prev(hi)->second - end);
        return total;
    }

    Coord covered(const Window& w) const {
        Coord total = 0;
        for (Coord r = w.row; r < w.row + w.side; ++r)
            total += covered_in_row(r, w.col, w.col + w.side);
        return total;
    }

private:
    struct RowSpans {
        std::vector<std::pair<Coord, Coord>> spans;
        std::vector<Coord> prefix;
    };
    Coord height_;
    std::vector<RowSpans> rows_;
};

inline Coord covered_area_in_window(const Packing& pk, const Window& window) {
    if (window.side < 1 || window.row < 0 || window.col < 0 ||
        window.row + window.side > pk.rect.height || window.col + window.side > pk.rect.width)
        throw std::invalid_argument("window must lie inside the rectangle");
    return CoverageIndex(pk).covered(window);
}

} // namespace ferrers

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ferrers/counting.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/exact_cover.hpp"
#include "ferrers/geometry.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

inline constexpr int kDefaultSolverCap = 6;
/// Largest n the solvers will ever build a full instance for.
inline constexpr int kHardSolverCap = 7;

/// A placement of one shape together with its offsets relative to the
/// top-left corner of its bounding box.
struct ShapeImage {
    Orientation orientation;
    std::vector<RowInterval> rows; // normalized: bounding box starts at (0,0)
    Offset apex;                   // apex cell inside the bounding box
    Coord height = 0;
    Coord width = 0;
};

/// Distinct oriented images of a shape under a policy. Orientations that
/// give the same cell set collapse to the lowest orientation index.
inline std::vector<ShapeImage> distinct_images(const Partition& shape, OrientationPolicy policy) {
    std::vector<ShapeImage> out;
    for (Orientation o : allowed_orientations(policy)) {
        auto rows = occupied_row_intervals(Placement{shape, o, 0, 0});
        Coord min_row = rows.front().row, max_row = rows.back().row;
        Coord min_col = rows.front().begin, max_col = rows.front().end;
        for (const auto& iv : rows) {
            min_col = std::min(min_col, iv.begin);
            max_col = std::max(max_col, iv.end);
        }
        for (auto& iv : rows) {
            iv.row -= min_row;
            iv.begin -= min_col;
            iv.end -= min_col;
        }
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const ShapeImage& img) { return img.rows == rows; });
        if (seen)
            continue;
        out.push_back(ShapeImage{o, std::move(rows), Offset{-min_row, -min_col},
                                 max_row - min_row + 1, max_col - min_col});
    }
    return out;
}

/// Every in-bounds placement of every image of `shape`, anchors row-major.
inline std::vector<Placement> legal_placements(const Partition& shape, const Rect& rect,
                                               OrientationPolicy policy) {
    std::vector<Placement> out;
    for (const auto& img : distinct_images(shape, policy))
        for (Coord r = 0; r + img.height <= rect.height; ++r)
            for (Coord c = 0; c + img.width <= rect.width; ++c)
                out.push_back(Placement{shape, img.orientation, r + img.apex.row, c + img.apex.col});
    return out;
}

struct CoverRow {
    std::size_t shape = 0;
    Placement placement;
    std::vector<int> columns; // cell columns ascending, then the shape column
};

/// Exact-cover view of the Wilf question: one column per rectangle cell
/// and one per partition of n; one row per legal placement.
struct CoverInstance {
    int n = 0;
    Rect rect;
    OrientationPolicy policy = OrientationPolicy::free;
    std::vector<Partition> shapes;
    std::vector<CoverRow> rows;

    int cell_columns() const { return static_cast<int>(rect.height * rect.width); }
    int shape_columns() const { return static_cast<int>(shapes.size()); }
    int total_columns() const { return cell_columns() + shape_columns(); }
};

inline CoverRow make_cover_row(const CoverInstance& inst, std::size_t shape, Placement pl) {
    CoverRow row;
    row.shape = shape;
    for (const auto& iv : occupied_row_intervals(pl))
        for (Coord c = iv.begin; c < iv.end; ++c)
            row.columns.push_back(static_cast<int>(iv.row * inst.rect.width + c));
    std::sort(row.columns.begin(), row.columns.end());
    row.columns.push_back(inst.cell_columns() + static_cast<int>(shape));
    row.placement = std::move(pl);
    return row;
}

inline void check_solver_cap(int n, int cap) {
    if (cap > kHardSolverCap)
        throw CapacityError("solver cap may not be raised beyond the hard limit", cap, kHardSolverCap);
    if (n > cap) {
        std::string estimate = "solver cap (instance would be " + std::to_string(n) + " x p(" +
                               std::to_string(n) + ")";
        if (n <= 2000) {
            const auto p = PartitionCountTable(n).exact_p(n);
            estimate += " = " + std::to_string(n) + " x " + p.str() + " cells, " + p.str() +
                        " shape columns";
        }
        throw CapacityError(estimate + ")", n, cap);
    }
}

inline CoverInstance build_cover_instance(int n, OrientationPolicy policy, int cap = kDefaultSolverCap) {
    if (n < 1)
        throw std::invalid_argument("build_cover_instance needs n >= 1");
    check_solver_cap(n, cap);
    CoverInstance inst;
    inst.n = n;
    inst.policy = policy;
    inst.shapes = enumerate_partitions(n);
    inst.rect = Rect{n, static_cast<Coord>(inst.shapes.size())};
    for (std::size_t s = 0; s < inst.shapes.size(); ++s)
        for (auto& pl : legal_placements(inst.shapes[s], inst.rect, policy))
            inst.rows.push_back(make_cover_row(inst, s, std::move(pl)));
    return inst;
}

enum class SolveStatus { tiling_exists, no_tiling, timeout };

inline std::string_view to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::tiling_exists:
        return "tiling_exists";
    case SolveStatus::no_tiling:
        return "no_tiling";
    case SolveStatus::timeout:
        return "timeout";
    }
    return "timeout";
}

struct SolveResult {
    int n = 0;
    OrientationPolicy policy = OrientationPolicy::free;
    SolveStatus status = SolveStatus::timeout;
    std::optional<Packing> witness;
    std::uint64_t nodes = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Complete exact-cover search. With threads > 1 the rows of the first
/// chosen column are handed out to workers; status and witness match the
/// serial run, node counts may not.
inline SolveResult solve_exact_tiling(const CoverInstance& inst, const Budget& budget = {},
                                      unsigned threads = 1) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    std::vector<std::vector<int>> matrix;
    matrix.reserve(inst.rows.size());
    for (const auto& r : inst.rows)
        matrix.push_back(r.columns);

    SolveResult result;
    result.n = inst.n;
    result.policy = inst.policy;

    DancingLinks root(inst.total_columns(), matrix);
    const int first_column = root.choose_column();
    std::vector<int> branches = first_column == 0 ? std::vector<int>{} : root.rows_of(first_column);

    std::atomic<std::uint64_t> nodes{1};
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> best_branch{INT_MAX};
    std::atomic<std::size_t> next_branch{0};
    std::mutex witness_mutex;
    std::vector<int> witness_rows;

    auto budget_ok = [&](std::uint64_t local) {
        if (nodes.load(std::memory_order_relaxed) + local > budget.max_nodes) {
            out_of_budget = true;
            return false;
        }
        if (budget.time_limit && (local & 1023) == 0 && clock::now() - start > *budget.time_limit) {
            out_of_budget = true;
            return false;
        }
        return !out_of_budget.load(std::memory_order_relaxed);
    };

    auto worker = [&] {
        DancingLinks dl(inst.total_columns(), matrix);
        dl.cover_column(first_column);
        for (;;) {
            const std::size_t b = next_branch.fetch_add(1);
            if (b >= branches.size() || static_cast<int>(b) > best_branch.load())
                return;
            const int row = branches[b];
            dl.select(row, first_column);
            std::uint64_t local = 0;
            DancingLinks scratch = dl;
            auto keep_going = [&] {
                return static_cast<int>(b) <= best_branch.load(std::memory_order_relaxed) &&
                       budget_ok(local);
            };
            const auto out = scratch.search(local, keep_going);
            nodes += local;
            if (out == DancingLinks::Outcome::found) {
                std::lock_guard lock(witness_mutex);
                if (static_cast<int>(b) < best_branch.load()) {
                    best_branch = static_cast<int>(b);
                    witness_rows = scratch.solution();
                    witness_rows.push_back(row);
                }
            }
            dl.deselect(row, first_column);
            if (out == DancingLinks::Outcome::aborted && out_of_budget)
                return;
        }
    };

    if (first_column == 0) {
        best_branch = 0; // nothing to cover
    } else if (threads <= 1 || branches.size() <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, branches.size()); ++t)
            pool.emplace_back(worker);
    }

    result.nodes = nodes.load();
    if (best_branch.load() != INT_MAX) {
        // a witness in branch b is final once every branch before b is exhausted,
        // which holds even if the budget ran out on a later branch
        result.status = SolveStatus::tiling_exists;
        Packing pk;
        pk.n = inst.n;
        pk.rect = inst.rect;
        pk.policy = inst.policy;
        std::sort(witness_rows.begin(), witness_rows.end());
        for (int r : witness_rows)
            pk.placements.push_back(inst.rows[static_cast<std::size_t>(r)].placement);
        result.witness = std::move(pk);
    } else if (out_of_budget) {
        result.status = SolveStatus::timeout;
    } else {
        result.status = SolveStatus::no_tiling;
    }
    result.elapsed = clock::now() - start;
    return result;
}

} // namespace ferrers

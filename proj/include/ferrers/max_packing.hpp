#pragma once

#include <chrono>
#include <vector>

#include "ferrers/exact_cover.hpp"
#include "ferrers/geometry.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/tiling.hpp"

namespace ferrers {

struct MaxPackResult {
    Packing best;
    bool optimal = false;
    std::uint64_t nodes = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

namespace detail {

class MaxPackSearch {
public:
    MaxPackSearch(int n, Rect rect, OrientationPolicy policy, const Budget& budget)
        : n_(n), rect_(rect), policy_(policy), budget_(budget),
          shapes_(enumerate_partitions(n)),
          grid_(static_cast<std::size_t>(rect.height * rect.width), 0) {
        for (const auto& s : shapes_)
            images_.push_back(distinct_images(s, policy));
        const Coord area_bound = rect.height * rect.width / n;
        upper_ = static_cast<int>(std::min<Coord>(area_bound, static_cast<Coord>(shapes_.size())));
        best_.n = n;
        best_.rect = rect;
        best_.policy = policy;
    }

    MaxPackResult run() {
        start_ = clock::now();
        const bool complete = dfs(0);
        MaxPackResult out;
        out.best = best_;
        out.optimal = complete || static_cast<int>(best_.placements.size()) == upper_;
        out.nodes = nodes_;
        out.elapsed = clock::now() - start_;
        return out;
    }

private:
    using clock = std::chrono::steady_clock;

    bool out_of_budget() {
        if (nodes_ > budget_.max_nodes)
            return true;
        return budget_.time_limit && (nodes_ & 1023) == 0 && clock::now() - start_ > *budget_.time_limit;
    }

    bool fits(const ShapeImage& img, Coord r, Coord c) const {
        for (const auto& iv : img.rows) {
            const auto* cell = &grid_[static_cast<std::size_t>((r + iv.row) * rect_.width + c)];
            for (Coord x = iv.begin; x < iv.end; ++x)
                if (cell[x])
                    return false;
        }
        return true;
    }

    void paint(const ShapeImage& img, Coord r, Coord c, std::uint8_t v) {
        for (const auto& iv : img.rows) {
            auto* cell = &grid_[static_cast<std::size_t>((r + iv.row) * rect_.width + c)];
            for (Coord x = iv.begin; x < iv.end; ++x)
                cell[x] = v;
        }
    }

    // Returns false if the search was cut short (budget); true once the
    // subtree is exhausted or the global upper bound is reached.
    bool dfs(std::size_t i) {
        ++nodes_;
        if (out_of_budget())
            return false;
        const int count = static_cast<int>(current_.size());
        if (count > static_cast<int>(best_.placements.size()))
            best_.placements = current_;
        if (static_cast<int>(best_.placements.size()) == upper_)
            return true;
        if (i == shapes_.size())
            return true;
        const Coord free_area = rect_.height * rect_.width - static_cast<Coord>(n_) * count;
        const Coord bound =
            count + std::min<Coord>(static_cast<Coord>(shapes_.size() - i), free_area / n_);
        if (bound <= static_cast<Coord>(best_.placements.size()))
            return true;

        for (const auto& img : images_[i]) {
            for (Coord r = 0; r + img.height <= rect_.height; ++r) {
                for (Coord c = 0; c + img.width <= rect_.width; ++c) {
                    if (!fits(img, r, c))
                        continue;
                    paint(img, r, c, 1);
                    current_.push_back(Placement{shapes_[i], img.orientation, r + img.apex.row,
                                                 c + img.apex.col});
                    const bool done = dfs(i + 1);
                    current_.pop_back();
                    paint(img, r, c, 0);
                    if (!done)
                        return false;
                    if (static_cast<int>(best_.placements.size()) == upper_)
                        return true;
                }
            }
        }
        return dfs(i + 1); // leave shape i out
    }

    int n_;
    Rect rect_;
    OrientationPolicy policy_;
    Budget budget_;
    std::vector<Partition> shapes_;
    std::vector<std::vector<ShapeImage>> images_;
    std::vector<std::uint8_t> grid_;
    std::vector<Placement> current_;
    Packing best_;
    int upper_ = 0;
    std::uint64_t nodes_ = 0;
    clock::time_point start_;
};

} // namespace detail

/// Largest set of pairwise distinct shapes of size n that fit in `rect`
/// without overlap. Shapes are decided in enumeration order (place at each
/// legal anchor, then leave out); the bound is the current count plus the
/// lesser of the undecided shapes and the free area over n. `optimal` is
/// true only when the search finished or met the global upper bound
/// min(p(n), area / n) within the budget.
inline MaxPackResult max_packing(int n, Rect rect, OrientationPolicy policy, const Budget& budget = {}) {
    if (n < 1)
        throw std::invalid_argument("max_packing needs n >= 1");
    if (rect.height < 1 || rect.width < 1)
        throw std::invalid_argument("max_packing needs a non-empty rectangle");
    return detail::MaxPackSearch(n, rect, policy, budget).run();
}

} // namespace ferrers

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ferrers/counting.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/geometry.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/properties.hpp"
#include "ferrers/random.hpp"
#include "ferrers/sampling.hpp"

namespace ferrers {

struct ShapeSource {
    enum class Kind { enumerated, sampled };
    Kind kind = Kind::sampled;
    std::size_t count = 0; // distinct shapes wanted when sampled
    std::uint64_t seed = 0;
};

struct PackerConfig {
    double c1 = 0.1;
    double c2 = 4.0;
    double stride_slack = 1.0;
    ShapeSource source;
    /// Stop packing once a shape would reach past this column.
    std::optional<Coord> max_width;
    int enumeration_cap = kDefaultEnumerationCap;
    int exact_sampler_cap = kDefaultExactSamplerCap;

    void validate() const {
        if (!(c1 > 0) || !(c2 > 0))
            throw DomainError("packer constants c1, c2 must be positive");
        if (!(c1 < c2))
            throw DomainError("packer constants need c1 < c2");
        if (!(stride_slack >= 1))
            throw DomainError("stride_slack must be >= 1");
        if (max_width && *max_width < 1)
            throw DomainError("max_width must be positive");
    }
};

struct DensityReport {
    int n = 0;
    std::size_t offered = 0;
    std::size_t packed = 0;
    Coord width_used = 0;
    double density = 0;
    double density_times_logn = 0;
    std::uint64_t seed = 0;
};

struct DiagonalPacking {
    Packing packing;
    DensityReport report;
    /// Index of the first placement of each chain.
    std::vector<std::size_t> chain_starts;
};

/// Raised when two placements of the construction collide. This is a bug
/// in the stride or offset reasoning, never an input problem.
class PackingInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Keeps the shapes whose first row and first column both lie strictly
/// inside (c1 sqrt(n) ln n, c2 sqrt(n) ln n).
inline std::vector<Partition> filter_reduced(const std::vector<Partition>& shapes, int n,
                                             const PackerConfig& config) {
    std::vector<Partition> out;
    for (const auto& p : shapes)
        if (check_property_I(p, n, config.c1, config.c2))
            out.push_back(p);
    return out;
}

namespace detail {

// Per-row occupied intervals of the placements emitted so far.
class RowOccupancy {
public:
    explicit RowOccupancy(Coord height) : rows_(static_cast<std::size_t>(height)) {}

    /// Index of a placement already covering one of `ivs`, if any.
    std::optional<std::size_t> conflict(const std::vector<RowInterval>& ivs) const {
        for (const auto& iv : ivs) {
            const auto& row = rows_[static_cast<std::size_t>(iv.row)];
            auto it = row.lower_bound(iv.end); // first span starting at or after end
            if (it == row.begin())
                continue;
            --it;
            if (it->second.first > iv.begin)
                return it->second.second;
        }
        return std::nullopt;
    }

    void insert(const std::vector<RowInterval>& ivs, std::size_t id) {
        for (const auto& iv : ivs)
            rows_[static_cast<std::size_t>(iv.row)].emplace(iv.begin, std::make_pair(iv.end, id));
    }

private:
    std::vector<std::map<Coord, std::pair<Coord, std::size_t>>> rows_;
};

} // namespace detail

/// Chains shapes along diagonals in input order. Each shape's apex sits
/// one step past the far corner of the previous shape's Durfee square,
/// i.e. offset (d, d) from the previous apex. A chain ends when the next
/// shape would hang below row n; the next chain starts at row 0, `stride`
/// columns to the right of the previous chain start.
///
/// At any row a chain starting at column s covers columns inside
/// [s + row - (h_max - 1), s + row + w_max), so chains `w_max + h_max - 1`
/// apart cannot meet; stride is that width times stride_slack.
inline DiagonalPacking pack_diagonal(const std::vector<Partition>& shapes, int n, const PackerConfig& config) {
    config.validate();
    if (n < 1)
        throw std::invalid_argument("pack_diagonal needs n >= 1");
    for (const auto& p : shapes)
        if (p.size() != n)
            throw std::invalid_argument("pack_diagonal: shape " + to_string(p) + " does not have size " +
                                        std::to_string(n));

    Coord max_width = 0, max_height = 0;
    for (const auto& p : shapes) {
        max_width = std::max<Coord>(max_width, p.largest());
        max_height = std::max<Coord>(max_height, p.length());
    }
    const auto stride = static_cast<Coord>(
        std::ceil(config.stride_slack * static_cast<double>(std::max<Coord>(1, max_width + max_height - 1))));

    DiagonalPacking out;
    out.packing.n = n;
    out.packing.policy = OrientationPolicy::fixed;
    detail::RowOccupancy occupancy(n);

    Coord chain_col = 0;
    Coord right_edge = 0;
    const Placement* prev = nullptr;
    for (const auto& shape : shapes) {
        Placement pl{shape, Orientation::identity(), 0, chain_col};
        bool fresh_chain = prev == nullptr;
        if (prev) {
            const Coord d = durfee_size(prev->shape);
            pl.row = prev->row + d;
            pl.col = prev->col + d;
            if (pl.row + shape.length() > n) {
                chain_col += stride;
                pl.row = 0;
                pl.col = chain_col;
                fresh_chain = true;
            }
        }
        if (config.max_width && pl.col + shape.largest() > *config.max_width)
            break;

        const auto ivs = occupied_row_intervals(pl);
        if (auto other = occupancy.conflict(ivs)) {
            const auto& q = out.packing.placements[*other];
            std::ostringstream os;
            os << "diagonal packing collision: new " << to_string(pl.shape) << " at (" << pl.row << ","
               << pl.col << ") meets #" << *other << " " << to_string(q.shape) << " at (" << q.row << ","
               << q.col << "), stride " << stride;
            throw PackingInvariantError(os.str());
        }
        occupancy.insert(ivs, out.packing.placements.size());
        if (fresh_chain)
            out.chain_starts.push_back(out.packing.placements.size());
        right_edge = std::max<Coord>(right_edge, pl.col + shape.largest());
        out.packing.placements.push_back(std::move(pl));
        prev = &out.packing.placements.back();
    }

    out.packing.rect = Rect{n, std::max<Coord>(1, right_edge)};
    auto& r = out.report;
    r.n = n;
    r.offered = shapes.size();
    r.packed = out.packing.placements.size();
    r.width_used = right_edge;
    r.density = right_edge > 0 ? static_cast<double>(r.packed) / static_cast<double>(right_edge) : 0.0;
    r.density_times_logn = r.density * std::log(static_cast<double>(n));
    r.seed = config.source.seed;
    return out;
}

/// Shapes of size n as described by the source: all of them, or `count`
/// distinct uniform draws (exact sampler below its cap, Boltzmann above).
inline std::vector<Partition> offered_shapes(int n, const PackerConfig& config) {
    if (config.source.kind == ShapeSource::Kind::enumerated)
        return enumerate_partitions(n, config.enumeration_cap);
    const SamplerSpec spec{n, default_method(n, config.exact_sampler_cap), config.source.seed};
    PartitionSampler sampler(spec, config.exact_sampler_cap);
    std::set<Partition> seen;
    std::vector<Partition> out;
    // p(n) may be smaller than count; stop after a generous number of draws
    const std::size_t max_draws = 8 * config.source.count + 64;
    for (std::size_t i = 0; i < max_draws && out.size() < config.source.count; ++i) {
        Partition p = sampler.draw();
        if (seen.insert(p).second)
            out.push_back(std::move(p));
    }
    return out;
}

/// Widest shapes first, ties broken by descending partition order.
inline void sort_for_packing(std::vector<Partition>& shapes) {
    std::sort(shapes.begin(), shapes.end(), [](const Partition& a, const Partition& b) {
        if (a.largest() != b.largest())
            return a.largest() > b.largest();
        return a > b;
    });
}

/// Offer, filter, order and pack the shapes of one size.
inline DiagonalPacking density_run(int n, const PackerConfig& config) {
    config.validate();
    auto shapes = filter_reduced(offered_shapes(n, config), n, config);
    sort_for_packing(shapes);
    return pack_diagonal(shapes, n, config);
}

/// Source for n within a curve: enumerated up to the enumeration cap,
/// otherwise sampled with a stream derived from the curve seed.
inline PackerConfig curve_config(int n, std::size_t per_n_sample_count, const PackerConfig& config,
                                 std::uint64_t seed) {
    PackerConfig c = config;
    if (n <= config.enumeration_cap) {
        c.source = ShapeSource{ShapeSource::Kind::enumerated, 0, seed};
    } else {
        c.source = ShapeSource{ShapeSource::Kind::sampled, per_n_sample_count,
                               derive_seed(seed, static_cast<std::uint64_t>(n))};
    }
    return c;
}

/// One packing per n, run on `threads` workers; results keep the order of n_values.
inline std::vector<DiagonalPacking> density_curve_runs(const std::vector<int>& n_values,
                                                       std::size_t per_n_sample_count,
                                                       const PackerConfig& config, std::uint64_t seed,
                                                       unsigned threads = 1) {
    config.validate();
    std::vector<DiagonalPacking> runs(n_values.size());
    auto one = [&](std::size_t i) {
        runs[i] = density_run(n_values[i], curve_config(n_values[i], per_n_sample_count, config, seed));
        runs[i].report.seed = seed;
    };
    if (threads <= 1 || n_values.size() <= 1) {
        for (std::size_t i = 0; i < n_values.size(); ++i)
            one(i);
        return runs;
    }
    std::vector<std::exception_ptr> errors(n_values.size());
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, n_values.size()); ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < n_values.size();) {
                    try {
                        one(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return runs;
}

inline std::vector<DensityReport> measure_density_curve(const std::vector<int>& n_values,
                                                        std::size_t per_n_sample_count,
                                                        const PackerConfig& config, std::uint64_t seed,
                                                        unsigned threads = 1) {
    std::vector<DensityReport> reports;
    for (auto& run : density_curve_runs(n_values, per_n_sample_count, config, seed, threads))
        reports.push_back(run.report);
    return reports;
}

} // namespace ferrers

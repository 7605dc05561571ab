#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "ferrers/errors.hpp"
#include "ferrers/geometry.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/properties.hpp"
#include "ferrers/random.hpp"
#include "ferrers/sampling.hpp"

namespace ferrers {

struct LemmaOneConstants {
    double c1 = 0.1;
    double c2 = 4.0;
    double c3 = 0.001;
    double epsilon = 0.25;
};

struct LemmaOneReport {
    int n = 0;
    std::uint64_t sample_size = 0;
    LemmaOneConstants constants;
    double frac_violating_I = 0;
    double frac_violating_III = 0;
    double mean_area_outside_Q = 0;
    double max_area_outside_Q = 0;
    bool exhaustive = false;
    std::string method; // "exhaustive", "exact_dp" or "boltzmann"
    std::uint64_t seed = 0;
};

namespace detail {

struct LemmaOneTally {
    std::uint64_t count = 0;
    std::uint64_t violating_I = 0;
    std::uint64_t violating_III = 0;
    long double area_sum = 0;
    int area_max = 0;

    void add(std::span<const int> parts, int n, const LemmaOneConstants& k) {
        ++count;
        if (!check_property_I(parts, n, k.c1, k.c2))
            ++violating_I;
        if (!check_property_III(parts, n, k.c3))
            ++violating_III;
        const int area = area_outside_Q(parts, n, k.epsilon);
        area_sum += area;
        area_max = std::max(area_max, area);
    }

    LemmaOneReport report(int n, const LemmaOneConstants& k) const {
        LemmaOneReport r;
        r.n = n;
        r.sample_size = count;
        r.constants = k;
        if (count > 0) {
            const auto c = static_cast<double>(count);
            r.frac_violating_I = static_cast<double>(violating_I) / c;
            r.frac_violating_III = static_cast<double>(violating_III) / c;
            r.mean_area_outside_Q = static_cast<double>(area_sum / count);
        }
        r.max_area_outside_Q = area_max;
        return r;
    }
};

} // namespace detail

/// Runs the three shape predicates over every partition of n.
inline LemmaOneReport audit_lemma1_exhaustive(int n, const LemmaOneConstants& constants = {},
                                              int enumeration_cap = kDefaultEnumerationCap) {
    if (n < 1)
        throw std::invalid_argument("audit needs n >= 1");
    if (n > enumeration_cap)
        throw CapacityError("exhaustive audit enumeration cap", n, enumeration_cap);
    detail::LemmaOneTally tally;
    for_each_partition(n, [&](std::span<const int> parts) { tally.add(parts, n, constants); });
    auto r = tally.report(n, constants);
    r.exhaustive = true;
    r.method = "exhaustive";
    return r;
}

/// Same statistics over `sample_size` uniform draws; aggregation follows draw order.
inline LemmaOneReport audit_lemma1_sampled(const SamplerSpec& spec, std::uint64_t sample_size,
                                           const LemmaOneConstants& constants = {},
                                           int exact_cap = kDefaultExactSamplerCap) {
    PartitionSampler sampler(spec, exact_cap);
    detail::LemmaOneTally tally;
    for (std::uint64_t i = 0; i < sample_size; ++i) {
        const Partition p = sampler.draw();
        tally.add(p.parts(), spec.n, constants);
    }
    auto r = tally.report(spec.n, constants);
    r.method = std::string(to_string(spec.method));
    r.seed = spec.seed;
    return r;
}

struct WindowAudit {
    Coord side = 0;
    std::uint64_t windows_checked = 0;
    Coord max_covered = 0;
    Window argmax;
    double gamma_hat = 0; // max_covered / (n ln n)
};

/// Side of the audit window, floor(0.8 c1 sqrt(n) ln n).
inline Coord lemma2_window_side(int n, double c1) {
    return static_cast<Coord>(std::floor(0.8 * c1 * sqrt_n_log_n(n)));
}

/// Largest covered area over `window_count` uniformly placed square windows
/// plus a grid sweep of windows tiling the rectangle (the last row and
/// column of the grid are flush with the far edges).
inline WindowAudit audit_lemma2_windows(const Packing& pk, int n, double c1, std::uint64_t window_count,
                                        std::uint64_t seed) {
    const Coord side = lemma2_window_side(n, c1);
    if (side < 1)
        throw DomainError("window side floor(0.8*c1*sqrt(n)*ln(n)) = " + std::to_string(side) +
                          " is degenerate; use a larger n or c1");
    if (side > pk.rect.height || side > pk.rect.width)
        throw DomainError("window side " + std::to_string(side) + " exceeds the rectangle " +
                          std::to_string(pk.rect.height) + "x" + std::to_string(pk.rect.width) +
                          "; use a wider packing or smaller c1");

    const CoverageIndex index(pk);
    WindowAudit audit;
    audit.side = side;
    auto probe = [&](Coord r, Coord c) {
        const Window w{r, c, side};
        const Coord area = index.covered(w);
        ++audit.windows_checked;
        if (area > audit.max_covered) {
            audit.max_covered = area;
            audit.argmax = w;
        }
    };

    Rng rng(seed);
    const auto row_span = static_cast<std::uint64_t>(pk.rect.height - side + 1);
    const auto col_span = static_cast<std::uint64_t>(pk.rect.width - side + 1);
    for (std::uint64_t i = 0; i < window_count; ++i) {
        const auto r = static_cast<Coord>(uniform_below(rng, row_span));
        const auto c = static_cast<Coord>(uniform_below(rng, col_span));
        probe(r, c);
    }

    auto grid = [side](Coord extent) {
        std::vector<Coord> starts;
        for (Coord s = 0; s + side <= extent; s += side)
            starts.push_back(s);
        if (starts.back() + side < extent)
            starts.push_back(extent - side);
        return starts;
    };
    const auto rows = grid(pk.rect.height);
    const auto cols = grid(pk.rect.width);
    for (Coord r : rows)
        for (Coord c : cols)
            probe(r, c);

    const double scale = n * std::log(static_cast<double>(n));
    audit.gamma_hat = scale > 0 ? static_cast<double>(audit.max_covered) / scale : 0.0;
    return audit;
}

} // namespace ferrers

#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <string_view>
#include <vector>

#include "ferrers/counting.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/random.hpp"

namespace ferrers {

inline constexpr int kDefaultExactSamplerCap = 1000;
inline constexpr std::uint64_t kDefaultBoltzmannAttempts = 1'000'000;

enum class SamplerMethod { exact_dp, boltzmann };

inline std::string_view to_string(SamplerMethod m) {
    return m == SamplerMethod::exact_dp ? "exact_dp" : "boltzmann";
}

inline SamplerMethod parse_sampler_method(std::string_view text) {
    if (text == "exact_dp")
        return SamplerMethod::exact_dp;
    if (text == "boltzmann")
        return SamplerMethod::boltzmann;
    throw std::invalid_argument("unknown sampler method '" + std::string(text) + "'");
}

struct SamplerSpec {
    int n = 1;
    SamplerMethod method = SamplerMethod::exact_dp;
    std::uint64_t seed = 0;
};

/// Stream of uniformly random partitions of n.
///
/// exact_dp picks the largest part k with weight p(n-k, <=k) and recurses
/// on the remainder with parts <= k. boltzmann draws the multiplicity of
/// each part j independently from Geometric(x^j), x = exp(-pi/sqrt(6n)),
/// and rejects until the total is exactly n, which makes accepted draws
/// exactly uniform.
class PartitionSampler {
public:
    explicit PartitionSampler(SamplerSpec spec, int exact_cap = kDefaultExactSamplerCap,
                              std::uint64_t max_attempts = kDefaultBoltzmannAttempts,
                              std::shared_ptr<const PartitionCountTable> table = nullptr)
        : spec_(spec), rng_(spec.seed), max_attempts_(max_attempts) {
        if (spec.n < 1)
            throw std::invalid_argument("sampler needs n >= 1");
        if (spec.method == SamplerMethod::exact_dp) {
            if (spec.n > exact_cap)
                throw CapacityError("exact_dp sampler cap", spec.n, exact_cap);
            table_ = table && table->max_n() >= spec.n ? std::move(table)
                                                      : std::make_shared<const PartitionCountTable>(spec.n);
        } else {
            const double log_x = -std::numbers::pi / std::sqrt(6.0 * spec.n);
            part_prob_.resize(static_cast<std::size_t>(spec.n) + 1);
            log_part_prob_.resize(static_cast<std::size_t>(spec.n) + 1);
            for (int j = 1; j <= spec.n; ++j) {
                log_part_prob_[static_cast<std::size_t>(j)] = j * log_x;
                part_prob_[static_cast<std::size_t>(j)] = std::exp(j * log_x);
            }
        }
    }

    const SamplerSpec& spec() const noexcept { return spec_; }

    Partition draw() {
        return spec_.method == SamplerMethod::exact_dp ? draw_exact() : draw_boltzmann();
    }

    /// Accepted / attempted Boltzmann configurations so far (1 for exact_dp).
    double acceptance_rate() const noexcept {
        return attempts_ == 0 ? 1.0 : static_cast<double>(accepted_) / static_cast<double>(attempts_);
    }

private:
    Partition draw_exact() {
        std::vector<int> parts;
        int rem = spec_.n;
        int max_part = spec_.n;
        while (rem > 0) {
            BigInt u = uniform_below(rng_, table_->restricted(rem, max_part));
            int k = 1;
            for (;; ++k) {
                // partitions of rem with largest part exactly k
                const BigInt& with_k = table_->restricted(rem - k, k);
                if (u < with_k)
                    break;
                u -= with_k;
            }
            parts.push_back(k);
            rem -= k;
            max_part = k;
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    Partition draw_boltzmann() {
        const int n = spec_.n;
        std::vector<int> parts;
        for (std::uint64_t attempt = 0; attempt < max_attempts_; ++attempt) {
            ++attempts_;
            parts.clear();
            long long total = 0;
            for (int j = n; j >= 1 && total <= n; --j) {
                const double u = uniform_open_closed(rng_);
                if (u > part_prob_[static_cast<std::size_t>(j)])
                    continue;
                const auto m = static_cast<long long>(
                    std::floor(std::log(u) / log_part_prob_[static_cast<std::size_t>(j)]));
                total += m * j;
                if (total > n)
                    break;
                parts.insert(parts.end(), static_cast<std::size_t>(m), j);
            }
            if (total == n) {
                ++accepted_;
                return Partition(parts);
            }
        }
        throw RetryExhaustedError("boltzmann sampler exhausted " + std::to_string(max_attempts_) +
                                      " attempts at n=" + std::to_string(n),
                                  acceptance_rate());
    }

    SamplerSpec spec_;
    Rng rng_;
    std::uint64_t max_attempts_;
    std::shared_ptr<const PartitionCountTable> table_;
    std::vector<double> part_prob_;
    std::vector<double> log_part_prob_;
    std::uint64_t attempts_ = 0;
    std::uint64_t accepted_ = 0;
};

/// First draw of the stream defined by `spec`.
inline Partition sample_partition(const SamplerSpec& spec) {
    return PartitionSampler(spec).draw();
}

/// Method used when the caller has no preference: exact below the cap.
inline SamplerMethod default_method(int n, int exact_cap = kDefaultExactSamplerCap) {
    return n <= exact_cap ? SamplerMethod::exact_dp : SamplerMethod::boltzmann;
}

} // namespace ferrers

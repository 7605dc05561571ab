#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "ferrers/sampling.hpp"

using namespace ferrers;

namespace {

double tv_from_uniform(int n, SamplerMethod method, std::uint64_t draws, std::uint64_t seed) {
    PartitionSampler sampler(SamplerSpec{n, method, seed});
    std::map<Partition, std::uint64_t> hist;
    for (std::uint64_t i = 0; i < draws; ++i)
        ++hist[sampler.draw()];
    const auto all = enumerate_partitions(n);
    const double u = 1.0 / static_cast<double>(all.size());
    double tv = 0;
    for (const auto& p : all)
        tv += std::abs(static_cast<double>(hist[p]) / static_cast<double>(draws) - u);
    CHECK(hist.size() == all.size());
    return tv / 2;
}

} // namespace

TEST_CASE("n = 1 always gives (1)", "[sampling]") {
    for (auto m : {SamplerMethod::exact_dp, SamplerMethod::boltzmann})
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            CHECK(sample_partition(SamplerSpec{1, m, seed}) == Partition{1});
}

TEST_CASE("both samplers are uniform at n = 12", "[sampling]") {
    REQUIRE(exact_p(12) == 77);
    CHECK(tv_from_uniform(12, SamplerMethod::exact_dp, 100'000, 1) < 0.02);
    CHECK(tv_from_uniform(12, SamplerMethod::boltzmann, 100'000, 2) < 0.02);
}

TEST_CASE("samplers are reproducible from the seed", "[sampling]") {
    for (auto m : {SamplerMethod::exact_dp, SamplerMethod::boltzmann}) {
        PartitionSampler a(SamplerSpec{50, m, 9}), b(SamplerSpec{50, m, 9}), c(SamplerSpec{50, m, 10});
        bool differs = false;
        for (int i = 0; i < 50; ++i) {
            const auto x = a.draw();
            CHECK(x == b.draw());
            differs = differs || !(x == c.draw());
            CHECK(x.size() == 50);
        }
        CHECK(differs);
    }
}

TEST_CASE("large draws are valid partitions", "[sampling]") {
    PartitionSampler exact(SamplerSpec{1000, SamplerMethod::exact_dp, 3});
    PartitionSampler boltz(SamplerSpec{600, SamplerMethod::boltzmann, 3});
    for (int i = 0; i < 5; ++i) {
        CHECK(exact.draw().size() == 1000);
        CHECK(boltz.draw().size() == 600);
    }
    CHECK(exact.acceptance_rate() == 1.0);
    CHECK(boltz.acceptance_rate() > 0.0);
    CHECK(boltz.acceptance_rate() < 1.0);
}

TEST_CASE("sampler caps and errors", "[sampling]") {
    CHECK_THROWS_AS(PartitionSampler(SamplerSpec{1001, SamplerMethod::exact_dp, 0}), CapacityError);
    CHECK_THROWS_AS(PartitionSampler(SamplerSpec{0, SamplerMethod::boltzmann, 0}), std::invalid_argument);
    PartitionSampler starved(SamplerSpec{400, SamplerMethod::boltzmann, 0}, kDefaultExactSamplerCap, 1);
    bool threw = false;
    // one attempt almost never lands on exactly 400; allow a few tries
    for (int i = 0; i < 20 && !threw; ++i) {
        try {
            starved.draw();
        } catch (const RetryExhaustedError&) {
            threw = true;
        }
    }
    CHECK(threw);
    CHECK(default_method(1000) == SamplerMethod::exact_dp);
    CHECK(default_method(1001) == SamplerMethod::boltzmann);
    CHECK(parse_sampler_method("boltzmann") == SamplerMethod::boltzmann);
    CHECK_THROWS(parse_sampler_method("gibbs"));
}

TEST_CASE("portable helpers", "[sampling][random]") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    CHECK(derive_seed(1, 2) != derive_seed(2, 2));

    Rng rng(11);
    std::array<int, 6> hist{};
    for (int i = 0; i < 60'000; ++i)
        ++hist[uniform_below(rng, std::uint64_t{6})];
    for (int h : hist)
        CHECK(std::abs(h - 10'000) < 500);

    const boost::multiprecision::cpp_int big = boost::multiprecision::cpp_int(1) << 100;
    for (int i = 0; i < 100; ++i) {
        const auto v = uniform_below(rng, big);
        CHECK(v >= 0);
        CHECK(v < big);
    }
    for (int i = 0; i < 1000; ++i) {
        const double u = uniform_open_closed(rng);
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}

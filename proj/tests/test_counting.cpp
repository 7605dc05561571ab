#include <catch2/catch_amalgamated.hpp>

#include "ferrers/counting.hpp"
#include "ferrers/partition.hpp"

using namespace ferrers;

// Reference values from an independent p(m,k) dynamic program and a
// 60-digit mpmath evaluation of the estimate.

TEST_CASE("exact_p known values", "[counting]") {
    CHECK(exact_p(0) == 1);
    CHECK(exact_p(4) == 5);
    CHECK(exact_p(12) == 77);
    CHECK(exact_p(50) == 204226);
    CHECK(exact_p(100) == 190569292);
    CHECK(exact_p(200) == BigInt("3972999029388"));
}

TEST_CASE("exact_p agrees with enumeration", "[counting]") {
    const PartitionCountTable table(30);
    for (int n = 1; n <= 30; ++n)
        CHECK(table.exact_p(n) == enumerate_partitions(n).size());
}

TEST_CASE("restricted counts satisfy their recurrence", "[counting]") {
    const PartitionCountTable table(120);
    CHECK(table.restricted(0, 0) == 1);
    for (int m = 1; m <= 120; ++m) {
        CHECK(table.restricted(m, 1) == 1);
        CHECK(table.restricted(m, 0) == 0);
        CHECK(table.restricted(m, m) == table.exact_p(m));
        CHECK(table.restricted(m, m + 5) == table.exact_p(m));
        for (int k = 1; k <= m; ++k)
            REQUIRE(table.restricted(m, k) == table.restricted(m, k - 1) + table.restricted(m - k, k));
    }
}

TEST_CASE("table capacity", "[counting]") {
    const PartitionCountTable table(10);
    CHECK_THROWS_AS(table.exact_p(11), CapacityError);
    CHECK_THROWS_AS(table.restricted(11, 3), CapacityError);
}

TEST_CASE("Hardy-Ramanujan estimate", "[counting]") {
    using boost::multiprecision::abs;
    using boost::multiprecision::exp;
    using boost::multiprecision::sqrt;

    const HighPrecision C = hardy_ramanujan_constant();
    CHECK(abs(hardy_ramanujan_estimate(1) - exp(C) / (4 * sqrt(HighPrecision(3)))) < HighPrecision("1e-45"));

    // e^C / (4 sqrt 3) = 1.87667042260536916234640528918...
    CHECK(abs(hardy_ramanujan_estimate(1) - HighPrecision("1.87667042260536916234640528918")) <
          HighPrecision("1e-28"));

    const auto ratio = [](int n) { return hardy_ramanujan_estimate(n) / HighPrecision(exact_p(n)); };
    CHECK(abs(ratio(100) - HighPrecision("1.0457135630736357698")) < HighPrecision("1e-18"));
    CHECK(abs(ratio(50) - HighPrecision("1.0654397542261013882")) < HighPrecision("1e-18"));
    CHECK(ratio(100) >= 1);
    CHECK(ratio(100) <= HighPrecision("1.1"));
    CHECK(hardy_ramanujan_estimate(50) > HighPrecision(exact_p(50)));

    HighPrecision prev = ratio(25);
    for (int n : {50, 100, 200, 400}) {
        const auto r = ratio(n);
        CHECK(r < prev);
        CHECK(r > 1);
        prev = r;
    }
}

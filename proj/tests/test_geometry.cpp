#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ferrers/geometry.hpp"
#include "ferrers/packing_io.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

oracle::CellSet cells_from_intervals(const std::vector<RowInterval>& rows) {
    oracle::CellSet s;
    for (const auto& iv : rows)
        for (Coord c = iv.begin; c < iv.end; ++c)
            s.emplace(iv.row, c);
    return s;
}

Placement random_placement(std::mt19937_64& rng, int max_n) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
    const auto shapes = enumerate_partitions(n);
    return Placement{shapes[rng() % shapes.size()], Orientation(static_cast<int>(rng() % 8)),
                     static_cast<Coord>(rng() % 16), static_cast<Coord>(rng() % 16)};
}

} // namespace

TEST_CASE("orientation composition matches the matrix product", "[geometry]") {
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const auto ma = oracle::matrix(a), mb = oracle::matrix(b);
            std::array<std::array<int, 2>, 2> prod{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    prod[i][j] = ma[i][0] * mb[0][j] + ma[i][1] * mb[1][j];
            CHECK(oracle::matrix(compose(Orientation(a), Orientation(b)).index()) == prod);
        }
}

TEST_CASE("orientations form the dihedral group of the square", "[geometry]") {
    auto order = [](Orientation o) {
        int k = 1;
        for (Orientation p = o; !(p == Orientation::identity()); p = compose(o, p))
            ++k;
        return k;
    };
    int involutions = 0, quarter_turns = 0;
    bool abelian = true;
    for (int a = 0; a < 8; ++a) {
        const Orientation o(a);
        CHECK(compose(inverse(o), o) == Orientation::identity());
        CHECK(compose(o, inverse(o)) == Orientation::identity());
        involutions += order(o) == 2;
        quarter_turns += order(o) == 4;
        for (int b = 0; b < 8; ++b)
            abelian = abelian && compose(o, Orientation(b)) == compose(Orientation(b), o);
    }
    CHECK(order(Orientation::identity()) == 1);
    CHECK(order(Orientation::rot180()) == 2);
    CHECK(involutions == 5);
    CHECK(quarter_turns == 2);
    CHECK_FALSE(abelian);
}

TEST_CASE("applying an orientation and its inverse restores the canonical cells", "[geometry]") {
    const Partition p{4, 2, 1};
    for (int a = 0; a < 8; ++a) {
        const Orientation o(a), inv = inverse(o);
        oracle::CellSet back;
        for (const auto& c : oracle::canonical_cells(p)) {
            const Offset there = o.apply({c.first, c.second});
            const Offset home = inv.apply(there);
            back.emplace(home.row, home.col);
        }
        CHECK(back == oracle::canonical_cells(p));
    }
}

TEST_CASE("occupied_row_intervals examples", "[geometry]") {
    const auto rows = occupied_row_intervals(Placement{Partition{4, 2, 1}, Orientation(0), 0, 0});
    CHECK(rows == std::vector<RowInterval>{{0, 0, 4}, {1, 0, 2}, {2, 0, 1}});

    for (int o = 0; o < 8; ++o)
        CHECK(occupied_row_intervals(Placement{Partition{1}, Orientation(o), 5, 7}) ==
              std::vector<RowInterval>{{5, 7, 8}});

    // half turn of (2,1): apex bottom-right, point reflection of the canonical cells
    const auto turned = occupied_row_intervals(Placement{Partition{2, 1}, Orientation::rot180(), 1, 1});
    CHECK(turned == std::vector<RowInterval>{{0, 1, 2}, {1, 0, 2}});
    oracle::CellSet reflected;
    for (const auto& [r, c] : oracle::canonical_cells(Partition{2, 1}))
        reflected.emplace(1 - r, 1 - c);
    CHECK(cells_from_intervals(turned) == reflected);
}

TEST_CASE("intervals agree with the cell transform for every orientation", "[geometry]") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int o = 0; o < 8; ++o) {
                const Placement pl{p, Orientation(o), 20, 30};
                const auto rows = occupied_row_intervals(pl);
                CHECK(cells_from_intervals(rows) == oracle::placed_cells(pl));
                Coord total = 0;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    total += rows[i].end - rows[i].begin;
                    if (i)
                        CHECK(rows[i].row == rows[i - 1].row + 1);
                }
                CHECK(total == n);
                CHECK(oracle::placed_cells(pl).count({20, 30}) == 1); // anchor is the apex cell
            }
}

TEST_CASE("eight images of p are the four of p and the four of its conjugate", "[geometry]") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            std::set<oracle::CellSet> all8, mixed;
            for (int o = 0; o < 8; ++o)
                all8.insert(oracle::normalized(cells_from_intervals(
                    occupied_row_intervals(Placement{p, Orientation(o), 0, 0}))));
            for (int o = 0; o < 4; ++o) {
                mixed.insert(oracle::normalized(cells_from_intervals(
                    occupied_row_intervals(Placement{p, Orientation(o), 0, 0}))));
                mixed.insert(oracle::normalized(cells_from_intervals(
                    occupied_row_intervals(Placement{conjugate(p), Orientation(o), 0, 0}))));
            }
            CHECK(all8 == mixed);
        }
}

TEST_CASE("overlaps examples", "[geometry]") {
    CHECK(overlaps(Placement{Partition{1}, Orientation(0), 3, 3}, Placement{Partition{1}, Orientation(5), 3, 3}));
    CHECK_FALSE(overlaps(Placement{Partition{2, 1}, Orientation(0), 0, 0},
                         Placement{Partition{1, 1}, Orientation(0), 0, 2}));
    const Placement a{Partition{4, 2, 1}, Orientation(0), 0, 0};
    const Placement b{Partition{3, 2, 1, 1}, Orientation(0), 1, 1};
    CHECK(overlaps(a, b) == oracle::intersect(oracle::placed_cells(a), oracle::placed_cells(b)));
    CHECK(overlaps(a, b));
}

TEST_CASE("overlaps agrees with brute-force cell intersection", "[geometry][property]") {
    std::mt19937_64 rng(20240917);
    int disagreements = 0, hits = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_placement(rng, 12);
        const auto b = random_placement(rng, 12);
        const bool want = oracle::intersect(oracle::placed_cells(a), oracle::placed_cells(b));
        disagreements += overlaps(a, b) != want;
        hits += want;
    }
    CHECK(disagreements == 0);
    CHECK(hits > 50); // the generator produces both outcomes
    CHECK(hits < 950);
}

TEST_CASE("validate_packing", "[geometry]") {
    Packing empty{1, Rect{1, 1}, OrientationPolicy::free, {}};
    CHECK(validate_packing(empty).ok());

    // n = 2: (2) stood upright in column 0, (1,1) in column 1
    Packing two{2, Rect{2, 2}, OrientationPolicy::free,
                {Placement{Partition{2}, Orientation(4), 0, 0}, Placement{Partition{1, 1}, Orientation(0), 0, 1}}};
    CHECK(validate_packing(two).ok());
    CHECK(covered_area_in_window(two, Window{0, 0, 2}) == 4);

    Packing bad = two;
    bad.placements.push_back(Placement{Partition{2}, Orientation(0), 1, 0}); // duplicate shape, overlaps
    bad.placements.push_back(Placement{Partition{1, 1}, Orientation(0), 1, 3}); // out of bounds
    bad.placements.push_back(Placement{Partition{3}, Orientation(0), 0, 0});
    const auto report = validate_packing(bad);
    CHECK_FALSE(report.ok());
    CHECK(report.duplicates == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 3}});
    CHECK(report.out_of_bounds == std::vector<std::size_t>{3, 4});
    CHECK(report.wrong_size == std::vector<std::size_t>{4});
    CHECK(std::find(report.overlapping.begin(), report.overlapping.end(), std::pair<std::size_t, std::size_t>{0, 2}) !=
          report.overlapping.end());
    CHECK(report.describe().find("overlap") != std::string::npos);
}

TEST_CASE("validate_packing finds exactly the brute-force overlapping pairs", "[geometry][property]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Packing pk{0, Rect{40, 40}, OrientationPolicy::free, {}};
        for (int i = 0; i < 8; ++i) {
            auto pl = random_placement(rng, 6);
            pl.row += 10;
            pl.col += 10;
            pk.placements.push_back(pl);
        }
        std::vector<std::pair<std::size_t, std::size_t>> want;
        for (std::size_t i = 0; i < pk.placements.size(); ++i)
            for (std::size_t j = i + 1; j < pk.placements.size(); ++j)
                if (oracle::intersect(oracle::placed_cells(pk.placements[i]), oracle::placed_cells(pk.placements[j])))
                    want.emplace_back(i, j);
        CHECK(validate_packing(pk).overlapping == want);
    }
}

TEST_CASE("covered_area_in_window", "[geometry]") {
    Packing empty{3, Rect{3, 3}, OrientationPolicy::free, {}};
    CHECK(covered_area_in_window(empty, Window{0, 0, 3}) == 0);
    CHECK(covered_area_in_window(empty, Window{1, 1, 1}) == 0);

    Packing one{7, Rect{3, 4}, OrientationPolicy::fixed, {Placement{Partition{4, 2, 1}, Orientation(0), 0, 0}}};
    Packing wide = one;
    wide.rect = Rect{4, 4};
    CHECK(covered_area_in_window(wide, Window{0, 0, 4}) == 7);
    CHECK(covered_area_in_window(wide, Window{0, 0, 2}) == 4);
    CHECK(covered_area_in_window(wide, Window{1, 1, 2}) == 1);
    CHECK_THROWS_AS(covered_area_in_window(one, Window{0, 0, 4}), std::invalid_argument);
}

TEST_CASE("window counts over a tiling of the rectangle add up to the packed area", "[geometry][property]") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        // scatter non-overlapping shapes of size 5 in a 12 x 18 rectangle
        Packing pk{5, Rect{12, 18}, OrientationPolicy::free, {}};
        for (const auto& p : enumerate_partitions(5)) {
            for (int attempt = 0; attempt < 30; ++attempt) {
                Placement pl{p, Orientation(static_cast<int>(rng() % 8)), static_cast<Coord>(rng() % 12),
                             static_cast<Coord>(rng() % 18)};
                if (!inside(pl, pk.rect))
                    continue;
                bool clash = false;
                for (const auto& q : pk.placements)
                    clash = clash || overlaps(pl, q);
                if (!clash) {
                    pk.placements.push_back(pl);
                    break;
                }
            }
        }
        REQUIRE(validate_packing(pk).ok());
        const CoverageIndex index(pk);
        for (Coord side : {1, 2, 3, 6}) {
            Coord total = 0;
            for (Coord r = 0; r < 12; r += side)
                for (Coord c = 0; c < 18; c += side)
                    total += index.covered(Window{r, c, side});
            CHECK(total == 5 * static_cast<Coord>(pk.placements.size()));
        }
    }
}

TEST_CASE("packing JSON round trip keeps field order", "[geometry][io]") {
    Packing pk{4, Rect{4, 5}, OrientationPolicy::rot180,
               {Placement{Partition{3, 1}, Orientation(3), 1, 2}, Placement{Partition{4}, Orientation(0), 3, 0}}};
    const std::string text = dump_packing(pk);
    CHECK(text ==
          R"({"n":4,"rect":{"height":4,"width":5},"policy":"rot180","placements":[{"parts":[3,1],"orientation":3,"row":1,"col":2},{"parts":[4],"orientation":0,"row":3,"col":0}]})");
    CHECK(parse_packing(text) == pk);
    CHECK_THROWS_AS(parse_packing("{"), DomainError);
    CHECK_THROWS_AS(parse_packing(R"({"n":1})"), DomainError);
    CHECK_THROWS_AS(
        parse_packing(R"({"n":2,"rect":{"height":1,"width":1},"policy":"free","placements":[{"parts":[1,2],"orientation":0,"row":0,"col":0}]})"),
        DomainError);
}

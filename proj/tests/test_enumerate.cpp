#include "genusdist/enumerate.hpp"
#include "genusdist/errors.hpp"
#include "genusdist/exact.hpp"

#include <doctest.h>

#include <set>

using namespace genusdist;

TEST_SUITE("enumerate") {

TEST_CASE("visits (2n-1)!! diagrams") {
    for (std::size_t n : {1UL, 2UL, 3UL, 7UL}) {
        CAPTURE(n);
        std::uint64_t visits = 0;
        enumerate_all(n, [&](const ChordDiagram& d) {
            CHECK(d.chords() == n);
            ++visits;
        });
        CHECK(visits == double_factorial_odd(n).get_ui());
    }
    CHECK(double_factorial_odd(7) == 135135);
}

TEST_CASE("canonical order, no repeats") {
    std::vector<std::vector<ChordDiagram::Endpoint>> seen;
    enumerate_all(3, [&](const ChordDiagram& d) { seen.emplace_back(d.pairing().begin(), d.pairing().end()); });
    REQUIRE(seen.size() == 15);
    CHECK(std::set(seen.begin(), seen.end()).size() == 15);
    CHECK(seen.front() == std::vector<ChordDiagram::Endpoint>{1, 0, 3, 2, 5, 4});
    CHECK(seen.back() == std::vector<ChordDiagram::Endpoint>{5, 4, 3, 2, 1, 0});
}

TEST_CASE("census histograms") {
    const auto c3 = census(3);
    CHECK(c3.genus_histogram == std::vector<std::uint64_t>{5, 10});
    CHECK(c3.diagram_count == 15);
    const auto c1 = census(1);
    CHECK(c1.genus_histogram == std::vector<std::uint64_t>{1});
    CHECK(c1.face_histogram == std::vector<std::uint64_t>{0, 0, 1});

    for (std::size_t n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto c = census(n);
        CHECK(c.genus_histogram[0] == catalan(n).get_ui());
        for (std::size_t g = 0; g < c.genus_histogram.size(); ++g) {
            CHECK(c.face_histogram[n + 1 - 2 * g] == c.genus_histogram[g]);
        }
    }
}

TEST_CASE("threaded census equals serial census") {
    const auto serial = census(7, 8, 1);
    const auto threaded = census(7, 8, 4);
    CHECK(serial.genus_histogram == threaded.genus_histogram);
    CHECK(serial.face_histogram == threaded.face_histogram);
    CHECK(serial.diagram_count == threaded.diagram_count);
}

TEST_CASE("limit") {
    CHECK_THROWS_AS(census(9), LimitExceeded);
    CHECK_THROWS_AS(enumerate_all(4, [](const ChordDiagram&) {}, 3), LimitExceeded);
    CHECK_THROWS_AS(census(0), InputError);
}

}

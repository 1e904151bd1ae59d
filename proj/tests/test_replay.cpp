#include <catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "llg/replay.hpp"

using namespace llg;

TEST_CASE("reference table sanity", "[replay]") {
    const auto& ref = reference_cycle_lengths();
    REQUIRE(ref.size() == 180);
    for (int L : ref) {
        REQUIRE(L >= 6);
        REQUIRE(L % 4 == 2); // every entry has the 6 + 4n form
    }
    // frozen first row and final entry
    std::vector<int> head(ref.begin(), ref.begin() + 15);
    REQUIRE(head == std::vector<int>{6, 18, 6, 42, 6, 18, 6, 6, 66, 6, 18, 14,
                                     10, 30, 30});
    REQUIRE(ref.back() == 42);
}

TEST_CASE("diff reports the first divergence, one-based", "[replay]") {
    const auto& ref = reference_cycle_lengths();
    std::vector<int64_t> copy(ref.begin(), ref.end());
    REQUIRE_FALSE(diff_against_reference(copy).has_value());

    // shorter prefixes that agree are fine
    std::vector<int64_t> prefix(ref.begin(), ref.begin() + 40);
    REQUIRE_FALSE(diff_against_reference(prefix).has_value());

    for (std::size_t k : {std::size_t{0}, std::size_t{17}, std::size_t{179}}) {
        std::vector<int64_t> bad = copy;
        bad[k] += 4;
        auto m = diff_against_reference(bad);
        REQUIRE(m.has_value());
        REQUIRE(m->index == k + 1);
        REQUIRE(m->measured == copy[k] + 4);
        REQUIRE(m->expected == copy[k]);
    }
}

TEST_CASE("measured lengths agree with the cycle decomposition", "[replay]") {
    Config c(Pattern::all_right());
    auto lengths =
        first_cycle_lengths(SystemKind::Rotator, InitialCondition{}, c, 30);
    REQUIRE(lengths.size() == 30);

    Config c2(Pattern::all_right());
    int64_t horizon = std::accumulate(lengths.begin(), lengths.end(),
                                      int64_t{0});
    Trajectory traj = run(SystemKind::Rotator, InitialCondition{}, c2, horizon);
    CycleDecomposition d = decompose(traj);
    REQUIRE(d.cycles.size() == 30);
    for (std::size_t i = 0; i < 30; ++i)
        REQUIRE(d.cycles[i].length == lengths[i]);
}

TEST_CASE("replay disagrees with the table at index 33", "[replay]") {
    // The dynamics and the embedded table part ways at L(33): the walk
    // measures 126 where the table says 42.  The diff is frozen here so any
    // change to either side is caught.
    auto m = verify_replay();
    REQUIRE(m.has_value());
    REQUIRE(m->index == 33);
    REQUIRE(m->measured == 126);
    REQUIRE(m->expected == 42);
}

TEST_CASE("cycle measurement refuses an impossible budget", "[replay]") {
    Config c(Pattern::all_right());
    REQUIRE_THROWS_AS(
        first_cycle_lengths(SystemKind::Rotator, InitialCondition{}, c, 1, 3),
        BudgetError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normtop/boxes.hpp"
#include "normtop/errors.hpp"
#include "normtop/sampling.hpp"

using namespace normtop;

namespace {

BoxRegion closed_region(const IndexSet& ids, std::vector<std::pair<long long, long long>> bounds) {
    std::vector<ExtInterval> ivs;
    for (const auto& [lo, hi] : bounds)
        ivs.push_back(ExtInterval::closed(Rat(lo), Rat(hi)));
    return BoxRegion(ids, std::move(ivs));
}

bool in_any(const FinVector& p, const std::vector<BoxRegion>& regions) {
    for (const BoxRegion& r : regions) {
        bool inside = true;
        std::size_t pos = 0;
        for (const Index k : r.indices()) {
            if (!r.interval_at(pos).contains(p.coord(k))) {
                inside = false;
                break;
            }
            ++pos;
        }
        if (inside)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("interval basics") {
    CHECK(ExtInterval::closed(Rat(0), Rat(0)).is_empty() == false);
    CHECK(ExtInterval::open(Rat(0), Rat(0)).is_empty());
    CHECK(ExtInterval::closed(Rat(1), Rat(0)).is_empty());
    CHECK(ExtInterval::all().contains(Rat(-100)));

    const ExtInterval half_open{Rat(0), Rat(1), true, false};
    CHECK_FALSE(half_open.contains(Rat(0)));
    CHECK(half_open.contains(Rat(1)));

    const ExtInterval meet = ExtInterval::open(Rat(-2), Rat(2)).intersect(ExtInterval::above(Rat(0), false));
    CHECK(meet.contains(Rat(0)));
    CHECK(meet.contains(Rat(1)));
    CHECK_FALSE(meet.contains(Rat(2)));
}

TEST_CASE("interval gaps use closures") {
    CHECK(interval_gap(ExtInterval::closed(Rat(-1), Rat(1)), ExtInterval::above(Rat(2), false)) == 1);
    CHECK(interval_gap(ExtInterval::closed(Rat(-1), Rat(1)), ExtInterval::above(Rat(2), true)) == 1);
    CHECK(interval_gap(ExtInterval::closed(Rat(-1), Rat(1)), ExtInterval::below(Rat(-3), false)) == 2);
    CHECK(interval_gap(ExtInterval::point(Rat(0)), ExtInterval::open(Rat(0), Rat(5))) == 0);
    CHECK(interval_gap(ExtInterval::all(), ExtInterval::point(Rat(7))) == 0);
}

TEST_CASE("guillotine subtraction partitions correctly") {
    const IndexSet ids({0, 1});
    const BoxRegion square = closed_region(ids, {{-2, 2}, {-2, 2}});
    const BoxRegion cut = closed_region(ids, {{-1, 1}, {-1, 1}});
    const auto pieces = region_subtract(square, cut);
    CHECK(pieces.size() == 4);

    // every sampled point of the square is in the pieces iff it avoids the cut
    SampleGen gen(23);
    for (int i = 0; i < 300; ++i) {
        const FinVector p = gen.next_vector(ids, 2, 8, 4);
        if (!in_any(p, {square}))
            continue;
        CHECK(in_any(p, pieces) == !in_any(p, {cut}));
    }
}

TEST_CASE("subtracting open boxes leaves their boundary") {
    const IndexSet ids({0});
    const BoxRegion line = BoxRegion::universe(ids);
    std::vector<ExtInterval> iv{ExtInterval::open(Rat(-2), Rat(2))};
    const auto pieces = region_subtract(line, BoxRegion(ids, std::move(iv)));
    REQUIRE(pieces.size() == 2);
    CHECK(in_any(FinVector::scaled_unit(0, Rat(2)), pieces));
    CHECK(in_any(FinVector::scaled_unit(0, Rat(-2)), pieces));
    CHECK_FALSE(in_any(FinVector::scaled_unit(0, Rat(0)), pieces));
}

TEST_CASE("covering detection") {
    const IndexSet ids({0, 1});
    const BoxRegion target = closed_region(ids, {{-1, 1}, {-1, 1}});

    SUBCASE("two overlapping boxes cover") {
        std::vector<BoxRegion> cuts = {
            closed_region(ids, {{-2, 0}, {-2, 2}}),
            closed_region(ids, {{0, 2}, {-2, 2}}),
        };
        CHECK(region_subtract_all({target}, cuts).empty());
    }
    SUBCASE("two open boxes whose closures just meet still cover") {
        std::vector<ExtInterval> a{ExtInterval::open(Rat(-2), Rat(1)), ExtInterval::open(Rat(-2), Rat(2))};
        std::vector<ExtInterval> b{ExtInterval::open(Rat(-1), Rat(2)), ExtInterval::open(Rat(-2), Rat(2))};
        std::vector<BoxRegion> cuts = {BoxRegion(ids, std::move(a)), BoxRegion(ids, std::move(b))};
        CHECK(region_subtract_all({target}, cuts).empty());
    }
    SUBCASE("an open box does not cover its own closure") {
        std::vector<ExtInterval> a{ExtInterval::open(Rat(-1), Rat(1)), ExtInterval::open(Rat(-1), Rat(1))};
        std::vector<BoxRegion> cuts = {BoxRegion(ids, std::move(a))};
        const auto leftover = region_subtract_all({target}, cuts);
        CHECK_FALSE(leftover.empty());
        // the leftover contains a boundary point
        const FinVector w = leftover.front().sample_point();
        bool on_boundary = rat_abs(w.coord(0)) == 1 || rat_abs(w.coord(1)) == 1;
        CHECK(on_boundary);
    }
    SUBCASE("a degenerate slab removes a flat piece") {
        // the complement piece {x = 1} of the open cut is exactly a slab
        std::vector<ExtInterval> cut{ExtInterval::open(Rat(-1), Rat(1)), ExtInterval::all()};
        std::vector<ExtInterval> slab{ExtInterval::point(Rat(1)), ExtInterval::all()};
        std::vector<ExtInterval> slab2{ExtInterval::point(Rat(-1)), ExtInterval::all()};
        std::vector<BoxRegion> cuts = {BoxRegion(ids, std::move(cut)), BoxRegion(ids, std::move(slab)),
                                       BoxRegion(ids, std::move(slab2))};
        CHECK(region_subtract_all({target}, cuts).empty());
    }
}

TEST_CASE("weighted gaps against boxes") {
    const IndexSet ids({0, 1});
    const Box unit(ids, {{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}});
    const WeightProfile weights(ids, {{0, Rat(1)}, {1, Rat(1)}}, Rat(1));

    std::vector<ExtInterval> beyond{ExtInterval::above(Rat(2), true), ExtInterval::all()};
    CHECK(weighted_region_gap(unit, BoxRegion(ids, std::move(beyond)), weights) == 1);

    std::vector<ExtInterval> above{ExtInterval::all(), ExtInterval::above(Rat(2), false)};
    CHECK(weighted_region_gap(unit, BoxRegion(ids, std::move(above)), weights) == 2);

    const WeightProfile heavy(ids, {{0, Rat(1)}, {1, Rat(4)}}, Rat(1));
    std::vector<ExtInterval> above2{ExtInterval::all(), ExtInterval::above(Rat(2), false)};
    CHECK(weighted_region_gap(unit, BoxRegion(ids, std::move(above2)), heavy) == 8);
}

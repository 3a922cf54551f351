#ifndef NORMTOP_BOXES_HPP
#define NORMTOP_BOXES_HPP

#include "normtop/norms.hpp"
#include "normtop/vectorspace.hpp"

#include <optional>
#include <vector>

namespace normtop {

// Rational interval with optionally open endpoints; a missing bound is
// unbounded on that side. The workhorse for exact set arithmetic on
// axis-aligned regions.
struct ExtInterval {
    std::optional<Rat> lo, hi;
    bool lo_open = false, hi_open = false;

    static ExtInterval all() { return {}; }
    static ExtInterval closed(Rat a, Rat b) { return {std::move(a), std::move(b), false, false}; }
    static ExtInterval open(Rat a, Rat b) { return {std::move(a), std::move(b), true, true}; }
    static ExtInterval point(Rat v) { return {v, v, false, false}; }
    static ExtInterval below(Rat b, bool open) { return {std::nullopt, std::move(b), false, open}; }
    static ExtInterval above(Rat a, bool open) { return {std::move(a), std::nullopt, open, false}; }

    bool is_empty() const;
    bool contains(const Rat& x) const;
    ExtInterval intersect(const ExtInterval& other) const;

    // A rational point inside a nonempty interval.
    Rat sample_point() const;
};

// Distance between the closures of two intervals (0 when they touch).
// Empty input intervals are not allowed.
Rat interval_gap(const ExtInterval& a, const ExtInterval& b);

// Product of intervals over a fixed index set: an axis-aligned subset of
// span(indices). Regions are what remains when balls are carved out of a
// slice, so endpoints may be open and sides unbounded.
class BoxRegion {
public:
    BoxRegion() = default;
    BoxRegion(IndexSet indices, std::vector<ExtInterval> intervals);

    static BoxRegion universe(const IndexSet& indices);
    static BoxRegion from_box(const Box& b);

    const IndexSet& indices() const { return indices_; }
    const std::vector<ExtInterval>& intervals() const { return intervals_; }
    const ExtInterval& interval_at(std::size_t pos) const { return intervals_[pos]; }

    bool is_empty() const;
    bool intersects(const BoxRegion& other) const;
    FinVector sample_point() const;

    bool operator==(const BoxRegion&) const = default;

private:
    IndexSet indices_;
    std::vector<ExtInterval> intervals_;
};

// Pieces of r with the box-region `cut` removed (guillotine split, at most
// 2*dim pieces). Both must live over the same index set.
std::vector<BoxRegion> region_subtract(const BoxRegion& r, const BoxRegion& cut);

// Removes every cut from every piece of the worklist.
std::vector<BoxRegion> region_subtract_all(std::vector<BoxRegion> pieces,
                                           const std::vector<BoxRegion>& cuts);

// Distance from closed box b to the closure of the region piece, measured
// in the weighted supremum norm with the given per-index weights:
//   max_k w(k) * gap(b_k, piece_k).
Rat weighted_region_gap(const Box& b, const BoxRegion& piece, const WeightProfile& weights);

// Same, from a single point.
Rat weighted_point_gap(const FinVector& p, const BoxRegion& piece, const WeightProfile& weights);

} // namespace normtop

#endif

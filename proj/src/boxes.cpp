#include "normtop/boxes.hpp"

#include "normtop/errors.hpp"

#include <utility>

namespace normtop {

bool ExtInterval::is_empty() const {
    if (!lo || !hi)
        return false;
    if (*lo > *hi)
        return true;
    return *lo == *hi && (lo_open || hi_open);
}

bool ExtInterval::contains(const Rat& x) const {
    if (lo) {
        if (x < *lo || (lo_open && x == *lo))
            return false;
    }
    if (hi) {
        if (x > *hi || (hi_open && x == *hi))
            return false;
    }
    return true;
}

ExtInterval ExtInterval::intersect(const ExtInterval& other) const {
    ExtInterval out = *this;
    if (other.lo && (!out.lo || *other.lo > *out.lo || (*other.lo == *out.lo && other.lo_open))) {
        out.lo = other.lo;
        out.lo_open = other.lo_open;
    }
    if (other.hi && (!out.hi || *other.hi < *out.hi || (*other.hi == *out.hi && other.hi_open))) {
        out.hi = other.hi;
        out.hi_open = other.hi_open;
    }
    return out;
}

Rat ExtInterval::sample_point() const {
    if (is_empty())
        throw InvalidArgument("sample point of an empty interval");
    if (lo && hi) {
        if (*lo == *hi)
            return *lo;
        return (*lo + *hi) / 2;
    }
    if (lo)
        return lo_open ? Rat(*lo + 1) : *lo;
    if (hi)
        return hi_open ? Rat(*hi - 1) : *hi;
    return Rat(0);
}

Rat interval_gap(const ExtInterval& a, const ExtInterval& b) {
    if (a.is_empty() || b.is_empty())
        throw InvalidArgument("gap of an empty interval");
    if (a.hi && b.lo && *a.hi < *b.lo)
        return *b.lo - *a.hi;
    if (b.hi && a.lo && *b.hi < *a.lo)
        return *a.lo - *b.hi;
    return Rat(0);
}

BoxRegion::BoxRegion(IndexSet indices, std::vector<ExtInterval> intervals)
    : indices_(std::move(indices)), intervals_(std::move(intervals)) {
    if (indices_.size() != intervals_.size())
        throw InvalidArgument("region needs one interval per index");
}

BoxRegion BoxRegion::universe(const IndexSet& indices) {
    return BoxRegion(indices, std::vector<ExtInterval>(indices.size(), ExtInterval::all()));
}

BoxRegion BoxRegion::from_box(const Box& b) {
    std::vector<ExtInterval> ivs;
    ivs.reserve(b.indices().size());
    for (const auto& [lo, hi] : b.bounds())
        ivs.push_back(ExtInterval::closed(lo, hi));
    return BoxRegion(b.indices(), std::move(ivs));
}

bool BoxRegion::is_empty() const {
    for (const ExtInterval& iv : intervals_)
        if (iv.is_empty())
            return true;
    return false;
}

bool BoxRegion::intersects(const BoxRegion& other) const {
    if (!(indices_ == other.indices_))
        throw InvalidArgument("regions over different index sets");
    for (std::size_t i = 0; i < intervals_.size(); ++i)
        if (intervals_[i].intersect(other.intervals_[i]).is_empty())
            return false;
    return !is_empty() && !other.is_empty();
}

FinVector BoxRegion::sample_point() const {
    if (is_empty())
        throw InvalidArgument("sample point of an empty region");
    std::map<Index, Rat> coords;
    std::size_t pos = 0;
    for (const Index k : indices_) {
        Rat v = intervals_[pos].sample_point();
        if (v != 0)
            coords.emplace(k, std::move(v));
        ++pos;
    }
    return FinVector(std::move(coords));
}

std::vector<BoxRegion> region_subtract(const BoxRegion& r, const BoxRegion& cut) {
    if (!(r.indices() == cut.indices()))
        throw InvalidArgument("regions over different index sets");
    if (r.is_empty())
        return {};
    if (cut.is_empty() || !r.intersects(cut))
        return {r};
    std::vector<BoxRegion> pieces;
    std::vector<ExtInterval> current = r.intervals();
    for (std::size_t i = 0; i < current.size(); ++i) {
        const ExtInterval& ci = cut.interval_at(i);
        if (ci.lo) {
            // part strictly below the cut on coordinate i
            ExtInterval below = current[i].intersect(ExtInterval::below(*ci.lo, !ci.lo_open));
            if (!below.is_empty()) {
                std::vector<ExtInterval> piece = current;
                piece[i] = std::move(below);
                pieces.emplace_back(r.indices(), std::move(piece));
            }
        }
        if (ci.hi) {
            ExtInterval above = current[i].intersect(ExtInterval::above(*ci.hi, !ci.hi_open));
            if (!above.is_empty()) {
                std::vector<ExtInterval> piece = current;
                piece[i] = std::move(above);
                pieces.emplace_back(r.indices(), std::move(piece));
            }
        }
        current[i] = current[i].intersect(ci);
    }
    // what is left of `current` lies inside the cut
    return pieces;
}

std::vector<BoxRegion> region_subtract_all(std::vector<BoxRegion> pieces,
                                           const std::vector<BoxRegion>& cuts) {
    for (const BoxRegion& cut : cuts) {
        std::vector<BoxRegion> next;
        next.reserve(pieces.size());
        for (const BoxRegion& piece : pieces) {
            auto parts = region_subtract(piece, cut);
            next.insert(next.end(), std::make_move_iterator(parts.begin()),
                        std::make_move_iterator(parts.end()));
        }
        pieces = std::move(next);
        if (pieces.empty())
            break;
    }
    return pieces;
}

Rat weighted_region_gap(const Box& b, const BoxRegion& piece, const WeightProfile& weights) {
    if (!(b.indices() == piece.indices()))
        throw InvalidArgument("box and region over different index sets");
    Rat best(0);
    std::size_t pos = 0;
    for (const Index k : b.indices()) {
        const auto& [lo, hi] = b.bounds_at(pos);
        const Rat gap = interval_gap(ExtInterval::closed(lo, hi), piece.interval_at(pos));
        best = rat_max(best, Rat(weights.at(k) * gap));
        ++pos;
    }
    return best;
}

Rat weighted_point_gap(const FinVector& p, const BoxRegion& piece, const WeightProfile& weights) {
    Rat best(0);
    std::size_t pos = 0;
    for (const Index k : piece.indices()) {
        const Rat gap = interval_gap(ExtInterval::point(p.coord(k)), piece.interval_at(pos));
        best = rat_max(best, Rat(weights.at(k) * gap));
        ++pos;
    }
    return best;
}

} // namespace normtop

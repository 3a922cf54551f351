#include "normtop/topology.hpp"

#include "normtop/boxes.hpp"
#include "normtop/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace normtop {

namespace {

constexpr std::size_t kAllLevels = std::numeric_limits<std::size_t>::max();

std::string point_string(const FinVector& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, x] : p.coords()) {
        if (!out.empty())
            out += " + ";
        out += rat_string(x) + " e_" + std::to_string(k);
    }
    return out;
}

// The ball, shifted by `translation`, as an axis-aligned region inside
// span(target). Per-coordinate because the ball norms are diagonal:
// free coordinates get intervals, coordinates pinned by the slice or the
// shift get points, and constant violations empty the whole region.
std::optional<BoxRegion> ball_region(const BallSpec& ball, const IndexSet& ball_slice,
                                     const FinVector& translation, const IndexSet& target) {
    const WeightProfile weights = weight_profile(ball.norm);
    const auto norm_term_ok = [&](const Rat& value, Index k) {
        const Rat term = weights.at(k) * rat_abs(value);
        return ball.open ? term < ball.radius : term <= ball.radius;
    };

    IndexSet relevant = ball_slice.unite(target).unite(support(translation));
    std::vector<ExtInterval> intervals(target.size());
    for (const Index k : relevant) {
        const Rat shift = translation.coord(k) + ball.center.coord(k);
        if (target.contains(k)) {
            const std::size_t pos = static_cast<std::size_t>(
                std::lower_bound(target.begin(), target.end(), k) - target.begin());
            if (ball_slice.contains(k)) {
                const Rat half = ball.radius / weights.at(k);
                intervals[pos] = ball.open ? ExtInterval::open(shift - half, shift + half)
                                           : ExtInterval::closed(shift - half, shift + half);
            } else {
                // support condition: the point minus the translation lies in the ball's slice
                intervals[pos] = ExtInterval::point(translation.coord(k));
            }
        } else {
            // coordinate is 0 inside span(target)
            if (ball_slice.contains(k)) {
                if (!norm_term_ok(shift, k))
                    return std::nullopt;
            } else if (translation.coord(k) != 0) {
                return std::nullopt;
            }
        }
    }
    BoxRegion region(target, std::move(intervals));
    if (region.is_empty())
        return std::nullopt;
    return region;
}

std::vector<BoxRegion> cover_regions(const BallCover& cover, const FinVector& translation,
                                     const IndexSet& target, std::size_t max_level) {
    std::vector<BoxRegion> out;
    for (const auto& [level, balls] : cover.levels()) {
        if (level > max_level)
            break;
        const IndexSet slice = cover.slice(level);
        for (const BallSpec& ball : balls)
            if (auto region = ball_region(ball, slice, translation, target))
                out.push_back(std::move(*region));
    }
    return out;
}

// Leftover of the closed box after carving out every region; empty means covered.
std::optional<FinVector> uncovered_point(const Box& box, const std::vector<BoxRegion>& regions) {
    auto leftover = region_subtract_all({BoxRegion::from_box(box)}, regions);
    if (leftover.empty())
        return std::nullopt;
    return leftover.front().sample_point();
}

struct Separation {
    Rat distance;
    FinVector nearest;
};

FinVector nearest_point_of_piece(const Box& box, const BoxRegion& piece) {
    std::map<Index, Rat> coords;
    std::size_t pos = 0;
    for (const Index k : box.indices()) {
        const auto& [blo, bhi] = box.bounds_at(pos);
        const ExtInterval& p = piece.interval_at(pos);
        Rat v;
        if (p.hi && *p.hi < blo)
            v = *p.hi;
        else if (p.lo && *p.lo > bhi)
            v = *p.lo;
        else {
            v = p.lo ? rat_max(blo, *p.lo) : blo; // closures overlap
            if (p.hi)
                v = rat_min(v, *p.hi);
        }
        if (v != 0)
            coords.emplace(k, std::move(v));
        ++pos;
    }
    return FinVector(std::move(coords));
}

// Exact distance from the closed box to the complement of the union of
// the regions inside span(slice), in the weighted supremum metric.
Separation complement_separation(const Box& box, const std::vector<BoxRegion>& regions,
                                 const WeightProfile& weights, const IndexSet& slice) {
    const auto pieces = region_subtract_all({BoxRegion::universe(slice)}, regions);
    if (pieces.empty())
        throw Error("internal: a finite ball cover cannot fill a whole slice");
    bool first = true;
    Separation best;
    for (const BoxRegion& piece : pieces) {
        Rat d = weighted_region_gap(box, piece, weights);
        if (first || d < best.distance) {
            best.distance = std::move(d);
            best.nearest = nearest_point_of_piece(box, piece);
            first = false;
        }
    }
    return best;
}

Box embed_box(const Box& box, const IndexSet& larger) {
    std::vector<std::pair<Rat, Rat>> bounds;
    bounds.reserve(larger.size());
    for (const Index k : larger) {
        if (box.indices().contains(k)) {
            const std::size_t pos = static_cast<std::size_t>(
                std::lower_bound(box.indices().begin(), box.indices().end(), k) - box.indices().begin());
            bounds.push_back(box.bounds_at(pos));
        } else {
            bounds.emplace_back(Rat(0), Rat(0));
        }
    }
    return Box(larger, std::move(bounds));
}

// One Lemma-4 separation computation at flag position `pos`, for a cover
// optionally translated (the opening construction shifts everything by -x).
EpsilonCert step_certificate(const NormExpr& current, const BallCover& cover,
                             const FinVector& translation, std::size_t pos, std::size_t max_level) {
    const Flag& flag = cover.flag();
    if (pos >= flag.depth())
        throw InvalidArgument("extension step beyond the cover flag depth");
    const Index j = flag.added()[pos];
    const IndexSet base_slice = flag.slice(pos);
    const IndexSet extended = flag.slice(pos + 1);

    const WeightProfile current_weights = weight_profile(current);
    if (!current_weights.defined_on(base_slice))
        throw DomainViolation("norm to extend is not defined on the whole base slice");

    const Box unit = ball_box(current, base_slice, Rat(1), FinVector());
    if (const auto witness = uncovered_point(unit, cover_regions(cover, translation, base_slice, max_level)))
        throw PreconditionFailure("closed unit ball is not inside the cover: uncovered point " +
                                  point_string(*witness));

    // auxiliary norm max(N(y), |lambda|): current weights plus weight 1 on j
    std::map<Index, Rat> aux;
    for (const Index k : base_slice)
        aux.emplace(k, current_weights.at(k));
    aux.emplace(j, Rat(1));
    const WeightProfile aux_weights(extended, std::move(aux), Rat(1));

    const Box embedded = embed_box(unit, extended);
    Separation sep = complement_separation(
        embedded, cover_regions(cover, translation, extended, max_level), aux_weights, extended);
    if (sep.distance == 0)
        throw PreconditionFailure(
            "zero separation between the unit ball and the complement near " +
            point_string(sep.nearest) + "; the cover is too coarse at this truncation");

    EpsilonCert cert;
    cert.separation = sep.distance;
    cert.epsilon = sep.distance / 2;
    cert.extended_slice = extended;
    cert.nearest_outside = std::move(sep.nearest);
    return cert;
}

void verify_unit_ball_inside(const NormExpr& norm, const BallCover& cover,
                             const FinVector& translation, const IndexSet& slice,
                             std::size_t max_level) {
    const Box unit = ball_box(norm, slice, Rat(1), FinVector());
    if (uncovered_point(unit, cover_regions(cover, translation, slice, max_level)))
        throw Error("internal: extended unit ball escaped the cover");
}

ExtensionChain extend_chain(const NormExpr& base, const BallCover& cover,
                            const FinVector& translation, std::size_t from, std::size_t depth,
                            std::size_t max_level) {
    const Flag& flag = cover.flag();
    if (depth > flag.depth())
        throw InvalidArgument("depth " + std::to_string(depth) + " exceeds the cover flag depth " +
                              std::to_string(flag.depth()));
    const IndexSet start_slice = flag.slice(from);
    ExtensionChain chain{base, {}};
    std::vector<Rat> epsilons;
    for (std::size_t pos = from; pos < depth; ++pos) {
        EpsilonCert cert;
        try {
            cert = step_certificate(chain.norm, cover, translation, pos, max_level);
        } catch (const PreconditionFailure& e) {
            throw PreconditionFailure("extension stage " + std::to_string(pos - from) + ": " + e.what());
        } catch (const DomainViolation& e) {
            throw DomainViolation("extension stage " + std::to_string(pos - from) + ": " + e.what());
        }
        epsilons.push_back(cert.epsilon);
        std::vector<Index> added(flag.added().begin() + static_cast<std::ptrdiff_t>(from),
                                 flag.added().begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        chain.norm = NormExpr::extension(base, Flag(start_slice, std::move(added)), epsilons);
        verify_unit_ball_inside(chain.norm, cover, translation, flag.slice(pos + 1), max_level);
        chain.steps.push_back(std::move(cert));
    }
    return chain;
}

const BallSpec& ball_centered_at(const BallCover& cover, Index k) {
    const FinVector center = FinVector::unit(k);
    for (const auto& [level, balls] : cover.levels())
        for (const BallSpec& ball : balls)
            if (ball.center == center)
                return ball;
    throw InvalidArgument("cover has no ball centered at e_" + std::to_string(k));
}

// Outside every ball of the cover, with the balls read as full norm balls
// (the counterexample balls carry total norms).
bool outside_all_balls(const BallCover& cover, const FinVector& p) {
    for (const auto& [level, balls] : cover.levels())
        for (const BallSpec& ball : balls) {
            const Rat value = eval_norm(ball.norm, subtract(p, ball.center));
            const bool inside = ball.open ? value < ball.radius : value <= ball.radius;
            if (inside)
                return false;
        }
    return true;
}

} // namespace

BallSpec::BallSpec(FinVector center_, Rat radius_, NormExpr norm_, bool open_)
    : center(std::move(center_)), radius(std::move(radius_)), norm(std::move(norm_)), open(open_) {
    if (radius <= 0)
        throw InvalidArgument("ball radius must be positive, got " + rat_string(radius));
}

BallCover::BallCover(Flag flag, std::map<std::size_t, std::vector<BallSpec>> levels)
    : flag_(std::move(flag)), levels_(std::move(levels)) {
    for (const auto& [level, balls] : levels_) {
        const IndexSet slice = flag_.slice(level); // throws when level exceeds the flag depth
        for (const BallSpec& ball : balls) {
            if (!support(ball.center).subset_of(slice))
                throw InvalidArgument("ball center at level " + std::to_string(level) +
                                      " is supported outside the level slice");
            if (!weight_profile(ball.norm).defined_on(slice))
                throw InvalidArgument("ball norm at level " + std::to_string(level) +
                                      " is not defined on the level slice");
        }
    }
}

std::size_t BallCover::ball_count() const {
    std::size_t n = 0;
    for (const auto& [level, balls] : levels_)
        n += balls.size();
    return n;
}

bool slice_membership(const BallCover& cover, const FinVector& p, std::size_t level) {
    const IndexSet sup = support(p);
    if (!sup.subset_of(cover.slice(level)))
        throw DomainViolation("point support lies outside the slice F_" + std::to_string(level));
    for (const auto& [lvl, balls] : cover.levels()) {
        if (lvl > level)
            break;
        if (!sup.subset_of(cover.slice(lvl)))
            continue; // the level's balls are confined to a smaller slice
        for (const BallSpec& ball : balls) {
            const Rat value = eval_norm(ball.norm, subtract(p, ball.center));
            if (ball.open ? value < ball.radius : value <= ball.radius)
                return true;
        }
    }
    return false;
}

bool cover_contains_box(const BallCover& cover, const Box& box, std::size_t level) {
    if (!box.indices().subset_of(cover.slice(level)))
        throw DomainViolation("box indices lie outside the slice F_" + std::to_string(level));
    return !uncovered_point(box, cover_regions(cover, FinVector(), box.indices(), level));
}

ExtensionStep extend_norm_step(const NormExpr& base, const BallCover& cover, Index new_index) {
    const auto& added = cover.flag().added();
    const auto it = std::find(added.begin(), added.end(), new_index);
    if (it == added.end())
        throw InvalidArgument("index " + std::to_string(new_index) + " is not an added index of the cover flag");
    const std::size_t pos = static_cast<std::size_t>(it - added.begin());

    EpsilonCert cert = step_certificate(base, cover, FinVector(), pos, kAllLevels);
    NormExpr ext = NormExpr::extension(base, Flag(cover.flag().slice(pos), {new_index}), {cert.epsilon});
    verify_unit_ball_inside(ext, cover, FinVector(), cert.extended_slice, kAllLevels);
    return {std::move(cert), std::move(ext)};
}

ExtensionChain extend_norm_flag(const NormExpr& base, const BallCover& cover, std::size_t depth) {
    return extend_chain(base, cover, FinVector(), 0, depth, kAllLevels);
}

BallCover counterexample_balls(const std::vector<NormExpr>& norms, const Rat& radius) {
    if (radius <= 0)
        throw InvalidArgument("ball radius must be positive");
    const NormExpr base = NormExpr::uniform();
    std::vector<Index> added;
    added.reserve(norms.size());
    for (std::size_t k = 0; k < norms.size(); ++k)
        added.push_back(static_cast<Index>(k));
    std::map<std::size_t, std::vector<BallSpec>> levels;
    for (std::size_t k = 0; k < norms.size(); ++k) {
        // max(N', N_k) keeps the supremum norm below every ball norm
        NormExpr wrapped = NormExpr::max_of({base, norms[k]});
        levels[k + 1].emplace_back(FinVector::unit(static_cast<Index>(k)), radius, std::move(wrapped));
    }
    return BallCover(Flag(IndexSet{}, std::move(added)), std::move(levels));
}

DisjointnessCert disjointness_certificate(const BallCover& cover, Index k, Index l) {
    if (k == l)
        throw PreconditionFailure("disjointness certificate needs two distinct indices");
    const BallSpec& bk = ball_centered_at(cover, k);
    const BallSpec& bl = ball_centered_at(cover, l);

    const auto dominates_base = [](const NormExpr& n) {
        // N' <= N holds exactly when every weight of N is >= 1
        const WeightProfile p = weight_profile(n);
        if (p.domain())
            return false; // must be a norm on the whole space
        for (const auto& [idx, w] : p.explicit_weights())
            if (w < 1)
                return false;
        IndexSet used;
        {
            std::vector<Index> ids;
            for (const auto& [idx, w] : p.explicit_weights())
                ids.push_back(idx);
            used = IndexSet(std::move(ids));
        }
        Index probe = 0;
        while (used.contains(probe))
            ++probe;
        return p.at(probe) >= 1;
    };

    DisjointnessCert cert;
    cert.k = k;
    cert.l = l;
    cert.base_separation = eval_norm(NormExpr::uniform(), subtract(bk.center, bl.center));
    cert.radius_sum = bk.radius + bl.radius;
    cert.norms_dominate_base = dominates_base(bk.norm) && dominates_base(bl.norm);
    return cert;
}

AbsorptionResult absorption_domination(const NormExpr& candidate, Index k, const Rat& r,
                                       const BallCover& cover,
                                       const std::vector<FinVector>& directions) {
    if (r <= 0)
        throw InvalidArgument("candidate ball radius must be positive");
    const BallSpec& home = ball_centered_at(cover, k);

    AbsorptionDomination dom;
    dom.constant = home.radius / r;
    for (const FinVector& u : directions) {
        if (u.is_zero())
            continue;
        const Rat candidate_u = eval_norm(candidate, u);
        if (candidate_u == 0)
            throw InvalidArgument("candidate vanishes on a nonzero direction; it is not a norm there");
        const Rat ball_u = eval_norm(home.norm, u);
        const Rat reach = r / candidate_u; // the segment parameter where the candidate ball ends

        if (reach * ball_u <= home.radius) {
            // stays in the (closed) home ball: N_k(u) <= (r_k/r) N(u) on this direction
            dom.directions.push_back(u);
            continue;
        }

        // the segment exits the home ball inside the candidate ball; try the
        // candidate-ball endpoint first, then the exact exit parameter
        for (const Rat& t : {reach, Rat(home.radius / ball_u)}) {
            const FinVector point = add(home.center, scale_vec(t, u));
            if (outside_all_balls(cover, point)) {
                AbsorptionWitness witness;
                witness.direction = u;
                witness.t = t;
                witness.point = point;
                witness.candidate_value = t * candidate_u;
                witness.ball_value = t * ball_u;
                return witness;
            }
        }
        throw Error("internal: escaping segment landed inside another cover ball; "
                    "the cover balls are not pairwise disjoint");
    }
    return dom;
}

OpeningResult build_opening_norm(const BallCover& cover, std::size_t depth,
                                 const std::vector<FinVector>& samples) {
    const Flag& flag = cover.flag();
    if (depth > flag.depth())
        throw InvalidArgument("depth exceeds the cover flag depth");
    const IndexSet top = flag.slice(depth);
    const NormExpr reference = NormExpr::uniform();

    OpeningResult out;
    for (const auto& [level, balls] : cover.levels()) {
        if (level > depth)
            break;
        for (const BallSpec& ball : balls) {
            // O - x still includes the closed unit ball of (1/r) N at the origin
            const NormExpr scaled = NormExpr::scale(Rat(1) / ball.radius, ball.norm);
            const FinVector translation = scale_vec(Rat(-1), ball.center);
            ExtensionChain chain = extend_chain(scaled, cover, translation, level, depth, depth);
            const Rat c = top.empty() ? Rat(1) : equivalence_constant(chain.norm, reference, top);
            out.chain_norms.push_back(std::move(chain.norm));
            out.chain_constants.push_back(c == 0 ? Rat(1) : c);
        }
    }
    if (out.chain_norms.empty())
        throw InvalidArgument("cover has no balls at or below the requested depth");

    DomCert cert = dominate_family(out.chain_norms, out.chain_constants, {});
    out.norm = cert.dominating;

    const WeightProfile norm_weights = weight_profile(out.norm);
    const auto regions = cover_regions(cover, FinVector(), top, depth);
    const auto complement = region_subtract_all({BoxRegion::universe(top)}, regions);

    for (const FinVector& p : samples) {
        if (!slice_membership(cover, p, depth))
            throw PreconditionFailure("sample point " + point_string(p) + " is not in the cover");
        if (complement.empty())
            throw Error("internal: a finite ball cover cannot fill a whole slice");
        bool first = true;
        Rat dist(0);
        for (const BoxRegion& piece : complement) {
            const Rat d = weighted_point_gap(p, piece, norm_weights);
            if (first || d < dist) {
                dist = d;
                first = false;
            }
        }
        if (dist == 0)
            throw PreconditionFailure("sample point " + point_string(p) +
                                      " has no interior margin at this truncation");
        const Rat rho = dist / 2;
        if (uncovered_point(ball_box(out.norm, top, rho, p), regions))
            throw Error("internal: certified ball escaped the cover");
        out.certificates.push_back({p, rho});
    }
    return out;
}

} // namespace normtop

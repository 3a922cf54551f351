#ifndef NORMTOP_TOPOLOGY_HPP
#define NORMTOP_TOPOLOGY_HPP

#include "normtop/domination.hpp"
#include "normtop/norms.hpp"
#include "normtop/vectorspace.hpp"

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

namespace normtop {

// One norm ball: center, radius, the norm it is measured in, and whether
// the boundary is excluded.
struct BallSpec {
    FinVector center;
    Rat radius;
    NormExpr norm;
    bool open = true;

    BallSpec(FinVector center, Rat radius, NormExpr norm, bool open = true);
};

// Truncated per-slice representation of a finite open set: level n holds
// balls confined to the slice F_n spanned by the flag's base plus its
// first n added indices. The union of the balls, each restricted to its
// level's slice, is the set O.
class BallCover {
public:
    BallCover(Flag flag, std::map<std::size_t, std::vector<BallSpec>> levels);

    const Flag& flag() const { return flag_; }
    const std::map<std::size_t, std::vector<BallSpec>>& levels() const { return levels_; }
    IndexSet slice(std::size_t n) const { return flag_.slice(n); }
    std::size_t ball_count() const;

private:
    Flag flag_;
    std::map<std::size_t, std::vector<BallSpec>> levels_;
};

// Membership oracle for O intersected with F_n: p lies in some ball of
// some level <= n (as a subset of that level's slice). Exact arithmetic,
// strict inequality for open balls. The support of p must lie in F_n.
bool slice_membership(const BallCover& cover, const FinVector& p, std::size_t level);

// Exact containment of a closed box in the union of the cover's balls up
// to the given level, by box subdivision. The box must live over a subset
// of F_level.
bool cover_contains_box(const BallCover& cover, const Box& box, std::size_t level);

// Exact separation data behind one extension step: epsilon is half the
// box-arithmetic distance from the current unit ball to the complement of
// O in the extended slice, measured in the auxiliary norm max(N(y), |lambda|).
struct EpsilonCert {
    Rat epsilon;
    Rat separation;          // d = 2 * epsilon
    IndexSet extended_slice; // F'
    FinVector nearest_outside; // point of the complement closure at distance d
};

struct ExtensionStep {
    EpsilonCert cert;
    NormExpr norm; // the Extension expression
};

// One Lemma-4 step: extends the norm across the cover's added index j.
// The base must be defined on the flag slice right below j, its closed
// unit ball must be covered (checked exactly by box subdivision), and the
// separation must be positive.
ExtensionStep extend_norm_step(const NormExpr& base, const BallCover& cover, Index new_index);

struct ExtensionChain {
    NormExpr norm;                 // base when steps is empty, else one Extension expression
    std::vector<EpsilonCert> steps;
};

// Iterates extend_norm_step along the first `depth` added indices of the
// cover's flag. Step errors are rethrown with the failing stage index.
ExtensionChain extend_norm_flag(const NormExpr& base, const BallCover& cover, std::size_t depth);

// The undominated-family counterexample: level-k ball is the open ball of
// the given radius at e_k for max(N', N_k), N' the supremum norm. The
// wrapping keeps N' <= N_k, which the disjointness certificates rely on.
BallCover counterexample_balls(const std::vector<NormExpr>& norms, const Rat& radius = make_rat(1, 3));

// The exact inequality chain showing B_k and B_l cannot meet:
// N'(e_k - e_l) = 1 > r_k + r_l, with N' dominated by both ball norms.
struct DisjointnessCert {
    Index k = 0, l = 0;
    Rat base_separation; // N'(e_k - e_l)
    Rat radius_sum;      // r_k + r_l
    bool norms_dominate_base = false; // N' <= N_k and N' <= N_l, by weights

    bool holds() const { return norms_dominate_base && base_separation > radius_sum; }
};

DisjointnessCert disjointness_certificate(const BallCover& cover, Index k, Index l);

// Positive outcome of the absorption argument: along every checked
// direction u the segment { e_k + t u : |t| N(u) <= r } stays in the
// closed ball of B_k, so N_k <= constant * N on those directions.
struct AbsorptionDomination {
    Rat constant; // 1 / (3 r)
    std::vector<FinVector> directions;
};

// Negative outcome: a point of the candidate's closed ball B(e_k, r) that
// lies outside every ball of the cover, proving the ball is not inside O.
struct AbsorptionWitness {
    FinVector direction;
    Rat t;              // parameter along the direction
    FinVector point;    // e_k + t * direction
    Rat candidate_value; // candidate norm of (point - e_k), <= r
    Rat ball_value;      // level-k ball norm of (point - e_k), >= its radius
};

using AbsorptionResult = std::variant<AbsorptionDomination, AbsorptionWitness>;

// The segment argument of the counterexample, one direction at a time.
// Both outcomes are certificates; nonzero directions only.
AbsorptionResult absorption_domination(const NormExpr& candidate, Index k, const Rat& r,
                                       const BallCover& cover,
                                       const std::vector<FinVector>& directions);

struct OpeningCertEntry {
    FinVector sample;
    Rat rho; // closed ball of the built norm at the sample with this radius is inside the cover
};

struct OpeningResult {
    NormExpr norm;                          // the dominating SupFamily norm
    std::vector<NormExpr> chain_norms;      // one extension chain per ball, input order
    std::vector<Rat> chain_constants;       // scaling constants used for the sup
    std::vector<OpeningCertEntry> certificates;
};

// The countable-dimension construction, truncated at `depth`: a chain per
// cover ball (translated to the origin), a sup norm dominating all chains,
// and, per sample point of O, an exact radius whose closed ball stays
// inside the cover (verified by box subdivision).
OpeningResult build_opening_norm(const BallCover& cover, std::size_t depth,
                                 const std::vector<FinVector>& samples);

} // namespace normtop

#endif

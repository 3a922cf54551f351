#ifndef NORMTOP_NORMS_HPP
#define NORMTOP_NORMS_HPP

#include "normtop/vectorspace.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace normtop {

// Total positive weight function on basis indices: an explicit finite part
// plus a default for everything else.
class WeightFunction {
public:
    explicit WeightFunction(std::map<Index, Rat> entries = {}, Rat default_weight = Rat(1));

    const Rat& at(Index k) const;
    const std::map<Index, Rat>& entries() const { return entries_; }
    const Rat& default_weight() const { return default_; }

    bool operator==(const WeightFunction&) const = default;

private:
    std::map<Index, Rat> entries_;
    Rat default_;
};

// Closed expression algebra of exactly evaluable norms. Every variant is
// axis-aligned on each finite slice, which keeps ball geometry and
// equivalence constants computable in exact arithmetic.
//
//   Diagonal(w)              x -> max_k w(k)|x_k|
//   Scale(c, N)              x -> c N(x)
//   MaxOf(N_1..N_m)          x -> max_i N_i(x)
//   Extension(N, flag, eps)  x -> max(N(x|base), eps_m^{-1} |x_{j_m}|),
//                            defined only for supp(x) inside base + added
//   SupFamily((N_i, g_i))    x -> max_i N_i(x)/g_i
class NormExpr {
public:
    struct Diagonal;
    struct Scale;
    struct MaxOf;
    struct Extension;
    struct SupFamily;
    using Node = std::variant<Diagonal, Scale, MaxOf, Extension, SupFamily>;

    // The supremum norm with all weights 1.
    NormExpr();

    static NormExpr diagonal(WeightFunction weights);
    // The norm x -> w * max_k |x_k| (all weights equal).
    static NormExpr uniform(const Rat& weight = Rat(1));
    static NormExpr scale(const Rat& factor, NormExpr inner);
    static NormExpr max_of(std::vector<NormExpr> members);
    static NormExpr extension(NormExpr base, Flag flag, std::vector<Rat> epsilons);
    struct FamilyMember;
    static NormExpr sup_family(std::vector<FamilyMember> members);

    const Node& node() const { return *node_; }

    bool operator==(const NormExpr& other) const;

private:
    explicit NormExpr(Node node);
    std::shared_ptr<const Node> node_;
};

struct NormExpr::FamilyMember {
    NormExpr norm;
    Rat divisor;
};

struct NormExpr::Diagonal {
    WeightFunction weights;
};
struct NormExpr::Scale {
    Rat factor;
    NormExpr inner;
};
struct NormExpr::MaxOf {
    std::vector<NormExpr> members;
};
struct NormExpr::Extension {
    NormExpr base;
    Flag flag;
    std::vector<Rat> epsilons; // one per added index
};
struct NormExpr::SupFamily {
    std::vector<FamilyMember> members;
};

// Exact value of the norm at v. Throws DomainViolation when an Extension
// (or a family containing one) is evaluated outside its slice.
Rat eval_norm(const NormExpr& n, const FinVector& v);

// Index set the norm is defined on; nullopt means all of omega.
std::optional<IndexSet> norm_domain(const NormExpr& n);

// Per-coordinate weight view of a norm: every expression in the algebra
// evaluates as max_k weight(k)|x_k| on its domain.
class WeightProfile {
public:
    WeightProfile(std::optional<IndexSet> domain, std::map<Index, Rat> weights, Rat default_weight);

    const Rat& at(Index k) const; // throws DomainViolation outside the domain
    const std::optional<IndexSet>& domain() const { return domain_; }
    const std::map<Index, Rat>& explicit_weights() const { return weights_; }
    bool defined_on(const IndexSet& J) const;

private:
    std::optional<IndexSet> domain_;
    std::map<Index, Rat> weights_;
    Rat default_;
};

WeightProfile weight_profile(const NormExpr& n);

// Indices the expression mentions explicitly (diagonal entries, flag
// indices), recursively. Basis vectors over this set make good check points.
IndexSet explicit_indices(const NormExpr& n);

struct AxiomReport {
    bool passed = true;
    std::string first_violation; // empty when passed
};

// Exact check of the norm axioms on a finite sample: positivity on nonzero
// samples, homogeneity for a spread of rational factors, and the triangle
// inequality on all sample pairs.
AxiomReport check_norm_axioms(const NormExpr& n, const std::vector<FinVector>& samples);

// Axis-aligned closed box: per-coordinate closed rational intervals over an
// index set. Represents { x in V_J : lo_k <= x_k <= hi_k }.
class Box {
public:
    Box() = default;
    Box(IndexSet indices, std::vector<std::pair<Rat, Rat>> bounds); // lo <= hi each

    const IndexSet& indices() const { return indices_; }
    const std::pair<Rat, Rat>& bounds_at(std::size_t pos) const { return bounds_[pos]; }
    const std::vector<std::pair<Rat, Rat>>& bounds() const { return bounds_; }

    // Membership as a subset of span(indices): coordinates outside must be 0.
    bool contains(const FinVector& p) const;
    std::vector<FinVector> vertices() const; // all 2^n corners

    bool operator==(const Box&) const = default;

private:
    IndexSet indices_;
    std::vector<std::pair<Rat, Rat>> bounds_;
};

// The exact box { x in V_J : N(x - center) <= r }, using the norm's
// per-coordinate weights on J. Requires supp(center) inside J and the norm
// defined on all of J.
Box ball_box(const NormExpr& n, const IndexSet& J, const Rat& radius, const FinVector& center);

} // namespace normtop

#endif

#include "normtop/norms.hpp"

#include "normtop/errors.hpp"

#include <algorithm>
#include <utility>

namespace normtop {

WeightFunction::WeightFunction(std::map<Index, Rat> entries, Rat default_weight)
    : entries_(std::move(entries)), default_(std::move(default_weight)) {
    if (default_ <= 0)
        throw InvalidArgument("weight function default must be positive, got " + rat_string(default_));
    for (const auto& [k, w] : entries_)
        if (w <= 0)
            throw InvalidArgument("weight at index " + std::to_string(k) + " must be positive, got " + rat_string(w));
}

const Rat& WeightFunction::at(Index k) const {
    const auto it = entries_.find(k);
    return it == entries_.end() ? default_ : it->second;
}

NormExpr::NormExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

NormExpr::NormExpr() : NormExpr(Diagonal{WeightFunction({}, Rat(1))}) {}

NormExpr NormExpr::diagonal(WeightFunction weights) {
    return NormExpr(Diagonal{std::move(weights)});
}

NormExpr NormExpr::uniform(const Rat& weight) {
    return diagonal(WeightFunction({}, weight));
}

NormExpr NormExpr::scale(const Rat& factor, NormExpr inner) {
    if (factor <= 0)
        throw InvalidArgument("scale factor must be positive, got " + rat_string(factor));
    return NormExpr(Scale{factor, std::move(inner)});
}

NormExpr NormExpr::max_of(std::vector<NormExpr> members) {
    if (members.empty())
        throw InvalidArgument("max of an empty norm list");
    return NormExpr(MaxOf{std::move(members)});
}

NormExpr NormExpr::extension(NormExpr base, Flag flag, std::vector<Rat> epsilons) {
    if (epsilons.size() != flag.added().size())
        throw InvalidArgument("extension needs one epsilon per added index");
    for (const Rat& e : epsilons)
        if (e <= 0)
            throw InvalidArgument("extension epsilon must be positive, got " + rat_string(e));
    if (const auto dom = norm_domain(base); dom && !flag.base().subset_of(*dom))
        throw InvalidArgument("extension base norm is not defined on the whole base slice");
    return NormExpr(Extension{std::move(base), std::move(flag), std::move(epsilons)});
}

NormExpr NormExpr::sup_family(std::vector<FamilyMember> members) {
    if (members.empty())
        throw InvalidArgument("sup family with no members");
    for (const auto& m : members)
        if (m.divisor <= 0)
            throw InvalidArgument("sup family divisor must be positive, got " + rat_string(m.divisor));
    return NormExpr(SupFamily{std::move(members)});
}

bool NormExpr::operator==(const NormExpr& other) const {
    if (node_ == other.node_)
        return true;
    const Node& a = *node_;
    const Node& b = *other.node_;
    if (a.index() != b.index())
        return false;
    switch (a.index()) {
    case 0:
        return std::get<Diagonal>(a).weights == std::get<Diagonal>(b).weights;
    case 1: {
        const auto& x = std::get<Scale>(a);
        const auto& y = std::get<Scale>(b);
        return x.factor == y.factor && x.inner == y.inner;
    }
    case 2:
        return std::get<MaxOf>(a).members == std::get<MaxOf>(b).members;
    case 3: {
        const auto& x = std::get<Extension>(a);
        const auto& y = std::get<Extension>(b);
        return x.flag == y.flag && x.epsilons == y.epsilons && x.base == y.base;
    }
    default: {
        const auto& x = std::get<SupFamily>(a).members;
        const auto& y = std::get<SupFamily>(b).members;
        if (x.size() != y.size())
            return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].divisor != y[i].divisor || !(x[i].norm == y[i].norm))
                return false;
        return true;
    }
    }
}

Rat eval_norm(const NormExpr& n, const FinVector& v) {
    struct Visitor {
        const FinVector& v;

        Rat operator()(const NormExpr::Diagonal& d) const {
            Rat best(0);
            for (const auto& [k, x] : v.coords()) {
                const Rat term = d.weights.at(k) * rat_abs(x);
                if (term > best)
                    best = term;
            }
            return best;
        }
        Rat operator()(const NormExpr::Scale& s) const {
            return s.factor * eval_norm(s.inner, v);
        }
        Rat operator()(const NormExpr::MaxOf& m) const {
            Rat best(0);
            for (const NormExpr& member : m.members)
                best = rat_max(best, eval_norm(member, v));
            return best;
        }
        Rat operator()(const NormExpr::Extension& e) const {
            const IndexSet slice = e.flag.slice(e.flag.depth());
            for (const auto& [k, x] : v.coords())
                if (!slice.contains(k))
                    throw DomainViolation("extension norm evaluated outside its slice: index " +
                                          std::to_string(k) + " is not covered; extend the chain first");
            Rat best = eval_norm(e.base, restrict_to(v, e.flag.base()));
            for (std::size_t m = 0; m < e.flag.added().size(); ++m) {
                const Rat& coord = v.coord(e.flag.added()[m]);
                if (coord == 0)
                    continue;
                best = rat_max(best, Rat(rat_abs(coord) / e.epsilons[m]));
            }
            return best;
        }
        Rat operator()(const NormExpr::SupFamily& f) const {
            Rat best(0);
            for (const auto& m : f.members)
                best = rat_max(best, Rat(eval_norm(m.norm, v) / m.divisor));
            return best;
        }
    };
    return std::visit(Visitor{v}, n.node());
}

namespace {

void meet_domain(std::optional<IndexSet>& acc, const NormExpr& member) {
    const auto d = norm_domain(member);
    if (!d)
        return;
    acc = acc ? acc->intersect(*d) : *d;
}

} // namespace

std::optional<IndexSet> norm_domain(const NormExpr& n) {
    struct Visitor {
        std::optional<IndexSet> operator()(const NormExpr::Diagonal&) const { return std::nullopt; }
        std::optional<IndexSet> operator()(const NormExpr::Scale& s) const { return norm_domain(s.inner); }
        std::optional<IndexSet> operator()(const NormExpr::MaxOf& m) const {
            std::optional<IndexSet> dom;
            for (const NormExpr& member : m.members)
                meet_domain(dom, member);
            return dom;
        }
        std::optional<IndexSet> operator()(const NormExpr::Extension& e) const {
            return e.flag.slice(e.flag.depth());
        }
        std::optional<IndexSet> operator()(const NormExpr::SupFamily& f) const {
            std::optional<IndexSet> dom;
            for (const auto& member : f.members)
                meet_domain(dom, member.norm);
            return dom;
        }
    };
    return std::visit(Visitor{}, n.node());
}

WeightProfile::WeightProfile(std::optional<IndexSet> domain, std::map<Index, Rat> weights, Rat default_weight)
    : domain_(std::move(domain)), weights_(std::move(weights)), default_(std::move(default_weight)) {}

const Rat& WeightProfile::at(Index k) const {
    if (domain_ && !domain_->contains(k))
        throw DomainViolation("norm has no weight at index " + std::to_string(k) + ": outside its slice");
    const auto it = weights_.find(k);
    return it == weights_.end() ? default_ : it->second;
}

bool WeightProfile::defined_on(const IndexSet& J) const {
    return !domain_ || J.subset_of(*domain_);
}

WeightProfile weight_profile(const NormExpr& n) {
    struct Visitor {
        WeightProfile operator()(const NormExpr::Diagonal& d) const {
            return WeightProfile(std::nullopt, d.weights.entries(), d.weights.default_weight());
        }
        WeightProfile operator()(const NormExpr::Scale& s) const {
            WeightProfile inner = weight_profile(s.inner);
            std::map<Index, Rat> weights;
            const IndexSet keys = profile_keys(inner);
            for (const Index k : keys)
                weights.emplace(k, s.factor * inner.at(k));
            const Rat def = inner.domain() ? Rat(1) : Rat(s.factor * inner.at(fresh_index(keys)));
            return WeightProfile(inner.domain(), std::move(weights), def);
        }
        WeightProfile operator()(const NormExpr::MaxOf& m) const {
            std::vector<std::pair<WeightProfile, Rat>> parts;
            parts.reserve(m.members.size());
            for (const NormExpr& member : m.members)
                parts.emplace_back(weight_profile(member), Rat(1));
            return merge(parts);
        }
        WeightProfile operator()(const NormExpr::Extension& e) const {
            const WeightProfile base = weight_profile(e.base);
            std::map<Index, Rat> weights;
            for (const Index k : e.flag.base())
                weights.emplace(k, base.at(k));
            for (std::size_t m = 0; m < e.flag.added().size(); ++m)
                weights.emplace(e.flag.added()[m], Rat(1) / e.epsilons[m]);
            return WeightProfile(e.flag.slice(e.flag.depth()), std::move(weights), Rat(1));
        }
        WeightProfile operator()(const NormExpr::SupFamily& f) const {
            std::vector<std::pair<WeightProfile, Rat>> parts;
            parts.reserve(f.members.size());
            for (const auto& m : f.members)
                parts.emplace_back(weight_profile(m.norm), m.divisor);
            return merge(parts);
        }

        // Pointwise max of member weights (divided by their divisors); the
        // domain is the intersection of member domains.
        static WeightProfile merge(const std::vector<std::pair<WeightProfile, Rat>>& parts) {
            std::optional<IndexSet> domain;
            bool all_total = true;
            IndexSet keys;
            for (const auto& [p, g] : parts) {
                keys = keys.unite(profile_keys(p));
                if (p.domain()) {
                    all_total = false;
                    domain = domain ? domain->intersect(*p.domain()) : *p.domain();
                }
            }
            std::map<Index, Rat> weights;
            const IndexSet relevant = domain ? *domain : keys;
            for (const Index k : relevant) {
                Rat best(0);
                for (const auto& [p, g] : parts) {
                    if (p.domain() && !p.domain()->contains(k))
                        continue;
                    best = rat_max(best, Rat(p.at(k) / g));
                }
                weights.emplace(k, best);
            }
            Rat def(1);
            if (all_total) {
                const Index probe = fresh_index(keys);
                def = 0;
                for (const auto& [p, g] : parts)
                    def = rat_max(def, Rat(p.at(probe) / g));
            }
            return WeightProfile(std::move(domain), std::move(weights), std::move(def));
        }

        static IndexSet profile_keys(const WeightProfile& p) {
            if (p.domain())
                return *p.domain();
            std::vector<Index> ids;
            ids.reserve(p.explicit_weights().size());
            for (const auto& [k, w] : p.explicit_weights())
                ids.push_back(k);
            return IndexSet(std::move(ids));
        }

        static Index fresh_index(const IndexSet& used) {
            Index k = 0;
            while (used.contains(k))
                ++k;
            return k;
        }
    };
    return std::visit(Visitor{}, n.node());
}

IndexSet explicit_indices(const NormExpr& n) {
    struct Visitor {
        IndexSet operator()(const NormExpr::Diagonal& d) const {
            std::vector<Index> ids;
            ids.reserve(d.weights.entries().size());
            for (const auto& [k, w] : d.weights.entries())
                ids.push_back(k);
            return IndexSet(std::move(ids));
        }
        IndexSet operator()(const NormExpr::Scale& s) const { return explicit_indices(s.inner); }
        IndexSet operator()(const NormExpr::MaxOf& m) const {
            IndexSet out;
            for (const NormExpr& member : m.members)
                out = out.unite(explicit_indices(member));
            return out;
        }
        IndexSet operator()(const NormExpr::Extension& e) const {
            return explicit_indices(e.base).unite(e.flag.slice(e.flag.depth()));
        }
        IndexSet operator()(const NormExpr::SupFamily& f) const {
            IndexSet out;
            for (const auto& m : f.members)
                out = out.unite(explicit_indices(m.norm));
            return out;
        }
    };
    return std::visit(Visitor{}, n.node());
}

AxiomReport check_norm_axioms(const NormExpr& n, const std::vector<FinVector>& samples) {
    static const Rat factors[] = {Rat(2), Rat(-1), make_rat(1, 2), make_rat(-5, 3), Rat(7)};
    if (eval_norm(n, FinVector()) != 0)
        return {false, "norm of the zero vector is not 0"};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const FinVector& v = samples[i];
        const Rat value = eval_norm(n, v);
        if (!v.is_zero() && value <= 0)
            return {false, "positivity fails on sample " + std::to_string(i)};
        for (const Rat& a : factors) {
            if (eval_norm(n, scale_vec(a, v)) != rat_abs(a) * value)
                return {false, "homogeneity fails on sample " + std::to_string(i) +
                                   " with factor " + rat_string(a)};
        }
    }
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i; j < samples.size(); ++j) {
            if (eval_norm(n, add(samples[i], samples[j])) >
                eval_norm(n, samples[i]) + eval_norm(n, samples[j]))
                return {false, "triangle inequality fails on samples " + std::to_string(i) +
                                   " and " + std::to_string(j)};
        }
    return {};
}

Box::Box(IndexSet indices, std::vector<std::pair<Rat, Rat>> bounds)
    : indices_(std::move(indices)), bounds_(std::move(bounds)) {
    if (indices_.size() != bounds_.size())
        throw InvalidArgument("box needs one interval per index");
    for (const auto& [lo, hi] : bounds_)
        if (lo > hi)
            throw InvalidArgument("box interval with lower bound above upper bound");
}

bool Box::contains(const FinVector& p) const {
    if (!support(p).subset_of(indices_))
        return false;
    std::size_t pos = 0;
    for (const Index k : indices_) {
        const Rat& x = p.coord(k);
        if (x < bounds_[pos].first || x > bounds_[pos].second)
            return false;
        ++pos;
    }
    return true;
}

std::vector<FinVector> Box::vertices() const {
    std::vector<FinVector> out;
    const std::size_t n = indices_.size();
    if (n >= 24)
        throw InvalidArgument("refusing to enumerate vertices of a box with " + std::to_string(n) + " coordinates");
    out.reserve(std::size_t(1) << n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::map<Index, Rat> coords;
        std::size_t pos = 0;
        for (const Index k : indices_) {
            const Rat& val = (mask >> pos) & 1 ? bounds_[pos].second : bounds_[pos].first;
            if (val != 0)
                coords.emplace(k, val);
            ++pos;
        }
        out.push_back(FinVector(std::move(coords)));
    }
    return out;
}

Box ball_box(const NormExpr& n, const IndexSet& J, const Rat& radius, const FinVector& center) {
    if (radius <= 0)
        throw InvalidArgument("ball radius must be positive, got " + rat_string(radius));
    if (!support(center).subset_of(J))
        throw DomainViolation("ball center is supported outside the requested slice");
    const WeightProfile profile = weight_profile(n);
    if (!profile.defined_on(J))
        throw DomainViolation("norm is not defined on the whole requested slice");
    std::vector<std::pair<Rat, Rat>> bounds;
    bounds.reserve(J.size());
    for (const Index k : J) {
        const Rat half = radius / profile.at(k);
        const Rat& c = center.coord(k);
        bounds.emplace_back(c - half, c + half);
    }
    return Box(J, std::move(bounds));
}

} // namespace normtop
